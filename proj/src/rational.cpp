#include "qplink/rational.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qplink {

namespace {

void check_tuple(const std::vector<int>& r) {
  if (r.empty()) throw std::invalid_argument("rational tuple: empty");
  for (int ri : r)
    if (ri == 0) throw std::invalid_argument("rational tuple: zero entry");
}

}  // namespace

std::pair<long long, long long> continued_fraction(const std::vector<int>& r) {
  check_tuple(r);
  const int n = static_cast<int>(r.size());
  // Evaluate right to left; entry i carries sign (-1)^(i-1), 1-based.
  auto signed_entry = [&](int i) {
    return (i % 2 == 1 ? 1LL : -1LL) * static_cast<long long>(r[i - 1]);
  };
  long long p = signed_entry(n), q = 1;
  for (int i = n - 1; i >= 1; --i) {
    if (p == 0) {
      std::ostringstream msg;
      msg << "continued fraction: zero denominator at suffix (";
      for (int j = i + 1; j <= n; ++j) msg << r[j - 1] << (j < n ? "," : "");
      msg << ")";
      throw std::invalid_argument(msg.str());
    }
    const long long np = signed_entry(i) * p + q;  // s_i r_i + q/p over p
    q = p;
    p = np;
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

LensSpace lens_space(const std::vector<int>& r) {
  auto [p, q] = continued_fraction(r);
  LensSpace out;
  if (p == 0) {
    out.s1_x_s2 = true;
    out.p = 0;
    out.q = 1;
    return out;
  }
  if (p < 0) {
    p = -p;
    q = -q;
  }
  out.p = p;
  out.q = ((q % p) + p) % p;
  return out;
}

bool lens_equivalent(const LensSpace& a, const LensSpace& b, bool oriented) {
  if (a.s1_x_s2 || b.s1_x_s2) return a.s1_x_s2 == b.s1_x_s2;
  if (a.p != b.p) return false;
  const long long p = a.p;
  if (p == 1) return true;
  auto congruent = [p](long long x, long long y) { return ((x - y) % p + p) % p == 0; };
  if (congruent(a.q, b.q) || congruent(a.q * b.q, 1)) return true;
  if (oriented) return false;
  return congruent(a.q, -b.q) || congruent(a.q * b.q, -1);
}

MachineDFA MachineDFA::parse(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  MachineDFA m;
  m.states = j.at("states").get<std::vector<std::string>>();
  auto state_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < m.states.size(); ++i)
      if (m.states[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("machine table: unknown state " + name);
  };
  for (const auto& e : j.at("edges")) {
    Edge edge;
    edge.from = state_index(e.at("from").get<std::string>());
    edge.to = state_index(e.at("to").get<std::string>());
    const std::string label = e.at("label").get<std::string>();
    // label grammar: s<2|3>^[-]<a|e|o>
    std::size_t caret = label.find('^');
    if (label.size() < 4 || label[0] != 's' || caret != 2 ||
        (label[1] != '2' && label[1] != '3'))
      throw std::invalid_argument("machine table: bad label " + label);
    edge.generator = label[1] - '0';
    std::string exp = label.substr(caret + 1);
    if (!exp.empty() && exp[0] == '-') {
      edge.sign = -1;
      exp = exp.substr(1);
    }
    if (exp.size() != 1 || (exp[0] != 'a' && exp[0] != 'e' && exp[0] != 'o'))
      throw std::invalid_argument("machine table: bad label " + label);
    edge.parity = exp[0];
    m.edges.push_back(edge);
  }
  for (const auto& s : j.at("sources")) m.sources.push_back(state_index(s.get<std::string>()));
  for (const auto& s : j.at("sinks")) m.sinks.push_back(state_index(s.get<std::string>()));
  m.submachine_edges = j.at("submachine_edges").get<std::vector<int>>();
  return m;
}

MachineDFA MachineDFA::load() {
  std::string path;
  if (const char* env = std::getenv("QPLINK_MACHINE_TABLE"); env && *env)
    path = env;
  else
    path = std::string(QPLINK_RESOURCE_DIR) + "/machine_table.json";
  std::ifstream in(path);
  if (!in) throw std::runtime_error("machine table: cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

bool MachineDFA::accepts(const std::vector<int>& r, bool submachine_only) const {
  check_tuple(r);
  std::vector<char> use(edges.size(), submachine_only ? 0 : 1);
  if (submachine_only)
    for (int idx : submachine_edges) use.at(idx) = 1;

  std::vector<char> current(states.size(), 0);
  for (int s : sources) current[s] = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const int generator = i % 2 == 0 ? 2 : 3;
    std::vector<char> next(states.size(), 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (!use[k] || !current[edges[k].from]) continue;
      const Edge& e = edges[k];
      if (e.generator != generator) continue;
      if (e.sign != (r[i] > 0 ? 1 : -1)) continue;
      const int magnitude = std::abs(r[i]);
      if (e.parity == 'e' && magnitude % 2 != 0) continue;
      if (e.parity == 'o' && magnitude % 2 != 1) continue;
      next[e.to] = 1;
    }
    current = std::move(next);
  }
  for (int s : sinks)
    if (current[s]) return true;
  return false;
}

namespace {

const MachineDFA& shipped_machine() {
  static MachineDFA m = MachineDFA::load();
  return m;
}

}  // namespace

bool machine_accepts(const std::vector<int>& r) {
  if (std::getenv("QPLINK_MACHINE_TABLE")) return MachineDFA::load().accepts(r);
  return shipped_machine().accepts(r);
}

bool submachine_accepts(const std::vector<int>& r) {
  if (std::getenv("QPLINK_MACHINE_TABLE")) return MachineDFA::load().accepts(r, true);
  return shipped_machine().accepts(r, true);
}

StickClass stick_classify(const std::vector<int>& r) {
  if (submachine_accepts(r)) return StickClass::VeryStronglyQP;
  if (machine_accepts(r)) return StickClass::Positive;
  return StickClass::Unknown;
}

}  // namespace qplink
