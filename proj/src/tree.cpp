#include "qplink/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qplink/rational.hpp"

namespace qplink {

namespace {

int parity(int x) { return ((x % 2) + 2) % 2; }
bool even_negative(int x) { return x < 0 && parity(x) == 0; }

}  // namespace

// ---------------------------------------------------------------- parsing

namespace {

struct ExprParser {
  const std::string& text;
  std::size_t pos = 0;
  WeightedPlanarTree out;

  explicit ExprParser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("tree expr: " + what + " at offset " + std::to_string(pos));
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  int read_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected integer weight");
    return std::stoi(text.substr(start, pos - start));
  }

  int read_vertex(int parent) {
    expect('(');
    const int w = read_int();
    const int id = static_cast<int>(out.weights.size());
    out.weights.push_back(w);
    out.neighbors.emplace_back();
    if (parent >= 0) out.neighbors[id].push_back(parent);
    while (true) {
      skip_ws();
      if (pos >= text.size()) fail("unbalanced parentheses");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      const int child = read_vertex(id);
      out.neighbors[id].push_back(child);
    }
    return id;
  }
};

}  // namespace

WeightedPlanarTree WeightedPlanarTree::parse(const std::string& expr) {
  ExprParser p(expr);
  p.read_vertex(-1);
  p.skip_ws();
  if (p.pos != expr.size()) p.fail("trailing input");
  p.out.validate();
  return p.out;
}

std::string WeightedPlanarTree::to_expr(int root) const {
  validate();
  std::ostringstream os;
  // print children in cyclic order, starting just after the parent
  auto rec = [&](auto&& self, int v, int parent) -> void {
    os << "(" << weights[v];
    const auto& nb = neighbors[v];
    const int d = static_cast<int>(nb.size());
    int start = 0;
    if (parent >= 0)
      for (int i = 0; i < d; ++i)
        if (nb[i] == parent) start = i + 1;
    for (int i = 0; i < d; ++i) {
      const int u = nb[(start + i) % d];
      if (u == parent) continue;
      os << " ";
      self(self, u, v);
    }
    os << ")";
  };
  if (root < 0 || root >= static_cast<int>(weights.size()))
    throw std::invalid_argument("tree: root out of range");
  rec(rec, root, -1);
  return os.str();
}

void WeightedPlanarTree::validate() const {
  const int n = static_cast<int>(weights.size());
  if (n == 0) throw std::invalid_argument("tree: empty");
  if (static_cast<int>(neighbors.size()) != n)
    throw std::invalid_argument("tree: weight/adjacency size mismatch");
  int edge_ends = 0;
  for (int v = 0; v < n; ++v) {
    std::set<int> seen;
    for (int u : neighbors[v]) {
      if (u < 0 || u >= n || u == v) throw std::invalid_argument("tree: bad neighbor");
      if (!seen.insert(u).second) throw std::invalid_argument("tree: repeated neighbor");
      if (std::find(neighbors[u].begin(), neighbors[u].end(), v) == neighbors[u].end())
        throw std::invalid_argument("tree: asymmetric adjacency");
      ++edge_ends;
    }
  }
  if (edge_ends != 2 * (n - 1)) throw std::invalid_argument("tree: wrong edge count");
  std::vector<char> vis(n, 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int count = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int u : neighbors[v])
      if (!vis[u]) {
        vis[u] = 1;
        ++count;
        q.push(u);
      }
  }
  if (count != n) throw std::invalid_argument("tree: not connected");
}

// ---------------------------------------------------------------- stars

StarClass star_classify(const StarSpec& s) {
  const int p = static_cast<int>(s.twigs.size());
  if (p < 3) throw std::invalid_argument("star: need at least 3 twigs");

  bool all_even_neg = even_negative(s.c);
  bool no_odd_neg = true;
  bool all_odd_neg = true;
  bool same_parity = true;
  bool all_neg = true;
  int strictly_positive = 0;
  for (int t : s.twigs) {
    if (!even_negative(t)) all_even_neg = false;
    const bool odd = parity(t) == 1;
    if (odd && t < 0) no_odd_neg = false;
    if (!(odd && t < 0)) all_odd_neg = false;
    if (parity(t) != parity(s.twigs[0])) same_parity = false;
    if (t >= 0) all_neg = false;
    if (t > 0) ++strictly_positive;
  }
  bool pair_sums_neg = true;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (s.twigs[i] + s.twigs[j] >= 0) pair_sums_neg = false;

  if (all_even_neg) return StarClass::VeryStronglyQP;
  if (s.c == 0 && no_odd_neg && strictly_positive % 2 == 0) return StarClass::Positive;
  if (s.c > 0 && all_odd_neg && (s.c + p) % 2 == 0) return StarClass::Positive;
  if (s.c == 0 && same_parity && pair_sums_neg && all_neg) return StarClass::Positive;
  if (s.c == 0 && same_parity && pair_sums_neg) return StarClass::StronglyQP;
  return StarClass::Unknown;
}

// ---------------------------------------------------------------- decomposition

namespace {

// pretzel-like star: the case that always accepts a transplant
bool star_always_transplants(const StarSpec& s) {
  if (s.c != 0) return false;
  for (std::size_t i = 0; i < s.twigs.size(); ++i) {
    if (parity(s.twigs[i]) != parity(s.twigs[0])) return false;
    for (std::size_t j = i + 1; j < s.twigs.size(); ++j)
      if (s.twigs[i] + s.twigs[j] >= 0) return false;
  }
  return true;
}

}  // namespace

TreeDecomposition decompose(const WeightedPlanarTree& t) {
  t.validate();
  const int n = static_cast<int>(t.weights.size());
  TreeDecomposition d;

  std::vector<char> node(n, 0), near_node(n, 0);
  for (int v = 0; v < n; ++v) node[v] = t.is_node(v);
  for (int v = 0; v < n; ++v)
    if (node[v]) {
      near_node[v] = 1;
      for (int u : t.neighbors[v]) near_node[u] = 1;
    }

  for (int v = 0; v < n; ++v)
    if (node[v]) {
      StarPiece s;
      s.center = v;
      s.twig_vertices = t.neighbors[v];
      s.spec.c = t.weights[v];
      for (int u : s.twig_vertices) s.spec.twigs.push_back(t.weights[u]);
      d.stars.push_back(std::move(s));
    }

  // sticks: path components of vertices at distance >= 2 from every node
  std::vector<int> stick_of(n, -1);
  for (int v = 0; v < n; ++v) {
    if (near_node[v] || stick_of[v] >= 0) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(v);
    stick_of[v] = static_cast<int>(d.sticks.size());
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      comp.push_back(x);
      for (int u : t.neighbors[x])
        if (!near_node[u] && stick_of[u] < 0) {
          stick_of[u] = stick_of[v];
          q.push(u);
        }
    }
    // order the component as a path, starting from its smallest endpoint
    auto degree_in = [&](int x) {
      int deg = 0;
      for (int u : t.neighbors[x])
        if (!near_node[u]) ++deg;
      return deg;
    };
    int start = -1;
    for (int x : comp)
      if (degree_in(x) <= 1 && (start < 0 || x < start)) start = x;
    StickPiece s;
    int prev = -1, cur = start;
    while (cur >= 0) {
      s.vertices.push_back(cur);
      s.tuple.push_back(t.weights[cur]);
      int next = -1;
      for (int u : t.neighbors[cur])
        if (!near_node[u] && u != prev) next = u;
      prev = cur;
      cur = next;
    }
    d.sticks.push_back(std::move(s));
  }

  // pieces containing a vertex (stars cover a node and its neighbors)
  std::vector<std::vector<int>> star_at(n);  // indices into d.stars
  for (int si = 0; si < static_cast<int>(d.stars.size()); ++si) {
    star_at[d.stars[si].center].push_back(si);
    for (int u : d.stars[si].twig_vertices) star_at[u].push_back(si);
  }
  auto star_position = [&](int si, int u) {
    const auto& tv = d.stars[si].twig_vertices;
    const auto it = std::find(tv.begin(), tv.end(), u);
    if (it == tv.end()) throw std::logic_error("tree: junction twig not in star");
    return static_cast<int>(it - tv.begin());
  };
  auto stick_position = [&](int si, int u) {
    const auto& sv = d.sticks[si].vertices;
    if (sv.front() == u) return 0;
    if (sv.back() == u) return 1;
    throw std::logic_error("tree: junction vertex not a stick end");
  };

  // junctions from edges joining distinct pieces
  for (int v = 0; v < n; ++v)
    for (int u : t.neighbors[v]) {
      if (u < v) continue;
      if (node[v] && node[u]) {  // two adjacent stars, twigs of one another
        Junction j;
        for (int si : star_at[v])
          if (d.stars[si].center == v) j.a = {true, si, star_position(si, u)};
        for (int si : star_at[u])
          if (d.stars[si].center == u) j.b = {true, si, star_position(si, v)};
        d.junctions.push_back(j);
        continue;
      }
      if (node[v] || node[u]) continue;  // edge interior to a star
      const bool v_in_star = near_node[v], u_in_star = near_node[u];
      if (!v_in_star && !u_in_star) continue;  // edge interior to a stick
      Junction j;
      if (v_in_star && u_in_star) {  // twig-to-twig edge between two stars
        j.a = {true, star_at[v][0], star_position(star_at[v][0], v)};
        j.b = {true, star_at[u][0], star_position(star_at[u][0], u)};
      } else if (v_in_star) {  // star twig meets a stick end
        j.a = {true, star_at[v][0], star_position(star_at[v][0], v)};
        j.b = {false, stick_of[u], stick_position(stick_of[u], u)};
      } else {
        j.a = {true, star_at[u][0], star_position(star_at[u][0], u)};
        j.b = {false, stick_of[v], stick_position(stick_of[v], v)};
      }
      d.junctions.push_back(j);
    }

  // junctions from a twig shared by two stars (non-node between two nodes)
  for (int v = 0; v < n; ++v)
    if (!node[v] && star_at[v].size() >= 2)
      for (std::size_t a = 0; a < star_at[v].size(); ++a)
        for (std::size_t b = a + 1; b < star_at[v].size(); ++b)
          d.junctions.push_back({{true, star_at[v][a], star_position(star_at[v][a], v)},
                                 {true, star_at[v][b], star_position(star_at[v][b], v)}});

  return d;
}

// ---------------------------------------------------------------- transplantation

bool transplant_ok_stick(const std::vector<int>& r, StickEnd end) {
  if (r.empty()) throw std::invalid_argument("stick: empty tuple");
  bool has_zero = std::find(r.begin(), r.end(), 0) != r.end();
  if (has_zero || stick_classify(r) == StickClass::Unknown)
    throw std::domain_error("no qp certificate");
  return (end == StickEnd::first ? r.front() : r.back()) < 0;
}

bool transplant_ok_star(const StarSpec& s, int i) {
  if (i < 0 || i >= static_cast<int>(s.twigs.size()))
    throw std::invalid_argument("star: twig index out of range");
  if (star_always_transplants(s)) return true;
  const StarClass cls = star_classify(s);
  if (cls == StarClass::Positive || cls == StarClass::VeryStronglyQP) return s.twigs[i] < 0;
  throw std::domain_error("no qp certificate");
}

namespace {

const char* star_class_name(StarClass c) {
  switch (c) {
    case StarClass::Positive: return "positive";
    case StarClass::VeryStronglyQP: return "very strongly qp";
    case StarClass::StronglyQP: return "strongly qp";
    default: return "unknown";
  }
}

std::string stick_label(const StickPiece& s) {
  std::ostringstream os;
  os << "stick(";
  for (std::size_t i = 0; i < s.tuple.size(); ++i) os << (i ? "," : "") << s.tuple[i];
  os << ")";
  return os.str();
}

std::string star_label(const StarPiece& s) {
  std::ostringstream os;
  os << "star(" << s.spec.c << ";";
  for (std::size_t i = 0; i < s.spec.twigs.size(); ++i) os << (i ? "," : "") << s.spec.twigs[i];
  os << ")";
  return os.str();
}

}  // namespace

std::optional<TransplantCertificate> sqp_by_transplant(const WeightedPlanarTree& t) {
  const TreeDecomposition d = decompose(t);
  const int ns = static_cast<int>(d.stars.size());
  const int nk = static_cast<int>(d.sticks.size());

  // every piece needs a certificate up front
  std::vector<StarClass> star_cls(ns);
  for (int i = 0; i < ns; ++i) {
    star_cls[i] = star_classify(d.stars[i].spec);
    if (star_cls[i] == StarClass::Unknown) return std::nullopt;
  }
  std::vector<StickClass> stick_cls(nk);
  for (int i = 0; i < nk; ++i) {
    const auto& r = d.sticks[i].tuple;
    if (std::find(r.begin(), r.end(), 0) != r.end()) return std::nullopt;
    stick_cls[i] = stick_classify(r);
    if (stick_cls[i] == StickClass::Unknown) return std::nullopt;
  }

  auto piece_id = [&](const PieceRef& p) { return p.star ? p.index : ns + p.index; };
  std::vector<std::vector<int>> adj(ns + nk);  // junction indices per piece
  for (int k = 0; k < static_cast<int>(d.junctions.size()); ++k) {
    adj[piece_id(d.junctions[k].a)].push_back(k);
    adj[piece_id(d.junctions[k].b)].push_back(k);
  }

  // start at the star of a maximal-valence node (smallest label on ties);
  // a node-free tree is a single stick
  int start;
  if (ns > 0) {
    int best = -1;
    for (int i = 0; i < ns; ++i) {
      const int v = d.stars[i].center;
      if (best < 0 || t.valence(v) > t.valence(d.stars[best].center) ||
          (t.valence(v) == t.valence(d.stars[best].center) && v < d.stars[best].center))
        best = i;
    }
    start = best;
  } else {
    start = ns;  // the unique stick
  }

  TransplantCertificate cert;
  auto describe = [&](int id) {
    if (id < ns)
      return star_label(d.stars[id]) + " [" + star_class_name(star_cls[id]) + "]";
    const int i = id - ns;
    return stick_label(d.sticks[i]) +
           (stick_cls[i] == StickClass::VeryStronglyQP ? " [very strongly qp]" : " [positive]");
  };

  std::vector<char> placed(ns + nk, 0);
  std::queue<int> q;
  placed[start] = 1;
  q.push(start);
  cert.steps.push_back(describe(start));
  int reached = 1;
  while (!q.empty()) {
    const int id = q.front();
    q.pop();
    auto edges = adj[id];
    std::sort(edges.begin(), edges.end(), [&](int a, int b) {
      auto other = [&](int k) {
        const auto& j = d.junctions[k];
        return piece_id(piece_id(j.a) == id ? j.b : j.a);
      };
      return other(a) < other(b);
    });
    for (int k : edges) {
      const auto& j = d.junctions[k];
      const PieceRef& mine = piece_id(j.a) == id ? j.a : j.b;
      const PieceRef& theirs = piece_id(j.a) == id ? j.b : j.a;
      const int oid = piece_id(theirs);
      if (placed[oid]) continue;
      // the transplant happens on the already-placed side of the junction
      bool ok;
      if (mine.star)
        ok = transplant_ok_star(d.stars[mine.index].spec, mine.position);
      else
        ok = transplant_ok_stick(d.sticks[mine.index].tuple,
                                 mine.position == 0 ? StickEnd::first : StickEnd::last);
      if (!ok) return std::nullopt;
      placed[oid] = 1;
      ++reached;
      q.push(oid);
      cert.steps.push_back(describe(oid) + " plumbed onto " +
                           (mine.star ? star_label(d.stars[mine.index])
                                      : stick_label(d.sticks[mine.index])));
    }
  }
  if (reached != ns + nk) throw std::logic_error("tree: piece graph not connected");
  return cert;
}

// ---------------------------------------------------------------- classification

TreeClassification classify(const WeightedPlanarTree& t) {
  t.validate();
  TreeClassification out;

  bool all_even_neg = true;
  for (int w : t.weights)
    if (!even_negative(w)) all_even_neg = false;
  if (all_even_neg) {
    out.very_strongly_qp = true;
    out.certificate.push_back("every weight even and negative");
  }

  const TreeDecomposition d = decompose(t);

  bool hyp_nonzero = true;  // non-nodes carry nonzero weight
  for (int v = 0; v < static_cast<int>(t.weights.size()); ++v)
    if (!t.is_node(v) && t.weights[v] == 0) hyp_nonzero = false;
  bool hyp_nodes = true;  // adjacent nodes not both weight 0
  for (int v = 0; v < static_cast<int>(t.weights.size()); ++v)
    if (t.is_node(v) && t.weights[v] == 0)
      for (int u : t.neighbors[v])
        if (t.is_node(u) && t.weights[u] == 0) hyp_nodes = false;

  if (hyp_nonzero && hyp_nodes) {
    bool pos = true;
    for (const auto& s : d.sticks)
      if (!machine_accepts(s.tuple)) pos = false;
    for (const auto& s : d.stars)
      if (star_classify(s.spec) != StarClass::Positive) pos = false;
    if (pos) {
      out.positive = true;
      out.certificate.push_back("every stick and star positive");
    }
  } else {
    out.certificate.push_back("positivity criterion not applicable");
  }

  if (out.very_strongly_qp || out.positive) {
    out.strongly_qp_certified = true;
  } else if (auto cert = sqp_by_transplant(t)) {
    out.strongly_qp_certified = true;
    out.certificate.push_back("assembled by transplantation:");
    for (const auto& step : cert->steps) out.certificate.push_back("  " + step);
  }

  out.unknown = !out.strongly_qp_certified;
  return out;
}

}  // namespace qplink
