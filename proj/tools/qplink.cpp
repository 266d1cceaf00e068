// qplink: command-line front end for the braid / diagram / family
// classification library.  Every command prints one JSON value on
// standard output.  Exit codes: 0 success, 1 domain error, 2 parse
// error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qplink/braid.hpp"
#include "qplink/catalog.hpp"
#include "qplink/covers.hpp"
#include "qplink/diagram.hpp"
#include "qplink/normal_form.hpp"
#include "qplink/pretzel.hpp"
#include "qplink/rational.hpp"
#include "qplink/serialize.hpp"
#include "qplink/tree.hpp"

using nlohmann::json;
using namespace qplink;

namespace {

// thrown for malformed user input (exit 2), as opposed to domain
// errors raised by the library (exit 1)
struct CliParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_tuple(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CliParseError("bad integer in tuple: '" + item + "'");
    }
  }
  if (out.empty()) throw CliParseError("empty tuple");
  return out;
}

json load_payload(const std::string& arg) {
  try {
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw CliParseError("cannot open " + arg);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw CliParseError(std::string("bad JSON payload: ") + e.what());
  }
}

BandRepresentation load_brep(const std::string& arg) {
  if (arg == "rho0") return rho0();
  if (arg == "rho1") return rho1();
  try {
    return brep_from_json(load_payload(arg));
  } catch (const CliParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw CliParseError(std::string("bad band representation: ") + e.what());
  }
}

PDDiagram load_pd(const std::string& arg) {
  const json j = load_payload(arg);
  if (!j.is_array()) throw CliParseError("PD code: expected an array of 4-tuples");
  PDDiagram d;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) throw CliParseError("PD code: expected 4-tuples");
    d.crossings.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()});
  }
  return d;
}

BraidWord load_word(const std::string& text, int strands) {
  try {
    return parse_braid_word(text, strands);
  } catch (const std::exception& e) {
    throw CliParseError(std::string("bad braid word: ") + e.what());
  }
}

HopfSpec parse_hopf_spec(const std::string& text) {
  std::stringstream ss(text);
  std::string sign, p, q;
  if (!std::getline(ss, sign, ',') || !std::getline(ss, p, ',') || !std::getline(ss, q, ','))
    throw CliParseError("hopf spec: expected sign,p,q");
  if (sign != "+" && sign != "-") throw CliParseError("hopf spec: sign must be + or -");
  try {
    return HopfSpec{sign[0], std::stoi(p), std::stoi(q)};
  } catch (const std::exception&) {
    throw CliParseError("hopf spec: bad integers");
  }
}

PDDiagram diagram_from_source(const std::string& source, const std::string& arg) {
  if (source == "pd") return load_pd(arg);
  if (source == "pretzel") return pretzel_diagram(parse_tuple(arg));
  return four_plat_diagram(parse_tuple(arg));
}

const char* stick_class_name(StickClass c) {
  switch (c) {
    case StickClass::Positive: return "positive";
    case StickClass::VeryStronglyQP: return "very_strongly_qp";
    default: return "unknown";
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::string* err = nullptr);

// split a batch line into arguments, honoring single and double quotes
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_token = false;
  char quote = 0;
  for (char c : line) {
    if (quote) {
      if (c == quote)
        quote = 0;
      else
        cur.push_back(c);
    } else if (c == '\'' || c == '"') {
      quote = c;
      in_token = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (in_token) out.push_back(cur);
      cur.clear();
      in_token = false;
    } else {
      cur.push_back(c);
      in_token = true;
    }
  }
  if (quote) throw CliParseError("unbalanced quote in batch line");
  if (in_token) out.push_back(cur);
  return out;
}

int run_batch(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "batch: cannot open " << path << "\n";
    return 2;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::ostringstream capture;
    std::string err;
    int code;
    try {
      code = run(tokenize(line), capture, &err);
    } catch (const CliParseError& e) {
      out << json{{"error", e.what()}, {"exit", 2}}.dump() << "\n";
      continue;
    }
    if (code == 0)
      out << capture.str();
    else
      out << json{{"error", err}, {"exit", code}}.dump() << "\n";
  }
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::string* err) {
  const auto report = [err](const std::string& msg) {
    if (err)
      *err = msg;
    else
      std::cerr << msg << "\n";
  };
  CLI::App app{"quasipositive link toolkit"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress non-JSON output");

  std::function<json()> action;

  // ---- shared option storage
  std::string word_text, word_text2, payload, payload2, tuple_text, expr, route, label, sign_spec;
  int strands = 0, cable_n = 2, susp_q = 1, genus = 0, tb = 0, twist = 0;
  long long ll_a = 0, ll_b = 0, ll_c = 0;
  bool oriented = false, braidlike = false, is_unknot = false, submachine = false;

  // ---- braid
  auto* braid = app.add_subcommand("braid", "braid words");
  {
    auto* c = braid->add_subcommand("normal-form", "left-greedy normal form");
    c->add_option("word", word_text)->required();
    c->add_option("-n,--strands", strands);
    c->callback([&] {
      action = [&] {
        const NormalForm nf = normal_form(load_word(word_text, strands));
        json j = normal_form_to_json(nf);
        j["strands"] = nf.strands;
        return j;
      };
    });
    c = braid->add_subcommand("equal", "compare two words");
    c->add_option("word1", word_text)->required();
    c->add_option("word2", word_text2)->required();
    c->add_option("-n,--strands", strands);
    c->callback([&] {
      action = [&] {
        BraidWord a = load_word(word_text, strands);
        BraidWord b = load_word(word_text2, strands);
        const int n = std::max(a.strands(), b.strands());
        a = load_word(word_text, n);
        b = load_word(word_text2, n);
        return json{{"equal", braids_equal(a, b)}};
      };
    });
    c = braid->add_subcommand("perm", "induced permutation");
    c->add_option("word", word_text)->required();
    c->add_option("-n,--strands", strands);
    c->callback([&] {
      action = [&] {
        return json{{"perm", load_word(word_text, strands).permutation().one_line()}};
      };
    });
    c = braid->add_subcommand("esum", "exponent sum");
    c->add_option("word", word_text)->required();
    c->add_option("-n,--strands", strands);
    c->callback([&] {
      action = [&] { return json{{"esum", load_word(word_text, strands).exponent_sum()}}; };
    });
  }

  // ---- brep
  auto* brep = app.add_subcommand("brep", "band representations");
  {
    auto* c = brep->add_subcommand("product", "product of the bands");
    c->add_option("--brep", payload)->required();
    c->callback([&] {
      action = [&] {
        const BraidWord w = brep_product(load_brep(payload));
        return json{{"strands", w.strands()}, {"word", word_to_json(w)}};
      };
    });
    c = brep->add_subcommand("chi", "surface bookkeeping");
    c->add_option("--brep", payload)->required();
    c->callback([&] {
      action = [&] {
        const auto b = load_brep(payload);
        const auto s = braided_surface(b);
        json comps = json::array();
        for (const auto& comp : s.components)
          comps.push_back({{"strings", comp.strings},
                           {"bands", comp.band_count},
                           {"chi", comp.euler},
                           {"boundaries", comp.boundary_count},
                           {"genus", comp.genus}});
        return json{{"chi", s.total_euler}, {"connected", s.connected()}, {"components", comps}};
      };
    });
    c = brep->add_subcommand("cable", "n-cable of the representation");
    c->add_option("--brep", payload)->required();
    c->add_option("-n,--copies", cable_n)->required();
    c->callback([&] {
      action = [&] { return brep_to_json(cable_band_rep(load_brep(payload), cable_n)); };
    });
    c = brep->add_subcommand("append", "append one positive band");
    c->add_option("--brep", payload)->required();
    c->add_option("--band", payload2)->required();
    c->callback([&] {
      action = [&] {
        const auto b = load_brep(payload);
        PositiveBand band = payload2 == "geng" ? geng_band()
                                               : band_from_json(load_payload(payload2), b.strands);
        return brep_to_json(append_band(b, band));
      };
    });
  }

  // ---- diagram
  auto* diagram = app.add_subcommand("diagram", "planar diagrams (PD codes)");
  {
    auto* c = diagram->add_subcommand("seifert", "oriented Seifert circles");
    c->add_option("--pd", payload)->required();
    c->add_option("--flips", payload2);
    c->callback([&] {
      action = [&] {
        const PDDiagram d = load_pd(payload);
        OrientationAssignment o;
        if (payload2.empty())
          o.flip.assign(diagram_components(d), 0);
        else
          o.flip = parse_tuple(payload2);
        const auto s = seifert_algorithm(d, o);
        return json{{"circles", s.seifert_circles},
                    {"crossings", s.crossings},
                    {"chi", s.euler},
                    {"positive", s.positive}};
      };
    });
    c = diagram->add_subcommand("positive-orientation", "search for an all-positive orientation");
    c->add_option("source", route)->required()->check(CLI::IsMember({"pd", "pretzel", "plat"}));
    c->add_option("arg", payload)->required();
    c->callback([&] {
      action = [&] {
        const auto o = find_positive_orientation(diagram_from_source(route, payload));
        json j{{"exists", o.has_value()}};
        if (o) j["flips"] = o->flip;
        return j;
      };
    });
    c = diagram->add_subcommand("determinant", "link determinant via a checkerboard form");
    c->add_option("source", route)->required()->check(CLI::IsMember({"pd", "pretzel", "plat"}));
    c->add_option("arg", payload)->required();
    c->callback([&] {
      action = [&] {
        return json{{"determinant", link_determinant(diagram_from_source(route, payload))}};
      };
    });
  }

  // ---- rational
  auto* rational = app.add_subcommand("rational", "rational (2-bridge) tuples");
  {
    auto* c = rational->add_subcommand("lens", "lens space of the double branched cover");
    c->add_option("tuple", tuple_text)->required();
    c->callback([&] {
      action = [&] {
        const LensSpace l = lens_space(parse_tuple(tuple_text));
        if (l.s1_x_s2) return json{{"s1_x_s2", true}};
        return json{{"P", l.p}, {"Q", l.q}};
      };
    });
    c = rational->add_subcommand("machine", "run the acceptance automaton");
    c->add_option("tuple", tuple_text)->required();
    c->add_flag("--submachine", submachine);
    c->callback([&] {
      action = [&] {
        const auto r = parse_tuple(tuple_text);
        json j{{"accepted", machine_accepts(r)}, {"submachine", submachine_accepts(r)}};
        return j;
      };
    });
    c = rational->add_subcommand("classify", "positivity class of the stick");
    c->add_option("tuple", tuple_text)->required();
    c->callback([&] {
      action = [&] {
        return json{{"class", stick_class_name(stick_classify(parse_tuple(tuple_text)))}};
      };
    });
  }

  // ---- pretzel
  auto* pretzel = app.add_subcommand("pretzel", "pretzel tuples");
  {
    auto* c = pretzel->add_subcommand("classify", "positivity flags");
    c->add_option("tuple", tuple_text)->required();
    c->callback([&] {
      action = [&] {
        const auto t = parse_tuple(tuple_text);
        return json{{"orientable", surface_orientable(t)},
                    {"qp_surface", surface_quasipositive(t)},
                    {"positive", has_positive_orientation(t)},
                    {"qp_not_strong", qp_not_strong_family(t)}};
      };
    });
    c = pretzel->add_subcommand("seifert", "Seifert invariants of the double cover");
    c->add_option("tuple", tuple_text)->required();
    c->callback([&] {
      action = [&] {
        const auto s = seifert_data(parse_tuple(tuple_text));
        json data = json::array(), raw = json::array();
        for (const auto& [a, b] : s.data_vector) data.push_back({a, b});
        for (const auto& [a, b] : s.raw_vector) raw.push_back({a, b});
        return json{{"notation", s.notation},
                    {"euler_term", s.euler_term},
                    {"data", data},
                    {"raw", raw}};
      };
    });
    c = pretzel->add_subcommand("brieskorn", "exponent-triple sign check");
    c->add_option("l", ll_a)->required();
    c->add_option("m", ll_b)->required();
    c->add_option("n", ll_c)->required();
    c->callback([&] {
      action = [&] {
        const auto e = brieskorn_check(ll_a, ll_b, ll_c);
        json j{{"applies", e.has_value()}};
        if (e) j["eps"] = *e;
        return j;
      };
    });
  }

  // ---- tree
  auto* tree = app.add_subcommand("tree", "weighted planar trees");
  {
    auto* c = tree->add_subcommand("classify", "positivity classification");
    c->add_option("--expr", expr)->required();
    c->callback([&] {
      action = [&] {
        const auto r = classify(WeightedPlanarTree::parse(expr));
        return json{{"vsqp", r.very_strongly_qp},
                    {"positive", r.positive},
                    {"sqp", r.strongly_qp_certified},
                    {"unknown", r.unknown},
                    {"certificate", r.certificate}};
      };
    });
    c = tree->add_subcommand("transplant", "assemble by transplantation");
    c->add_option("--expr", expr)->required();
    c->callback([&] {
      action = [&] {
        const auto cert = sqp_by_transplant(WeightedPlanarTree::parse(expr));
        json j{{"success", cert.has_value()}};
        if (cert) j["steps"] = cert->steps;
        return j;
      };
    });
  }

  // ---- hopf
  auto* hopf = app.add_subcommand("hopf", "partially reoriented Hopf links");
  {
    auto* c = hopf->add_subcommand("classify", "quasipositive / fibered flags");
    c->add_option("spec", sign_spec)->required();
    c->callback([&] {
      action = [&] {
        const auto f = hopf_classify(parse_hopf_spec(sign_spec));
        json j{{"qp", f.quasipositive}, {"fibered", f.fibered}};
        if (f.strongly_quasipositive)
          j["strongly_qp"] = *f.strongly_quasipositive;
        else
          j["strongly_qp"] = nullptr;
        return j;
      };
    });
    c = hopf->add_subcommand("canonical", "canonical representative");
    c->add_option("spec", sign_spec)->required();
    c->callback([&] {
      action = [&] {
        const auto h = hopf_canonical(parse_hopf_spec(sign_spec));
        return json{{"sign", std::string(1, h.sign)}, {"p", h.p}, {"q", h.q}};
      };
    });
  }

  // ---- lambda / enhance
  {
    auto* lam = app.add_subcommand("lambda", "enhancement values");
    auto* c = lam->add_subcommand("hminus", "closed form on the reversed family");
    c->add_option("p", ll_a)->required();
    c->add_option("q", ll_b)->required();
    c->callback([&] { action = [&] { return json{{"lambda", lambda_hminus(ll_a, ll_b)}}; }; });

    auto* enh = app.add_subcommand("enhance", "enhancement realization");
    c = enh->add_subcommand("realize", "realize a target value");
    c->add_option("lambda0", ll_a)->required();
    c->callback([&] {
      action = [&] {
        const auto r = realize_enhancement(ll_a);
        return json{{"q", r.q}, {"m", r.m}, {"lambda", r.lambda}};
      };
    });
  }

  // ---- cover
  auto* cover = app.add_subcommand("cover", "3-dimensional descriptors");
  {
    auto* c = cover->add_subcommand("double", "double branched cover of a family");
    c->add_option("family", route)
        ->required()
        ->check(CLI::IsMember({"pretzel", "rational", "tree"}));
    c->add_option("arg", expr)->required();
    c->callback([&] {
      action = [&] {
        json flags;
        FamilyDescriptor fd{HopfSpec{}};
        if (route == "pretzel") {
          const auto t = parse_tuple(expr);
          fd = FamilyPretzel{t};
          flags = {{"orientable", surface_orientable(t)},
                   {"qp_surface", surface_quasipositive(t)},
                   {"positive", has_positive_orientation(t)}};
        } else if (route == "rational") {
          const auto r = parse_tuple(expr);
          fd = FamilyRational{r};
          flags = {{"class", stick_class_name(stick_classify(r))}};
        } else {
          const auto t = WeightedPlanarTree::parse(expr);
          fd = FamilyTree{t};
          const auto r = classify(t);
          flags = {{"vsqp", r.very_strongly_qp},
                   {"positive", r.positive},
                   {"sqp", r.strongly_qp_certified}};
        }
        return json{{"manifold", manifold_to_json(double_branched_cover(fd))},
                    {"family_flags", flags}};
      };
    });
    c = cover->add_subcommand("suspend", "cyclic suspension");
    c->add_option("-q,--degree", susp_q)->required();
    c->add_option("--brep", payload)->required();
    c->callback([&] {
      action = [&] { return descriptor_to_json(cyclic_suspension(load_brep(payload), susp_q)); };
    });
    c = cover->add_subcommand("dummy", "suspension by a constant");
    c->add_option("--brep", payload)->required();
    c->callback([&] {
      action = [&] { return descriptor_to_json(dummy_suspension(load_brep(payload))); };
    });
    c = cover->add_subcommand("exterior-double", "double of a knot exterior");
    c->add_option("--route", route)->required()->check(CLI::IsMember({"cable", "annulus"}));
    c->add_option("--brep", payload);
    c->add_option("--tb", tb);
    c->add_option("--label", label);
    c->callback([&] {
      action = [&] {
        if (route == "cable") {
          if (payload.empty()) throw CliParseError("cable route needs --brep");
          return descriptor_to_json(double_of_exterior_cable(load_brep(payload)));
        }
        return descriptor_to_json(double_of_exterior_annulus(tb, label.empty() ? "knot" : label));
      };
    });
    c = cover->add_subcommand("infinity", "link-at-infinity product");
    c->add_option("-g,--genus", genus)->required();
    c->callback([&] {
      action = [&] {
        const auto m = link_at_infinity_product(genus);
        return json{{"manifold", manifold_to_json(m)},
                    {"singularity_excluded", singularity_excluded(m)}};
      };
    });
  }

  // unused-variable silencers for options shared across commands
  (void)oriented;
  (void)braidlike;
  (void)is_unknot;
  (void)twist;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help and friends
      std::cout << app.help();
      return 0;
    }
    report(e.what());
    return 2;
  }

  if (!action) {
    report("no command selected");
    return 2;
  }
  try {
    out << action().dump() << "\n";
    return 0;
  } catch (const CliParseError& e) {
    report(e.what());
    return 2;
  } catch (const std::exception& e) {
    report(e.what());
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (!args.empty() && args[0] == "batch") {
    if (args.size() != 2) {
      std::cerr << "usage: qplink batch FILE\n";
      return 2;
    }
    return run_batch(args[1], std::cout);
  }
  return run(args, std::cout);
}
