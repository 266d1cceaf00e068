#include "qplink/covers.hpp"

#include <stdexcept>

#include "qplink/serialize.hpp"

namespace qplink {

using nlohmann::json;

// ---------------------------------------------------------------- serialization

json family_to_json(const FamilyDescriptor& fd) {
  return std::visit(
      [](const auto& f) -> json {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, HopfSpec>) {
          return {{"family", "hopf"}, {"sign", std::string(1, f.sign)}, {"p", f.p}, {"q", f.q}};
        } else if constexpr (std::is_same_v<T, FamilyPretzel>) {
          return {{"family", "pretzel"}, {"t", f.t}};
        } else if constexpr (std::is_same_v<T, FamilyRational>) {
          return {{"family", "rational"}, {"r", f.r}};
        } else if constexpr (std::is_same_v<T, FamilyTree>) {
          return {{"family", "tree"}, {"expr", f.tree.to_expr()}};
        } else {
          return {{"family", "closed_band_rep"}, {"rep", brep_to_json(f.rep)}};
        }
      },
      fd);
}

json manifold_to_json(const ManifoldDescription& m) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LensSpace>) {
          if (v.s1_x_s2) return {{"kind", "lens_space"}, {"s1_x_s2", true}};
          return {{"kind", "lens_space"}, {"P", v.p}, {"Q", v.q}};
        } else if constexpr (std::is_same_v<T, SeifertFiberedSpace>) {
          json data = json::array();
          for (const auto& [num, den] : v.data.data_vector) data.push_back({num, den});
          return {{"kind", "seifert_fibered"},
                  {"notation", v.data.notation},
                  {"euler_term", v.data.euler_term},
                  {"data", data}};
        } else if constexpr (std::is_same_v<T, TreeManifold>) {
          return {{"kind", "tree_manifold"}, {"expr", v.tree.to_expr()}};
        } else if constexpr (std::is_same_v<T, ConnSumS1xS2>) {
          return {{"kind", "conn_sum_s1xs2"}, {"counts", v.counts}};
        } else if constexpr (std::is_same_v<T, BranchedCyclicCover>) {
          return {{"kind", "branched_cyclic_cover"}, {"q", v.q}, {"branch", family_to_json(v.branch)}};
        } else if constexpr (std::is_same_v<T, DoubleKnotExterior>) {
          return {{"kind", "double_knot_exterior"}, {"label", v.label}};
        } else if constexpr (std::is_same_v<T, ProductS1Fg>) {
          return {{"kind", "product_s1_fg"}, {"g", v.g}};
        } else if constexpr (std::is_same_v<T, Torus3>) {
          return {{"kind", "torus3"}};
        } else {
          return {{"kind", "sphere3"}};
        }
      },
      m);
}

json descriptor_to_json(const CLink3Descriptor& d) {
  json out{{"manifold", manifold_to_json(d.manifold)},
           {"cspan_euler", d.cspan_euler},
           {"provenance", d.provenance}};
  if (d.remark_euler) out["remark_euler"] = *d.remark_euler;
  return out;
}

// ---------------------------------------------------------------- operations

long long branched_cover_euler(long long q, long long chi_base, long long chi_branch) {
  if (q < 1) throw std::invalid_argument("branched cover: need q >= 1");
  return q * chi_base - (q - 1) * chi_branch;
}

CLink3Descriptor cyclic_suspension(const BandRepresentation& b, int q,
                                   std::vector<std::string> tags) {
  if (q < 1) throw std::invalid_argument("suspension: need q >= 1");
  const BraidedSurfaceData s = braided_surface(b);
  CLink3Descriptor out;
  out.manifold = BranchedCyclicCover{q, FamilyClosedBandRep{b}};
  // degree 1 changes nothing: the bounded piece is still the pushed-in
  // surface, so its own characteristic is reported
  out.cspan_euler = q == 1 ? s.total_euler : branched_cover_euler(q, 1, s.total_euler);
  out.provenance.push_back("cyclic suspension q=" + std::to_string(q));
  for (auto& t : tags) out.provenance.push_back(std::move(t));
  return out;
}

CLink3Descriptor dummy_suspension(const BandRepresentation& b) {
  const BraidedSurfaceData s = braided_surface(b);
  CLink3Descriptor out;
  ConnSumS1xS2 m;
  for (const auto& comp : s.components) m.counts.push_back(1 - comp.euler);
  out.manifold = std::move(m);
  out.cspan_euler = s.total_euler;  // surface x disk
  out.provenance.push_back("constant suspension");
  return out;
}

CLink3Descriptor double_of_exterior_cable(const BandRepresentation& b) {
  if (closure_components(brep_product(b)) != 1)
    throw std::invalid_argument("exterior double: closure must be a knot");
  const BraidedSurfaceData s = braided_surface(b);
  CLink3Descriptor out;
  out.manifold = DoubleKnotExterior{"closure of " + std::to_string(b.strands) + "-strand representation"};
  // branch surface: two parallel copies of the pushed-in surface
  out.cspan_euler = branched_cover_euler(2, 1, 2 * s.total_euler);
  out.remark_euler = 2 - s.total_euler;  // the published alternative
  out.provenance.push_back("untwisted 2-cable route");
  return out;
}

CLink3Descriptor double_of_exterior_annulus(int tb_k, const std::string& label) {
  if (tb_k < 0)
    throw std::invalid_argument("exterior double: annulus route needs tb >= 0");
  CLink3Descriptor out;
  out.manifold = DoubleKnotExterior{label};
  out.cspan_euler = branched_cover_euler(2, 1, 0);  // annulus branch
  out.provenance.push_back("untwisted annulus route");
  return out;
}

ManifoldDescription double_branched_cover(const FamilyDescriptor& fd) {
  return std::visit(
      [](const auto& f) -> ManifoldDescription {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, FamilyPretzel>) {
          return SeifertFiberedSpace{seifert_data(f.t)};
        } else if constexpr (std::is_same_v<T, FamilyRational>) {
          return lens_space(f.r);
        } else if constexpr (std::is_same_v<T, FamilyTree>) {
          return TreeManifold{f.tree};
        } else {
          throw std::invalid_argument("double branched cover: unsupported descriptor");
        }
      },
      fd);
}

ManifoldDescription link_at_infinity_product(int g) {
  if (g < 0) throw std::invalid_argument("product: genus must be >= 0");
  if (g == 1) return Torus3{};
  return ProductS1Fg{g};
}

bool singularity_excluded(const ManifoldDescription& m) {
  return std::holds_alternative<Torus3>(m);
}

}  // namespace qplink
