#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qplink/braid.hpp"
#include "qplink/catalog.hpp"
#include "qplink/pretzel.hpp"
#include "qplink/rational.hpp"
#include "qplink/tree.hpp"

namespace qplink {

// --- family descriptors -----------------------------------------------------

struct FamilyPretzel {
  std::vector<int> t;
};
struct FamilyRational {
  std::vector<int> r;
};
struct FamilyTree {
  WeightedPlanarTree tree;
};
struct FamilyClosedBandRep {
  BandRepresentation rep;
};

using FamilyDescriptor =
    std::variant<HopfSpec, FamilyPretzel, FamilyRational, FamilyTree, FamilyClosedBandRep>;

// --- manifold descriptions --------------------------------------------------

struct SeifertFiberedSpace {
  SeifertData data;
};
struct TreeManifold {
  WeightedPlanarTree tree;
};
struct ConnSumS1xS2 {
  std::vector<int> counts;  // one entry per manifold component; 0 = a 3-sphere
};
struct DoubleKnotExterior {
  std::string label;
};
struct ProductS1Fg {
  int g = 0;
};
struct Torus3 {};
struct Sphere3 {};

struct BranchedCyclicCover {
  int q = 1;
  FamilyDescriptor branch;
};

using ManifoldDescription =
    std::variant<LensSpace, SeifertFiberedSpace, TreeManifold, ConnSumS1xS2,
                 BranchedCyclicCover, DoubleKnotExterior, ProductS1Fg, Torus3, Sphere3>;

/// A 3-dimensional descriptor: the link-manifold, the Euler
/// characteristic of the bounded 4-dimensional piece, and how it arose.
struct CLink3Descriptor {
  ManifoldDescription manifold;
  long long cspan_euler = 0;
  std::vector<std::string> provenance;
  std::optional<long long> remark_euler;  // alternative value, when the sources differ
};

nlohmann::json manifold_to_json(const ManifoldDescription& m);
nlohmann::json family_to_json(const FamilyDescriptor& fd);
nlohmann::json descriptor_to_json(const CLink3Descriptor& d);

// --- operations -------------------------------------------------------------

/// Euler characteristic of a q-fold cyclic cover branched along a
/// subcomplex: q * chi_base - (q-1) * chi_branch.  Requires q >= 1.
long long branched_cover_euler(long long q, long long chi_base, long long chi_branch);

/// q-fold cyclic suspension of the closed band representation.  The
/// link-manifold is the q-fold cyclic branched cover of the 3-sphere
/// along the closure; the bounded piece is the branched cover of the
/// 4-ball along the pushed-in surface (chi = n - k).  q = 1 is the
/// identity construction and passes the surface data through.  Tags
/// (fibered / singularity link / link at infinity) are preserved.
CLink3Descriptor cyclic_suspension(const BandRepresentation& b, int q,
                                   std::vector<std::string> tags = {});

/// Suspension by a constant: each surface component of Euler
/// characteristic chi_i contributes a connected sum of 1 - chi_i copies
/// of S1 x S2 (none = a 3-sphere); the bounded piece is surface x disk.
CLink3Descriptor dummy_suspension(const BandRepresentation& b);

/// The double of a knot exterior as a link-manifold, via the untwisted
/// 2-cable of a quasipositive knot.  Requires the closure to be a knot.
/// cspan_euler uses the cover formula on the doubled surface; the
/// alternative published value 2 - chi(S) is attached as remark_euler.
CLink3Descriptor double_of_exterior_cable(const BandRepresentation& b);

/// The same manifold via the untwisted annulus over a knot with
/// maximal Thurston-Bennequin invariant >= 0; the branch annulus gives
/// cspan_euler = 2.
CLink3Descriptor double_of_exterior_annulus(int tb_k, const std::string& label);

/// Double branched cover of the 3-sphere over a classified family:
/// pretzels give Seifert-fibered spaces, rational tuples lens spaces,
/// weighted trees tree-manifolds.  Other descriptors are unsupported.
ManifoldDescription double_branched_cover(const FamilyDescriptor& fd);

/// Link-at-infinity products S1 x F_g; genus 1 is the 3-torus.
ManifoldDescription link_at_infinity_product(int g);

/// True exactly for the 3-torus, which cannot be the link-manifold of
/// an isolated surface singularity.
bool singularity_excluded(const ManifoldDescription& m);

}  // namespace qplink
