#pragma once

#include <optional>

#include "qplink/braid.hpp"

namespace qplink {

/// A partially reoriented Hopf link: p + q fibers of the (±) Hopf
/// fibration, p with the natural orientation and q reversed.
/// Requires p >= q >= 0 and p >= 1.
struct HopfSpec {
  char sign = '+';  // '+' or '-'
  int p = 1;
  int q = 0;

  friend bool operator==(const HopfSpec&, const HopfSpec&) = default;
};

/// Collapses the two coincidences in the family -- (±,1,0) are the same
/// trivial knot, and (±,2,0) = (∓,1,1) -- onto fixed representatives
/// (+,1,0), (+,1,1), (+,2,0).  Idempotent; other specs are unchanged.
HopfSpec hopf_canonical(const HopfSpec& h);

bool hopf_is_qp(const HopfSpec& h);
bool hopf_is_fibered(const HopfSpec& h);

struct HopfFlags {
  bool quasipositive = false;
  bool fibered = false;
  std::optional<bool> strongly_quasipositive;  // unset when undetermined here
};
HopfFlags hopf_classify(const HopfSpec& h);

/// Enhancement of the reverse-oriented family: lambda = 2q - q^2, on
/// the domain p > q >= 0.
long long lambda_hminus(long long p, long long q);

/// Milnor number of the fibered link carried by a connected braided
/// surface: the first Betti number 1 - chi.  Throws on a disconnected
/// surface.
int mu_of_braided_fiber(const BandRepresentation& b);

/// Realizes a target enhancement value on a connected sum of one
/// (q+1, q) member and m copies of the (2,1) member: lambda0 =
/// (2q - q^2) + m with m >= 0 minimized, smallest q on ties.
struct EnhancementRealization {
  long long q = 0;
  long long m = 0;
  long long lambda = 0;
};
EnhancementRealization realize_enhancement(long long lambda0);

/// Annuli A(K,n): K with an n-twisted parallel copy.  The maximal
/// Thurston-Bennequin number of K is an input; for the unknot it is -1.
struct AnnulusFlags {
  bool annulus_qp = false;
  bool boundary_sqp = false;
};
AnnulusFlags annulus_strongly_qp(int tb_k, int n, bool is_unknot);

/// Boundary of an unknotted t-twisted strip.  Braidlike strips give the
/// (2,t) torus link, strongly quasipositive iff t >= 0.  Non-braidlike
/// strips need t = 2s even and are strongly quasipositive iff t <= 0,
/// in which case the boundary is that of A(unknot, s).
struct StripFlags {
  bool strongly_qp = false;
  std::optional<int> s;  // only for non-braidlike strips
};
StripFlags strip_boundary_classify(int t, bool braidlike);

}  // namespace qplink
