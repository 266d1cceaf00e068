#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qplink {

/// Lens space L(P, Q) with P > 0, 0 <= Q < P, gcd(P, Q) = 1; the P = 0
/// degeneration is S^1 x S^2.
struct LensSpace {
  long long p = 1;
  long long q = 0;
  bool s1_x_s2 = false;

  friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

/// Exact value of r_1 + 1/(-r_2 + 1/(... + 1/((-1)^(n-1) r_n))) as a
/// reduced fraction (P, Q), Q > 0.  Entries must be nonzero; a zero
/// intermediate denominator is an error naming the offending suffix.
std::pair<long long, long long> continued_fraction(const std::vector<int>& r);

LensSpace lens_space(const std::vector<int>& r);

/// Unoriented homeomorphism by default: Q' congruent to +-Q^(+-1) mod P.
/// With oriented = true only Q' = Q or Q'Q = 1 mod P.
bool lens_equivalent(const LensSpace& a, const LensSpace& b, bool oriented = false);

/// Labeled digraph accepting the positive 4-plat words
/// sigma_2^{r_1} sigma_3^{r_2} ...; loaded from a JSON table.  Edge labels
/// look like "s2^a" / "s3^-e": generator, exponent sign, and exponent
/// class a (any), e (even), o (odd), all with strictly positive magnitude.
struct MachineDFA {
  struct Edge {
    int from = 0;
    int to = 0;
    int generator = 2;   // 2 or 3
    int sign = +1;       // sign of the tuple entry the label matches
    char parity = 'a';   // 'a', 'e', 'o'
  };
  std::vector<std::string> states;
  std::vector<Edge> edges;
  std::vector<int> sources;
  std::vector<int> sinks;
  std::vector<int> submachine_edges;

  static MachineDFA parse(const std::string& json_text);
  /// Environment variable QPLINK_MACHINE_TABLE overrides the shipped table.
  static MachineDFA load();

  bool accepts(const std::vector<int>& r, bool submachine_only = false) const;
};

bool machine_accepts(const std::vector<int>& r);
bool submachine_accepts(const std::vector<int>& r);

enum class StickClass { Positive, VeryStronglyQP, Unknown };
StickClass stick_classify(const std::vector<int>& r);

}  // namespace qplink
