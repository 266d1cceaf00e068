#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qplink {

/// Criteria for pretzel tuples (t_1, ..., t_p), p >= 3.  All predicates
/// are invariant under permutations of the tuple.

/// The pretzel surface is orientable iff all t_i have the same parity.
bool surface_orientable(const std::vector<int>& t);

/// Orientable and every pairwise sum t_i + t_j is strictly negative.
bool surface_quasipositive(const std::vector<int>& t);

/// Some orientation class makes the standard pretzel diagram positive:
/// either all t_i are odd and negative, or no odd t_i is negative and an
/// even number of t_i are strictly positive.
bool has_positive_orientation(const std::vector<int>& t);

/// Member of the quasipositive-but-not-strongly-quasipositive family: a
/// permutation of (2n+1, -(2n+1), -2m) with m, n > 0.
bool qp_not_strong_family(const std::vector<int>& t);

/// Stable reordering: first the q entries > 1, then the r entries < -1,
/// then the s entries of absolute value 1.  Zero entries are an error.
struct GoodOrder {
  int q = 0;
  int r = 0;
  int s = 0;
  std::vector<int> tuple;
};
GoodOrder good_order(const std::vector<int>& t);

/// Seifert-fibered description of the double branched cover.  Fractions
/// are (numerator, denominator) pairs.
struct SeifertData {
  GoodOrder order;
  std::vector<std::pair<long long, long long>> raw_vector;   // (0; 1/t_1, ..., 1/t_p)
  std::vector<std::pair<long long, long long>> data_vector;  // after splitting off -r
  int euler_term = 0;                                        // the -r entry
  std::string notation;  // "M(O,o;0;-r;(a_1,b_1),...)", independent of the s block
};
SeifertData seifert_data(const std::vector<int>& t);

/// For l, m, n > 0: returns eps when l*m + l*n - m*n = eps in {-1, +1}
/// and l = 1 + eps (mod 2); otherwise nothing.
std::optional<int> brieskorn_check(long long l, long long m, long long n);

}  // namespace qplink
