#pragma once

#include "qplink/braid.hpp"

namespace qplink {

/// Left-greedy Garside normal form over permutation braids:
/// w = Delta^inf * A_1 ... A_m with the A_i left-weighted proper
/// permutation braids.  Two words represent the same element of B_n
/// iff their normal forms are identical.
struct NormalForm {
  int strands = 1;
  long long infimum = 0;
  std::vector<BraidPermutation> factors;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const BraidWord& w);

bool braids_equal(const BraidWord& a, const BraidWord& b);
bool is_trivial(const BraidWord& w);

/// Dehornoy handle reduction.  Independent of the Garside engine; returns
/// true iff w represents the identity.  Intended as a cross-check oracle
/// on short words.
bool handle_reduction_trivial(const BraidWord& w);

}  // namespace qplink
