#include "qplink/normal_form.hpp"

#include <algorithm>
#include <numeric>

namespace qplink {

namespace {

BraidPermutation delta_perm(int n) {
  std::vector<int> images(n);
  for (int i = 1; i <= n; ++i) images[i - 1] = n + 1 - i;
  return BraidPermutation(std::move(images));
}

// i is in the starting set of the permutation braid A iff the strands
// entering at positions i, i+1 cross in A.
bool in_starting_set(const BraidPermutation& a, int i) { return a.map(i) > a.map(i + 1); }

bool in_finishing_set(const BraidPermutation& a, int i) {
  return a.inverse().map(i) > a.inverse().map(i + 1);
}

// A -> A * s_i (append one crossing on the right).
BraidPermutation right_mult(const BraidPermutation& a, int i) {
  auto inv = a.inverse();
  auto out = a;
  out.swap_images(inv.map(i), inv.map(i + 1));
  return out;
}

// A -> s_i^-1 * A, assuming s_i is in the starting set.
BraidPermutation strip_left(const BraidPermutation& a, int i) {
  auto out = a;
  out.swap_images(i, i + 1);
  return out;
}

BraidPermutation tau(const BraidPermutation& f, const BraidPermutation& delta) {
  return delta.then(f).then(delta);
}

}  // namespace

NormalForm normal_form(const BraidWord& input) {
  const BraidWord w = input.freely_reduced();
  const int n = w.strands();
  NormalForm nf;
  nf.strands = n;
  if (n == 1) return nf;
  const auto delta = delta_perm(n);

  // Convert letters: s_i contributes a one-crossing factor; s_i^-1
  // contributes Delta^-1 * (Delta s_i^-1).
  std::vector<BraidPermutation> factors;
  for (const auto& l : w.letters()) {
    if (l.sign > 0) {
      BraidPermutation f(n);
      f.swap_images(l.index, l.index + 1);
      factors.push_back(std::move(f));
    } else {
      nf.infimum -= 1;
      for (auto& f : factors) f = tau(f, delta);
      auto f = delta;
      const int a = delta.inverse().map(l.index);
      const int b = delta.inverse().map(l.index + 1);
      f.swap_images(a, b);  // Delta * s_i^-1
      factors.push_back(std::move(f));
    }
  }

  // Left-weighted normalization: slide starting crossings of each factor
  // into its predecessor until every adjacent pair is left-weighted, then
  // absorb identity and Delta factors.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < factors.size(); ++j) {
      auto& a = factors[j];
      auto& b = factors[j + 1];
      bool slid = true;
      while (slid) {
        slid = false;
        for (int i = 1; i <= n - 1; ++i) {
          if (in_starting_set(b, i) && !in_finishing_set(a, i)) {
            a = right_mult(a, i);
            b = strip_left(b, i);
            slid = true;
            changed = true;
          }
        }
      }
    }
    for (std::size_t j = 0; j < factors.size();) {
      if (factors[j].is_identity()) {
        factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      } else if (factors[j] == delta) {
        nf.infimum += 1;
        for (std::size_t t = 0; t < j; ++t) factors[t] = tau(factors[t], delta);
        factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(j));
        changed = true;
      } else {
        ++j;
      }
    }
  }

  nf.factors = std::move(factors);
  return nf;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("braids_equal: strand mismatch");
  return normal_form(a) == normal_form(b);
}

bool is_trivial(const BraidWord& w) {
  const auto nf = normal_form(w);
  return nf.infimum == 0 && nf.factors.empty();
}

bool handle_reduction_trivial(const BraidWord& w) {
  std::vector<BraidLetter> word = w.freely_reduced().letters();

  auto free_reduce = [](std::vector<BraidLetter>& v) {
    std::vector<BraidLetter> out;
    for (const auto& l : v) {
      if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
        out.pop_back();
      else
        out.push_back(l);
    }
    v = std::move(out);
  };

  // Repeatedly reduce the handle with the leftmost closing letter; such a
  // handle contains no nested handle, so the reduction step is permitted.
  for (long long guard = 0; guard < 2000000; ++guard) {
    std::ptrdiff_t open = -1, close = -1;
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(word.size()) && close < 0; ++k) {
      const int i = word[k].index;
      for (std::ptrdiff_t j = k - 1; j >= 0; --j) {
        if (word[j].index > i) continue;
        if (word[j].index == i && word[j].sign == -word[k].sign) {
          open = j;
          close = k;
        }
        break;
      }
    }
    if (close < 0) return word.empty();

    const int i = word[open].index;
    const int e = word[open].sign;
    std::vector<BraidLetter> replaced;
    replaced.reserve(word.size());
    replaced.insert(replaced.end(), word.begin(), word.begin() + open);
    for (std::ptrdiff_t t = open + 1; t < close; ++t) {
      const auto& l = word[t];
      if (l.index == i + 1) {
        replaced.push_back({i + 1, -e});
        replaced.push_back({i, l.sign});
        replaced.push_back({i + 1, e});
      } else {
        replaced.push_back(l);
      }
    }
    replaced.insert(replaced.end(), word.begin() + close + 1, word.end());
    word = std::move(replaced);
    free_reduce(word);
  }
  throw std::runtime_error("handle reduction: iteration guard exceeded");
}

}  // namespace qplink
