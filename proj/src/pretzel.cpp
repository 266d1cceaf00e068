#include "qplink/pretzel.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qplink {

namespace {

void check_arity(const std::vector<int>& t) {
  if (t.size() < 3) throw std::invalid_argument("pretzel: need at least 3 entries");
}

}  // namespace

bool surface_orientable(const std::vector<int>& t) {
  check_arity(t);
  for (int ti : t)
    if (((ti % 2) + 2) % 2 != ((t[0] % 2) + 2) % 2) return false;
  return true;
}

bool surface_quasipositive(const std::vector<int>& t) {
  if (!surface_orientable(t)) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i] + t[j] >= 0) return false;
  return true;
}

bool has_positive_orientation(const std::vector<int>& t) {
  check_arity(t);
  bool all_odd_negative = true;
  bool some_odd_negative = false;
  int strictly_positive = 0;
  for (int ti : t) {
    const bool odd = std::abs(ti) % 2 == 1;
    if (!(odd && ti < 0)) all_odd_negative = false;
    if (odd && ti < 0) some_odd_negative = true;
    if (ti > 0) ++strictly_positive;
  }
  if (all_odd_negative) return true;
  return !some_odd_negative && strictly_positive % 2 == 0;
}

bool qp_not_strong_family(const std::vector<int>& t) {
  check_arity(t);
  if (t.size() != 3) return false;
  std::vector<int> s(t);
  std::sort(s.begin(), s.end());  // -(2n+1) <= -2m < 2n+1 once n, m > 0
  const int a = s[2];
  if (a < 3 || a % 2 == 0) return false;  // a = 2n+1, n > 0
  if (s[0] != -a) return false;
  const int b = -s[1];
  return b > 0 && b % 2 == 0;  // b = 2m, m > 0
}

GoodOrder good_order(const std::vector<int>& t) {
  check_arity(t);
  GoodOrder out;
  for (int ti : t)
    if (ti == 0) throw std::invalid_argument("good order: zero entry");
  for (int ti : t)
    if (ti > 1) {
      out.tuple.push_back(ti);
      ++out.q;
    }
  for (int ti : t)
    if (ti < -1) {
      out.tuple.push_back(ti);
      ++out.r;
    }
  for (int ti : t)
    if (std::abs(ti) == 1) {
      out.tuple.push_back(ti);
      ++out.s;
    }
  return out;
}

namespace {

std::pair<long long, long long> fraction(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

}  // namespace

SeifertData seifert_data(const std::vector<int>& t) {
  SeifertData out;
  out.order = good_order(t);
  for (int ti : out.order.tuple) out.raw_vector.push_back(fraction(1, ti));
  out.euler_term = -out.order.r;
  std::ostringstream notation;
  notation << "M(O,o;0;" << out.euler_term << ";";
  for (int i = 0; i < out.order.q + out.order.r; ++i) {
    const long long ti = out.order.tuple[i];
    if (i > 0) notation << ",";
    if (i < out.order.q) {
      out.data_vector.push_back(fraction(1, ti));
      notation << "(" << ti << ",1)";
    } else {
      out.data_vector.push_back(fraction(ti + 1, ti));  // 1 + 1/t_i
      notation << "(" << -ti << "," << -1 - ti << ")";
    }
  }
  notation << ")";
  out.notation = notation.str();
  return out;
}

std::optional<int> brieskorn_check(long long l, long long m, long long n) {
  if (l <= 0 || m <= 0 || n <= 0)
    throw std::invalid_argument("brieskorn: exponents must be positive");
  const long long eps = l * m + l * n - m * n;
  if (eps != 1 && eps != -1) return std::nullopt;
  if (((l % 2) + 2) % 2 != ((1 + eps) % 2 + 2) % 2) return std::nullopt;
  return static_cast<int>(eps);
}

}  // namespace qplink
