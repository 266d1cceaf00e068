#include "qplink/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace qplink {

namespace {

void check_hopf(const HopfSpec& h) {
  if (h.sign != '+' && h.sign != '-') throw std::invalid_argument("hopf: sign must be + or -");
  if (!(h.p >= h.q && h.q >= 0 && h.p >= 1))
    throw std::invalid_argument("hopf: need p >= q >= 0 and p >= 1");
}

}  // namespace

HopfSpec hopf_canonical(const HopfSpec& h) {
  check_hopf(h);
  if (h.p == 1 && h.q == 0) return {'+', 1, 0};
  if (h.p == 2 && h.q == 0 && h.sign == '-') return {'+', 1, 1};
  if (h.p == 1 && h.q == 1 && h.sign == '-') return {'+', 2, 0};
  return h;
}

bool hopf_is_qp(const HopfSpec& h) {
  const HopfSpec c = hopf_canonical(h);
  if (c.sign == '+') return c.q == 0;  // p >= 1 already guaranteed
  return (c.q == c.p && c.p > 0) || c.q == c.p - 1;
}

bool hopf_is_fibered(const HopfSpec& h) {
  const HopfSpec c = hopf_canonical(h);
  if (c.p == 1 && c.q == 0) return true;  // trivial fibered knot, disk fiber
  if (c.p == 1 && c.q == 1) return true;  // Hopf link, Hopf-band fiber
  return c.p > c.q;
}

HopfFlags hopf_classify(const HopfSpec& h) {
  const HopfSpec c = hopf_canonical(h);
  HopfFlags out;
  out.quasipositive = hopf_is_qp(c);
  out.fibered = hopf_is_fibered(c);
  if (c.sign == '+' && c.q == 0)
    out.strongly_quasipositive = true;  // closure of a positive braid
  else if (c == HopfSpec{'-', 3, 2})
    out.strongly_quasipositive = false;
  return out;
}

long long lambda_hminus(long long p, long long q) {
  if (!(p > q && q >= 0)) throw std::invalid_argument("lambda: need p > q >= 0");
  return 2 * q - q * q;
}

int mu_of_braided_fiber(const BandRepresentation& b) {
  const BraidedSurfaceData s = braided_surface(b);
  if (!s.connected()) throw std::invalid_argument("disconnected Seifert surface");
  return 1 - s.total_euler;
}

EnhancementRealization realize_enhancement(long long lambda0) {
  // 2q - q^2 = 1 - (q-1)^2 takes its largest value <= lambda0 at the
  // smallest admissible q; m picks up the remainder
  EnhancementRealization out;
  if (lambda0 >= 1) {
    out.q = 1;
  } else if (lambda0 == 0) {
    out.q = 0;
  } else {
    long long q = 1;
    while (1 - (q - 1) * (q - 1) > lambda0) ++q;
    out.q = q;
  }
  out.m = lambda0 - (2 * out.q - out.q * out.q);
  out.lambda = lambda0;
  return out;
}

AnnulusFlags annulus_strongly_qp(int tb_k, int n, bool is_unknot) {
  AnnulusFlags out;
  if (is_unknot) {
    out.boundary_sqp = n <= 0;
    out.annulus_qp = n <= -1;  // -1 is the unknot's maximal invariant
  } else {
    out.boundary_sqp = n <= tb_k;
    out.annulus_qp = n <= tb_k;
  }
  return out;
}

StripFlags strip_boundary_classify(int t, bool braidlike) {
  StripFlags out;
  if (braidlike) {
    out.strongly_qp = t >= 0;
    return out;
  }
  if (((t % 2) + 2) % 2 != 0)
    throw std::invalid_argument("strip: non-braidlike twisting must be even");
  out.strongly_qp = t <= 0;
  out.s = t / 2;
  return out;
}

}  // namespace qplink
