#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qplink/braid.hpp"
#include "qplink/normal_form.hpp"

using namespace qplink;

namespace {

BraidWord word(int n, std::vector<int> signed_letters) {
  BraidWord w(n);
  for (int v : signed_letters) w.push(v > 0 ? v : -v, v > 0 ? +1 : -1);
  return w;
}

BraidWord random_word(int n, int len, std::mt19937& rng) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  BraidWord w(n);
  for (int t = 0; t < len; ++t) w.push(gen(rng), sgn(rng) ? +1 : -1);
  return w;
}

}  // namespace

TEST_CASE("word basics: free reduction, inverse, exponent sum") {
  auto w = word(3, {1, -2, 2, -1, 1});
  CHECK(w.freely_reduced() == word(3, {1}));
  CHECK(compose(w, w.inverse()).empty());
  CHECK(w.exponent_sum() == 1);
  CHECK(word(4, {1, 2, 3}).to_string() == "s1 s2 s3");
  CHECK(word(4, {1, -3}).to_string() == "s1 s3^-1");
}

TEST_CASE("parser round trip and error cases") {
  CHECK(parse_braid_word("s1 s2^-1 s1") == word(3, {1, -2, 1}));
  CHECK(parse_braid_word("1 -2 1") == word(3, {1, -2, 1}));
  CHECK(parse_braid_word("s1", 4).strands() == 4);
  CHECK_THROWS_AS(parse_braid_word("0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid_word("s3", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid_word("xyz"), std::invalid_argument);
}

TEST_CASE("permutation image and cycles") {
  auto p = word(3, {1, 2}).permutation();
  CHECK(p.map(1) == 3);  // strand from position 1 ends at position 3
  CHECK(p.map(3) == 2);
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(word(3, {1, 2, 1}).permutation().cycles() ==
        std::vector<std::vector<int>>{{1, 3}, {2}});
}

TEST_CASE("group relations hold under the normal form") {
  CHECK(braids_equal(word(3, {1, 2, 1}), word(3, {2, 1, 2})));
  CHECK(braids_equal(word(4, {1, 3}), word(4, {3, 1})));
  CHECK_FALSE(braids_equal(word(3, {1}), word(3, {2})));
  CHECK_FALSE(braids_equal(word(3, {1, 2}), word(3, {2, 1})));
  CHECK(is_trivial(word(3, {1, 2, 1, -2, -1, -2})));
  CHECK(is_trivial(BraidWord(5)));
  CHECK_FALSE(is_trivial(word(2, {1, 1})));
}

TEST_CASE("normal form shapes for basic elements") {
  // sigma_1^-1 in B_2 is Delta^-1.
  auto nf = normal_form(word(2, {-1}));
  CHECK(nf.infimum == -1);
  CHECK(nf.factors.empty());

  // Delta in B_3 = s1 s2 s1.
  nf = normal_form(word(3, {1, 2, 1}));
  CHECK(nf.infimum == 1);
  CHECK(nf.factors.empty());

  // A single generator is its own one-factor form.
  nf = normal_form(word(4, {2}));
  CHECK(nf.infimum == 0);
  REQUIRE(nf.factors.size() == 1);
  CHECK(nf.factors[0].one_line() == std::vector<int>{1, 3, 2, 4});
}

TEST_CASE("handle reduction agrees with the normal form engine") {
  std::mt19937 rng(20260823);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 3;
    auto u = random_word(n, 8, rng);
    auto v = random_word(n, 8, rng);
    CHECK(braids_equal(u, v) == handle_reduction_trivial(compose(u, v.inverse())));
    CHECK(handle_reduction_trivial(compose(u, u.inverse())));
  }
}

TEST_CASE("relator insertion does not change the element") {
  std::mt19937 rng(7);
  const std::vector<std::vector<int>> relators = {
      {1, 2, 1, -2, -1, -2}, {2, 1, 2, -1, -2, -1}, {1, 3, -1, -3}, {3, 1, -3, -1},
      {2, -2}, {-3, 3}};
  for (int trial = 0; trial < 200; ++trial) {
    auto w = random_word(4, 10, rng);
    const auto& rel = relators[rng() % relators.size()];
    std::size_t pos = rng() % (w.length() + 1);
    BraidWord rewritten(4);
    for (std::size_t t = 0; t < pos; ++t)
      rewritten.push(w.letters()[t].index, w.letters()[t].sign);
    for (int v : rel) rewritten.push(v > 0 ? v : -v, v > 0 ? +1 : -1);
    for (std::size_t t = pos; t < w.length(); ++t)
      rewritten.push(w.letters()[t].index, w.letters()[t].sign);
    CHECK(braids_equal(w, rewritten));
  }
}

TEST_CASE("positive bands expand to exponent sum one") {
  PositiveBand band(word(4, {1, -3, 2}), 2);
  CHECK(band.expand().exponent_sum() == 1);
  CHECK(embedded_band(1, 4, 4).expand() == word(4, {1, 2, 3, -2, -1}).freely_reduced());
  CHECK(embedded_band(2, 3, 4).expand() == word(4, {2}));
  CHECK_THROWS_AS(embedded_band(3, 2, 4), std::invalid_argument);
}

TEST_CASE("full twist: exponent sum and closure linking") {
  for (int n = 2; n <= 5; ++n) {
    auto t = nabla(n);
    CHECK(t.exponent_sum() == static_cast<long long>(n) * (n - 1));
    CHECK(closure_components(t) == n);
    auto lk = closure_linking_matrix(t);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) CHECK(lk.matrix[a][b] == (a == b ? 0 : 1));
  }
  CHECK(nabla_block(2, 2, 4).empty());
  CHECK(braids_equal(nabla_block(1, 3, 3), nabla(3)));
}

TEST_CASE("full twist factors through block twists and block linking") {
  for (int p = 1; p <= 5; ++p)
    for (int q = 0; q <= p && p + q <= 6; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      CHECK(braids_equal(nabla(p + q), hopf_factorization(p, q, HopfVariant::first)));
      CHECK(braids_equal(nabla(p + q), hopf_factorization(p, q, HopfVariant::second)));
    }
}

TEST_CASE("the two six-band representations have equal product braids") {
  auto r0 = rho0();
  auto r1 = rho1();
  CHECK(r0.strands == 4);
  CHECK(r1.strands == 4);
  CHECK(r0.band_count() == 6);
  CHECK(r1.band_count() == 6);
  CHECK(brep_product(r0).exponent_sum() == 6);
  CHECK(braids_equal(brep_product(r0), brep_product(r1)));

  auto g = geng_band();
  CHECK(braids_equal(brep_product(append_band(r0, g)), brep_product(append_band(r1, g))));
}

TEST_CASE("braided surface bookkeeping") {
  // Three bands on two strings: once-punctured torus.
  BandRepresentation trefoil(2);
  for (int t = 0; t < 3; ++t) trefoil.bands.emplace_back(BraidWord(2), 1);
  auto s = braided_surface(trefoil);
  CHECK(s.connected());
  CHECK(s.total_euler == -1);
  CHECK(s.components[0].boundary_count == 1);
  CHECK(s.components[0].genus == 1);

  // First six-band surface: a twice-punctured torus.
  auto data0 = braided_surface(rho0());
  CHECK(data0.connected());
  CHECK(data0.total_euler == -2);
  CHECK(data0.components[0].boundary_count == 2);
  CHECK(data0.components[0].genus == 1);

  // Second one: same total Euler characteristic and boundary count, but the
  // disk-band graph splits into two once-punctured tori.
  auto data1 = braided_surface(rho1());
  CHECK(data1.total_euler == -2);
  CHECK(data1.components.size() == 2);
  for (const auto& comp : data1.components) {
    CHECK(comp.euler == -1);
    CHECK(comp.boundary_count == 1);
    CHECK(comp.genus == 1);
  }

  // Bandless representation: n disks.
  auto disks = braided_surface(BandRepresentation(3));
  CHECK(disks.components.size() == 3);
  CHECK(disks.total_euler == 3);

  // Appending a band drops the Euler characteristic by one.
  auto bigger = append_band(rho0(), geng_band());
  CHECK(braided_surface(bigger).total_euler == -3);
}

TEST_CASE("parallel copies: Euler scale, component scale, copy independence") {
  std::mt19937 rng(99);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 40; ++trial) {
      const int p = 2 + trial % 3;
      if (n * p > 12) continue;
      BandRepresentation b(p);
      const int k = 1 + static_cast<int>(rng() % 4);
      for (int t = 0; t < k; ++t) {
        auto g = random_word(p, static_cast<int>(rng() % 4), rng);
        b.bands.emplace_back(g, 1 + static_cast<int>(rng() % (p - 1)));
      }
      auto base = braided_surface(b);
      auto cab = cable_band_rep(b, n);
      CHECK(cab.strands == n * p);
      auto cs = braided_surface(cab);
      CHECK(cs.total_euler == n * base.total_euler);
      CHECK(cs.components.size() == n * base.components.size());
      CHECK(closure_components(brep_product(cab)) ==
            n * closure_components(brep_product(b)));

      // Distinct copies sit on disjoint pushed-in surfaces, so the total
      // linking between any two copies vanishes; when the base closure is a
      // knot this is the per-component statement.
      auto lk = closure_linking_matrix(brep_product(cab));
      auto copy_of = [&](int strand) { return (strand - 1) % n; };
      const bool knot_base = closure_components(brep_product(b)) == 1;
      std::vector<std::vector<long long>> copy_lk(n, std::vector<long long>(n, 0));
      for (std::size_t a = 0; a < lk.component_strings.size(); ++a)
        for (std::size_t c = 0; c < lk.component_strings.size(); ++c) {
          if (a == c) continue;
          const int ca = copy_of(lk.component_strings[a][0]);
          const int cc = copy_of(lk.component_strings[c][0]);
          if (ca != cc) {
            copy_lk[ca][cc] += lk.matrix[a][c];
            if (knot_base) CHECK(lk.matrix[a][c] == 0);
          }
        }
      for (int ca = 0; ca < n; ++ca)
        for (int cc = 0; cc < n; ++cc) CHECK(copy_lk[ca][cc] == 0);
    }
  }
}
