#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qplink/covers.hpp"
#include "qplink/diagram.hpp"

using namespace qplink;

namespace {

BandRepresentation generator_rep(int strands, std::initializer_list<int> indices) {
  BandRepresentation out(strands);
  for (int i : indices) out.bands.emplace_back(BraidWord(strands), i);
  return out;
}

BandRepresentation trefoil_rep() { return generator_rep(2, {1, 1, 1}); }

}  // namespace

TEST_CASE("cover characteristic formula") {
  CHECK(branched_cover_euler(2, 1, 0) == 2);
  CHECK(branched_cover_euler(1, 7, -3) == 7);
  CHECK(branched_cover_euler(3, 1, 1) == 1);
  CHECK(branched_cover_euler(2, 1, -2) == 4);
  // linear in both characteristics
  for (long long q = 1; q <= 5; ++q)
    for (long long a = -3; a <= 3; ++a)
      for (long long b = -3; b <= 3; ++b) {
        CHECK(branched_cover_euler(q, 2 * a, b) == 2 * branched_cover_euler(q, a, 0) +
                                                       branched_cover_euler(q, 0, b));
        CHECK(branched_cover_euler(q, 1, 0) == q);
      }
  CHECK_THROWS_AS(branched_cover_euler(0, 1, 1), std::invalid_argument);
}

TEST_CASE("cyclic suspensions") {
  // an annular surface: two disks, two parallel bands
  const auto annulus = generator_rep(2, {1, 1});
  auto d = cyclic_suspension(annulus, 2);
  CHECK(d.cspan_euler == 2);
  CHECK(manifold_to_json(d.manifold)["kind"] == "branched_cyclic_cover");
  CHECK(manifold_to_json(d.manifold)["q"] == 2);

  d = cyclic_suspension(trefoil_rep(), 2);
  CHECK(d.cspan_euler == 3);

  // degree 1 passes the surface through
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    BandRepresentation b(n);
    const int k = static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i)
      b.bands.emplace_back(BraidWord(n), 1 + static_cast<int>(rng() % (n - 1)));
    CHECK(cyclic_suspension(b, 1).cspan_euler == n - k);
  }

  auto tagged = cyclic_suspension(trefoil_rep(), 3, {"fibered"});
  CHECK(std::find(tagged.provenance.begin(), tagged.provenance.end(), "fibered") !=
        tagged.provenance.end());
  CHECK_THROWS_AS(cyclic_suspension(trefoil_rep(), 0), std::invalid_argument);
}

TEST_CASE("constant suspensions") {
  // slice disk: one disk component, a 3-sphere
  auto d = dummy_suspension(BandRepresentation(1));
  CHECK(manifold_to_json(d.manifold) ==
        nlohmann::json({{"kind", "conn_sum_s1xs2"}, {"counts", {0}}}));
  CHECK(d.cspan_euler == 1);

  d = dummy_suspension(trefoil_rep());
  CHECK(std::get<ConnSumS1xS2>(d.manifold).counts == std::vector<int>{2});
  CHECK(d.cspan_euler == -1);

  d = dummy_suspension(BandRepresentation(2));  // two disjoint disks
  CHECK(std::get<ConnSumS1xS2>(d.manifold).counts == std::vector<int>{0, 0});
  CHECK(d.cspan_euler == 2);

  // one summand count per surface component, each 1 - chi_i >= 0
  std::mt19937 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    BandRepresentation b(n);
    const int k = static_cast<int>(rng() % 6);
    for (int i = 0; i < k; ++i)
      b.bands.emplace_back(BraidWord(n), 1 + static_cast<int>(rng() % (n - 1)));
    const auto s = braided_surface(b);
    const auto counts = std::get<ConnSumS1xS2>(dummy_suspension(b).manifold).counts;
    REQUIRE(counts.size() == s.components.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
      CHECK(counts[i] == 1 - s.components[i].euler);
      CHECK(counts[i] >= 0);
    }
  }
}

TEST_CASE("doubles of knot exteriors") {
  auto d = double_of_exterior_annulus(1, "right trefoil");
  CHECK(d.cspan_euler == 2);
  CHECK(std::get<DoubleKnotExterior>(d.manifold).label == "right trefoil");
  CHECK_FALSE(d.remark_euler.has_value());
  CHECK_THROWS_AS(double_of_exterior_annulus(-1, "unknot"), std::invalid_argument);

  d = double_of_exterior_cable(trefoil_rep());
  CHECK(d.cspan_euler == 4);        // cover formula over the doubled surface
  CHECK(d.remark_euler == 3);       // 2 - chi(S), as published
  CHECK_THROWS_AS(double_of_exterior_cable(BandRepresentation(2)), std::invalid_argument);
}

TEST_CASE("double branched covers of the classified families") {
  auto m = double_branched_cover(FamilyRational{{-2, -2}});
  CHECK(std::get<LensSpace>(m) == LensSpace{3, 1, false});

  m = double_branched_cover(FamilyPretzel{{-2, -2, -2}});
  CHECK(std::get<SeifertFiberedSpace>(m).data.notation == "M(O,o;0;-3;(2,1),(2,1),(2,1))");

  m = double_branched_cover(FamilyTree{WeightedPlanarTree::parse("(-2 (-2) (-2) (-2))")});
  CHECK(manifold_to_json(m)["kind"] == "tree_manifold");

  CHECK_THROWS_AS(double_branched_cover(FamilyDescriptor{HopfSpec{'+', 2, 0}}),
                  std::invalid_argument);
}

TEST_CASE("pretzel covers are unchanged by permutation and trivial pairs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = 3 + static_cast<int>(rng() % 3);
    std::vector<int> t(p);
    for (auto& x : t) {
      x = static_cast<int>(rng() % 9) - 4;
      if (x == 0) x = 2;
    }
    auto base = std::get<SeifertFiberedSpace>(double_branched_cover(FamilyPretzel{t})).data;

    auto shuffled = t;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto other = std::get<SeifertFiberedSpace>(double_branched_cover(FamilyPretzel{shuffled})).data;
    auto a = base.data_vector, b = other.data_vector;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
    CHECK(base.euler_term == other.euler_term);

    auto stabilized = t;
    stabilized.push_back(1);
    stabilized.push_back(-1);
    auto st = std::get<SeifertFiberedSpace>(double_branched_cover(FamilyPretzel{stabilized})).data;
    CHECK(st.notation == base.notation);
    CHECK(st.data_vector == base.data_vector);
  }
}

TEST_CASE("lens-space order matches the diagram determinant") {
  const std::vector<int> vals = {-4, -3, -2, -1, 1, 2, 3, 4};
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> idx(n, 0);
    while (true) {
      std::vector<int> r(n);
      for (int i = 0; i < n; ++i) r[i] = vals[idx[i]];
      bool defined = true;
      LensSpace lens{1, 0, false};
      try {
        lens = std::get<LensSpace>(double_branched_cover(FamilyRational{r}));
      } catch (const std::invalid_argument&) {
        defined = false;
      }
      if (defined) {
        CAPTURE(r);
        const long long order = lens.s1_x_s2 ? 0 : lens.p;
        CHECK(order == link_determinant(four_plat_diagram(r)));
      }
      int i = n - 1;
      while (i >= 0 && ++idx[i] == static_cast<int>(vals.size())) idx[i--] = 0;
      if (i < 0) break;
    }
  }
}

TEST_CASE("links at infinity") {
  CHECK(singularity_excluded(link_at_infinity_product(1)));
  CHECK(manifold_to_json(link_at_infinity_product(1))["kind"] == "torus3");
  CHECK_FALSE(singularity_excluded(link_at_infinity_product(0)));
  CHECK(std::get<ProductS1Fg>(link_at_infinity_product(2)).g == 2);
  CHECK_FALSE(singularity_excluded(link_at_infinity_product(2)));
  CHECK_THROWS_AS(link_at_infinity_product(-1), std::invalid_argument);
}

TEST_CASE("descriptor serialization") {
  auto d = double_of_exterior_cable(trefoil_rep());
  const auto j = descriptor_to_json(d);
  CHECK(j["cspan_euler"] == 4);
  CHECK(j["remark_euler"] == 3);
  CHECK(j["manifold"]["kind"] == "double_knot_exterior");

  const auto fam = family_to_json(FamilyClosedBandRep{trefoil_rep()});
  CHECK(fam["family"] == "closed_band_rep");
  CHECK(fam["rep"]["strands"] == 2);
  CHECK(fam["rep"]["bands"].size() == 3);
}
