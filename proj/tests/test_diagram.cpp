#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qplink/diagram.hpp"

using namespace qplink;

TEST_CASE("round unknot") {
  PDDiagram u;
  CHECK(diagram_components(u) == 1);
  auto s = seifert_algorithm(u, OrientationAssignment{{0}});
  CHECK(s.seifert_circles == 1);
  CHECK(s.crossings == 0);
  CHECK(s.euler == 1);
  CHECK(link_determinant(u) == 1);
}

TEST_CASE("malformed PD codes are rejected") {
  PDDiagram bad;
  bad.crossings.push_back({1, 2, 3, 4});
  CHECK_THROWS_AS(diagram_components(bad), std::invalid_argument);
  bad.crossings.push_back({1, 2, 3, 5});  // 4 appears once, 1..3 thrice... still invalid
  CHECK_THROWS_AS(diagram_components(bad), std::invalid_argument);
}

TEST_CASE("pretzel generator shapes") {
  auto tref = pretzel_diagram({-1, -1, -1});
  CHECK(tref.crossings.size() == 3);
  CHECK(diagram_components(tref) == 1);
  auto p222 = pretzel_diagram({-2, -2, -2});
  CHECK(p222.crossings.size() == 6);
  CHECK_THROWS_AS(pretzel_diagram({-1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(pretzel_diagram({1, 0, 1}), std::invalid_argument);
}

TEST_CASE("4-plat generator shapes") {
  CHECK(diagram_components(four_plat_diagram({-2})) == 2);
  CHECK(four_plat_diagram({-2}).crossings.size() == 2);
  CHECK(diagram_components(four_plat_diagram({-2, -2})) == 1);
  CHECK(four_plat_diagram({-2, -2}).crossings.size() == 4);
  CHECK_THROWS_AS(four_plat_diagram({}), std::invalid_argument);
  CHECK_THROWS_AS(four_plat_diagram({2, 0}), std::invalid_argument);
}

TEST_CASE("positive-orientation search anchors") {
  CHECK(find_positive_orientation(pretzel_diagram({-1, -1, -1})).has_value());
  CHECK(find_positive_orientation(pretzel_diagram({-2, -2, -2})).has_value());
  CHECK(find_positive_orientation(pretzel_diagram({2, 4, -6})).has_value());
  CHECK_FALSE(find_positive_orientation(pretzel_diagram({2, 2, 4})).has_value());
  CHECK_FALSE(find_positive_orientation(pretzel_diagram({1, 1, 1})).has_value());
  CHECK_FALSE(find_positive_orientation(pretzel_diagram({3, -3, -2})).has_value());

  CHECK(find_positive_orientation(four_plat_diagram({-2})).has_value());
  CHECK(find_positive_orientation(four_plat_diagram({-2, -2})).has_value());
  CHECK(find_positive_orientation(four_plat_diagram({-2, -4})).has_value());
  CHECK_FALSE(find_positive_orientation(four_plat_diagram({2, -2})).has_value());
}

TEST_CASE("Seifert algorithm on the positive trefoil") {
  auto tref = pretzel_diagram({-1, -1, -1});
  auto o = find_positive_orientation(tref);
  REQUIRE(o.has_value());
  auto s = seifert_algorithm(tref, *o);
  CHECK(s.seifert_circles == 2);
  CHECK(s.crossings == 3);
  CHECK(s.euler == -1);
  CHECK(s.positive);
}

TEST_CASE("figure-eight is positive under no orientation class") {
  auto fig8 = four_plat_diagram({2, -2});
  REQUIRE(diagram_components(fig8) == 1);  // a knot: one projective class
  CHECK_FALSE(seifert_algorithm(fig8, OrientationAssignment{{0}}).positive);
}

TEST_CASE("determinants") {
  CHECK(link_determinant(pretzel_diagram({-1, -1, -1})) == 3);
  CHECK(link_determinant(pretzel_diagram({-2, -2, -2})) == 12);
  CHECK(link_determinant(four_plat_diagram({-2})) == 2);
  CHECK(link_determinant(four_plat_diagram({-2, -2})) == 3);
  CHECK(link_determinant(four_plat_diagram({2, -2})) == 5);
  CHECK(link_determinant(four_plat_diagram({-2, -4})) == 7);

  PDDiagram split;  // two one-crossing unknots, disjoint
  split.crossings.push_back({1, 2, 2, 1});
  split.crossings.push_back({3, 4, 4, 3});
  CHECK_THROWS_AS(link_determinant(split), std::invalid_argument);
}
