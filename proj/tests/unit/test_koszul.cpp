#include <gkzhodge/homological.hpp>

#include <doctest.h>
#include <test_util.hpp>

using namespace gkz;
using gkz::test::v;

namespace {

std::size_t homology_at(const KoszulReport& rep, const IntVec& degree, std::size_t i) {
  for (auto& d : rep.degrees)
    if (d.degree == degree) return d.homology.at(i);
  FAIL("degree not scanned");
  return 0;
}

}  // namespace

TEST_CASE("x, y is a regular sequence on Q[x,y]") {
  SigPtr ring = make_signature({"x", "y"});
  auto rep = commutative_koszul_homology(ring, {}, {parse_operator("x", ring), parse_operator("y", ring)},
                                         IntMatrix{{1, 1}}, 4);
  CHECK(rep.regular);
  CHECK(homology_at(rep, v({0}), 0) == 1);
  for (long k = 1; k <= 4; ++k) CHECK(homology_at(rep, v({k}), 0) == 0);
}

TEST_CASE("a repeated element is not regular") {
  SigPtr ring = make_signature({"x", "y"});
  auto x = parse_operator("x", ring);
  auto rep = commutative_koszul_homology(ring, {}, {x, x}, IntMatrix{{1, 1}}, 3);
  CHECK_FALSE(rep.regular);
  // e_1 - e_2 is a cycle of degree 1 that is not a boundary.
  CHECK(homology_at(rep, v({1}), 1) == 1);
}

TEST_CASE("x, z is a system of parameters on the quadric cone") {
  SigPtr ring = make_signature({"x", "y", "z"});
  auto rep = commutative_koszul_homology(ring, {parse_operator("x*z - y^2", ring)},
                                         {parse_operator("x", ring), parse_operator("z", ring)},
                                         IntMatrix{{1, 1, 1}}, 4);
  CHECK(rep.regular);
  // H_0 = Q[y]/(y^2).
  CHECK(homology_at(rep, v({0}), 0) == 1);
  CHECK(homology_at(rep, v({1}), 0) == 1);
  for (long k = 2; k <= 4; ++k) CHECK(homology_at(rep, v({k}), 0) == 0);
}

TEST_CASE("partials and inhomogeneous elements are rejected") {
  SigPtr ring = make_signature({"x", "y"});
  CHECK_THROWS_AS(
      commutative_koszul_homology(ring, {}, {parse_operator("d_x", ring)}, IntMatrix{{1, 1}}, 2),
      std::invalid_argument);
  CHECK_THROWS_AS(
      commutative_koszul_homology(ring, {}, {parse_operator("x + y^2", ring)}, IntMatrix{{1, 1}}, 2),
      std::invalid_argument);
  CHECK_THROWS_AS(commutative_koszul_homology(ring, {}, {parse_operator("x", ring)}, IntMatrix{{0, 1}}, 2),
                  std::invalid_argument);
}

TEST_CASE("Euler-Koszul complex of a GKZ system") {
  for (const IntVec& beta : {v({0, 0}), v({1, 2}), v({-1, 3})}) {
    EulerKoszul k = euler_koszul(build_gkz(IntMatrix{{1, 1, 1}, {0, 1, 2}}, beta));
    CHECK(k.well_defined);
    CHECK(k.d_squared_zero);
    CHECK(k.eulers.size() == 2);
    CHECK(k.differential.size() == 4);
    // The top generator e_{01} has two faces.
    CHECK(k.differential[3].size() == 2);
  }
}

TEST_CASE("a single Euler operator gives a two-term complex") {
  SystemPresentation sys = build_gkz(IntMatrix{{1, 1}}, v({0}));
  EulerKoszul k = euler_koszul(sys);
  REQUIRE(k.differential.size() == 2);
  CHECK(k.differential[0].empty());
  REQUIRE(k.differential[1].size() == 1);
  CHECK(k.differential[1][0].first == 0u);
  CHECK(k.differential[1][0].second == sys.eulers()[0]);
}

TEST_CASE("Euler symbols are regular on the chart semigroup ring") {
  for (std::size_t u = 0; u <= 1; ++u) {
    SymbolKoszulReport rep = euler_symbol_koszul(IntMatrix{{1, 1}, {0, 1}}, u);
    CHECK(rep.regular);
    CHECK(rep.h0_matches);
    CHECK_FALSE(rep.degrees.empty());
    for (auto& d : rep.degrees) {
      for (std::size_t i = 1; i < d.homology.size(); ++i) CHECK(d.homology[i] == 0);
      CHECK(d.homology[0] == d.gr_count);
    }
  }
}
