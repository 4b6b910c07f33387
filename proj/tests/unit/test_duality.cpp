#include <gkzhodge/groebner.hpp>
#include <gkzhodge/homological.hpp>

#include <doctest.h>
#include <test_util.hpp>

#include <functional>

using namespace gkz;
using gkz::test::v;

namespace {

const IntMatrix desk_a{{1, 1}, {0, 1}};
const IntMatrix desk_b{{1, 1, 1}, {0, 1, 2}};
// Rays of the total space of O(1) over P^1.
const IntMatrix fan_rays{{1, -1, 0}, {0, 1, 1}};

bool brute_member(const IntMatrix& b, const IntVec& x, long total) {
  std::vector<long> k(b.cols(), 0);
  std::function<bool(std::size_t, long)> rec = [&](std::size_t j, long left) -> bool {
    if (j == b.cols()) {
      IntVec kk;
      for (long t : k) kk.emplace_back(t);
      return b.apply(kk) == x;
    }
    for (long t = 0; t <= left; ++t) {
      k[j] = t;
      if (rec(j + 1, left - t)) return true;
    }
    k[j] = 0;
    return false;
  };
  return rec(0, total);
}

}  // namespace

TEST_CASE("duality data of the desk matrices") {
  DualityData a = duality_data(homogenize(desk_a));
  CHECK(a.c_tilde == v({3, 2, 1}));
  CHECK(a.dual_parameter == v({-3, -2, -1}));
  CHECK(a.hodge_shift == 5);
  CHECK(a.facet_certificate);
  CHECK_FALSE(a.weight.has_value());

  DualityData b = duality_data(homogenize(desk_b));
  CHECK(b.c_tilde == v({2, 1, 1}));
  CHECK(b.hodge_shift == 5);
  CHECK(b.facet_certificate);
}

TEST_CASE("interior points are exactly c~ plus the semigroup") {
  for (const IntMatrix& a : {desk_a, desk_b}) {
    IntMatrix at = homogenize(a);
    DualityData dd = duality_data(at);
    ConeProfile cone = facet_normals(at);
    for (auto& nrm : cone.facet_normals) CHECK(dot(nrm, dd.c_tilde) == 1);
    for (long x0 = 0; x0 <= 4; ++x0)
      for (long x1 = -1; x1 <= 4; ++x1)
        for (long x2 = -1; x2 <= 4; ++x2) {
          IntVec x = v({x0, x1, x2});
          CHECK(cone.in_interior(x) == brute_member(at, sub(x, dd.c_tilde), 4));
        }
  }
}

TEST_CASE("fan context gives c~ = (l+1, 0, 1)") {
  DualityData dd = duality_data(homogenize(fan_rays), FanContext{1, 1, 2});
  CHECK(dd.c_tilde == v({2, 0, 1}));
  REQUIRE(dd.fan_vector_check.has_value());
  CHECK(*dd.fan_vector_check);
  REQUIRE(dd.weight.has_value());
  CHECK(*dd.weight == 5);
  CHECK(dd.hodge_shift == 5);
  // A context that does not fit this matrix is reported, not thrown.
  DualityData wrong = duality_data(homogenize(fan_rays), FanContext{0, 2, 1});
  CHECK_FALSE(*wrong.fan_vector_check);
}

TEST_CASE("duality morphisms are certified") {
  for (const IntMatrix& a : {desk_a, desk_b, fan_rays}) {
    DualityData dd = duality_data(homogenize(a));
    DualityMorphism phi = duality_morphism(dd);
    CHECK(phi.certified);
    CHECK(dd.atilde.apply(phi.exponent) == dd.c_tilde);
    long total = 0;
    for (auto& k : phi.exponent) total += k.get_si();
    CHECK(phi.order_shift == total);
  }
  DualityMorphism phi = duality_morphism(duality_data(homogenize(desk_b)));
  CHECK(phi.exponent == v({1, 0, 1, 0}));
  CHECK(to_string(phi.multiplier) == "d_l0*d_l2");
}

TEST_CASE("apply_duality sends source generators into the target ideal") {
  DualityMorphism phi = duality_morphism(duality_data(homogenize(desk_a)));
  GroebnerBasis gb = buchberger(phi.target.generators, TermOrder(phi.target.signature));
  for (auto& g : phi.source.generators) CHECK(ideal_membership(apply_duality(phi, g), gb));
  // The unit maps to the multiplier itself, which is not in the target ideal.
  WeylElement one = WeylElement::constant(phi.source.signature, 1);
  CHECK(apply_duality(phi, one) == phi.multiplier);
  CHECK_FALSE(ideal_membership(phi.multiplier, gb));
}

TEST_CASE("non-Gorenstein and unsaturated inputs are rejected") {
  CHECK_THROWS_AS(duality_data(IntMatrix{{1, 1, 1}, {0, 2, 3}}), NotGorenstein);
  // Normal but not Gorenstein: the cone over the segment [0, 3].
  CHECK_THROWS_AS(duality_data(IntMatrix{{1, 1, 1, 1}, {0, 1, 2, 3}}), NotGorenstein);
  DualityData dd = duality_data(homogenize(desk_a));
  CHECK_THROWS_AS(duality_morphism(dd, v({1, 0, 0}), v({0, 0, 0, 1})), std::invalid_argument);
}
