#include <gkzhodge/bernstein.hpp>

#include <doctest.h>
#include <test_util.hpp>

using namespace gkz;

namespace {

IntMatrix random_unimodular(std::size_t n) {
  IntMatrix u = IntMatrix::identity(n);
  for (int step = 0; step < 4; ++step) {
    std::size_t i = static_cast<std::size_t>(test::uniform(0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(test::uniform(0, static_cast<long>(n) - 1));
    if (i == j) continue;
    u.add_row_multiple(i, j, Int(test::uniform(-2, 2)));
  }
  return u;
}

}  // namespace

TEST_CASE("Bernstein exponents on desk matrices") {
  struct Case {
    IntMatrix b;
    long m;
  };
  std::vector<Case> cases{{IntMatrix{{1}}, 1},
                          {IntMatrix{{1, 2, -1, -2}, {0, 1, 0, 1}}, 1},
                          {IntMatrix{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}, 3},
                          {IntMatrix{{1, 1}, {0, 1}}, 2}};
  for (auto& c : cases) {
    BernsteinResult r = bernstein_exponent(c.b);
    CHECK(r.m == c.m);
    CHECK(static_cast<std::size_t>(r.m) <= r.r);
    CHECK(r.certified);
    CHECK(r.predecessor_fails);
    CHECK(r.shifted_fail);
    CHECK(r.roots_all_zero());
    CHECK(r.b.size() == static_cast<std::size_t>(r.m) + 1);
  }
}

TEST_CASE("Bernstein exponent is invariant under unimodular change of coordinates") {
  for (IntMatrix b : {IntMatrix{{1, 1}, {0, 1}}, IntMatrix{{1, 2, -1, -2}, {0, 1, 0, 1}}}) {
    long m = bernstein_exponent(b).m;
    for (int trial = 0; trial < 4; ++trial) {
      IntMatrix u = random_unimodular(b.rows());
      CHECK(bernstein_exponent(u * b).m == m);
    }
  }
}

TEST_CASE("a bound below m is reported") {
  BernsteinOptions opts;
  opts.bound = 1;
  CHECK_THROWS_AS(bernstein_exponent(IntMatrix{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}, opts), BoundExceeded);
}

TEST_CASE("initial ideal along t consists of pure elements") {
  BernsteinResult r = bernstein_exponent(IntMatrix{{1, 1}, {0, 1}});
  const std::size_t t = r.ideal.signature->nvars() - 1;
  GroebnerBasis in = v_initial_ideal(r.ideal.generators, t);
  CHECK(all_pure(in.generators, t));
  CHECK(in.generators.size() == r.initial_basis_size);
}

TEST_CASE("the non-pure generator breaks the lift property") {
  NonPureExample ex = nonpure_example();
  CHECK_FALSE(ex.generator_pure);
  CHECK(ex.check.in_induced);
  REQUIRE(ex.check.witness.has_value());
  // The witness is w^2 d_w, congruent to 1 and of V-order 1 along w.
  SigPtr sig = ex.gb.generators.front().signature();
  CHECK(ideal_membership(*ex.check.witness - WeylElement::constant(sig, 1), ex.gb));
  CHECK(v_orders(*ex.check.witness, 0).min_order >= 1);
  CHECK_FALSE(ex.check.lift.has_value());
}

TEST_CASE("filtered representatives exist for pure quotients") {
  SigPtr sig = make_signature({"w"}, {}, false, std::string("w"));
  GroebnerBasis gb = buchberger({parse_operator("w*d_w - 1", sig)}, TermOrder(sig));
  // w is already in V^1; a representative of order 0 must exist.
  auto rep = filtered_representative(WeylElement::var(sig, 0), gb, 0, 1, 0, 4);
  REQUIRE(rep.has_value());
  CHECK(order(*rep) == 0);
}
