#include <gkzhodge/groebner.hpp>

#include <doctest.h>
#include <pure_sets.hpp>
#include <test_util.hpp>

using namespace gkz;

TEST_CASE("x and d_x generate the unit ideal") {
  SigPtr sig = make_signature({"x"});
  GroebnerBasis gb = buchberger({WeylElement::var(sig, 0), WeylElement::partial(sig, 0)}, TermOrder(sig));
  CHECK(gb.contains_unit());
  REQUIRE(gb.generators.size() == 1);
  CHECK(gb.generators.front() == WeylElement::constant(sig, 1));
}

TEST_CASE("explicit combinations of generators are members") {
  SigPtr sig = make_signature({"x", "y"});
  std::vector<WeylElement> gens{parse_operator("x*d_x + 2*y*d_y - 1", sig), parse_operator("d_x^2 - d_y", sig)};
  GroebnerBasis gb = buchberger(gens, TermOrder(sig));
  CHECK(satisfies_spair_criterion(gb));
  for (int trial = 0; trial < 20; ++trial) {
    WeylElement p(sig);
    for (auto& g : gens) {
      Exp e(sig->width(), 0);
      for (auto& k : e) k = static_cast<int>(test::uniform(0, 2));
      p += multiply(WeylElement::monomial(sig, e, Rat(test::uniform(1, 4))), g);
    }
    CHECK(ideal_membership(p, gb));
  }
  CHECK_FALSE(ideal_membership(WeylElement::constant(sig, 1), gb));
  CHECK_FALSE(ideal_membership(parse_operator("d_x", sig), gb));
}

TEST_CASE("the non-pure generator stays a one-element basis") {
  SigPtr sig = make_signature({"w"});
  GroebnerBasis gb = buchberger({parse_operator("w^2*d_w - 1", sig)}, TermOrder(sig));
  REQUIRE(gb.generators.size() == 1);
  CHECK(to_string(gb.generators.front()) == "w^2*d_w - 1");
  CHECK_FALSE(gb.contains_unit());
}

TEST_CASE("left ideal comparison") {
  SigPtr sig = make_signature({"x"});
  TermOrder ord(sig);
  auto e = parse_operator("x*d_x", sig);
  CHECK(same_left_ideal({e}, {e, multiply(parse_operator("x", sig), e)}, ord));
  CHECK_FALSE(same_left_ideal({parse_operator("x", sig)}, {parse_operator("x^2", sig)}, ord));
  // d_x*x normal-orders to x*d_x + 1.
  CHECK(same_left_ideal({parse_operator("d_x*x", sig)}, {parse_operator("x*d_x + 1", sig)}, ord));
}

TEST_CASE("budget exhaustion raises ResourceLimit") {
  SigPtr sig = make_signature({"x", "y", "z"});
  std::vector<WeylElement> gens{parse_operator("d_x*d_z - d_y^2", sig), parse_operator("x*d_x + y*d_y + z*d_z", sig),
                                parse_operator("y*d_y + 2*z*d_z - 1", sig)};
  GroebnerOptions opts;
  opts.budget = 2;
  CHECK_THROWS_AS(buchberger(gens, TermOrder(sig), opts), ResourceLimit);
}

TEST_CASE("weighted orders pick the weight-leading term") {
  SigPtr sig = make_signature({"x"});
  TermOrder w(sig, {TermOrder::uv_weight(*sig, {1}, {-1})});
  // x has weight 1, d_x has weight -1.
  CHECK(leading_monomial(parse_operator("x + d_x", sig), w) == Exp{1, 0});
  CHECK(leading_monomial(parse_operator("x + d_x", sig), TermOrder(sig)) == Exp{0, 1});
}

TEST_CASE("bases of pure generator sets are pure") {
  std::mt19937 gen(7u);
  for (int trial = 0; trial < 100; ++trial) {
    auto set = test::random_pure_set(gen);
    const std::size_t t = set.sig->nvars() - 1;
    REQUIRE(all_pure(set.gens, t));
    GroebnerBasis gb = buchberger(set.gens, TermOrder(set.sig));
    CHECK(all_pure(gb.generators, t));
    CHECK(satisfies_spair_criterion(gb));
    for (auto& g : set.gens) CHECK(ideal_membership(g, gb));
  }
}
