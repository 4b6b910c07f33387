#include <gkzhodge/order.hpp>
#include <gkzhodge/weyl.hpp>

#include <doctest.h>
#include <test_util.hpp>

using namespace gkz;
using gkz::test::uniform;

namespace {

WeylElement random_element(const SigPtr& sig, int terms, int max_exp) {
  WeylElement p(sig);
  for (int t = 0; t < terms; ++t) {
    Exp e(sig->width(), 0);
    for (auto& k : e) k = static_cast<int>(uniform(0, max_exp));
    p.add_term(e, Rat(uniform(-5, 5)));
  }
  return p;
}

Int falling(long b, long k) {
  Int out = 1;
  for (long i = 0; i < k; ++i) out *= b - i;
  return out;
}

Int binom(long n, long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

TEST_CASE("canonical commutation relations") {
  SigPtr sig = make_signature({"x", "y"});
  auto x = WeylElement::var(sig, 0), y = WeylElement::var(sig, 1);
  auto dx = WeylElement::partial(sig, 0), dy = WeylElement::partial(sig, 1);
  CHECK(commutator(dx, x) == WeylElement::constant(sig, 1));
  CHECK(commutator(dy, x).is_zero());
  CHECK(commutator(dx, dy).is_zero());
  CHECK(commutator(x, y).is_zero());
}

TEST_CASE("d^a x^b follows the Leibniz formula") {
  SigPtr sig = make_signature({"x"});
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) {
      WeylElement expected(sig);
      for (int k = 0; k <= std::min(a, b); ++k) {
        Exp e{b - k, a - k};
        expected.add_term(e, Rat(binom(a, k) * falling(b, k)));
      }
      CHECK(multiply(WeylElement::partial(sig, 0, a), WeylElement::var(sig, 0, b)) == expected);
    }
}

TEST_CASE("multiplication is associative and distributive") {
  SigPtr sig = make_signature({"x", "y"}, {"s"});
  for (int trial = 0; trial < 25; ++trial) {
    auto p = random_element(sig, 3, 2), q = random_element(sig, 3, 2), r = random_element(sig, 3, 2);
    CHECK(multiply(multiply(p, q), r) == multiply(p, multiply(q, r)));
    CHECK(multiply(p, q + r) == multiply(p, q) + multiply(p, r));
  }
}

TEST_CASE("printing and parsing round-trip") {
  SigPtr sig = make_signature({"w1", "w2"}, {"s"});
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_element(sig, 4, 3);
    CHECK(parse_operator(to_string(p), sig) == p);
  }
  // Terms print in descending order; d_w2 beats w1^2*d_w1 on the partials.
  CHECK(to_string(parse_operator("3*w1^2*d_w1 - d_w2", sig)) == "-d_w2 + 3*w1^2*d_w1");
  CHECK(to_string(WeylElement(sig)) == "0");
}

TEST_CASE("parse errors and signature mismatches") {
  SigPtr sig = make_signature({"x"});
  CHECK_THROWS_AS(parse_operator("3**x", sig), ParseError);
  CHECK_THROWS_AS(parse_operator("y + 1", sig), ParseError);
  SigPtr other = make_signature({"y"});
  CHECK_THROWS_AS(multiply(WeylElement::var(sig, 0), WeylElement::var(other, 0)), SignatureMismatch);
}

TEST_CASE("inferred signatures collect every identifier") {
  SigPtr sig = infer_signature({"x*d_y - 1", "d_z"});
  CHECK(sig->nvars() == 3);
  CHECK(sig->var_index("x").has_value());
  CHECK(sig->var_index("y").has_value());
  CHECK(sig->var_index("z").has_value());
}

TEST_CASE("Fourier-Laplace is an algebra automorphism") {
  SigPtr sig = make_signature({"x", "y"});
  FourierSetup fl = fourier_setup(sig, {"x"}, {{"x", "xi"}});
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_element(sig, 3, 2), q = random_element(sig, 3, 2);
    auto fp = fourier_laplace(p, fl), fq = fourier_laplace(q, fl);
    CHECK(fourier_laplace(multiply(p, q), fl) == multiply(fp, fq));
    CHECK(inverse_fourier_laplace(multiply(p, q), fl) ==
          multiply(inverse_fourier_laplace(p, fl), inverse_fourier_laplace(q, fl)));
  }
  auto x = WeylElement::var(sig, 0);
  auto img = fourier_laplace(x, fl);
  CHECK(img == WeylElement::partial(fl.target, 0));
  CHECK(fourier_laplace(WeylElement::partial(sig, 0), fl) == -WeylElement::var(fl.target, 0));
  CHECK(inverse_fourier_laplace(x, fl) == -WeylElement::partial(fl.target, 0));
  CHECK(inverse_fourier_laplace(WeylElement::partial(sig, 0), fl) == WeylElement::var(fl.target, 0));
  // y is untouched.
  CHECK(to_string(fourier_laplace(WeylElement::var(sig, 1), fl)) == "y");
}

TEST_CASE("localized transform keeps the commutation relation") {
  SigPtr sig = make_signature({"l0", "l1"});
  LocalizedFourierSetup lf = localized_fourier_setup(sig, "l0");
  auto l0 = substitute(WeylElement::var(sig, 0), lf.forward);
  auto d0 = substitute(WeylElement::partial(sig, 0), lf.forward);
  CHECK(commutator(d0, l0) == WeylElement::constant(lf.target, 1));
  CHECK(to_string(d0) == "z^-1");
  CHECK(to_string(l0) == "z^2*d_z");
}

TEST_CASE("orders and V-purity") {
  SigPtr sig = make_signature({"w", "t"}, {}, false, std::string("t"));
  auto euler = parse_operator("t*d_t + w*d_w + 2", sig);
  auto nonpure = parse_operator("w^2*d_w - t", sig);
  CHECK(order(euler) == 1);
  CHECK(v_orders(euler).pure);
  CHECK(v_orders(euler).max_order == 0);
  auto info = v_orders(nonpure);
  CHECK_FALSE(info.pure);
  // t raises the V-order by one, d_t lowers it.
  CHECK(info.min_order == 0);
  CHECK(info.max_order == 1);
  CHECK(initial_form_order(parse_operator("d_w^2 + w*d_t + 1", sig)) == parse_operator("d_w^2", sig));
}

TEST_CASE("homogenization in h round-trips") {
  SigPtr sig = make_signature({"x", "y"});
  SigPtr hsig = sig->with_homogenization();
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_element(sig, 3, 2);
    CHECK(dehomogenize_h(homogenize_h(p, hsig), sig) == p);
  }
  // [d, x] = h^2 in the homogenized algebra.
  auto x = WeylElement::var(hsig, 0), dx = WeylElement::partial(hsig, 0);
  CHECK(commutator(dx, x) == WeylElement::param(hsig, hsig->h_param(), 2));
}

TEST_CASE("Rees homogenization keeps z central and dehomogenizes back") {
  SigPtr sig = make_signature({"x"});
  SigPtr rs = rees_signature(*sig);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_element(sig, 3, 3);
    auto r = rees_homogenize(p, rs);
    CHECK(dehomogenize(r, sig, "z") == p);
    CHECK(commutator(r, WeylElement::param(rs, 0)).is_zero());
  }
}

TEST_CASE("standard order compares the partial degree first") {
  SigPtr sig = make_signature({"x"});
  TermOrder ord(sig);
  CHECK(ord(Exp{5, 0}, Exp{0, 1}));
  CHECK(ord(Exp{0, 1}, Exp{1, 1}));
  CHECK(leading_monomial(parse_operator("x^3 + d_x", sig), ord) == Exp{0, 1});
}
