#pragma once

#include <gkzhodge/gkz.hpp>
#include <gkzhodge/groebner.hpp>
#include <gkzhodge/weyl.hpp>

#include <optional>
#include <vector>

namespace gkz {

// Initial ideal in_{(-w,w)}(I) for the V-filtration along `var` (w = 1 on var),
// via a Groebner basis in the homogenized algebra. The result is a Groebner
// basis of the initial ideal for the standard order.
GroebnerBasis v_initial_ideal(const std::vector<WeylElement>& gens, std::size_t var, GroebnerOptions opts = {});

struct BernsteinOptions {
  long bound = -1;  // largest m tried; -1 means 2r + 2
  long lattice_bound = 20;
  std::vector<long> alpha_samples{1, -1, 2, -2};
  GroebnerOptions groebner;
};

struct BernsteinResult {
  long m = 0;
  long bound = 0;
  std::size_t r = 0;          // rank of B
  std::vector<Rat> b;         // monic minimal polynomial of d_t t on the class of 1, low degree first
  bool certified = false;     // (d_t t)^m reduces to 0 modulo in(I')
  bool predecessor_fails = false;  // (d_t t)^{m-1} does not
  bool shifted_fail = false;  // (d_t t - a)(d_t t)^{m-1} does not, for every sampled a != 0
  SystemPresentation ideal;   // I' on (w, t)
  std::size_t initial_basis_size = 0;
  long steps = 0;

  bool roots_all_zero() const;
};

// Least m with (d_t t)^m in V^1 + I' for the graph-embedded system of B.
// Throws NotGorenstein when B has no usable c', BoundExceeded past the bound.
BernsteinResult bernstein_exponent(const IntMatrix& b, BernsteinOptions opts = {});

// A representative Q of [p] in D/I with Q in V^k along `var`, of order at most
// max_order (when given) and with x-degree at most x_bound. Searched by exact
// linear algebra on normal forms; nullopt when none exists in that range.
std::optional<WeylElement> filtered_representative(const WeylElement& p, const GroebnerBasis& gb, std::size_t var,
                                                   int k, std::optional<int> max_order, int x_bound);

struct LiftCheck {
  bool in_induced = false;             // [p] in V^k_ind, found with order <= witness_order
  std::optional<WeylElement> witness;  // element of V^k congruent to p
  std::optional<WeylElement> lift;     // element of V^k cap F_p congruent to p
};

LiftCheck lift_check(const WeylElement& p, const GroebnerBasis& gb, std::size_t var, int k, int p_order,
                     int witness_order, int x_bound);

// D/<w^2 d_w - 1> with the class of 1 at k = 1, p = 0.
struct NonPureExample {
  GroebnerBasis gb;
  bool generator_pure = false;
  LiftCheck check;
};
NonPureExample nonpure_example(int x_bound = 6);

}  // namespace gkz
