#pragma once

#include <gkzhodge/order.hpp>
#include <gkzhodge/weyl.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace gkz {

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reduction-step budget; GKZ_HODGE_BUDGET overrides the built-in default.
long default_budget();

struct GroebnerOptions {
  long budget = -1;          // reduction steps; -1 means default_budget()
  std::size_t max_basis = 5000;
  bool chain_criterion = true;
  bool reduce = true;        // interreduce and make monic at the end
};

struct GroebnerBasis {
  std::vector<WeylElement> generators;
  TermOrder order;
  bool pure_flag = false;
  long steps = 0;  // reductions spent

  bool contains_unit() const;
};

WeylElement s_pair(const WeylElement& p, const WeylElement& q, const TermOrder& order);

WeylElement normal_form(const WeylElement& p, const std::vector<WeylElement>& g, const TermOrder& order,
                        long* budget = nullptr);

GroebnerBasis buchberger(const std::vector<WeylElement>& gens, const TermOrder& order,
                         GroebnerOptions opts = {});

bool ideal_membership(const WeylElement& p, const GroebnerBasis& gb);

// Every S-pair of the basis reduces to zero.
bool satisfies_spair_criterion(const GroebnerBasis& gb);

// All elements pure along the given variable.
bool all_pure(const std::vector<WeylElement>& elems, std::size_t var);

WeylElement make_monic(const WeylElement& p, const TermOrder& order);

// Whether the left ideals generated by a and b coincide (each generator of one
// reduces to zero modulo a basis of the other).
bool same_left_ideal(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b,
                     const TermOrder& order, GroebnerOptions opts = {});

}  // namespace gkz
