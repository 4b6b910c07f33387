#pragma once

#include <gkzhodge/weyl.hpp>

#include <string>
#include <utility>
#include <vector>

namespace gkz {

// The standard order: |delta| first, then delta and gamma compared from the
// highest variable index down, then parameters (h last).
int weyl_std_compare(const Signature& sig, const Exp& a, const Exp& b);

// Weight vectors (over the full exponent layout) compared in sequence, with
// the standard order as final tie-break.
class TermOrder {
 public:
  TermOrder() = default;
  explicit TermOrder(SigPtr sig, std::vector<std::vector<int>> weights = {});

  static TermOrder weyl_std(SigPtr sig) { return TermOrder(std::move(sig)); }

  int compare(const Exp& a, const Exp& b) const;
  bool operator()(const Exp& a, const Exp& b) const { return compare(a, b) < 0; }

  const SigPtr& signature() const { return sig_; }
  const std::vector<std::vector<int>>& weights() const { return weights_; }
  std::string name() const;

  // Total degree in x, d and h; used first for D^(h) orders.
  static std::vector<int> total_degree_weight(const Signature& sig);
  // Weight vector placing u on variables and v on partials, zero on parameters.
  static std::vector<int> uv_weight(const Signature& sig, const std::vector<int>& u,
                                    const std::vector<int>& v);

 private:
  SigPtr sig_;
  std::vector<std::vector<int>> weights_;
};

std::pair<Exp, Rat> leading_term(const WeylElement& p, const TermOrder& order);
Exp leading_monomial(const WeylElement& p, const TermOrder& order);

}  // namespace gkz
