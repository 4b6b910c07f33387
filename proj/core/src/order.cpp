#include <gkzhodge/order.hpp>

namespace gkz {

int weyl_std_compare(const Signature& sig, const Exp& a, const Exp& b) {
  const std::size_t n = sig.nvars();
  int da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    da += a[sig.d(i)];
    db += b[sig.d(i)];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = n; i-- > 0;) {
    int x = a[sig.d(i)], y = b[sig.d(i)];
    if (x != y) return x < y ? -1 : 1;
  }
  for (std::size_t i = n; i-- > 0;) {
    int x = a[sig.x(i)], y = b[sig.x(i)];
    if (x != y) return x < y ? -1 : 1;
  }
  const std::size_t q = sig.nparams();
  const std::size_t plain = sig.homogenized() ? q - 1 : q;
  for (std::size_t j = plain; j-- > 0;) {
    int x = a[sig.p(j)], y = b[sig.p(j)];
    if (x != y) return x < y ? -1 : 1;
  }
  if (sig.homogenized()) {
    int x = a[sig.p(sig.h_param())], y = b[sig.p(sig.h_param())];
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

TermOrder::TermOrder(SigPtr sig, std::vector<std::vector<int>> weights)
    : sig_(std::move(sig)), weights_(std::move(weights)) {
  for (auto& w : weights_)
    if (w.size() != sig_->width()) throw std::invalid_argument("TermOrder: weight vector has wrong length");
}

int TermOrder::compare(const Exp& a, const Exp& b) const {
  for (auto& w : weights_) {
    long sa = 0, sb = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 0) continue;
      sa += static_cast<long>(w[i]) * a[i];
      sb += static_cast<long>(w[i]) * b[i];
    }
    if (sa != sb) return sa < sb ? -1 : 1;
  }
  return weyl_std_compare(*sig_, a, b);
}

std::string TermOrder::name() const {
  if (weights_.empty()) return "weyl-std";
  std::string s = "weights[";
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (k) s += ";";
    for (std::size_t i = 0; i < weights_[k].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(weights_[k][i]);
    }
  }
  return s + "]+weyl-std";
}

std::vector<int> TermOrder::total_degree_weight(const Signature& sig) {
  std::vector<int> w(sig.width(), 0);
  for (std::size_t i = 0; i < 2 * sig.nvars(); ++i) w[i] = 1;
  if (sig.homogenized()) w[sig.p(sig.h_param())] = 1;
  return w;
}

std::vector<int> TermOrder::uv_weight(const Signature& sig, const std::vector<int>& u,
                                      const std::vector<int>& v) {
  std::vector<int> w(sig.width(), 0);
  for (std::size_t i = 0; i < sig.nvars(); ++i) {
    w[sig.x(i)] = u.at(i);
    w[sig.d(i)] = v.at(i);
  }
  return w;
}

std::pair<Exp, Rat> leading_term(const WeylElement& p, const TermOrder& order) {
  if (p.is_zero()) throw ZeroElement("leading_term of zero");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (order.compare(best->first, it->first) < 0) best = it;
  return *best;
}

Exp leading_monomial(const WeylElement& p, const TermOrder& order) { return leading_term(p, order).first; }

}  // namespace gkz
