#include <gkzhodge/weyl.hpp>

#include <gkzhodge/order.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace gkz {

Signature::Signature(std::vector<std::string> vars, std::vector<std::string> params, bool homogenized,
                     std::optional<std::string> marked)
    : vars_(std::move(vars)), params_(std::move(params)), homogenized_(homogenized), marked_(std::move(marked)) {
  std::set<std::string> seen;
  for (auto& v : vars_)
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name " + v);
  for (auto& v : params_)
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate parameter name " + v);
  if (homogenized_ && params_.empty()) throw std::invalid_argument("homogenized signature needs h");
  if (marked_ && !var_index(*marked_)) throw std::invalid_argument("marked variable is not a Weyl variable");
}

std::optional<std::size_t> Signature::marked_index() const {
  if (!marked_) return std::nullopt;
  return var_index(*marked_);
}

std::optional<std::size_t> Signature::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Signature::param_index(const std::string& name) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == name) return i;
  return std::nullopt;
}

std::size_t Signature::require_var(const std::string& name) const {
  auto i = var_index(name);
  if (!i) throw std::invalid_argument("unknown variable " + name);
  return *i;
}

std::shared_ptr<const Signature> Signature::with_marked(std::optional<std::string> marked) const {
  return std::make_shared<Signature>(vars_, params_, homogenized_, std::move(marked));
}

std::shared_ptr<const Signature> Signature::with_homogenization() const {
  if (homogenized_) throw std::invalid_argument("signature already homogenized");
  auto params = params_;
  params.push_back("h");
  return std::make_shared<Signature>(vars_, params, true, marked_);
}

std::shared_ptr<const Signature> Signature::without_homogenization() const {
  if (!homogenized_) throw std::invalid_argument("signature not homogenized");
  auto params = params_;
  params.pop_back();
  return std::make_shared<Signature>(vars_, params, false, marked_);
}

bool operator==(const Signature& a, const Signature& b) {
  return a.vars_ == b.vars_ && a.params_ == b.params_ && a.homogenized_ == b.homogenized_;
}

SigPtr make_signature(std::vector<std::string> vars, std::vector<std::string> params, bool homogenized,
                      std::optional<std::string> marked) {
  return std::make_shared<Signature>(std::move(vars), std::move(params), homogenized, std::move(marked));
}

namespace {

void check_same(const WeylElement& a, const WeylElement& b) {
  if (a.signature() == b.signature()) return;
  if (!a.signature() || !b.signature() || !(a.sig() == b.sig()))
    throw SignatureMismatch("operands live in different algebras");
}

void accumulate(WeylElement::TermMap& m, const Exp& e, const Rat& c) {
  if (c == 0) return;
  auto it = m.find(e);
  if (it == m.end()) {
    m.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

Int binomial(int n, int k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int falling(int c, int k) {
  Int r = 1;
  for (int j = 0; j < k; ++j) r *= (c - j);
  return r;
}

// Adds left*right (monomials) times coeff into out.
void product_into(const Signature& sig, const Exp& left, const Exp& right, const Rat& coeff,
                  WeylElement::TermMap& out) {
  const std::size_t n = sig.nvars();
  Exp base(sig.width());
  for (std::size_t i = 0; i < sig.width(); ++i) base[i] = left[i] + right[i];
  std::vector<std::pair<Exp, Rat>> frontier{{base, coeff}};
  const bool hom = sig.homogenized();
  const std::size_t hpos = hom ? sig.p(sig.h_param()) : 0;
  for (std::size_t i = 0; i < n; ++i) {
    int b = left[sig.d(i)];
    int c = right[sig.x(i)];
    if (b == 0 || c == 0) continue;
    int kmax = c > 0 ? std::min(b, c) : b;
    std::vector<std::pair<Exp, Rat>> next;
    next.reserve(frontier.size() * static_cast<std::size_t>(kmax + 1));
    for (auto& [e, cf] : frontier) {
      for (int k = 0; k <= kmax; ++k) {
        Int f = binomial(b, k) * falling(c, k);
        if (f == 0) continue;
        Exp e2 = e;
        e2[sig.x(i)] -= k;
        e2[sig.d(i)] -= k;
        if (hom) e2[hpos] += 2 * k;
        next.emplace_back(std::move(e2), cf * Rat(f));
      }
    }
    frontier.swap(next);
  }
  for (auto& [e, cf] : frontier) accumulate(out, e, cf);
}

}  // namespace

WeylElement WeylElement::constant(SigPtr sig, const Rat& c) {
  WeylElement p(sig);
  p.add_term(Exp(sig->width(), 0), c);
  return p;
}

WeylElement WeylElement::monomial(SigPtr sig, Exp e, const Rat& c) {
  if (e.size() != sig->width()) throw std::invalid_argument("monomial: exponent has wrong length");
  for (std::size_t i = 0; i < sig->nvars(); ++i)
    if (e[sig->d(i)] < 0) throw std::invalid_argument("negative power of a partial derivative");
  WeylElement p(sig);
  p.add_term(e, c);
  return p;
}

WeylElement WeylElement::var(SigPtr sig, std::size_t i, int power) {
  Exp e(sig->width(), 0);
  e[sig->x(i)] = power;
  return monomial(sig, e);
}

WeylElement WeylElement::partial(SigPtr sig, std::size_t i, int power) {
  Exp e(sig->width(), 0);
  e[sig->d(i)] = power;
  return monomial(sig, e);
}

WeylElement WeylElement::param(SigPtr sig, std::size_t j, int power) {
  Exp e(sig->width(), 0);
  e[sig->p(j)] = power;
  return monomial(sig, e);
}

void WeylElement::add_term(const Exp& e, const Rat& c) { accumulate(terms_, e, c); }

Rat WeylElement::coefficient(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (!sig_) sig_ = o.sig_;
  if (o.is_zero()) return *this;
  check_same(*this, o);
  for (auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (!sig_) sig_ = o.sig_;
  if (o.is_zero()) return *this;
  check_same(*this, o);
  for (auto& [e, c] : o.terms_) accumulate(terms_, e, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) { return multiply(a, b); }

bool operator==(const WeylElement& a, const WeylElement& b) {
  if (a.is_zero() && b.is_zero()) return true;
  if (a.sig_ && b.sig_ && !(a.sig() == b.sig())) return false;
  return a.terms_ == b.terms_;
}

WeylElement WeylElement::retag(SigPtr sig) const {
  if (sig->width() != (sig_ ? sig_->width() : sig->width())) throw SignatureMismatch("retag: layout differs");
  WeylElement p(std::move(sig));
  p.terms_ = terms_;
  return p;
}

WeylElement multiply(const WeylElement& p, const WeylElement& q) {
  if (p.is_zero() || q.is_zero()) return WeylElement(p.signature() ? p.signature() : q.signature());
  check_same(p, q);
  WeylElement out(p.signature());
  WeylElement::TermMap m;
  for (auto& [e1, c1] : p.terms())
    for (auto& [e2, c2] : q.terms()) product_into(p.sig(), e1, e2, c1 * c2, m);
  for (auto& [e, c] : m) out.add_term(e, c);
  return out;
}

WeylElement monomial_product(const SigPtr& sig, const Exp& left, const Exp& right, const Rat& coeff) {
  WeylElement::TermMap m;
  product_into(*sig, left, right, coeff, m);
  WeylElement out(sig);
  for (auto& [e, c] : m) out.add_term(e, c);
  return out;
}

WeylElement power(const WeylElement& p, unsigned k) {
  WeylElement r = WeylElement::constant(p.signature(), 1);
  WeylElement base = p;
  while (k) {
    if (k & 1u) r = multiply(r, base);
    k >>= 1;
    if (k) base = multiply(base, base);
  }
  return r;
}

WeylElement commutator(const WeylElement& p, const WeylElement& q) { return multiply(p, q) - multiply(q, p); }

int total_partial_degree(const Signature& sig, const Exp& e) {
  int s = 0;
  for (std::size_t i = 0; i < sig.nvars(); ++i) s += e[sig.d(i)];
  return s;
}

int order(const WeylElement& p) {
  if (p.is_zero()) throw ZeroElement("order of zero");
  int m = 0;
  bool first = true;
  for (auto& [e, c] : p.terms()) {
    int d = total_partial_degree(p.sig(), e);
    if (first || d > m) m = d;
    first = false;
  }
  return m;
}

long weight_degree(const WeylElement& p, const std::vector<int>& w) {
  if (p.is_zero()) throw ZeroElement("weight degree of zero");
  long best = 0;
  bool first = true;
  for (auto& [e, c] : p.terms()) {
    long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<long>(w[i]) * e[i];
    if (first || s > best) best = s;
    first = false;
  }
  return best;
}

int v_order(const Signature& sig, const Exp& e, std::size_t var) { return e[sig.x(var)] - e[sig.d(var)]; }

VOrderInfo v_orders(const WeylElement& p, std::size_t var) {
  if (p.is_zero()) throw ZeroElement("V-order of zero");
  VOrderInfo info;
  bool first = true;
  for (auto& [e, c] : p.terms()) {
    int v = v_order(p.sig(), e, var);
    if (first) {
      info.min_order = info.max_order = v;
      first = false;
    } else {
      info.min_order = std::min(info.min_order, v);
      info.max_order = std::max(info.max_order, v);
    }
  }
  info.pure = info.min_order == info.max_order;
  return info;
}

VOrderInfo v_orders(const WeylElement& p) {
  auto m = p.sig().marked_index();
  if (!m) throw std::invalid_argument("signature has no marked variable");
  return v_orders(p, *m);
}

FiltrationDegree filtration_degree(const WeylElement& p, const FiltrationSpec& spec) {
  FiltrationDegree out;
  switch (spec.kind) {
    case FiltrationSpec::Kind::order:
      out.degree = order(p);
      break;
    case FiltrationSpec::Kind::weight:
      out.degree = weight_degree(p, spec.weight);
      break;
    case FiltrationSpec::Kind::v_along: {
      auto info = v_orders(p, p.sig().require_var(spec.variable));
      out.degree = info.min_order;
      out.pure = info.pure;
      break;
    }
  }
  return out;
}

WeylElement initial_form_order(const WeylElement& p) {
  int m = order(p);
  WeylElement out(p.signature());
  for (auto& [e, c] : p.terms())
    if (total_partial_degree(p.sig(), e) == m) out.add_term(e, c);
  return out;
}

WeylElement initial_form(const WeylElement& p, const std::vector<int>& w) {
  long m = weight_degree(p, w);
  WeylElement out(p.signature());
  for (auto& [e, c] : p.terms()) {
    long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<long>(w[i]) * e[i];
    if (s == m) out.add_term(e, c);
  }
  return out;
}

namespace {

WeylElement invert_monomial(const WeylElement& m) {
  if (m.size() != 1) throw std::invalid_argument("substitute: negative power of a non-monomial image");
  const auto& [e, c] = *m.terms().begin();
  for (std::size_t i = 0; i < m.sig().nvars(); ++i)
    if (e[m.sig().d(i)] != 0) throw std::invalid_argument("substitute: negative power of an image with partials");
  Exp inv(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
  return WeylElement::monomial(m.signature(), inv, 1 / c);
}

struct PowerCache {
  std::map<std::pair<const WeylElement*, int>, WeylElement> cache;
  const WeylElement& get(const WeylElement& base, int k) {
    auto key = std::make_pair(&base, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    WeylElement v = k >= 0 ? power(base, static_cast<unsigned>(k)) : power(invert_monomial(base), static_cast<unsigned>(-k));
    return cache.emplace(key, std::move(v)).first->second;
  }
};

}  // namespace

WeylElement substitute(const WeylElement& p, const Substitution& s) {
  const Signature& sig = p.sig();
  WeylElement out(s.target);
  PowerCache cache;
  for (auto& [e, c] : p.terms()) {
    WeylElement t = WeylElement::constant(s.target, c);
    for (std::size_t i = 0; i < sig.nvars(); ++i)
      if (e[sig.x(i)] != 0) t = multiply(t, cache.get(s.var_image[i], e[sig.x(i)]));
    for (std::size_t i = 0; i < sig.nvars(); ++i)
      if (e[sig.d(i)] != 0) t = multiply(t, cache.get(s.partial_image[i], e[sig.d(i)]));
    for (std::size_t j = 0; j < sig.nparams(); ++j)
      if (e[sig.p(j)] != 0) t = multiply(t, cache.get(s.param_image[j], e[sig.p(j)]));
    out += t;
  }
  return out;
}

Substitution identity_substitution(const Signature& source, SigPtr target) {
  Substitution s;
  s.target = target;
  for (std::size_t i = 0; i < source.nvars(); ++i) {
    std::size_t j = target->require_var(source.vars()[i]);
    s.var_image.push_back(WeylElement::var(target, j));
    s.partial_image.push_back(WeylElement::partial(target, j));
  }
  for (std::size_t i = 0; i < source.nparams(); ++i) {
    auto j = target->param_index(source.params()[i]);
    if (!j) throw std::invalid_argument("identity_substitution: parameter missing in target");
    s.param_image.push_back(WeylElement::param(target, *j));
  }
  return s;
}

FourierSetup fourier_setup(SigPtr source, const std::vector<std::string>& vars,
                           const std::map<std::string, std::string>& rename) {
  std::vector<std::string> names = source->vars();
  std::vector<bool> flip(names.size(), false);
  for (auto& v : vars) {
    std::size_t i = source->require_var(v);
    flip[i] = true;
    auto it = rename.find(v);
    names[i] = it != rename.end() ? it->second : v + "hat";
  }
  std::optional<std::string> marked;
  if (auto m = source->marked_index()) marked = names[*m];
  FourierSetup fl;
  fl.target = make_signature(names, source->params(), source->homogenized(), marked);
  fl.forward.target = fl.target;
  for (std::size_t j = 0; j < source->nparams(); ++j)
    fl.forward.param_image.push_back(WeylElement::param(fl.target, j));
  fl.inverse = fl.forward;
  for (std::size_t i = 0; i < names.size(); ++i) {
    WeylElement x = WeylElement::var(fl.target, i), d = WeylElement::partial(fl.target, i);
    if (flip[i]) {
      fl.forward.var_image.push_back(d);
      fl.forward.partial_image.push_back(-x);
      fl.inverse.var_image.push_back(-d);
      fl.inverse.partial_image.push_back(x);
    } else {
      fl.forward.var_image.push_back(x);
      fl.forward.partial_image.push_back(d);
      fl.inverse.var_image.push_back(x);
      fl.inverse.partial_image.push_back(d);
    }
  }
  return fl;
}

WeylElement fourier_laplace(const WeylElement& p, const FourierSetup& fl) { return substitute(p, fl.forward); }

WeylElement inverse_fourier_laplace(const WeylElement& p, const FourierSetup& fl) {
  return substitute(p, fl.inverse);
}

LocalizedFourierSetup localized_fourier_setup(SigPtr source, const std::string& var, const std::string& z_name) {
  std::size_t i0 = source->require_var(var);
  if (i0 != 0) throw UnsupportedLocalization("localized transform only in the leading lambda_0 direction");
  std::vector<std::string> names = source->vars();
  names[0] = z_name;
  LocalizedFourierSetup fl;
  fl.target = make_signature(names, source->params(), source->homogenized());
  fl.z = 0;
  fl.forward.target = fl.target;
  for (std::size_t j = 0; j < source->nparams(); ++j)
    fl.forward.param_image.push_back(WeylElement::param(fl.target, j));
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i == 0) {
      Exp e(fl.target->width(), 0);
      e[fl.target->x(0)] = 2;
      e[fl.target->d(0)] = 1;
      fl.forward.var_image.push_back(WeylElement::monomial(fl.target, e));
      fl.forward.partial_image.push_back(WeylElement::var(fl.target, 0, -1));
    } else {
      fl.forward.var_image.push_back(WeylElement::var(fl.target, i));
      fl.forward.partial_image.push_back(WeylElement::partial(fl.target, i));
    }
  }
  return fl;
}

WeylElement fourier_laplace(const WeylElement& p, const std::vector<std::string>& vars, bool localized_z) {
  if (localized_z) {
    if (vars.size() != 1) throw UnsupportedLocalization("localized transform takes exactly one variable");
    auto fl = localized_fourier_setup(p.signature(), vars[0]);
    return substitute(p, fl.forward);
  }
  return fourier_laplace(p, fourier_setup(p.signature(), vars));
}

SigPtr rees_signature(const Signature& sig, const std::string& z) {
  if (sig.homogenized()) throw std::invalid_argument("rees_signature: homogenized source");
  auto params = sig.params();
  params.push_back(z);
  return make_signature(sig.vars(), params, false, sig.marked());
}

WeylElement rees_homogenize(const WeylElement& p, const SigPtr& target, const std::string& z) {
  auto zi = target->param_index(z);
  if (!zi) throw std::invalid_argument("rees_homogenize: target lacks " + z);
  Substitution s = identity_substitution(p.sig(), target);
  WeylElement zz = WeylElement::param(target, *zi);
  for (auto& d : s.partial_image) d = multiply(zz, d);
  return substitute(p, s);
}

WeylElement dehomogenize(const WeylElement& p, const SigPtr& target, const std::string& param) {
  auto pi = p.sig().param_index(param);
  if (!pi) throw std::invalid_argument("dehomogenize: unknown parameter " + param);
  const std::size_t drop = p.sig().p(*pi);
  if (target->width() + 1 != p.sig().width()) throw SignatureMismatch("dehomogenize: target layout");
  WeylElement out(target);
  for (auto& [e, c] : p.terms()) {
    Exp f;
    f.reserve(e.size() - 1);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != drop) f.push_back(e[i]);
    out.add_term(f, c);
  }
  return out;
}

WeylElement homogenize_h(const WeylElement& p, const SigPtr& target) {
  if (!target->homogenized() || target->width() != p.sig().width() + 1)
    throw SignatureMismatch("homogenize_h: target must append h");
  const Signature& sig = p.sig();
  int top = 0;
  bool first = true;
  for (auto& [e, c] : p.terms()) {
    int deg = 0;
    for (std::size_t i = 0; i < 2 * sig.nvars(); ++i) deg += e[i];
    if (first || deg > top) top = deg;
    first = false;
  }
  WeylElement out(target);
  for (auto& [e, c] : p.terms()) {
    int deg = 0;
    for (std::size_t i = 0; i < 2 * sig.nvars(); ++i) deg += e[i];
    Exp f = e;
    f.push_back(top - deg);
    out.add_term(f, c);
  }
  return out;
}

WeylElement dehomogenize_h(const WeylElement& p, const SigPtr& target) {
  return dehomogenize(p, target, p.sig().params().back());
}

// ---------------------------------------------------------------------------
// Text format

std::string monomial_to_string(const Signature& sig, const Exp& e) {
  std::vector<std::string> parts;
  auto emit = [&](const std::string& name, int k) {
    if (k == 0) return;
    parts.push_back(k == 1 ? name : name + "^" + std::to_string(k));
  };
  std::size_t plain = sig.homogenized() ? sig.nparams() - 1 : sig.nparams();
  for (std::size_t j = 0; j < plain; ++j) emit(sig.params()[j], e[sig.p(j)]);
  for (std::size_t i = 0; i < sig.nvars(); ++i) emit(sig.vars()[i], e[sig.x(i)]);
  for (std::size_t i = 0; i < sig.nvars(); ++i) emit("d_" + sig.vars()[i], e[sig.d(i)]);
  if (sig.homogenized()) emit(sig.params().back(), e[sig.p(sig.h_param())]);
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += "*";
    s += parts[k];
  }
  return s;
}

std::string to_string(const WeylElement& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exp, Rat>> terms(p.terms().begin(), p.terms().end());
  const Signature& sig = p.sig();
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return weyl_std_compare(sig, a.first, b.first) > 0; });
  std::string s;
  bool first = true;
  for (auto& [e, c] : terms) {
    std::string mono = monomial_to_string(sig, e);
    Rat a = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      s += a.get_str();
    } else if (a == 1) {
      s += mono;
    } else {
      s += a.get_str() + "*" + mono;
    }
  }
  return s;
}

namespace {

class OperatorParser {
 public:
  OperatorParser(const std::string& text, SigPtr sig) : s_(text), sig_(std::move(sig)) {}

  WeylElement parse() {
    WeylElement r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  WeylElement expr() {
    WeylElement r(sig_);
    bool neg = accept('-');
    if (!neg) accept('+');
    WeylElement t = term();
    r += neg ? -t : t;
    while (true) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  WeylElement term() {
    WeylElement r = factor();
    while (accept('*')) r = multiply(r, factor());
    return r;
  }

  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  WeylElement factor() {
    WeylElement base = atom();
    if (accept('^')) {
      long k = integer();
      if (k >= 0) return power(base, static_cast<unsigned>(k));
      if (base.size() != 1) fail("negative exponent on a non-monomial");
      const auto& [e, c] = *base.terms().begin();
      Exp inv(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i] * static_cast<int>(-k);
      for (std::size_t i = 0; i < sig_->nvars(); ++i)
        if (e[sig_->d(i)] != 0) fail("negative exponent on a partial derivative");
      Rat cc = 1;
      for (long j = 0; j < -k; ++j) cc /= c;
      return WeylElement::monomial(sig_, inv, cc);
    }
    return base;
  }

  WeylElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      WeylElement r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string num = s_.substr(start, pos_ - start);
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t ds = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (ds == pos_) fail("expected denominator");
        num += "/" + s_.substr(ds, pos_ - ds);
      }
      Rat c(num);
      c.canonicalize();
      return WeylElement::constant(sig_, c);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (auto i = sig_->var_index(id)) return WeylElement::var(sig_, *i);
      if (auto j = sig_->param_index(id)) return WeylElement::param(sig_, *j);
      if (id.rfind("d_", 0) == 0)
        if (auto i = sig_->var_index(id.substr(2))) return WeylElement::partial(sig_, *i);
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected character");
  }

  std::string s_;
  SigPtr sig_;
  std::size_t pos_ = 0;
};

}  // namespace

WeylElement parse_operator(const std::string& text, const SigPtr& sig) { return OperatorParser(text, sig).parse(); }

SigPtr infer_signature(const std::vector<std::string>& texts, const std::vector<std::string>& params,
                       std::optional<std::string> marked) {
  std::vector<std::string> vars;
  std::set<std::string> seen(params.begin(), params.end());
  auto add = [&](const std::string& v) {
    if (seen.insert(v).second) vars.push_back(v);
  };
  for (auto& t : texts) {
    std::size_t i = 0;
    while (i < t.size()) {
      char ch = t[i];
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t start = i;
        while (i < t.size() && (std::isalnum(static_cast<unsigned char>(t[i])) || t[i] == '_')) ++i;
        std::string id = t.substr(start, i - start);
        if (id.rfind("d_", 0) == 0 && id.size() > 2) id = id.substr(2);
        add(id);
      } else {
        ++i;
      }
    }
  }
  if (marked && !seen.count(*marked)) vars.push_back(*marked);
  return make_signature(vars, params, false, marked);
}

}  // namespace gkz
