#pragma once

#include <gkzhodge/linalg.hpp>

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gkz {

class SignatureMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ZeroElement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class UnsupportedLocalization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exponent vector laid out as (x_0..x_{n-1}, d_0..d_{n-1}, p_0..p_{q-1}).
using Exp = std::vector<int>;

class Signature {
 public:
  Signature(std::vector<std::string> vars, std::vector<std::string> params = {},
            bool homogenized = false, std::optional<std::string> marked = std::nullopt);

  std::size_t nvars() const { return vars_.size(); }
  std::size_t nparams() const { return params_.size(); }
  std::size_t width() const { return 2 * vars_.size() + params_.size(); }
  std::size_t x(std::size_t i) const { return i; }
  std::size_t d(std::size_t i) const { return vars_.size() + i; }
  std::size_t p(std::size_t j) const { return 2 * vars_.size() + j; }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::string>& params() const { return params_; }
  bool homogenized() const { return homogenized_; }
  // Position of h among the parameters when homogenized.
  std::size_t h_param() const { return params_.size() - 1; }
  const std::optional<std::string>& marked() const { return marked_; }
  std::optional<std::size_t> marked_index() const;

  std::optional<std::size_t> var_index(const std::string& name) const;
  std::optional<std::size_t> param_index(const std::string& name) const;
  std::size_t require_var(const std::string& name) const;

  std::shared_ptr<const Signature> with_marked(std::optional<std::string> marked) const;
  std::shared_ptr<const Signature> with_homogenization() const;  // appends h
  std::shared_ptr<const Signature> without_homogenization() const;

  friend bool operator==(const Signature& a, const Signature& b);

 private:
  std::vector<std::string> vars_;
  std::vector<std::string> params_;
  bool homogenized_;
  std::optional<std::string> marked_;
};

using SigPtr = std::shared_ptr<const Signature>;

SigPtr make_signature(std::vector<std::string> vars, std::vector<std::string> params = {},
                      bool homogenized = false, std::optional<std::string> marked = std::nullopt);

class WeylElement {
 public:
  using TermMap = std::map<Exp, Rat>;

  WeylElement() = default;
  explicit WeylElement(SigPtr sig) : sig_(std::move(sig)) {}

  static WeylElement constant(SigPtr sig, const Rat& c);
  static WeylElement monomial(SigPtr sig, Exp e, const Rat& c = 1);
  static WeylElement var(SigPtr sig, std::size_t i, int power = 1);
  static WeylElement partial(SigPtr sig, std::size_t i, int power = 1);
  static WeylElement param(SigPtr sig, std::size_t j, int power = 1);

  const SigPtr& signature() const { return sig_; }
  const Signature& sig() const { return *sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Exp& e, const Rat& c);
  Rat coefficient(const Exp& e) const;

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const Rat& c);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator-(WeylElement a) { return a *= Rat(-1); }
  friend WeylElement operator*(const Rat& c, WeylElement a) { return a *= c; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b);
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

  // Same terms, reinterpreted over a signature with identical layout.
  WeylElement retag(SigPtr sig) const;

 private:
  SigPtr sig_;
  TermMap terms_;
};

WeylElement multiply(const WeylElement& p, const WeylElement& q);
WeylElement power(const WeylElement& p, unsigned k);
WeylElement commutator(const WeylElement& p, const WeylElement& q);

// Product of two monomials x^a d^b p^e * x^c d^f p^g in normal order.
WeylElement monomial_product(const SigPtr& sig, const Exp& left, const Exp& right, const Rat& coeff);

// Filtrations.
int total_partial_degree(const Signature& sig, const Exp& e);
int order(const WeylElement& p);  // max |delta|
long weight_degree(const WeylElement& p, const std::vector<int>& w);
int v_order(const Signature& sig, const Exp& e, std::size_t var);

struct VOrderInfo {
  int min_order = 0;
  int max_order = 0;
  bool pure = false;
};
VOrderInfo v_orders(const WeylElement& p, std::size_t var);
VOrderInfo v_orders(const WeylElement& p);  // along the marked variable

struct FiltrationSpec {
  enum class Kind { order, weight, v_along };
  Kind kind = Kind::order;
  std::vector<int> weight;
  std::string variable;

  static FiltrationSpec order_filtration() { return {}; }
  static FiltrationSpec weight_filtration(std::vector<int> w) { return {Kind::weight, std::move(w), {}}; }
  static FiltrationSpec v_filtration(std::string var) { return {Kind::v_along, {}, std::move(var)}; }
};

struct FiltrationDegree {
  long degree = 0;
  bool pure = true;  // meaningful for v_along
};
FiltrationDegree filtration_degree(const WeylElement& p, const FiltrationSpec& spec);

WeylElement initial_form_order(const WeylElement& p);
WeylElement initial_form(const WeylElement& p, const std::vector<int>& w);

// Algebra homomorphism given by images of the generators. Negative exponents
// require a Laurent-monomial image without partials.
struct Substitution {
  SigPtr target;
  std::vector<WeylElement> var_image;
  std::vector<WeylElement> partial_image;
  std::vector<WeylElement> param_image;
};
WeylElement substitute(const WeylElement& p, const Substitution& s);
Substitution identity_substitution(const Signature& source, SigPtr target);

// Plain Fourier-Laplace: x -> d_xhat, d_x -> -xhat on the listed variables;
// `rename` gives the hatted name of each transformed variable.
struct FourierSetup {
  SigPtr target;
  Substitution forward;   // x -> d_y, d_x -> -y
  Substitution inverse;   // x -> -d_y, d_x -> y
};
FourierSetup fourier_setup(SigPtr source, const std::vector<std::string>& vars,
                           const std::map<std::string, std::string>& rename = {});
WeylElement fourier_laplace(const WeylElement& p, const FourierSetup& fl);
WeylElement inverse_fourier_laplace(const WeylElement& p, const FourierSetup& fl);

// Localized transform in the lambda_0 direction: the target signature replaces
// the pair (lambda_0, d_lambda_0) by (z, d_z) with z invertible, and sends
// d_lambda_0 -> z^{-1}, lambda_0 -> z^2 d_z.
struct LocalizedFourierSetup {
  SigPtr target;
  Substitution forward;
  std::size_t z = 0;
};
LocalizedFourierSetup localized_fourier_setup(SigPtr source, const std::string& var,
                                              const std::string& z_name = "z");
WeylElement fourier_laplace(const WeylElement& p, const std::vector<std::string>& vars,
                            bool localized_z);

// Rees: every partial d becomes z*d with z a new central parameter.
SigPtr rees_signature(const Signature& sig, const std::string& z = "z");
WeylElement rees_homogenize(const WeylElement& p, const SigPtr& target, const std::string& z = "z");
WeylElement dehomogenize(const WeylElement& p, const SigPtr& target, const std::string& param);

// Homogenized Weyl algebra D^(h): [d, x] = h^2.
WeylElement homogenize_h(const WeylElement& p, const SigPtr& target);
WeylElement dehomogenize_h(const WeylElement& p, const SigPtr& target);

// Text format.
WeylElement parse_operator(const std::string& text, const SigPtr& sig);
std::string to_string(const WeylElement& p);
std::string monomial_to_string(const Signature& sig, const Exp& e);
// Signature whose variables are every identifier seen (d_<x> contributes x).
SigPtr infer_signature(const std::vector<std::string>& texts, const std::vector<std::string>& params = {},
                       std::optional<std::string> marked = std::nullopt);

}  // namespace gkz
