#pragma once

#include <gkzhodge/groebner.hpp>
#include <gkzhodge/linalg.hpp>
#include <gkzhodge/toric.hpp>
#include <gkzhodge/weyl.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

class GenerationUncertified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotGorenstein : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotLocalized : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NoExponent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Toric ideals

// x^lead - x^trail; lead is the larger monomial under the standard order.
struct Binomial {
  std::vector<int> lead;
  std::vector<int> trail;
  IntVec relation() const;  // lead - trail
  int degree() const;       // max of the two total degrees
};

struct ToricIdealOptions {
  int fiber_degree = 4;  // fibers checked up to this total degree
  GroebnerOptions groebner;
};

struct ToricIdeal {
  std::size_t ncols = 0;
  std::vector<Binomial> binomials;  // reduced Groebner basis
  int fiber_degree = 0;
  long steps = 0;
};

// Reduced Groebner basis of the toric ideal of m, by saturating the
// lattice-basis ideal. Certified by kernel membership, the S-pair criterion and
// fiber connectivity up to opts.fiber_degree; throws GenerationUncertified.
ToricIdeal toric_ideal(const IntMatrix& m, const ToricIdealOptions& opts = {});

enum class BoxFlavor { partial_form, fl_form, rees_form, tilde_form };

// Where each matrix column lives in the target algebra.
struct BoxPlacement {
  SigPtr sig;
  std::vector<std::size_t> column_var;
  std::optional<std::size_t> z;  // rees: parameter index; tilde: variable index
  std::size_t tilde_split = 0;   // tilde: columns below the split are base columns
};

BoxPlacement default_box_placement(const IntMatrix& m, BoxFlavor flavor, std::size_t tilde_split = 0);

WeylElement box_operator(const Binomial& b, BoxFlavor flavor, const BoxPlacement& place);
// Box operator of an arbitrary lattice relation (positive part minus negative part).
WeylElement box_operator(const IntVec& relation, BoxFlavor flavor, const BoxPlacement& place);

std::vector<WeylElement> toric_box_generators(const IntMatrix& m, BoxFlavor flavor, const BoxPlacement& place,
                                              const ToricIdealOptions& opts = {});
std::vector<WeylElement> toric_box_generators(const IntMatrix& m, BoxFlavor flavor);

// ---------------------------------------------------------------------------
// Presentations

enum class SystemFlavor { gkz, fl_gkz, graph, chart, radon_kernel, a_s, a_s_u, rees, hat, tilde };
std::string flavor_name(SystemFlavor f);

// One filtration shift. `shift` is the value as usually quoted; `offset` is o in
// F^H_p = F^ord_{p+o}.
struct ShiftEntry {
  std::string description;
  long shift = 0;
  long offset = 0;
};

struct SystemPresentation {
  SigPtr signature;
  std::vector<WeylElement> generators;
  SystemFlavor flavor = SystemFlavor::gkz;
  IntMatrix matrix;
  IntVec beta;
  std::optional<std::size_t> chart;
  std::vector<ShiftEntry> shift_ledger;
  std::size_t euler_begin = 0;  // generators[euler_begin..] are the Euler-type operators

  std::vector<WeylElement> boxes() const;
  std::vector<WeylElement> eulers() const;
  long total_offset() const;
};

// l_0..l_{n-1} by default.
std::vector<std::string> lambda_names(std::size_t n, std::size_t first = 0);

SystemPresentation build_gkz(const IntMatrix& a, const IntVec& beta, std::size_t first_index = 0);
SystemPresentation build_fl_gkz(const IntMatrix& b, const IntVec& beta);
// B' = (B | c') with the extra variable t marked.
SystemPresentation build_graph_embedded(const IntMatrix& b, long bound = 20);

// Chart u of the homogenized matrix: variables w<i>u<u> for i != u.
SigPtr chart_signature(const IntMatrix& a, std::size_t u);
SystemPresentation build_chart_system(const IntMatrix& a, std::size_t u);
// Coordinate change from chart u1 to chart u2, then right multiplication by
// w_{u1 u2}^{n+1}.
WeylElement chart_glue(const WeylElement& p, const IntMatrix& a, std::size_t u1, std::size_t u2);
WeylElement chart_glue_inverse(const WeylElement& p, const IntMatrix& a, std::size_t u1, std::size_t u2);

struct GlueCertificate {
  bool eulers = false;  // glue(E^{u1}_k) = w^{n+1} E^{u2}_k
  bool boxes = false;   // each box lands on a Laurent multiple of an A_{u2} binomial
  std::vector<std::string> failures;
  bool ok() const { return eulers && boxes; }
};
GlueCertificate verify_chart_glue(const IntMatrix& a, std::size_t u1, std::size_t u2);

IntMatrix build_As(const IntMatrix& a);
IntMatrix build_As_u(const IntMatrix& a, std::size_t u);

SystemPresentation build_radon_kernel(const IntMatrix& a, std::size_t u);
// The GKZ system of A^s_u with hatted chart variables, Fourier transformed in
// those variables and renamed onto the kernel signature.
SystemPresentation fourier_transformed_As_u(const IntMatrix& a, std::size_t u);

SystemPresentation build_rees_gkz(const IntMatrix& atilde);

// Localized transform side: variables z, l1..l_N over the columns of A.
SystemPresentation build_hat_system(const IntMatrix& a, long beta0, const IntVec& beta);
SystemPresentation build_tilde_system(const IntMatrix& a, std::size_t m);

// Right multiplication by z^l prod lambda_{m+j} intertwines the tilde and hat
// systems; checks both identities exactly for the given relations.
struct PsiCertificate {
  bool boxes = false;
  bool eulers = false;
  IntVec hat_parameter;  // (beta0, beta) of the target hat system
  bool ok() const { return boxes && eulers; }
};
PsiCertificate verify_tilde_psi(const IntMatrix& a, std::size_t m);

// Commuting an Euler operator past a box: E g = g (E + c) modulo the boxes.
struct EulerShift {
  std::size_t box = 0;
  std::size_t euler = 0;
  Rat constant;
  bool certified = false;
};
std::vector<EulerShift> euler_right_multiplication(const SystemPresentation& sys);
bool eulers_commute(const SystemPresentation& sys);

// ---------------------------------------------------------------------------
// Duality

struct FanContext {
  std::size_t k = 0;  // base dimension
  std::size_t l = 0;  // number of line bundles
  std::size_t m = 0;  // rays of the base fan
};

struct DualityData {
  IntMatrix atilde;
  IntVec c_tilde;
  IntVec dual_parameter;
  long hodge_shift = 0;  // c_0 + n
  bool facet_certificate = false;
  std::optional<long> weight;            // m + k + 2l
  std::optional<bool> fan_vector_check;  // c~ = (l+1, 0, 1)
};

DualityData duality_data(const IntMatrix& atilde, std::optional<FanContext> ctx = std::nullopt, long bound = 20);

struct DualityMorphism {
  SystemPresentation source;  // parameter -beta'
  SystemPresentation target;  // parameter beta
  IntVec exponent;            // k with A~ k = beta + beta'
  WeylElement multiplier;     // d^k
  long order_shift = 0;       // sum of k
  bool certified = false;     // mapped source generators reduce to 0 in the target
};

DualityMorphism duality_morphism(const DualityData& data, std::optional<IntVec> beta = std::nullopt,
                                 std::optional<IntVec> beta_prime = std::nullopt);
WeylElement apply_duality(const DualityMorphism& phi, const WeylElement& p);

}  // namespace gkz
