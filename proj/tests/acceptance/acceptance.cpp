// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <gkzhodge/bernstein.hpp>
#include <gkzhodge/gkz.hpp>
#include <gkzhodge/groebner.hpp>
#include <gkzhodge/homological.hpp>
#include <gkzhodge/toric.hpp>

#include <pure_sets.hpp>

#ifdef GKZ_HAVE_CLI
#include "cli.hpp"

#include <nlohmann/json.hpp>
#endif

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace gkz;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

const IntMatrix square_cone{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}};
const IntMatrix four_columns{{1, 2, -1, -2}, {0, 1, 0, 1}};
const IntMatrix desk_a{{1, 1}, {0, 1}};
const IntMatrix desk_b{{1, 1, 1}, {0, 1, 2}};
const IntMatrix fan_rays{{1, -1, 0}, {0, 1, 1}};

IntVec iv(std::initializer_list<long> xs) {
  IntVec out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream line;
  if (limit_s > 0 && secs > limit_s) {
    o.ok = false;
    line.precision(3);
    line << "time " << secs << " s over " << limit_s << " s; ";
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << line.str() << o.detail;
  std::cout.precision(3);
  std::cout << " [" << secs << " s]" << std::endl;
}

Outcome gorenstein_examples() {
  Outcome o;
  auto c = gorenstein_vector(square_cone);
  std::set<IntVec> reps;
  bool cprime_ok = true;
  for (auto& d : cprime_decompositions(square_cone, iv({2, 1, 1}))) {
    reps.insert(d.representation);
    if (d.cprime != iv({2, 1, 1})) cprime_ok = false;
  }
  bool square = c && *c == iv({2, 1, 1}) && cprime_ok && reps == std::set<IntVec>{iv({1, 0, 0, 1}), iv({0, 1, 1, 0})};
  auto p = semigroup_profile(four_columns);
  bool four = p.gorenstein_c && *p.gorenstein_c == iv({0, 1}) && p.cprime && p.cprime->cprime == iv({1, 1});
  o.ok = square && four;
  o.detail = std::string("square cone ") + (square ? "ok" : "wrong") + ", four columns " + (four ? "ok" : "wrong");
  return o;
}

Outcome bernstein_desk() {
  Outcome o;
  int count = 0;
  for (const IntMatrix& b : {square_cone, four_columns, desk_a, desk_b}) {
    auto start = std::chrono::steady_clock::now();
    BernsteinResult r = bernstein_exponent(b);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool good = r.certified && r.predecessor_fails && r.m <= static_cast<long>(r.r) && secs < 30.0;
    o.detail += "m=" + std::to_string(r.m) + " r=" + std::to_string(r.r) + (good ? " ok; " : " FAILED; ");
    if (!good) o.ok = false;
    ++count;
  }
  o.detail += std::to_string(count) + " matrices";
  return o;
}

Outcome groebner_purity() {
  Outcome o;
  std::mt19937 gen(20240917u);
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto set = test::random_pure_set(gen);
    const std::size_t t = set.sig->nvars() - 1;
    GroebnerBasis gb = buchberger(set.gens, TermOrder(set.sig));
    if (!all_pure(gb.generators, t) || !satisfies_spair_criterion(gb)) ++bad;
  }
  o.ok = bad == 0;
  o.detail = "100 random pure sets, " + std::to_string(bad) + " bad";
  return o;
}

Outcome nonpure_counterexample() {
  Outcome o;
  NonPureExample ex = nonpure_example();
  SigPtr sig = ex.gb.generators.front().signature();
  bool witness_ok = ex.check.witness &&
                    ideal_membership(*ex.check.witness - WeylElement::constant(sig, 1), ex.gb) &&
                    v_orders(*ex.check.witness, 0).min_order >= 1;
  o.ok = !ex.generator_pure && ex.check.in_induced && witness_ok && !ex.check.lift;
  o.detail = std::string("1 in V^1_ind: ") + (ex.check.in_induced && witness_ok ? "yes" : "no") +
             ", lift: " + (ex.check.lift ? "found" : "none");
  return o;
}

Outcome koszul_regularity() {
  Outcome o;
  for (const IntMatrix& a : {desk_a, desk_b}) {
    SymbolKoszulReport rep = euler_symbol_koszul(a, 0);
    if (!rep.regular || !rep.h0_matches) o.ok = false;
    o.detail += std::to_string(rep.degrees.size()) + " degrees " + (rep.regular ? "regular" : "NOT regular") + "/" +
                (rep.h0_matches ? "H0 ok" : "H0 mismatch") + "; ";
  }
  return o;
}

Outcome duality_checks() {
  Outcome o;
  for (const IntMatrix& a : {desk_a, desk_b}) {
    DualityData dd = duality_data(homogenize(a));
    DualityMorphism phi = duality_morphism(dd);
    StrictnessReport rep = strictness_check(phi, 3);
    bool good = dd.facet_certificate && phi.certified && rep.well_defined && rep.strict;
    if (!good) o.ok = false;
    o.detail += "c~=" + vec_to_string(dd.c_tilde) + (good ? " ok; " : " FAILED; ");
  }
  DualityData fan = duality_data(homogenize(fan_rays), FanContext{1, 1, 2});
  bool fan_ok = fan.facet_certificate && fan.fan_vector_check.value_or(false) && fan.c_tilde == iv({2, 0, 1});
  if (!fan_ok) o.ok = false;
  o.detail += "fan c~=" + vec_to_string(fan.c_tilde) + (fan_ok ? " ok" : " FAILED");
  return o;
}

Outcome ishida_scan() {
  Outcome o;
  for (const IntMatrix& a : {IntMatrix{{1}}, desk_a}) {
    LocalCohomologyScan scan = local_cohomology_scan(a);
    const IshidaReport& rep = scan.ishida;
    bool good = rep.all_match && rep.d_squared_zero && scan.negative_degree;
    if (!good) o.ok = false;
    o.detail += "d=" + std::to_string(rep.d) + ": " + std::to_string(rep.mismatches.size()) + "/" +
                std::to_string(rep.degrees.size()) + " degrees off the expected pattern";
    if (!rep.mismatches.empty()) o.detail += " (first " + vec_to_string(rep.mismatches.front()) + ")";
    o.detail += std::string(", on sigma hyperplane ") + (rep.hyperplane_match ? "all match" : "mismatch") +
                ", top degree " + (rep.top_match ? "matches" : "mismatch") + ", negative degrees " +
                (scan.negative_degree ? "yes" : "no") + "; ";
  }
  return o;
}

Outcome radon_kernel() {
  Outcome o;
  int pairs = 0;
  for (const IntMatrix& a : {desk_a, desk_b})
    for (std::size_t u = 0; u <= a.cols(); ++u) {
      SystemPresentation kernel = build_radon_kernel(a, u);
      SystemPresentation fl = fourier_transformed_As_u(a, u);
      if (!same_left_ideal(kernel.generators, fl.generators, TermOrder(kernel.signature))) {
        o.ok = false;
        o.detail += "differs at u=" + std::to_string(u) + "; ";
      }
      ++pairs;
    }
  o.detail += std::to_string(pairs) + " (A, u) pairs compared";
  return o;
}

Outcome hodge_shift() {
  Outcome o;
#ifdef GKZ_HAVE_CLI
  using nlohmann::json;
  for (const std::string file : {"ex2.json", "desk-a.json"}) {
    IntMatrix a = read_matrix_file(std::string(GKZ_EXAMPLES) + "/" + file);
    const long d = static_cast<long>(a.rows()), n = static_cast<long>(a.cols());
    const long c0 = duality_data(homogenize(a)).c_tilde[0].get_si();
    std::ostringstream out, err;
    int code = cli::run({"verify-hodge", std::string(GKZ_EXAMPLES) + "/" + file}, out, err);
    json ledger = json::parse(out.str())["result"]["shift_ledger"];
    long primal = ledger["primal"]["total"].get<long>();
    long dual = ledger["dual"]["total"].get<long>();
    bool good = code == cli::ok && primal == d && dual == c0 + n;
    if (!good) o.ok = false;
    o.detail += file + ": primal " + std::to_string(primal) + " (d=" + std::to_string(d) + "), dual " +
                std::to_string(dual) + " (c0+n=" + std::to_string(c0 + n) + ")" + (good ? "; " : " FAILED; ");
  }
#else
  o.ok = false;
  o.detail = "command-line tool not built";
#endif
  return o;
}

}  // namespace

int main() {
  criterion(1, "Gorenstein vectors and c'", 1.0, gorenstein_examples);
  criterion(2, "Bernstein exponent m <= r", 4 * 30.0, bernstein_desk);
  criterion(3, "Groebner bases of pure sets stay pure", 120.0, groebner_purity);
  criterion(4, "non-pure lift counterexample", 0.0, nonpure_counterexample);
  criterion(5, "Euler-Koszul regularity", 120.0, koszul_regularity);
  criterion(6, "duality data and strictness", 120.0, duality_checks);
  criterion(7, "Ishida cohomology pattern", 180.0, ishida_scan);
  criterion(8, "Radon kernel against Fourier-Laplace", 120.0, radon_kernel);
  criterion(9, "verify-hodge shift totals", 0.0, hodge_shift);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
