#include <gkzhodge/gkz.hpp>

#include <algorithm>

namespace gkz {

namespace {

void require_rows(const IntMatrix& m, const IntVec& beta, const char* who) {
  if (beta.size() != m.rows())
    throw std::invalid_argument(std::string(who) + ": parameter has " + std::to_string(beta.size()) +
                                " entries, matrix has " + std::to_string(m.rows()) + " rows");
}

WeylElement theta(const SigPtr& sig, std::size_t v) {
  return multiply(WeylElement::var(sig, v), WeylElement::partial(sig, v));
}

// d_v x_v = x_v d_v + 1
WeylElement theta_swapped(const SigPtr& sig, std::size_t v) {
  return multiply(WeylElement::partial(sig, v), WeylElement::var(sig, v));
}

bool homogenized_matrix(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return false;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a(0, j) != 1) return false;
  for (std::size_t i = 1; i < a.rows(); ++i)
    if (a(i, 0) != 0) return false;
  return true;
}

IntVec zeros(std::size_t n) { return IntVec(n, Int(0)); }

std::vector<std::size_t> chart_indices(std::size_t n, std::size_t u) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= n; ++i)
    if (i != u) out.push_back(i);
  return out;
}

std::string chart_var(std::size_t i, std::size_t u) { return "w" + std::to_string(i) + "u" + std::to_string(u); }

}  // namespace

std::string flavor_name(SystemFlavor f) {
  switch (f) {
    case SystemFlavor::gkz: return "gkz";
    case SystemFlavor::fl_gkz: return "fl";
    case SystemFlavor::graph: return "graph";
    case SystemFlavor::chart: return "chart";
    case SystemFlavor::radon_kernel: return "kernel";
    case SystemFlavor::a_s: return "a_s";
    case SystemFlavor::a_s_u: return "a_s_u";
    case SystemFlavor::rees: return "rees";
    case SystemFlavor::hat: return "hat";
    case SystemFlavor::tilde: return "tilde";
  }
  return "unknown";
}

std::vector<WeylElement> SystemPresentation::boxes() const {
  return {generators.begin(), generators.begin() + static_cast<long>(euler_begin)};
}

std::vector<WeylElement> SystemPresentation::eulers() const {
  return {generators.begin() + static_cast<long>(euler_begin), generators.end()};
}

long SystemPresentation::total_offset() const {
  long s = 0;
  for (auto& e : shift_ledger) s += e.offset;
  return s;
}

std::vector<std::string> lambda_names(std::size_t n, std::size_t first) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("l" + std::to_string(i + first));
  return out;
}

SystemPresentation build_gkz(const IntMatrix& a, const IntVec& beta, std::size_t first_index) {
  require_rows(a, beta, "build_gkz");
  SystemPresentation sys;
  sys.flavor = SystemFlavor::gkz;
  sys.matrix = a;
  sys.beta = beta;
  sys.signature = make_signature(lambda_names(a.cols(), first_index));
  BoxPlacement place = default_box_placement(a, BoxFlavor::partial_form);
  place.sig = sys.signature;
  sys.generators = toric_box_generators(a, BoxFlavor::partial_form, place);
  sys.euler_begin = sys.generators.size();
  for (std::size_t k = 0; k < a.rows(); ++k) {
    WeylElement e(sys.signature);
    for (std::size_t i = 0; i < a.cols(); ++i)
      if (a(k, i) != 0) e += Rat(a(k, i)) * theta(sys.signature, i);
    e -= WeylElement::constant(sys.signature, Rat(beta[k]));
    if (!e.is_zero()) sys.generators.push_back(e);
  }
  if (homogenized_matrix(a)) {
    bool zero_beta = std::all_of(beta.begin(), beta.end(), [](const Int& v) { return v == 0; });
    if (zero_beta) {
      long d = static_cast<long>(a.rows()) - 1, n = static_cast<long>(a.cols()) - 1;
      sys.shift_ledger.push_back({"chart kernels: order filtration shifted by n-d", n - d, d - n});
      sys.shift_ledger.push_back({"relative pushforward along the n-dimensional fibre", n, n});
    }
  }
  return sys;
}

SystemPresentation build_fl_gkz(const IntMatrix& b, const IntVec& beta) {
  require_rows(b, beta, "build_fl_gkz");
  SystemPresentation sys;
  sys.flavor = SystemFlavor::fl_gkz;
  sys.matrix = b;
  sys.beta = beta;
  BoxPlacement place = default_box_placement(b, BoxFlavor::fl_form);
  sys.signature = place.sig;
  sys.generators = toric_box_generators(b, BoxFlavor::fl_form, place);
  sys.euler_begin = sys.generators.size();
  for (std::size_t k = 0; k < b.rows(); ++k) {
    WeylElement e(sys.signature);
    for (std::size_t i = 0; i < b.cols(); ++i)
      if (b(k, i) != 0) e += Rat(b(k, i)) * theta_swapped(sys.signature, i);
    e += WeylElement::constant(sys.signature, Rat(beta[k]));
    if (!e.is_zero()) sys.generators.push_back(e);
  }
  long s = static_cast<long>(b.cols()), r = static_cast<long>(b.rows());
  sys.shift_ledger.push_back({"torus direct image: order filtration shifted by s-r", s - r, -(s - r)});
  return sys;
}

SystemPresentation build_graph_embedded(const IntMatrix& b, long bound) {
  SemigroupProfile prof = semigroup_profile(b, bound);
  if (!prof.gorenstein_c) throw NotGorenstein("graph embedding: no Gorenstein vector within bound");
  if (!prof.cprime) throw NotGorenstein("graph embedding: no c' decomposition");
  const IntVec& cp = prof.cprime->cprime;
  if (std::all_of(cp.begin(), cp.end(), [](const Int& v) { return v == 0; }))
    throw NotGorenstein("graph embedding: c' = 0, the divisor is empty and no embedding is needed");
  IntMatrix bp = b.append_column(cp);
  if (semigroup_membership(b, cp, bound).status != Membership::member)
    throw NotGorenstein("graph embedding: c' not in NB");
  if (check_saturation(bp, bound).status == SaturationVerdict::Status::refuted)
    throw NotSaturated("graph embedding: NB' not saturated");

  SystemPresentation sys;
  sys.flavor = SystemFlavor::graph;
  sys.matrix = bp;
  sys.beta = zeros(b.rows());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < b.cols(); ++i) names.push_back("w" + std::to_string(i + 1));
  names.push_back("t");
  sys.signature = make_signature(names, {}, false, std::string("t"));
  BoxPlacement place;
  place.sig = sys.signature;
  for (std::size_t j = 0; j < bp.cols(); ++j) place.column_var.push_back(j);
  sys.generators = toric_box_generators(bp, BoxFlavor::fl_form, place);
  sys.euler_begin = sys.generators.size();
  for (std::size_t k = 0; k < bp.rows(); ++k) {
    WeylElement e(sys.signature);
    for (std::size_t i = 0; i < bp.cols(); ++i)
      if (bp(k, i) != 0) e += Rat(bp(k, i)) * theta_swapped(sys.signature, i);
    if (!e.is_zero()) sys.generators.push_back(e);
  }
  long s = static_cast<long>(b.cols()), r = static_cast<long>(b.rows());
  sys.shift_ledger.push_back({"graph embedding: order filtration shifted by s-r+1", s - r + 1, -(s - r + 1)});
  return sys;
}

SigPtr chart_signature(const IntMatrix& a, std::size_t u) {
  if (u > a.cols()) throw IndexOutOfRange("chart index " + std::to_string(u) + " out of range");
  std::vector<std::string> names;
  for (std::size_t i : chart_indices(a.cols(), u)) names.push_back(chart_var(i, u));
  return make_signature(names);
}

SystemPresentation build_chart_system(const IntMatrix& a, std::size_t u) {
  ChartMatrix cm = chart_matrix(a, u);
  SystemPresentation sys;
  sys.flavor = SystemFlavor::chart;
  sys.matrix = cm.A_u;
  sys.beta = zeros(cm.A_u.rows());
  sys.chart = u;
  sys.signature = chart_signature(a, u);
  BoxPlacement place;
  place.sig = sys.signature;
  for (std::size_t j = 0; j < cm.A_u.cols(); ++j) place.column_var.push_back(j);
  sys.generators = toric_box_generators(cm.A_u, BoxFlavor::fl_form, place);
  sys.euler_begin = sys.generators.size();
  for (std::size_t k = 0; k < cm.A_u.rows(); ++k) {
    WeylElement e(sys.signature);
    for (std::size_t i = 0; i < cm.A_u.cols(); ++i)
      if (cm.A_u(k, i) != 0) e += Rat(cm.A_u(k, i)) * theta_swapped(sys.signature, i);
    if (!e.is_zero()) sys.generators.push_back(e);
  }
  long n = static_cast<long>(a.cols()), d = static_cast<long>(a.rows());
  sys.shift_ledger.push_back({"chart direct image: order filtration shifted by n-d", n - d, d - n});
  return sys;
}

WeylElement chart_glue(const WeylElement& p, const IntMatrix& a, std::size_t u1, std::size_t u2) {
  const std::size_t n = a.cols();
  if (u1 > n || u2 > n) throw IndexOutOfRange("chart_glue: chart index out of range");
  if (u1 == u2) return p;
  SigPtr s1 = chart_signature(a, u1), s2 = chart_signature(a, u2);
  if (!(p.sig() == *s1)) throw SignatureMismatch("chart_glue: element not in the source chart");
  auto idx1 = chart_indices(n, u1), idx2 = chart_indices(n, u2);
  auto pos2 = [&](std::size_t i) {
    return static_cast<std::size_t>(std::find(idx2.begin(), idx2.end(), i) - idx2.begin());
  };
  // Only w_{u2 u1} may appear with negative exponent.
  for (auto& [e, c] : p.terms())
    for (std::size_t k = 0; k < idx1.size(); ++k)
      if (e[s1->x(k)] < 0 && idx1[k] != u2)
        throw NotLocalized("chart_glue: " + s1->vars()[k] + " is not inverted on the overlap");

  const std::size_t wpos = pos2(u1);
  WeylElement W = WeylElement::var(s2, wpos);
  WeylElement Winv = WeylElement::var(s2, wpos, -1);
  WeylElement euler(s2);
  for (std::size_t k = 0; k < idx2.size(); ++k) euler += theta(s2, k);

  Substitution sub;
  sub.target = s2;
  for (std::size_t k = 0; k < idx1.size(); ++k) {
    std::size_t i = idx1[k];
    if (i == u2) {
      sub.var_image.push_back(Winv);
      sub.partial_image.push_back(-multiply(W, euler));
    } else {
      sub.var_image.push_back(multiply(WeylElement::var(s2, pos2(i)), Winv));
      sub.partial_image.push_back(multiply(W, WeylElement::partial(s2, pos2(i))));
    }
  }
  return multiply(substitute(p, sub), WeylElement::var(s2, wpos, static_cast<int>(n + 1)));
}

WeylElement chart_glue_inverse(const WeylElement& p, const IntMatrix& a, std::size_t u1, std::size_t u2) {
  return chart_glue(p, a, u2, u1);
}

GlueCertificate verify_chart_glue(const IntMatrix& a, std::size_t u1, std::size_t u2) {
  GlueCertificate cert;
  SystemPresentation c1 = build_chart_system(a, u1), c2 = build_chart_system(a, u2);
  const std::size_t n = a.cols();
  auto idx2 = chart_indices(n, u2);
  const std::size_t wpos =
      static_cast<std::size_t>(std::find(idx2.begin(), idx2.end(), u1) - idx2.begin());
  WeylElement Wn = WeylElement::var(c2.signature, wpos, static_cast<int>(n + 1));

  auto e1 = c1.eulers(), e2 = c2.eulers();
  cert.eulers = e1.size() == e2.size();
  for (std::size_t k = 0; cert.eulers && k < e1.size(); ++k) {
    if (chart_glue(e1[k], a, u1, u2) != multiply(Wn, e2[k])) {
      cert.eulers = false;
      cert.failures.push_back("Euler operator " + std::to_string(k + 1));
    }
  }

  const IntMatrix& a2 = c2.matrix;
  cert.boxes = true;
  for (auto& g : c1.boxes()) {
    WeylElement img = chart_glue(g, a, u1, u2);
    bool ok = img.size() == 2;
    if (ok) {
      auto it = img.terms().begin();
      auto jt = std::next(it);
      ok = it->second + jt->second == 0;
      IntVec diff(idx2.size());
      for (std::size_t k = 0; ok && k < idx2.size(); ++k) {
        if (it->first[c2.signature->d(k)] != 0 || jt->first[c2.signature->d(k)] != 0) ok = false;
        diff[k] = it->first[c2.signature->x(k)] - jt->first[c2.signature->x(k)];
      }
      if (ok)
        for (auto& v : a2.apply(diff))
          if (v != 0) ok = false;
    }
    if (!ok) {
      cert.boxes = false;
      cert.failures.push_back("box " + to_string(g));
    }
  }
  return cert;
}

IntMatrix build_As(const IntMatrix& a) {
  const std::size_t d = a.rows(), n = a.cols();
  IntMatrix out(d + 2, 2 * n + 2);
  for (std::size_t i = 0; i <= n; ++i) {
    out(0, i) = 1;
    out(1, n + 1 + i) = 1;
    if (i == 0) continue;
    for (std::size_t k = 0; k < d; ++k) {
      out(2 + k, i) = a(k, i - 1);
      out(2 + k, n + 1 + i) = a(k, i - 1);
    }
  }
  return out;
}

IntMatrix build_As_u(const IntMatrix& a, std::size_t u) {
  ChartMatrix cm = chart_matrix(a, u);
  const std::size_t d = a.rows(), n = a.cols();
  IntMatrix out(d + 1, 2 * n + 1);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < d; ++k) out(1 + k, j) = cm.A_u(k, j);
  for (std::size_t i = 0; i <= n; ++i) {
    out(0, n + i) = 1;
    if (i == 0) continue;
    for (std::size_t k = 0; k < d; ++k) out(1 + k, n + i) = a(k, i - 1);
  }
  return out;
}

namespace {

SigPtr kernel_signature(const IntMatrix& a, std::size_t u) {
  std::vector<std::string> names;
  for (std::size_t i : chart_indices(a.cols(), u)) names.push_back(chart_var(i, u));
  for (auto& l : lambda_names(a.cols() + 1)) names.push_back(l);
  return make_signature(names);
}

}  // namespace

SystemPresentation build_radon_kernel(const IntMatrix& a, std::size_t u) {
  ChartMatrix cm = chart_matrix(a, u);
  const std::size_t n = a.cols(), d = a.rows();
  SystemPresentation sys;
  sys.flavor = SystemFlavor::radon_kernel;
  sys.matrix = cm.A_u;
  sys.beta = zeros(d);
  sys.chart = u;
  sys.signature = kernel_signature(a, u);
  const SigPtr& sig = sys.signature;
  auto lam = [&](std::size_t j) { return n + j; };  // variable index of lambda_j

  BoxPlacement place;
  place.sig = sig;
  for (std::size_t j = 0; j < n; ++j) place.column_var.push_back(j);
  sys.generators = toric_box_generators(cm.A_u, BoxFlavor::fl_form, place);
  auto idx = chart_indices(n, u);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    std::size_t i = idx[k];
    sys.generators.push_back(WeylElement::partial(sig, lam(i)) -
                             multiply(WeylElement::var(sig, k), WeylElement::partial(sig, lam(u))));
  }
  sys.euler_begin = sys.generators.size();
  for (std::size_t r = 0; r < d; ++r) {
    WeylElement e(sig);
    for (std::size_t k = 0; k < n; ++k)
      if (cm.A_u(r, k) != 0) e += Rat(cm.A_u(r, k)) * theta_swapped(sig, k);
    for (std::size_t i = 1; i <= n; ++i)
      if (a(r, i - 1) != 0) e -= Rat(a(r, i - 1)) * theta(sig, lam(i));
    sys.generators.push_back(e);
  }
  WeylElement e0(sig);
  for (std::size_t j = 0; j <= n; ++j) e0 += theta(sig, lam(j));
  sys.generators.push_back(e0);
  long nn = static_cast<long>(n), dd = static_cast<long>(d);
  sys.shift_ledger.push_back({"chart kernels: order filtration shifted by n-d", nn - dd, dd - nn});
  return sys;
}

SystemPresentation fourier_transformed_As_u(const IntMatrix& a, std::size_t u) {
  const std::size_t n = a.cols();
  IntMatrix asu = build_As_u(a, u);
  SystemPresentation g = build_gkz(asu, zeros(asu.rows()));
  // Rename onto hatted chart variables followed by lambda_0..lambda_n.
  std::vector<std::string> names, hatted;
  std::map<std::string, std::string> rename;
  auto idx = chart_indices(n, u);
  for (std::size_t i : idx) {
    names.push_back(chart_var(i, u) + "hat");
    hatted.push_back(names.back());
    rename[names.back()] = chart_var(i, u);
  }
  for (auto& l : lambda_names(n + 1)) names.push_back(l);
  SigPtr hsig = make_signature(names);
  FourierSetup fl = fourier_setup(hsig, hatted, rename);
  SigPtr target = kernel_signature(a, u);
  SystemPresentation out;
  out.flavor = SystemFlavor::a_s_u;
  out.matrix = asu;
  out.beta = g.beta;
  out.chart = u;
  out.signature = target;
  out.euler_begin = g.euler_begin;
  // hat w -> -d_w, d_hat w -> w
  for (auto& p : g.generators) out.generators.push_back(substitute(p.retag(hsig), fl.inverse).retag(target));
  return out;
}

SystemPresentation build_rees_gkz(const IntMatrix& atilde) {
  if (!homogenized_matrix(atilde)) throw std::invalid_argument("build_rees_gkz: matrix is not homogenized");
  SystemPresentation sys;
  sys.flavor = SystemFlavor::rees;
  sys.matrix = atilde;
  sys.beta = zeros(atilde.rows());
  BoxPlacement place = default_box_placement(atilde, BoxFlavor::rees_form);
  sys.signature = place.sig;
  sys.generators = toric_box_generators(atilde, BoxFlavor::rees_form, place);
  sys.euler_begin = sys.generators.size();
  WeylElement z = WeylElement::param(sys.signature, *place.z);
  for (std::size_t k = 0; k < atilde.rows(); ++k) {
    WeylElement e(sys.signature);
    for (std::size_t i = 0; i < atilde.cols(); ++i)
      if (atilde(k, i) != 0) e += Rat(atilde(k, i)) * multiply(z, theta(sys.signature, i));
    if (!e.is_zero()) sys.generators.push_back(e);
  }
  long d = static_cast<long>(atilde.rows()) - 1;
  sys.shift_ledger.push_back({"Rees module twisted by z^-d", d, d});
  return sys;
}

namespace {

SigPtr hat_signature(std::size_t n) {
  auto names = lambda_names(n, 1);
  names.insert(names.begin(), "z");
  return make_signature(names);
}

// z^2 d_z + sum z l_i d_i, and sum_i a_ji z l_i d_i.
std::vector<WeylElement> hat_eulers(const IntMatrix& a, const SigPtr& sig) {
  WeylElement z = WeylElement::var(sig, 0);
  std::vector<WeylElement> out;
  WeylElement e = multiply(WeylElement::var(sig, 0, 2), WeylElement::partial(sig, 0));
  for (std::size_t i = 0; i < a.cols(); ++i) e += multiply(z, theta(sig, i + 1));
  out.push_back(e);
  for (std::size_t j = 0; j < a.rows(); ++j) {
    WeylElement ej(sig);
    for (std::size_t i = 0; i < a.cols(); ++i)
      if (a(j, i) != 0) ej += Rat(a(j, i)) * multiply(z, theta(sig, i + 1));
    out.push_back(ej);
  }
  return out;
}

// prod_{l<0} (z d)^{-l} - prod_{l>0} (z d)^{l}
WeylElement hat_box(const IntVec& rel, const SigPtr& sig) {
  Exp neg(sig->width(), 0), pos(sig->width(), 0);
  for (std::size_t i = 0; i < rel.size(); ++i) {
    int v = static_cast<int>(rel[i].get_si());
    if (v < 0) {
      neg[sig->d(i + 1)] = -v;
      neg[sig->x(0)] -= v;
    } else if (v > 0) {
      pos[sig->d(i + 1)] = v;
      pos[sig->x(0)] += v;
    }
  }
  return WeylElement::monomial(sig, neg) - WeylElement::monomial(sig, pos);
}

}  // namespace

SystemPresentation build_hat_system(const IntMatrix& a, long beta0, const IntVec& beta) {
  require_rows(a, beta, "build_hat_system");
  SystemPresentation sys;
  sys.flavor = SystemFlavor::hat;
  sys.matrix = a;
  sys.beta = beta;
  sys.beta.insert(sys.beta.begin(), Int(beta0));
  sys.signature = hat_signature(a.cols());
  ToricIdeal ti = toric_ideal(a);
  for (auto& b : ti.binomials) sys.generators.push_back(hat_box(b.relation(), sys.signature));
  sys.euler_begin = sys.generators.size();
  auto eul = hat_eulers(a, sys.signature);
  WeylElement z = WeylElement::var(sys.signature, 0);
  for (std::size_t j = 0; j < eul.size(); ++j) sys.generators.push_back(eul[j] - Rat(sys.beta[j]) * z);
  return sys;
}

SystemPresentation build_tilde_system(const IntMatrix& a, std::size_t m) {
  if (m > a.cols()) throw IndexOutOfRange("build_tilde_system: split beyond the column count");
  SystemPresentation sys;
  sys.flavor = SystemFlavor::tilde;
  sys.matrix = a;
  sys.beta = zeros(a.rows() + 1);
  BoxPlacement place = default_box_placement(a, BoxFlavor::tilde_form, m);
  sys.signature = place.sig;
  sys.generators = toric_box_generators(a, BoxFlavor::tilde_form, place);
  sys.euler_begin = sys.generators.size();
  for (auto& e : hat_eulers(a, sys.signature)) sys.generators.push_back(e);
  return sys;
}

PsiCertificate verify_tilde_psi(const IntMatrix& a, std::size_t m) {
  PsiCertificate cert;
  SystemPresentation tilde = build_tilde_system(a, m);
  const SigPtr& sig = tilde.signature;
  const std::size_t n = a.cols();
  const int fibre = static_cast<int>(n - m);
  Exp psi_e(sig->width(), 0);
  psi_e[sig->x(0)] = fibre;
  for (std::size_t i = m; i < n; ++i) psi_e[sig->x(i + 1)] = 1;
  WeylElement psi = WeylElement::monomial(sig, psi_e);

  ToricIdeal ti = toric_ideal(a);
  cert.boxes = true;
  for (std::size_t b = 0; b < ti.binomials.size(); ++b) {
    IntVec rel = ti.binomials[b].relation();
    Exp pre = psi_e;
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i] > 0) pre[sig->x(i + 1)] += static_cast<int>(rel[i].get_si());
    WeylElement lhs = multiply(tilde.generators[b], psi);
    WeylElement rhs = -multiply(WeylElement::monomial(sig, pre), hat_box(rel, sig));
    if (lhs != rhs) cert.boxes = false;
  }

  cert.hat_parameter.assign(a.rows() + 1, Int(0));
  cert.hat_parameter[0] = -2 * fibre;
  for (std::size_t j = 0; j < a.rows(); ++j)
    for (std::size_t i = m; i < n; ++i) cert.hat_parameter[j + 1] -= a(j, i);
  auto eul = hat_eulers(a, sig);
  WeylElement z = WeylElement::var(sig, 0);
  cert.eulers = true;
  for (std::size_t j = 0; j < eul.size(); ++j) {
    WeylElement lhs = multiply(eul[j], psi);
    WeylElement rhs = multiply(psi, eul[j] - Rat(cert.hat_parameter[j]) * z);
    if (lhs != rhs) cert.eulers = false;
  }
  return cert;
}

std::vector<EulerShift> euler_right_multiplication(const SystemPresentation& sys) {
  std::vector<EulerShift> out;
  auto boxes = sys.boxes();
  auto eul = sys.eulers();
  std::optional<GroebnerBasis> gb;
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    for (std::size_t k = 0; k < eul.size(); ++k) {
      EulerShift s;
      s.box = b;
      s.euler = k;
      WeylElement r = commutator(boxes[b], eul[k]);
      if (r.is_zero()) {
        s.constant = 0;
        s.certified = true;
      } else {
        auto [eb, cb] = leading_term(boxes[b], TermOrder(sys.signature));
        Rat lambda = r.coefficient(eb) / cb;
        if (r == lambda * boxes[b]) {
          s.constant = -lambda;
          s.certified = true;
        } else {
          if (!gb) gb = buchberger(boxes, TermOrder(sys.signature));
          s.constant = 0;
          s.certified = ideal_membership(r, *gb);
        }
      }
      out.push_back(s);
    }
  }
  return out;
}

bool eulers_commute(const SystemPresentation& sys) {
  auto eul = sys.eulers();
  for (std::size_t i = 0; i < eul.size(); ++i)
    for (std::size_t j = i + 1; j < eul.size(); ++j)
      if (!commutator(eul[i], eul[j]).is_zero()) return false;
  return true;
}

}  // namespace gkz
