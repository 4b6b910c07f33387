#include <gkzhodge/gkz.hpp>

#include <algorithm>
#include <map>

namespace gkz {

namespace {

int total(const std::vector<int>& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

// Degree first, then exponents from the highest index down (the standard order
// on partial monomials).
int compare_monomials(const std::vector<int>& a, const std::vector<int>& b) {
  int da = total(a), db = total(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<std::string> indexed(const std::string& prefix, std::size_t n, std::size_t first = 0) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + first));
  return out;
}

WeylElement x_monomial(const SigPtr& sig, const std::vector<int>& e) {
  Exp full(sig->width(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) full[sig->x(i)] = e[i];
  return WeylElement::monomial(sig, full);
}

void enumerate_monomials(std::size_t n, int degree, std::vector<int>& cur, std::size_t pos, int left,
                         std::vector<std::vector<int>>& out) {
  if (pos + 1 == n) {
    cur[pos] = left;
    out.push_back(cur);
    return;
  }
  for (int k = left; k >= 0; --k) {
    cur[pos] = k;
    enumerate_monomials(n, degree, cur, pos + 1, left - k, out);
  }
  cur[pos] = 0;
}

}  // namespace

IntVec Binomial::relation() const {
  IntVec r(lead.size());
  for (std::size_t i = 0; i < lead.size(); ++i) r[i] = lead[i] - trail[i];
  return r;
}

int Binomial::degree() const { return std::max(total(lead), total(trail)); }

ToricIdeal toric_ideal(const IntMatrix& m, const ToricIdealOptions& opts) {
  ToricIdeal out;
  const std::size_t n = m.cols();
  out.ncols = n;
  out.fiber_degree = opts.fiber_degree;
  LatticeBasis lattice = kernel_lattice(m);
  if (lattice.vectors.empty()) return out;

  // Saturate the lattice-basis ideal: eliminate y from I_L + (y * prod x - 1).
  auto xs = indexed("x", n);
  auto names = xs;
  names.push_back("y");
  SigPtr sig = make_signature(names);
  std::vector<int> elim(sig->width(), 0), deg(sig->width(), 0);
  elim[sig->x(n)] = 1;
  for (std::size_t i = 0; i < n; ++i) deg[sig->x(i)] = 1;
  TermOrder order(sig, {elim, deg});

  auto split = [&](const IntVec& v) {
    std::vector<int> p(n, 0), q(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] > 0) p[i] = static_cast<int>(v[i].get_si());
      if (v[i] < 0) q[i] = static_cast<int>(-v[i].get_si());
    }
    return std::make_pair(p, q);
  };

  std::vector<WeylElement> gens;
  for (auto& v : lattice.vectors) {
    auto [p, q] = split(v);
    std::vector<int> pe(n + 1, 0), qe(n + 1, 0);
    std::copy(p.begin(), p.end(), pe.begin());
    std::copy(q.begin(), q.end(), qe.begin());
    gens.push_back(x_monomial(sig, pe) - x_monomial(sig, qe));
  }
  std::vector<int> all(n + 1, 1);
  gens.push_back(x_monomial(sig, all) - WeylElement::constant(sig, 1));

  GroebnerBasis gb = buchberger(gens, order, opts.groebner);
  out.steps = gb.steps;

  for (auto& g : gb.generators) {
    bool has_y = false;
    for (auto& [e, c] : g.terms())
      if (e[sig->x(n)] != 0) has_y = true;
    if (has_y) continue;
    if (g.size() != 2) throw GenerationUncertified("toric ideal: non-binomial basis element " + to_string(g));
    auto it = g.terms().begin();
    auto jt = std::next(it);
    if (it->second + jt->second != 0)
      throw GenerationUncertified("toric ideal: unexpected coefficients in " + to_string(g));
    std::vector<int> a(it->first.begin(), it->first.begin() + n), b(jt->first.begin(), jt->first.begin() + n);
    if (compare_monomials(a, b) < 0) std::swap(a, b);
    out.binomials.push_back(Binomial{a, b});
  }
  std::sort(out.binomials.begin(), out.binomials.end(), [](const Binomial& x, const Binomial& y) {
    int c = compare_monomials(x.lead, y.lead);
    if (c != 0) return c < 0;
    return compare_monomials(x.trail, y.trail) < 0;
  });

  // Certificates.
  for (auto& b : out.binomials) {
    IntVec img = m.apply(b.relation());
    for (auto& v : img)
      if (v != 0) throw GenerationUncertified("toric ideal: relation outside the kernel");
  }
  SigPtr xsig = make_signature(xs);
  TermOrder xorder(xsig, {TermOrder::total_degree_weight(*xsig)});
  GroebnerBasis xgb;
  xgb.order = xorder;
  for (auto& b : out.binomials) xgb.generators.push_back(x_monomial(xsig, b.lead) - x_monomial(xsig, b.trail));
  if (!satisfies_spair_criterion(xgb)) throw GenerationUncertified("toric ideal: S-pair criterion fails");
  for (auto& v : lattice.vectors) {
    auto [p, q] = split(v);
    if (!ideal_membership(x_monomial(xsig, p) - x_monomial(xsig, q), xgb))
      throw GenerationUncertified("toric ideal: lattice binomial not in the ideal");
  }
  // Every A-fiber up to the configured degree collapses to one normal form.
  std::map<IntVec, WeylElement> fiber_nf;
  for (int d = 0; d <= opts.fiber_degree; ++d) {
    std::vector<std::vector<int>> monos;
    std::vector<int> cur(n, 0);
    enumerate_monomials(n, d, cur, 0, d, monos);
    for (auto& e : monos) {
      IntVec ev(e.begin(), e.end());
      IntVec key = m.apply(ev);
      WeylElement nf = normal_form(x_monomial(xsig, e), xgb.generators, xorder);
      auto it = fiber_nf.find(key);
      if (it == fiber_nf.end()) {
        fiber_nf.emplace(key, nf);
      } else if (it->second != nf) {
        throw GenerationUncertified("toric ideal: disconnected fiber at degree " + std::to_string(d));
      }
    }
  }
  return out;
}

BoxPlacement default_box_placement(const IntMatrix& m, BoxFlavor flavor, std::size_t tilde_split) {
  const std::size_t n = m.cols();
  BoxPlacement place;
  switch (flavor) {
    case BoxFlavor::partial_form:
      place.sig = make_signature(indexed("l", n));
      break;
    case BoxFlavor::fl_form:
      place.sig = make_signature(indexed("w", n, 1));
      break;
    case BoxFlavor::rees_form:
      place.sig = make_signature(indexed("l", n), {"z"});
      place.z = 0;
      break;
    case BoxFlavor::tilde_form: {
      auto names = indexed("l", n, 1);
      names.insert(names.begin(), "z");
      place.sig = make_signature(names);
      place.z = 0;
      place.tilde_split = tilde_split;
      for (std::size_t j = 0; j < n; ++j) place.column_var.push_back(j + 1);
      return place;
    }
  }
  for (std::size_t j = 0; j < n; ++j) place.column_var.push_back(j);
  return place;
}

namespace {

WeylElement one_side(const std::vector<int>& e, BoxFlavor flavor, const BoxPlacement& place) {
  const SigPtr& sig = place.sig;
  Exp mono(sig->width(), 0);
  int deg = 0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    std::size_t v = place.column_var.at(j);
    deg += e[j];
    if (flavor == BoxFlavor::fl_form)
      mono[sig->x(v)] += e[j];
    else
      mono[sig->d(v)] += e[j];
  }
  if (flavor == BoxFlavor::rees_form) mono[sig->p(place.z.value())] += deg;
  return WeylElement::monomial(sig, mono);
}

// prod over base columns lambda^e (z d)^e, prod over fiber columns
// prod_{nu=1..e} (lambda z d - z nu).
WeylElement tilde_side(const std::vector<int>& e, const BoxPlacement& place) {
  const SigPtr& sig = place.sig;
  const std::size_t zv = place.z.value();
  WeylElement out = WeylElement::constant(sig, 1);
  WeylElement z = WeylElement::var(sig, zv);
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    std::size_t v = place.column_var.at(j);
    WeylElement lam = WeylElement::var(sig, v), d = WeylElement::partial(sig, v);
    if (j < place.tilde_split) {
      out = multiply(out, power(lam, e[j]));
      out = multiply(out, power(multiply(z, d), e[j]));
    } else {
      WeylElement base = multiply(lam, multiply(z, d));
      for (int nu = 1; nu <= e[j]; ++nu) out = multiply(out, base - Rat(nu) * z);
    }
  }
  return out;
}

}  // namespace

WeylElement box_operator(const IntVec& relation, BoxFlavor flavor, const BoxPlacement& place) {
  std::vector<int> p(relation.size(), 0), q(relation.size(), 0);
  for (std::size_t i = 0; i < relation.size(); ++i) {
    long v = relation[i].get_si();
    if (v > 0) p[i] = static_cast<int>(v);
    if (v < 0) q[i] = static_cast<int>(-v);
  }
  if (flavor != BoxFlavor::tilde_form) return one_side(p, flavor, place) - one_side(q, flavor, place);
  // Second term carries prod lambda^{l_i} over every column (Laurent).
  Exp lam(place.sig->width(), 0);
  for (std::size_t j = 0; j < relation.size(); ++j)
    lam[place.sig->x(place.column_var.at(j))] += static_cast<int>(relation[j].get_si());
  WeylElement prefactor = WeylElement::monomial(place.sig, lam);
  return tilde_side(p, place) - multiply(prefactor, tilde_side(q, place));
}

WeylElement box_operator(const Binomial& b, BoxFlavor flavor, const BoxPlacement& place) {
  return box_operator(b.relation(), flavor, place);
}

std::vector<WeylElement> toric_box_generators(const IntMatrix& m, BoxFlavor flavor, const BoxPlacement& place,
                                              const ToricIdealOptions& opts) {
  if (rank(m) != m.rows()) throw NotFullRank("toric_box_generators: matrix must have full row rank");
  ToricIdeal ti = toric_ideal(m, opts);
  std::vector<WeylElement> out;
  for (auto& b : ti.binomials) out.push_back(box_operator(b, flavor, place));
  return out;
}

std::vector<WeylElement> toric_box_generators(const IntMatrix& m, BoxFlavor flavor) {
  return toric_box_generators(m, flavor, default_box_placement(m, flavor));
}

}  // namespace gkz
