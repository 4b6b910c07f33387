#include <gkzhodge/homological.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <tuple>

namespace gkz {

bool GradedComplex::is_complex() const {
  for (std::size_t j = 0; j + 1 < maps.size(); ++j) {
    if (!maps[j + 1].multiply(maps[j]).is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> GradedComplex::cohomology() const {
  std::vector<std::size_t> ranks(maps.size(), 0);
  for (std::size_t j = 0; j < maps.size(); ++j)
    ranks[j] = rank(maps[j]);
  std::vector<std::size_t> out(dims.size(), 0);
  for (std::size_t j = 0; j < dims.size(); ++j) {
    std::size_t h = dims[j];
    if (j < ranks.size()) h -= ranks[j];
    if (j > 0) h -= ranks[j - 1];
    out[j] = h;
  }
  return out;
}

namespace {

int removal_sign(unsigned mask, std::size_t j) {
  unsigned below = mask & ((1u << j) - 1u);
  return std::popcount(below) % 2 == 0 ? 1 : -1;
}

// Koszul complex of r commuting multiplications on a graded free module.
// basis(mask) lists the basis of the summand at e_S; mult(j, key) expresses
// f_j * key in the basis of the summand at e_{S - j}.
template <class Key>
GradedComplex koszul_complex(std::size_t r, const std::function<std::vector<Key>(unsigned)>& basis,
                             const std::function<std::map<Key, Rat>(std::size_t, unsigned, const Key&)>& mult) {
  const unsigned full = 1u << r;
  std::vector<std::vector<Key>> bases(full);
  std::vector<std::map<Key, std::size_t>> index(full);
  for (unsigned s = 0; s < full; ++s) {
    bases[s] = basis(s);
    for (std::size_t i = 0; i < bases[s].size(); ++i) index[s][bases[s][i]] = i;
  }
  // Term for homological degree i lists the masks of popcount i.
  std::vector<std::vector<unsigned>> masks(r + 1);
  for (unsigned s = 0; s < full; ++s) masks[std::popcount(s)].push_back(s);
  std::vector<std::map<unsigned, std::size_t>> offset(r + 1);
  std::vector<std::size_t> dim(r + 1, 0);
  for (std::size_t i = 0; i <= r; ++i)
    for (unsigned s : masks[i]) {
      offset[i][s] = dim[i];
      dim[i] += bases[s].size();
    }

  GradedComplex c;
  c.first_degree = -static_cast<int>(r);
  for (std::size_t t = 0; t <= r; ++t) c.dims.push_back(dim[r - t]);
  for (std::size_t t = 0; t < r; ++t) {
    std::size_t i = r - t;
    SparseMatrix m(dim[i - 1], dim[i]);
    for (unsigned s : masks[i]) {
      for (std::size_t b = 0; b < bases[s].size(); ++b) {
        for (std::size_t j = 0; j < r; ++j) {
          if (!(s & (1u << j))) continue;
          unsigned s2 = s & ~(1u << j);
          int sign = removal_sign(s, j);
          for (auto& [key, coeff] : mult(j, s, bases[s][b])) {
            auto it = index[s2].find(key);
            if (it == index[s2].end()) throw std::logic_error("koszul_complex: image outside the target basis");
            m.add(offset[i - 1][s2] + it->second, offset[i][s] + b, sign * coeff);
          }
        }
      }
    }
    c.maps.push_back(std::move(m));
  }
  return c;
}

std::vector<std::size_t> homological(const GradedComplex& c) {
  auto h = c.cohomology();
  std::reverse(h.begin(), h.end());
  return h;
}

}  // namespace

EulerKoszul euler_koszul(const SystemPresentation& system) {
  EulerKoszul ek;
  ek.quotient = system;
  ek.quotient.generators = system.boxes();
  ek.quotient.euler_begin = ek.quotient.generators.size();
  ek.eulers = system.eulers();
  const std::size_t r = ek.eulers.size();
  if (r > 16) throw std::invalid_argument("euler_koszul: too many Euler operators");
  const unsigned full = 1u << r;

  ek.differential.resize(full);
  for (unsigned s = 0; s < full; ++s)
    for (std::size_t j = 0; j < r; ++j)
      if (s & (1u << j)) {
        WeylElement e = ek.eulers[j];
        if (removal_sign(s, j) < 0) e = -e;
        ek.differential[s].push_back({s & ~(1u << j), e});
      }

  ek.well_defined = true;
  if (!ek.quotient.generators.empty()) {
    GroebnerBasis gb = buchberger(ek.quotient.generators, TermOrder(system.signature));
    for (auto& b : ek.quotient.generators)
      for (auto& e : ek.eulers)
        if (!ideal_membership(commutator(b, e), gb)) ek.well_defined = false;
  }
  if (!ek.well_defined) throw NotWellDefined("euler_koszul: right multiplication does not preserve the box ideal");

  // d(d(e_S)) with right multiplication: coefficient of e_T is sum of E_k E_j products.
  ek.d_squared_zero = true;
  for (unsigned s = 0; s < full; ++s) {
    std::map<unsigned, WeylElement> acc;
    for (auto& [s1, e1] : ek.differential[s])
      for (auto& [s2, e2] : ek.differential[s1]) {
        auto [it, fresh] = acc.emplace(s2, WeylElement(system.signature));
        it->second += multiply(e2, e1);
      }
    for (auto& [t, v] : acc)
      if (!v.is_zero()) ek.d_squared_zero = false;
  }
  return ek;
}

// ---------------------------------------------------------------------------

namespace {

IntVec exp_degree(const IntMatrix& grading, const std::vector<int>& g) {
  IntVec out(grading.rows(), Int(0));
  for (std::size_t i = 0; i < grading.rows(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out[i] += grading(i, j) * g[j];
  return out;
}

std::vector<int> x_part(const Signature& sig, const Exp& e) {
  std::vector<int> g(sig.nvars());
  for (std::size_t i = 0; i < sig.nvars(); ++i) {
    if (e[sig.d(i)] != 0) throw std::invalid_argument("commutative_koszul_homology: partials are not allowed");
    g[i] = e[sig.x(i)];
  }
  return g;
}

}  // namespace

KoszulReport commutative_koszul_homology(const SigPtr& ring, const std::vector<WeylElement>& ideal,
                                         const std::vector<WeylElement>& elements, const IntMatrix& grading,
                                         long degree_bound) {
  const std::size_t n = ring->nvars(), r = elements.size();
  if (grading.cols() != n) throw std::invalid_argument("commutative_koszul_homology: grading width mismatch");
  for (std::size_t j = 0; j < n; ++j)
    if (grading(0, j) <= 0) throw std::invalid_argument("commutative_koszul_homology: first grading row must be positive");
  TermOrder order(ring);
  std::vector<WeylElement> gb;
  if (!ideal.empty()) gb = buchberger(ideal, order).generators;

  std::vector<IntVec> elem_deg;
  for (auto& f : elements) {
    if (f.is_zero()) throw ZeroElement("commutative_koszul_homology: zero element");
    std::optional<IntVec> deg;
    for (auto& [e, c] : f.terms()) {
      IntVec d = exp_degree(grading, x_part(*ring, e));
      if (deg && *deg != d) throw std::invalid_argument("commutative_koszul_homology: inhomogeneous element");
      deg = d;
    }
    elem_deg.push_back(*deg);
  }

  auto standard = [&](const IntVec& d) {
    std::vector<Exp> out;
    if (d[0] < 0) return out;
    for (auto& g : nonneg_solutions_upto(grading, d, d[0].get_si())) {
      Exp e(ring->width(), 0);
      for (std::size_t i = 0; i < n; ++i) e[ring->x(i)] = static_cast<int>(g[i].get_si());
      WeylElement m = WeylElement::monomial(ring, e);
      if (gb.empty() || normal_form(m, gb, order) == m) out.push_back(e);
    }
    return out;
  };

  // Degrees of all monomials up to the bound.
  std::set<IntVec> degrees;
  {
    std::vector<int> cur(n, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long left) {
      if (pos == n) {
        degrees.insert(exp_degree(grading, cur));
        return;
      }
      for (long k = 0; k <= left; ++k) {
        cur[pos] = static_cast<int>(k);
        rec(pos + 1, left - k);
      }
      cur[pos] = 0;
    };
    rec(0, degree_bound);
  }

  KoszulReport rep;
  for (auto& D : degrees) {
    auto shifted = [&](unsigned mask) {
      IntVec d = D;
      for (std::size_t j = 0; j < r; ++j)
        if (mask & (1u << j)) d = sub(d, elem_deg[j]);
      return d;
    };
    std::function<std::vector<Exp>(unsigned)> basis = [&](unsigned mask) { return standard(shifted(mask)); };
    std::function<std::map<Exp, Rat>(std::size_t, unsigned, const Exp&)> mult = [&](std::size_t j, unsigned,
                                                                                  const Exp& e) {
      WeylElement p = multiply(elements[j], WeylElement::monomial(ring, e));
      if (!gb.empty()) p = normal_form(p, gb, order);
      return std::map<Exp, Rat>(p.terms().begin(), p.terms().end());
    };
    GradedComplex c = koszul_complex<Exp>(r, basis, mult);
    KoszulDegree kd{D, homological(c)};
    for (std::size_t i = 1; i < kd.homology.size(); ++i)
      if (kd.homology[i] != 0) rep.regular = false;
    rep.degrees.push_back(std::move(kd));
  }
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

// Basis element w^alpha lambda^gamma (x) t^c.
struct SymbolKey {
  std::vector<int> alpha;
  std::vector<int> gamma;
  IntVec c;
  friend bool operator<(const SymbolKey& a, const SymbolKey& b) {
    return std::tie(a.alpha, a.gamma, a.c) < std::tie(b.alpha, b.gamma, b.c);
  }
};

void compositions(std::size_t n, int total, std::vector<int>& cur, std::size_t pos,
                  std::vector<std::vector<int>>& out) {
  if (n == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  if (pos + 1 == n) {
    cur[pos] = total;
    out.push_back(cur);
    cur[pos] = 0;
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur[pos] = k;
    compositions(n, total - k, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

std::vector<std::vector<int>> exps_of_total(std::size_t n, int total) {
  std::vector<std::vector<int>> out;
  if (total < 0) return out;
  std::vector<int> cur(n, 0);
  compositions(n, total, cur, 0, out);
  return out;
}

}  // namespace

SymbolKoszulReport euler_symbol_koszul(const IntMatrix& a, std::size_t u, long weight_bound, long degree_box,
                                       GroebnerOptions opts) {
  SymbolKoszulReport rep;
  rep.as_u = build_As_u(a, u);
  rep.weight_bound = weight_bound;
  rep.degree_box = degree_box;
  const IntMatrix& asu = rep.as_u;
  const std::size_t rows = asu.rows();   // d + 1
  const std::size_t nw = a.cols();       // chart columns
  const std::size_t nl = a.cols() + 1;   // lambda columns
  const std::size_t r = rows;

  ConeProfile as_cone = facet_normals(asu);
  std::map<IntVec, bool> member_cache;
  auto in_semigroup = [&](const IntVec& c) {
    auto it = member_cache.find(c);
    if (it != member_cache.end()) return it->second;
    bool ok = as_cone.in_cone(c) && nonneg_integer_solve(asu, c).has_value();
    member_cache.emplace(c, ok);
    return ok;
  };
  auto col = [&](std::size_t j) { return asu.column(j); };

  // gr M via a Groebner basis of the hatted GKZ system under the weight.
  SystemPresentation sys = build_gkz(asu, IntVec(rows, Int(0)));
  const SigPtr& sig = sys.signature;
  std::vector<int> uw(nw + nl, 0), vw(nw + nl, 0);
  for (std::size_t j = 0; j < nw; ++j) uw[j] = 1;
  for (std::size_t j = 0; j < nl; ++j) vw[nw + j] = 1;
  TermOrder order(sig, {TermOrder::uv_weight(*sig, uw, vw)});
  GroebnerBasis gb = buchberger(sys.generators, order, opts);
  std::vector<Exp> leads;
  for (auto& g : gb.generators) leads.push_back(leading_monomial(g, order));
  auto is_standard = [&](const Exp& e) {
    for (auto& l : leads) {
      bool divides = true;
      for (std::size_t i = 0; i < l.size() && divides; ++i)
        if (l[i] > e[i]) divides = false;
      if (divides) return false;
    }
    return true;
  };

  ConeProfile chart_cone = facet_normals(chart_matrix(a, u).A_u);
  IntVec y = chart_cone.grading();
  Int ymin = -1;
  for (std::size_t j = 0; j < nw; ++j) {
    IntVec full = col(j);
    IntVec cj(full.begin() + 1, full.end());
    Int v = dot(y, cj);
    if (v <= 0) throw std::invalid_argument("euler_symbol_koszul: chart cone is not pointed");
    if (ymin < 0 || v < ymin) ymin = v;
  }
  IntMatrix chart_rows(rows - 1, nw);
  for (std::size_t k = 1; k < rows; ++k)
    for (std::size_t j = 0; j < nw; ++j) chart_rows(k - 1, j) = asu(k, j);

  auto gr_count = [&](const IntVec& D, long p) {
    std::size_t count = 0;
    for (int na = 0; na <= p; ++na) {
      int nh = static_cast<int>(p) - na;
      int ng = nh - static_cast<int>(D[0].get_si());
      if (ng < 0) continue;
      for (auto& al : exps_of_total(nw, na))
        for (auto& h : exps_of_total(nl, nh))
          for (auto& g : exps_of_total(nl, ng)) {
            IntVec target(rows - 1, Int(0));
            for (std::size_t k = 1; k < rows; ++k) {
              Int v = D[k];
              for (std::size_t j = 0; j < nw; ++j) v += asu(k, j) * al[j];
              for (std::size_t j = 0; j < nl; ++j) v += asu(k, nw + j) * (g[j] - h[j]);
              target[k - 1] = v;
            }
            Int top = dot(y, target);
            if (top < 0) continue;
            Int degb = top / ymin;
            for (auto& b : nonneg_solutions_upto(chart_rows, target, degb.get_si())) {
              Exp e(sig->width(), 0);
              for (std::size_t j = 0; j < nw; ++j) {
                e[sig->x(j)] = al[j];
                e[sig->d(j)] = static_cast<int>(b[j].get_si());
              }
              for (std::size_t j = 0; j < nl; ++j) {
                e[sig->x(nw + j)] = g[j];
                e[sig->d(nw + j)] = h[j];
              }
              if (is_standard(e)) ++count;
            }
          }
    }
    return count;
  };

  auto basis_at = [&](const IntVec& D, long p) {
    std::vector<SymbolKey> out;
    if (p < 0) return out;
    for (int na = 0; na <= p; ++na) {
      int ng = static_cast<int>(p) - na - static_cast<int>(D[0].get_si());
      if (ng < 0) continue;
      for (auto& al : exps_of_total(nw, na))
        for (auto& g : exps_of_total(nl, ng)) {
          IntVec c = D;
          for (std::size_t j = 0; j < nw; ++j)
            if (al[j]) c = add(c, scale(col(j), al[j]));
          for (std::size_t j = 0; j < nl; ++j)
            if (g[j]) c = add(c, scale(col(nw + j), g[j]));
          if (in_semigroup(c)) out.push_back({al, g, c});
        }
    }
    return out;
  };

  for (long p = 0; p <= weight_bound; ++p) {
    std::vector<IntVec> degs;
    std::function<void(IntVec&, std::size_t)> rec = [&](IntVec& cur, std::size_t k) {
      if (k == rows) {
        degs.push_back(cur);
        return;
      }
      long lo = k == 0 ? -p : -degree_box, hi = k == 0 ? p : degree_box;
      for (long v = lo; v <= hi; ++v) {
        cur[k] = v;
        rec(cur, k + 1);
      }
    };
    IntVec cur(rows, Int(0));
    rec(cur, 0);
    for (auto& D : degs) {
      std::function<std::vector<SymbolKey>(unsigned)> basis = [&](unsigned mask) {
        return basis_at(D, p - std::popcount(mask));
      };
      std::function<std::map<SymbolKey, Rat>(std::size_t, unsigned, const SymbolKey&)> mult =
          [&](std::size_t k, unsigned, const SymbolKey& key) {
            std::map<SymbolKey, Rat> out;
            for (std::size_t j = 0; j < nw + nl; ++j) {
              if (asu(k, j) == 0) continue;
              SymbolKey nk = key;
              if (j < nw)
                nk.alpha[j] += 1;
              else
                nk.gamma[j - nw] += 1;
              nk.c = add(nk.c, col(j));
              out[nk] += Rat(asu(k, j));
            }
            return out;
          };
      GradedComplex c = koszul_complex<SymbolKey>(r, basis, mult);
      SymbolKoszulDegree sd;
      sd.degree = D;
      sd.weight = p;
      sd.homology = homological(c);
      if (!c.is_complex()) throw std::logic_error("euler_symbol_koszul: d^2 != 0");
      for (std::size_t i = 1; i < sd.homology.size(); ++i)
        if (sd.homology[i] != 0) rep.regular = false;
      sd.gr_count = gr_count(D, p);
      if (sd.gr_count != sd.homology[0]) rep.h0_matches = false;
      rep.degrees.push_back(std::move(sd));
    }
  }
  return rep;
}

}  // namespace gkz
