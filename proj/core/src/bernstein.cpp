#include <gkzhodge/bernstein.hpp>
#include <gkzhodge/rational.hpp>

#include <algorithm>
#include <map>

namespace gkz {

GroebnerBasis v_initial_ideal(const std::vector<WeylElement>& gens, std::size_t var, GroebnerOptions opts) {
  if (gens.empty()) throw std::invalid_argument("v_initial_ideal: no generators");
  SigPtr sig = gens.front().signature();
  if (sig->homogenized()) throw SignatureMismatch("v_initial_ideal: expects a plain Weyl algebra");
  SigPtr hsig = sig->with_homogenization();

  std::vector<int> u(sig->nvars(), 0), v(sig->nvars(), 0);
  u.at(var) = -1;
  v.at(var) = 1;
  TermOrder horder(hsig, {TermOrder::total_degree_weight(*hsig), TermOrder::uv_weight(*hsig, u, v)});
  std::vector<WeylElement> hgens;
  for (auto& g : gens) hgens.push_back(homogenize_h(g, hsig));
  GroebnerBasis hgb = buchberger(hgens, horder, opts);

  std::vector<int> w = TermOrder::uv_weight(*sig, u, v);
  std::vector<WeylElement> initial;
  for (auto& g : hgb.generators) {
    WeylElement dh = dehomogenize_h(g, sig);
    if (!dh.is_zero()) initial.push_back(initial_form(dh, w));
  }
  GroebnerBasis out = buchberger(initial, TermOrder(sig), opts);
  out.steps += hgb.steps;
  return out;
}

bool BernsteinResult::roots_all_zero() const {
  if (b.empty()) return false;
  for (std::size_t i = 0; i + 1 < b.size(); ++i)
    if (b[i] != 0) return false;
  return b.back() == 1;
}

namespace {

using Coords = std::map<Exp, Rat>;

// Solves target = sum c_i vecs[i]; nullopt when target is outside the span.
std::optional<RatVec> express(const std::vector<const WeylElement*>& vecs, const WeylElement& target) {
  std::map<Exp, std::size_t> row_of;
  auto rows_for = [&](const WeylElement& e) {
    for (auto& [m, c] : e.terms()) row_of.emplace(m, row_of.size());
  };
  for (auto* v : vecs) rows_for(*v);
  rows_for(target);
  RatMatrix m(row_of.size(), vecs.size());
  for (std::size_t j = 0; j < vecs.size(); ++j)
    for (auto& [e, c] : vecs[j]->terms()) m(row_of[e], j) = c;
  RatVec rhs(row_of.size());
  for (auto& [e, c] : target.terms()) rhs[row_of[e]] = c;
  if (vecs.empty()) {
    if (target.is_zero()) return RatVec{};
    return std::nullopt;
  }
  return solve(m, rhs);
}

}  // namespace

BernsteinResult bernstein_exponent(const IntMatrix& b, BernsteinOptions opts) {
  BernsteinResult res;
  res.r = rank(b);
  res.bound = opts.bound < 0 ? static_cast<long>(2 * res.r + 2) : opts.bound;
  res.ideal = build_graph_embedded(b, opts.lattice_bound);
  const SigPtr& sig = res.ideal.signature;
  const std::size_t t = sig->nvars() - 1;

  GroebnerBasis gb = v_initial_ideal(res.ideal.generators, t, opts.groebner);
  res.initial_basis_size = gb.generators.size();
  res.steps = gb.steps;

  const WeylElement e = multiply(WeylElement::partial(sig, t), WeylElement::var(sig, t));
  std::vector<WeylElement> nfs;
  WeylElement pw = WeylElement::constant(sig, 1);
  std::optional<long> found;
  for (long i = 0; i <= res.bound; ++i) {
    WeylElement nf = normal_form(pw, gb.generators, gb.order);
    nfs.push_back(nf);
    if (nf.is_zero()) {
      found = i;
      break;
    }
    pw = multiply(pw, e);
  }
  if (!found) throw BoundExceeded("bernstein_exponent: no m <= " + std::to_string(res.bound));
  res.m = *found;
  res.certified = true;
  res.predecessor_fails = res.m == 0 || !nfs[static_cast<std::size_t>(res.m - 1)].is_zero();

  // Minimal polynomial: first power whose normal form depends on the lower ones.
  for (std::size_t i = 0; i < nfs.size(); ++i) {
    std::vector<const WeylElement*> lower;
    for (std::size_t j = 0; j < i; ++j) lower.push_back(&nfs[j]);
    auto c = express(lower, nfs[i]);
    if (!c) continue;
    res.b.assign(i + 1, Rat(0));
    for (std::size_t j = 0; j < i; ++j) res.b[j] = -(*c)[j];
    res.b[i] = 1;
    break;
  }

  res.shifted_fail = true;
  if (res.m >= 1) {
    WeylElement prev = power(e, static_cast<unsigned>(res.m - 1));
    for (long a : opts.alpha_samples) {
      if (a == 0) continue;
      WeylElement q = multiply(e - WeylElement::constant(sig, Rat(a)), prev);
      if (normal_form(q, gb.generators, gb.order).is_zero()) res.shifted_fail = false;
    }
  }
  return res;
}

namespace {

void enumerate_exps(std::size_t n, int total, std::vector<int>& cur, std::size_t pos,
                    std::vector<std::vector<int>>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= total; ++k) {
    cur[pos] = k;
    enumerate_exps(n, total - k, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::optional<WeylElement> filtered_representative(const WeylElement& p, const GroebnerBasis& gb, std::size_t var,
                                                   int k, std::optional<int> max_order, int x_bound) {
  const SigPtr& sig = p.signature();
  const std::size_t n = sig->nvars();
  int ord = max_order.value_or(x_bound);
  std::vector<std::vector<int>> xs, ds;
  std::vector<int> cur(n, 0);
  enumerate_exps(n, x_bound, cur, 0, xs);
  enumerate_exps(n, ord, cur, 0, ds);

  std::vector<WeylElement> monos, nfs;
  for (auto& g : xs)
    for (auto& dlt : ds) {
      if (g[var] - dlt[var] < k) continue;
      Exp e(sig->width(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        e[sig->x(i)] = g[i];
        e[sig->d(i)] = dlt[i];
      }
      monos.push_back(WeylElement::monomial(sig, e));
      nfs.push_back(normal_form(monos.back(), gb.generators, gb.order));
    }
  std::vector<const WeylElement*> ptrs;
  for (auto& v : nfs) ptrs.push_back(&v);
  auto c = express(ptrs, normal_form(p, gb.generators, gb.order));
  if (!c) return std::nullopt;
  WeylElement q(sig);
  for (std::size_t i = 0; i < monos.size(); ++i)
    if ((*c)[i] != 0) q += (*c)[i] * monos[i];
  return q;
}

LiftCheck lift_check(const WeylElement& p, const GroebnerBasis& gb, std::size_t var, int k, int p_order,
                     int witness_order, int x_bound) {
  LiftCheck out;
  out.witness = filtered_representative(p, gb, var, k, witness_order, x_bound);
  out.in_induced = out.witness.has_value();
  out.lift = filtered_representative(p, gb, var, k, p_order, x_bound);
  return out;
}

NonPureExample nonpure_example(int x_bound) {
  NonPureExample ex;
  SigPtr sig = make_signature({"w"}, {}, false, std::string("w"));
  WeylElement g = parse_operator("w^2*d_w - 1", sig);
  ex.generator_pure = v_orders(g, 0).pure;
  ex.gb = buchberger({g}, TermOrder(sig));
  ex.check = lift_check(WeylElement::constant(sig, 1), ex.gb, 0, 1, 0, 1, x_bound);
  return ex;
}

}  // namespace gkz
