#include <gkzhodge/groebner.hpp>

#include <algorithm>
#include <cstdlib>
#include <string>

namespace gkz {

long default_budget() {
  if (const char* env = std::getenv("GKZ_HODGE_BUDGET")) {
    try {
      long v = std::stol(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 2000000;
}

namespace {

struct OrderCmp {
  const TermOrder* order;
  bool operator()(const Exp& a, const Exp& b) const { return order->compare(a, b) < 0; }
};

using OrderedTerms = std::map<Exp, Rat, OrderCmp>;

bool divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exp lcm(const Exp& a, const Exp& b) {
  Exp c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

Exp minus(const Exp& a, const Exp& b) {
  Exp c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

void require_polynomial(const WeylElement& p) {
  for (auto& [e, c] : p.terms())
    for (int v : e)
      if (v < 0) throw std::invalid_argument("Groebner computations need nonnegative exponents");
}

void sub_into(OrderedTerms& work, const WeylElement& t) {
  for (auto& [e, c] : t.terms()) {
    auto it = work.find(e);
    if (it == work.end()) {
      work.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) work.erase(it);
    }
  }
}

WeylElement mono_times(const SigPtr& sig, const Exp& m, const WeylElement& g, const Rat& coeff) {
  WeylElement out(sig);
  for (auto& [e, c] : g.terms()) out += monomial_product(sig, m, e, coeff * c);
  return out;
}

struct Reducer {
  std::vector<const WeylElement*> elems;
  std::vector<Exp> lm;
  std::vector<Rat> lc;

  Reducer(const std::vector<WeylElement>& g, const TermOrder& order) {
    for (auto& x : g) {
      if (x.is_zero()) continue;
      auto [e, c] = leading_term(x, order);
      elems.push_back(&x);
      lm.push_back(e);
      lc.push_back(c);
    }
  }
  int find(const Exp& e) const {
    for (std::size_t i = 0; i < lm.size(); ++i)
      if (divides(lm[i], e)) return static_cast<int>(i);
    return -1;
  }
};

WeylElement reduce_with(const WeylElement& p, const Reducer& red, const TermOrder& order, long* budget) {
  OrderCmp cmp{&order};
  OrderedTerms work(cmp);
  for (auto& [e, c] : p.terms()) work.emplace(e, c);
  WeylElement rem(p.signature());
  while (!work.empty()) {
    auto it = std::prev(work.end());
    int k = red.find(it->first);
    if (k < 0) {
      rem.add_term(it->first, it->second);
      work.erase(it);
      continue;
    }
    if (budget) {
      if (*budget <= 0) throw ResourceLimit("reduction budget exhausted");
      --*budget;
    }
    Rat coeff = it->second / red.lc[k];
    Exp q = minus(it->first, red.lm[k]);
    WeylElement t = mono_times(p.signature(), q, *red.elems[k], coeff);
    sub_into(work, t);
  }
  return rem;
}

struct Pair {
  std::size_t i, j;
  Exp lcm;
  long degree;
};

long exp_degree(const Exp& e) {
  long s = 0;
  for (int v : e) s += v;
  return s;
}

}  // namespace

bool GroebnerBasis::contains_unit() const {
  for (auto& g : generators) {
    if (g.size() != 1) continue;
    auto& e = g.terms().begin()->first;
    if (std::all_of(e.begin(), e.end(), [](int v) { return v == 0; })) return true;
  }
  return false;
}

WeylElement make_monic(const WeylElement& p, const TermOrder& order) {
  if (p.is_zero()) return p;
  Rat c = leading_term(p, order).second;
  return (1 / c) * p;
}

WeylElement s_pair(const WeylElement& p, const WeylElement& q, const TermOrder& order) {
  if (p.is_zero() || q.is_zero()) throw ZeroElement("s_pair of zero element");
  if (!(p.sig() == q.sig())) throw SignatureMismatch("s_pair: different algebras");
  auto [ep, cp] = leading_term(p, order);
  auto [eq, cq] = leading_term(q, order);
  Exp l = lcm(ep, eq);
  WeylElement a = mono_times(p.signature(), minus(l, ep), p, 1);
  WeylElement b = mono_times(p.signature(), minus(l, eq), q, cp / cq);
  return a - b;
}

WeylElement normal_form(const WeylElement& p, const std::vector<WeylElement>& g, const TermOrder& order,
                        long* budget) {
  if (p.is_zero()) return p;
  Reducer red(g, order);
  return reduce_with(p, red, order, budget);
}

GroebnerBasis buchberger(const std::vector<WeylElement>& gens, const TermOrder& order, GroebnerOptions opts) {
  long budget = opts.budget > 0 ? opts.budget : default_budget();
  GroebnerBasis out;
  out.order = order;
  std::vector<WeylElement> g;
  std::vector<Exp> lms;
  std::vector<Pair> pairs;
  SigPtr sig;
  bool unit = false;

  auto insert = [&](WeylElement h) {
    h = make_monic(h, order);
    Exp lh = leading_monomial(h, order);
    if (std::all_of(lh.begin(), lh.end(), [](int v) { return v == 0; })) unit = true;
    std::size_t k = g.size();
    if (opts.chain_criterion) {
      pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                                 [&](const Pair& pr) {
                                   if (!divides(lh, pr.lcm)) return false;
                                   return lcm(lms[pr.i], lh) != pr.lcm && lcm(lms[pr.j], lh) != pr.lcm;
                                 }),
                  pairs.end());
    }
    for (std::size_t i = 0; i < k; ++i) {
      Exp l = lcm(lms[i], lh);
      pairs.push_back(Pair{i, k, l, exp_degree(l)});
    }
    g.push_back(std::move(h));
    lms.push_back(lh);
    if (g.size() > opts.max_basis) throw ResourceLimit("basis size limit exceeded");
  };

  for (auto& x : gens) {
    if (x.is_zero()) continue;
    require_polynomial(x);
    if (!sig) sig = x.signature();
    insert(x);
    if (unit) break;
  }
  if (!sig) throw ZeroElement("buchberger: no nonzero generators");

  while (!pairs.empty() && !unit) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    });
    Pair pr = *best;
    pairs.erase(best);
    WeylElement sp = s_pair(g[pr.i], g[pr.j], order);
    if (sp.is_zero()) continue;
    Reducer red(g, order);
    WeylElement h = reduce_with(sp, red, order, &budget);
    if (!h.is_zero()) insert(std::move(h));
  }

  if (unit) {
    out.generators = {WeylElement::constant(sig, 1)};
  } else if (opts.reduce) {
    // minimal basis, then full interreduction
    std::vector<std::size_t> idx(g.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      int c = order.compare(lms[a], lms[b]);
      return c != 0 ? c < 0 : a < b;
    });
    std::vector<WeylElement> minimal;
    std::vector<Exp> minimal_lm;
    for (auto i : idx) {
      bool redundant = false;
      for (auto& m : minimal_lm)
        if (divides(m, lms[i])) redundant = true;
      if (redundant) continue;
      minimal.push_back(g[i]);
      minimal_lm.push_back(lms[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<WeylElement> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      // leading term is not divisible by the others, so only tails change
      WeylElement r = normal_form(minimal[i], others, order, &budget);
      minimal[i] = make_monic(r, order);
    }
    out.generators = std::move(minimal);
  } else {
    out.generators = std::move(g);
  }
  out.steps = (opts.budget > 0 ? opts.budget : default_budget()) - budget;
  if (auto m = sig->marked_index()) out.pure_flag = all_pure(out.generators, *m);
  return out;
}

bool ideal_membership(const WeylElement& p, const GroebnerBasis& gb) {
  return normal_form(p, gb.generators, gb.order).is_zero();
}

bool satisfies_spair_criterion(const GroebnerBasis& gb) {
  const auto& g = gb.generators;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      WeylElement sp = s_pair(g[i], g[j], gb.order);
      if (!normal_form(sp, g, gb.order).is_zero()) return false;
    }
  return true;
}

bool all_pure(const std::vector<WeylElement>& elems, std::size_t var) {
  for (auto& e : elems)
    if (!e.is_zero() && !v_orders(e, var).pure) return false;
  return true;
}

bool same_left_ideal(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b, const TermOrder& order,
                     GroebnerOptions opts) {
  GroebnerBasis ga = buchberger(a, order, opts);
  for (auto& x : b)
    if (!ideal_membership(x, ga)) return false;
  GroebnerBasis gb = buchberger(b, order, opts);
  for (auto& x : a)
    if (!ideal_membership(x, gb)) return false;
  return true;
}

}  // namespace gkz
