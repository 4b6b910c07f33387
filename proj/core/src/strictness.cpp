#include <gkzhodge/homological.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace gkz {

namespace {

struct GradedMonomials {
  const SigPtr& sig;
  const IntMatrix& grading;

  IntVec degree(const Exp& e) const {
    IntVec out(grading.rows(), Int(0));
    for (std::size_t i = 0; i < grading.rows(); ++i)
      for (std::size_t j = 0; j < sig->nvars(); ++j)
        out[i] += grading(i, j) * (e[sig->x(j)] - e[sig->d(j)]);
    return out;
  }

  // Monomials x^gamma d^delta of degree D with |delta| <= order.
  std::vector<Exp> of_degree(const IntVec& d, long order) const {
    std::vector<Exp> out;
    if (order < 0) return out;
    const std::size_t n = sig->nvars();
    std::vector<int> delta(n, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t pos, long left) {
      if (pos == n) {
        IntVec t = d;
        for (std::size_t i = 0; i < grading.rows(); ++i)
          for (std::size_t j = 0; j < n; ++j) t[i] += grading(i, j) * delta[j];
        if (t[0] < 0) return;
        for (auto& g : nonneg_solutions_upto(grading, t, t[0].get_si())) {
          Exp e(sig->width(), 0);
          for (std::size_t j = 0; j < n; ++j) {
            e[sig->x(j)] = static_cast<int>(g[j].get_si());
            e[sig->d(j)] = delta[j];
          }
          out.push_back(e);
        }
        return;
      }
      for (long k = 0; k <= left; ++k) {
        delta[pos] = static_cast<int>(k);
        rec(pos + 1, left - k);
      }
      delta[pos] = 0;
    };
    rec(0, order);
    return out;
  }
};

bool divisible(const Exp& e, const std::vector<Exp>& leads) {
  for (auto& l : leads) {
    bool div = true;
    for (std::size_t i = 0; i < l.size() && div; ++i)
      if (l[i] > e[i]) div = false;
    if (div) return true;
  }
  return false;
}

std::vector<Exp> leading_monomials(const GroebnerBasis& gb) {
  std::vector<Exp> out;
  for (auto& g : gb.generators) out.push_back(leading_monomial(g, gb.order));
  return out;
}

}  // namespace

StrictnessReport strictness_check(const FilteredMap& map, long bound, GroebnerOptions opts) {
  if (map.target.empty() || map.source.empty()) throw std::invalid_argument("strictness_check: empty presentation");
  SigPtr sig = map.target.front().signature();
  if (map.grading.cols() != sig->nvars()) throw std::invalid_argument("strictness_check: grading width mismatch");
  for (std::size_t j = 0; j < sig->nvars(); ++j)
    if (map.grading(0, j) <= 0) throw std::invalid_argument("strictness_check: first grading row must be positive");

  TermOrder order(sig);
  std::vector<WeylElement> src;
  for (auto& g : map.source) src.push_back(g.retag(sig));
  GroebnerBasis gsrc = buchberger(src, order, opts);
  GroebnerBasis gtgt = buchberger(map.target, order, opts);
  std::vector<WeylElement> with_image = map.target;
  with_image.push_back(map.multiplier);
  GroebnerBasis gquo = buchberger(with_image, order, opts);
  auto lsrc = leading_monomials(gsrc), ltgt = leading_monomials(gtgt), lquo = leading_monomials(gquo);

  StrictnessReport rep;
  rep.bound = bound;
  rep.well_defined = true;
  for (auto& g : src)
    if (!ideal_membership(multiply(g, map.multiplier), gtgt)) rep.well_defined = false;
  if (!rep.well_defined) throw NotWellDefined("strictness_check: multiplier does not map the source ideal into the target");

  GradedMonomials gm{sig, map.grading};
  std::optional<IntVec> mdeg;
  for (auto& [e, c] : map.multiplier.terms()) {
    IntVec d = gm.degree(e);
    if (mdeg && *mdeg != d) throw std::invalid_argument("strictness_check: multiplier is not homogeneous");
    mdeg = d;
  }

  std::set<IntVec> degrees;
  {
    // Degrees of x^gamma d^delta with |gamma|, |delta| <= bound.
    const std::size_t n = sig->nvars();
    std::vector<int> g(n, 0), dl(n, 0);
    std::function<void(std::vector<int>&, std::size_t, long, const std::function<void()>&)> rec =
        [&](std::vector<int>& v, std::size_t pos, long left, const std::function<void()>& done) {
          if (pos == n) {
            done();
            return;
          }
          for (long k = 0; k <= left; ++k) {
            v[pos] = static_cast<int>(k);
            rec(v, pos + 1, left - k, done);
          }
          v[pos] = 0;
        };
    rec(g, 0, bound, [&] {
      rec(dl, 0, bound, [&] {
        Exp e(sig->width(), 0);
        for (std::size_t j = 0; j < n; ++j) {
          e[sig->x(j)] = g[j];
          e[sig->d(j)] = dl[j];
        }
        degrees.insert(gm.degree(e));
      });
    });
  }

  bool any = false;
  for (auto& D : degrees) {
    IntVec src_deg = sub(D, *mdeg);
    for (long l = 0; l <= bound; ++l) {
      StrictnessDegree sd;
      sd.degree = D;
      sd.level = l;
      std::size_t full = 0, quo = 0;
      for (auto& e : gm.of_degree(D, l)) {
        if (!divisible(e, ltgt)) ++full;
        if (!divisible(e, lquo)) ++quo;
      }
      sd.target_cap_image = full - quo;
      RowSpan span(0);
      std::map<Exp, std::size_t> ids;
      std::size_t src_count = 0;
      for (auto& e : gm.of_degree(src_deg, l - map.shift)) {
        if (divisible(e, lsrc)) continue;
        ++src_count;
        WeylElement img = normal_form(multiply(WeylElement::monomial(sig, e), map.multiplier), gtgt.generators, order);
        SparseRow row;
        for (auto& [m, c] : img.terms()) row[ids.emplace(m, ids.size()).first->second] = c;
        span.insert(row);
      }
      sd.image_of_filtered = span.dimension();
      if (full > 0 || src_count > 0) any = true;
      if (!sd.strict()) rep.strict = false;
      rep.degrees.push_back(sd);
    }
  }
  if (!any) throw BoundTooSmall("strictness_check: every filtration piece is empty up to the bound");
  return rep;
}

StrictnessReport strictness_check(const DualityMorphism& phi, long bound, GroebnerOptions opts) {
  FilteredMap map;
  map.source = phi.source.generators;
  map.target = phi.target.generators;
  map.multiplier = phi.multiplier;
  map.grading = phi.target.matrix;
  map.shift = phi.order_shift;
  return strictness_check(map, bound, opts);
}

// ---------------------------------------------------------------------------

namespace {

SparseMatrix restrict(const SparseMatrix& m, const std::function<bool(std::size_t)>& keep_row,
                      const std::function<bool(std::size_t)>& keep_col) {
  SparseMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!keep_row(i)) continue;
    for (auto& [j, v] : m.row(i))
      if (keep_col(j)) out.add(i, j, v);
  }
  return out;
}

}  // namespace

FilteredComplexVerdict strictness_check(const FilteredComplex& fc) {
  const GradedComplex& c = fc.complex;
  if (fc.levels.size() != c.dims.size()) throw std::invalid_argument("strictness_check: levels do not match the terms");
  for (std::size_t j = 0; j < c.dims.size(); ++j)
    if (fc.levels[j].size() != c.dims[j]) throw std::invalid_argument("strictness_check: level count mismatch");

  FilteredComplexVerdict v;
  v.filtered = true;
  long lo = 0, hi = 0;
  bool first = true;
  for (auto& lv : fc.levels)
    for (long p : lv) {
      lo = first ? p : std::min(lo, p);
      hi = first ? p : std::max(hi, p);
      first = false;
    }
  for (std::size_t j = 0; j < c.maps.size(); ++j)
    for (std::size_t i = 0; i < c.maps[j].rows(); ++i)
      for (auto& [col, val] : c.maps[j].row(i))
        if (fc.levels[j + 1][i] > fc.levels[j][col]) v.filtered = false;
  if (!v.filtered) {
    v.strict = false;
    return v;
  }
  if (first) return v;

  auto all = [](std::size_t) { return true; };
  std::vector<std::size_t> full_rank;
  for (auto& m : c.maps) full_rank.push_back(rank(m));

  // dim F_p H^j
  auto fh = [&](std::size_t j, long p) -> long {
    auto in_fp = [&](std::size_t b) { return fc.levels[j][b] <= p; };
    long fp = 0;
    for (long lv : fc.levels[j])
      if (lv <= p) ++fp;
    long ker = fp;
    if (j < c.maps.size()) ker -= static_cast<long>(rank(restrict(c.maps[j], all, in_fp)));
    long im = 0;
    if (j > 0) {
      auto above = [&](std::size_t i) { return fc.levels[j][i] > p; };
      im = static_cast<long>(full_rank[j - 1]) - static_cast<long>(rank(restrict(c.maps[j - 1], above, all)));
    }
    return ker - im;
  };

  for (std::size_t j = 0; j < c.dims.size(); ++j) {
    for (long p = lo; p <= hi; ++p) {
      long gr_h = fh(j, p) - fh(j, p - 1);
      auto at_p = [&](std::size_t jj) { return [&, jj](std::size_t b) { return fc.levels[jj][b] == p; }; };
      long gp = 0;
      for (long lv : fc.levels[j])
        if (lv == p) ++gp;
      long h_gr = gp;
      if (j < c.maps.size()) h_gr -= static_cast<long>(rank(restrict(c.maps[j], at_p(j + 1), at_p(j))));
      if (j > 0) h_gr -= static_cast<long>(rank(restrict(c.maps[j - 1], at_p(j), at_p(j - 1))));
      v.table[{j, p}] = {static_cast<std::size_t>(gr_h), static_cast<std::size_t>(h_gr)};
      if (gr_h != h_gr) v.strict = false;
    }
  }
  return v;
}

}  // namespace gkz
