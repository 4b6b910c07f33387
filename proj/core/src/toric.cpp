#include <gkzhodge/toric.hpp>

#include <gkzhodge/rational.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace gkz {

namespace {

long dotl(const Point& a, const Point& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point addl(const Point& a, const Point& b) {
  Point c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

Point subl(const Point& a, const Point& b) {
  Point c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

// Calls f on every point of the box prod [lo_i, hi_i].
void for_box(const Point& lo, const Point& hi, const std::function<void(const Point&)>& f) {
  std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  Point p = lo;
  while (true) {
    f(p);
    std::size_t i = 0;
    while (i < n) {
      if (p[i] < hi[i]) {
        ++p[i];
        break;
      }
      p[i] = lo[i];
      ++i;
    }
    if (i == n) return;
  }
}

void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool ConeProfile::in_cone(const IntVec& x) const {
  for (auto& v : facet_normals)
    if (dot(v, x) < 0) return false;
  return true;
}

bool ConeProfile::in_interior(const IntVec& x) const {
  for (auto& v : facet_normals)
    if (dot(v, x) < 1) return false;
  return true;
}

IntVec ConeProfile::grading() const {
  IntVec y(generators.rows(), Int(0));
  for (auto& v : facet_normals) y = add(y, v);
  return y;
}

namespace {

ConeProfile cone_of(const IntMatrix& b) {
  if (rank(b) != b.rows()) throw NotFullRank("cone has empty interior");
  ConeProfile cone;
  cone.generators = b;
  const std::size_t r = b.rows(), s = b.cols();
  std::set<IntVec> normals;
  auto consider = [&](const IntVec& cand) {
    IntVec v = primitive(cand);
    bool nonneg = true, nonpos = true;
    for (std::size_t j = 0; j < s; ++j) {
      Int p = dot(v, b.column(j));
      if (p < 0) nonneg = false;
      if (p > 0) nonpos = false;
    }
    if (nonneg == nonpos) return;  // mixed signs, or zero on everything
    if (nonpos) v = scale(v, -1);
    normals.insert(v);
  };
  if (r == 1) {
    consider(to_intvec({1}));
  } else if (r > 1) {
    combinations(s, r - 1, [&](const std::vector<std::size_t>& idx) {
      IntMatrix sub = b.select_columns(idx).transpose();
      auto ker = kernel_lattice(sub);
      if (ker.vectors.size() == 1) consider(ker.vectors[0]);
    });
  }
  cone.facet_normals.assign(normals.begin(), normals.end());
  if (cone.facet_normals.empty()) {
    cone.group_part_rank = r;
  } else {
    cone.group_part_rank = r - rank(IntMatrix::from_rows(cone.facet_normals, r));
  }
  return cone;
}

}  // namespace

ConeProfile facet_normals(const IntMatrix& b) {
  if (!spans_full_lattice(b)) throw NotFullRank("facet_normals: columns do not span the full lattice");
  return cone_of(b);
}

SemigroupBall::SemigroupBall(const ConeProfile& cone, long bound)
    : cone_(&cone), bound_(bound), pointed_(cone.pointed()) {
  const IntMatrix& b = cone.generators;
  std::size_t r = b.rows();
  std::vector<Point> cols;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    IntVec c = b.column(j);
    if (!is_zero(c)) cols.push_back(to_longs(c));
  }
  if (pointed_) y_ = to_longs(cone.grading());
  long radius = 2 * bound;
  auto inside = [&](const Point& p) {
    if (pointed_) return dotl(y_, p) <= bound_;
    for (long v : p)
      if (v > radius || v < -radius) return false;
    return true;
  };
  std::deque<Point> queue;
  Point zero(r, 0);
  points_.insert(zero);
  queue.push_back(zero);
  while (!queue.empty()) {
    Point p = queue.front();
    queue.pop_front();
    for (auto& c : cols) {
      Point q = addl(p, c);
      if (!inside(q) || points_.count(q)) continue;
      points_.insert(q);
      queue.push_back(q);
    }
  }
}

long SemigroupBall::level(const Point& x) const { return pointed_ ? dotl(y_, x) : 0; }

bool SemigroupBall::exact_region(const Point& x) const {
  if (pointed_) return dotl(y_, x) <= bound_;
  for (long v : x)
    if (v > bound_ || v < -bound_) return false;
  return true;
}

std::vector<Point> SemigroupBall::cone_points() const {
  const IntMatrix& b = cone_->generators;
  std::size_t r = b.rows();
  Point lo(r), hi(r);
  if (pointed_) {
    for (std::size_t i = 0; i < r; ++i) {
      Rat m = 0;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        Point c = to_longs(b.column(j));
        long yc = dotl(y_, c);
        if (yc <= 0) continue;
        Rat q(std::abs(c[i]), yc);
        if (q > m) m = q;
      }
      Rat h = m * bound_;
      Int fl;
      mpz_fdiv_q(fl.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
      hi[i] = fl.get_si();
      lo[i] = -hi[i];
    }
  } else {
    for (std::size_t i = 0; i < r; ++i) {
      lo[i] = -bound_;
      hi[i] = bound_;
    }
  }
  std::vector<Point> out;
  for_box(lo, hi, [&](const Point& p) {
    if (!exact_region(p)) return;
    if (!cone_->in_cone(to_intvec(p))) return;
    out.push_back(p);
  });
  std::sort(out.begin(), out.end(), [&](const Point& a, const Point& c) {
    long la = level(a), lc = level(c);
    if (la != lc) return la < lc;
    return a < c;
  });
  return out;
}

MembershipResult semigroup_membership(const ConeProfile& cone, const IntVec& x, long bound) {
  MembershipResult res;
  const IntMatrix& b = cone.generators;
  if (x.size() != b.rows()) throw std::invalid_argument("semigroup_membership: dimension mismatch");
  if (is_zero(x)) {
    res.status = Membership::member;
    res.k.assign(b.cols(), Int(0));
    return res;
  }
  if (!cone.in_cone(x)) {
    res.status = Membership::nonmember;
    return res;
  }
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < b.cols(); ++j)
    if (!is_zero(b.column(j))) nz.push_back(j);
  IntMatrix m = b.select_columns(nz);
  IntVec t = x;
  SolveOptions opts;
  opts.degree_bound = bound;
  if (cone.pointed()) {
    // An extra row <y, b_j> > 0 makes the search provably exhaustive.
    IntVec y = cone.grading();
    IntVec yrow;
    for (std::size_t j = 0; j < m.cols(); ++j) yrow.push_back(dot(y, m.column(j)));
    std::vector<IntVec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    rows.push_back(yrow);
    m = IntMatrix::from_rows(rows, m.cols());
    t.push_back(dot(y, x));
    Int mn = *std::min_element(yrow.begin(), yrow.end());
    Int cap = t.back() / mn + 1;
    opts.degree_bound = std::max<long>(bound, cap.get_si());
  }
  try {
    auto k = nonneg_integer_solve(m, t, opts);
    if (!k) {
      res.status = Membership::nonmember;
      return res;
    }
    res.status = Membership::member;
    res.k.assign(b.cols(), Int(0));
    for (std::size_t i = 0; i < nz.size(); ++i) res.k[nz[i]] = (*k)[i];
  } catch (const BoundExceeded&) {
    res.status = Membership::unknown;
  }
  return res;
}

MembershipResult semigroup_membership(const IntMatrix& b, const IntVec& x, long bound) {
  return semigroup_membership(cone_of(b), x, bound);
}

std::string SaturationVerdict::status_name() const {
  switch (status) {
    case Status::verified_to_bound:
      return "verified-to-bound";
    case Status::refuted:
      return "refuted";
    default:
      return "unknown";
  }
}

SaturationVerdict check_saturation(const IntMatrix& b, long bound) {
  ConeProfile cone = cone_of(b);
  SemigroupBall ball(cone, bound);
  SaturationVerdict v;
  v.bound = bound;
  v.approximate = !cone.pointed();
  for (const Point& p : ball.cone_points()) {
    if (!ball.contains(p)) {
      v.status = SaturationVerdict::Status::refuted;
      v.witness = to_intvec(p);
      if (!cone.pointed()) {
        // Confirm outside the box with a direct search before reporting.
        auto m = semigroup_membership(cone, v.witness, 4 * bound);
        if (m.status == Membership::member) continue;
        if (m.status == Membership::unknown) {
          v.status = SaturationVerdict::Status::unknown;
          return v;
        }
      }
      return v;
    }
  }
  v.status = SaturationVerdict::Status::verified_to_bound;
  return v;
}

std::optional<IntVec> gorenstein_vector(const IntMatrix& b, long bound) {
  ConeProfile cone = facet_normals(b);
  auto sat = check_saturation(b, bound);
  if (sat.status != SaturationVerdict::Status::verified_to_bound)
    throw NotSaturated("gorenstein_vector: semigroup not verified saturated");
  std::size_t r = b.rows();
  if (cone.facet_normals.empty()) return IntVec(r, Int(0));

  std::vector<Point> candidates;
  if (cone.pointed()) {
    RatMatrix n(IntMatrix::from_rows(cone.facet_normals, r));
    RatVec ones(cone.facet_normals.size(), Rat(1));
    auto sol = solve(n, ones);
    if (!sol) return std::nullopt;
    Point p;
    for (auto& q : *sol) {
      if (q.get_den() != 1) return std::nullopt;
      p.push_back(q.get_num().get_si());
    }
    candidates.push_back(p);
  } else {
    Point lo(r, -bound), hi(r, bound);
    for_box(lo, hi, [&](const Point& p) {
      IntVec x = to_intvec(p);
      for (auto& v : cone.facet_normals)
        if (dot(v, x) != 1) return;
      candidates.push_back(p);
    });
    std::sort(candidates.begin(), candidates.end(), [](const Point& a, const Point& c) {
      long na = 0, nc = 0;
      for (long v : a) na += std::abs(v);
      for (long v : c) nc += std::abs(v);
      if (na != nc) return na < nc;
      return a < c;
    });
  }

  SemigroupBall ball(cone, bound);
  auto pts = ball.cone_points();
  for (const Point& c : candidates) {
    if (!ball.contains(c)) continue;
    bool ok = true;
    for (const Point& x : pts) {
      bool interior = cone.in_interior(to_intvec(x));
      bool shifted = ball.contains(subl(x, c));
      if (interior != shifted) {
        ok = false;
        break;
      }
    }
    if (ok) return to_intvec(c);
  }
  return std::nullopt;
}

std::vector<CPrime> cprime_decompositions(const IntMatrix& b, const IntVec& c) {
  ConeProfile cone = facet_normals(b);
  std::vector<CPrime> out;
  if (is_zero(c)) {
    CPrime z;
    z.cprime.assign(b.rows(), Int(0));
    z.representation.assign(b.cols(), Int(0));
    out.push_back(z);
    return out;
  }
  std::vector<IntVec> reps;
  for (long d = 1; d <= 64 && reps.empty(); ++d) {
    auto sols = nonneg_solutions_upto(b, c, d);
    for (auto& k : sols) {
      Int tot = 0;
      for (auto& x : k) tot += x;
      if (tot == d) reps.push_back(k);
    }
  }
  if (reps.empty()) throw NoDecomposition("cprime_decomposition: no representation of c found");
  std::sort(reps.begin(), reps.end());
  std::set<std::vector<std::size_t>> seen;
  for (auto& k : reps) {
    CPrime cp;
    cp.representation = k;
    cp.cprime.assign(b.rows(), Int(0));
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (k[j] == 0) continue;
      support.push_back(j);
      IntVec col = b.column(j);
      cp.cprime = add(cp.cprime, col);
      bool in_group = true;
      for (auto& v : cone.facet_normals)
        if (dot(v, col) != 0) in_group = false;
      (in_group ? cp.J2 : cp.J1).push_back(j);
    }
    if (seen.count(support)) continue;
    bool valid = true;
    for (auto& v : cone.facet_normals) {
      if (dot(v, cp.cprime) != dot(v, c)) valid = false;
      int ones = 0;
      for (auto j : support) {
        Int p = dot(v, b.column(j));
        if (p == 1)
          ++ones;
        else if (p != 0)
          valid = false;
      }
      if (ones != 1) valid = false;
    }
    if (!valid) continue;
    seen.insert(support);
    out.push_back(cp);
  }
  if (out.empty()) throw NoDecomposition("cprime_decomposition: no minimal representation satisfies the facet condition");
  return out;
}

CPrime cprime_decomposition(const IntMatrix& b, const IntVec& c) { return cprime_decompositions(b, c).front(); }

IntMatrix homogenize(const IntMatrix& b) {
  IntMatrix t(b.rows() + 1, b.cols() + 1);
  t(0, 0) = 1;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    t(0, j + 1) = 1;
    for (std::size_t i = 0; i < b.rows(); ++i) t(i + 1, j + 1) = b(i, j);
  }
  return t;
}

ChartMatrix chart_matrix(const IntMatrix& a, std::size_t u) {
  const std::size_t d = a.rows(), n = a.cols();
  if (u > n) throw IndexOutOfRange("chart_matrix: chart index out of range");
  auto col = [&](std::size_t i) { return i == 0 ? IntVec(d, Int(0)) : a.column(i - 1); };
  IntVec au = col(u);
  ChartMatrix ch;
  std::vector<IntVec> cols;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == u) continue;
    cols.push_back(sub(col(i), au));
    ch.source_index.push_back(i);
  }
  ch.A_u = IntMatrix::from_columns(cols, d);
  ch.C_u = IntMatrix::identity(d + 1);
  for (std::size_t i = 0; i < d; ++i) ch.C_u(i + 1, 0) = -au[i];
  ch.column_order.push_back(u);
  for (auto i : ch.source_index) ch.column_order.push_back(i);
  IntMatrix lhs = (ch.C_u * homogenize(a)).select_columns(ch.column_order);
  if (!(lhs == homogenize(ch.A_u))) throw std::logic_error("chart_matrix: C_u certificate failed");
  return ch;
}

SresResult sres_contains(const IntMatrix& b, const IntVec& beta, long bound) {
  ConeProfile cone = facet_normals(b);
  SresResult res;
  res.bound = bound;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    IntVec bj = b.column(j);
    if (is_zero(bj)) continue;
    for (long k = 1; k <= bound; ++k) {
      IntVec x = sub(scale(beta, -1), scale(bj, k));
      auto in = semigroup_membership(cone, x, bound);
      if (in.status != Membership::member) continue;
      auto below = semigroup_membership(cone, sub(x, bj), bound);
      if (below.status == Membership::nonmember) {
        res.contains = true;
        res.column = j;
        res.k = k;
        return res;
      }
    }
  }
  return res;
}

SemigroupProfile semigroup_profile(const IntMatrix& b, long bound) {
  SemigroupProfile p;
  p.cone = facet_normals(b);
  p.saturated = check_saturation(b, bound);
  if (p.saturated.status == SaturationVerdict::Status::verified_to_bound) {
    p.gorenstein_c = gorenstein_vector(b, bound);
    if (p.gorenstein_c) {
      p.cprime_alternatives = cprime_decompositions(b, *p.gorenstein_c);
      p.cprime = p.cprime_alternatives.front();
    }
  }
  return p;
}

}  // namespace gkz
