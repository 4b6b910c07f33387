#include <gkzhodge/linalg.hpp>

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <sstream>

namespace gkz {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t i) const {
  return IntVec(data_.begin() + static_cast<long>(i * cols_),
                data_.begin() + static_cast<long>((i + 1) * cols_));
}

IntVec IntMatrix::column(std::size_t j) const {
  IntVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<IntVec> IntMatrix::columns() const {
  std::vector<IntVec> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  IntMatrix m(rows_, idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t i = 0; i < rows_; ++i) m(i, k) = (*this)(i, idx[k]);
  return m;
}

IntMatrix IntMatrix::append_column(const IntVec& v) const {
  if (v.size() != rows_) throw std::invalid_argument("append_column: length mismatch");
  IntMatrix m(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    m(i, cols_) = v[i];
  }
  return m;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
  IntVec out(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::to_string() const { return matrix_to_text(*this); }

IntVec SmithDecomposition::diagonal() const {
  IntVec d;
  for (std::size_t i = 0; i < std::min(E.rows(), E.cols()); ++i) d.push_back(E(i, i));
  return d;
}

namespace {

// Working state: U*M*V = A, with Uinv, Vinv maintained alongside.
struct SmithState {
  IntMatrix A, U, Uinv, V, Vinv;

  void row_add(std::size_t dst, std::size_t src, const Int& k) {
    A.add_row_multiple(dst, src, k);
    U.add_row_multiple(dst, src, k);
    Uinv.add_col_multiple(src, dst, -k);
  }
  void row_swap(std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    U.swap_rows(a, b);
    Uinv.swap_cols(a, b);
  }
  void row_negate(std::size_t i) {
    A.negate_row(i);
    U.negate_row(i);
    Uinv.negate_col(i);
  }
  void col_add(std::size_t dst, std::size_t src, const Int& k) {
    A.add_col_multiple(dst, src, k);
    V.add_col_multiple(dst, src, k);
    Vinv.add_row_multiple(src, dst, -k);
  }
  void col_swap(std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    V.swap_cols(a, b);
    Vinv.swap_rows(a, b);
  }
};

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t r = m.rows(), s = m.cols();
  SmithState st{m, IntMatrix::identity(r), IntMatrix::identity(r), IntMatrix::identity(s),
                IntMatrix::identity(s)};
  std::size_t t = 0;
  while (t < r && t < s) {
    // smallest nonzero |entry|, lowest row then column
    bool found = false;
    std::size_t pi = 0, pj = 0;
    Int best;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < s; ++j) {
        const Int& a = st.A(i, j);
        if (a == 0) continue;
        Int av = abs(a);
        if (!found || av < best) {
          found = true;
          best = av;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    st.row_swap(t, pi);
    st.col_swap(t, pj);

    bool clean = true;
    for (std::size_t i = t + 1; i < r; ++i) {
      if (st.A(i, t) == 0) continue;
      st.row_add(i, t, -fdiv(st.A(i, t), st.A(t, t)));
      if (st.A(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < s; ++j) {
      if (st.A(t, j) == 0) continue;
      st.col_add(j, t, -fdiv(st.A(t, j), st.A(t, t)));
      if (st.A(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // a smaller remainder appeared; pick it as pivot

    bool divides = true;
    for (std::size_t i = t + 1; i < r && divides; ++i)
      for (std::size_t j = t + 1; j < s; ++j)
        if (st.A(i, j) % st.A(t, t) != 0) {
          st.row_add(t, i, 1);
          divides = false;
          break;
        }
    if (!divides) continue;
    if (st.A(t, t) < 0) st.row_negate(t);
    ++t;
  }
  SmithDecomposition out;
  out.E = st.A;
  out.C = st.Uinv;
  out.C_inv = st.U;
  out.F = st.Vinv;
  out.F_inv = st.V;
  out.rank = t;
  return out;
}

std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  return smith_normal_form(m).rank;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  // fraction-free (Bareiss) elimination
  std::size_t n = m.rows();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

void size_reduce(std::vector<IntVec>& vs) {
  auto norm2 = [](const IntVec& v) {
    Int s = 0;
    for (auto& x : v) s += x * x;
    return s;
  };
  bool changed = true;
  int rounds = 0;
  while (changed && rounds++ < 50) {
    changed = false;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = 0; j < vs.size(); ++j) {
        if (i == j) continue;
        Int nj = norm2(vs[j]);
        if (nj == 0) continue;
        Int d = dot(vs[i], vs[j]);
        // nearest integer to d / nj
        Int q = fdiv(2 * d + nj, 2 * nj);
        if (q == 0) continue;
        IntVec cand = sub(vs[i], scale(vs[j], q));
        if (norm2(cand) < norm2(vs[i])) {
          vs[i] = cand;
          changed = true;
        }
      }
  }
}

}  // namespace

LatticeBasis kernel_lattice(const IntMatrix& m) {
  LatticeBasis out;
  if (m.cols() == 0) return out;
  if (m.rows() == 0) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      IntVec e(m.cols(), Int(0));
      e[j] = 1;
      out.vectors.push_back(e);
    }
    return out;
  }
  auto snf = smith_normal_form(m);
  for (std::size_t j = snf.rank; j < m.cols(); ++j) out.vectors.push_back(snf.F_inv.column(j));
  size_reduce(out.vectors);
  for (auto& v : out.vectors) {
    for (auto& x : v)
      if (x != 0) {
        if (x < 0)
          for (auto& y : v) y = -y;
        break;
      }
  }
  return out;
}

bool spans_full_lattice(const IntMatrix& m) {
  if (m.rows() == 0) return true;
  if (m.cols() == 0) return false;
  auto snf = smith_normal_form(m);
  if (snf.rank != m.rows()) return false;
  for (auto& d : snf.diagonal())
    if (abs(d) != 1) return false;
  return true;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (auto& x : v) g = gcd(g, x);
  return g;
}

IntVec primitive(const IntVec& v) {
  Int g = gcd_of(v);
  if (g == 0) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

IntVec scale(const IntVec& a, const Int& k) {
  IntVec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * k;
  return c;
}

IntVec to_intvec(std::initializer_list<long> v) {
  IntVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

IntVec to_intvec(const std::vector<long>& v) {
  IntVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<long> to_longs(const IntVec& v) {
  std::vector<long> out;
  out.reserve(v.size());
  for (auto& x : v) {
    if (!x.fits_slong_p()) throw std::overflow_error("entry does not fit in a machine word");
    out.push_back(x.get_si());
  }
  return out;
}

std::string vec_to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

namespace {

struct SmallSystem {
  std::size_t r = 0, s = 0;
  std::vector<std::vector<long>> cols;
  std::vector<long> target;
  std::vector<bool> nonneg_row;  // all entries >= 0
};

SmallSystem make_small(const IntMatrix& m, const IntVec& t) {
  SmallSystem sys;
  sys.r = m.rows();
  sys.s = m.cols();
  for (std::size_t j = 0; j < sys.s; ++j) sys.cols.push_back(to_longs(m.column(j)));
  sys.target = to_longs(t);
  sys.nonneg_row.assign(sys.r, true);
  for (std::size_t i = 0; i < sys.r; ++i)
    for (std::size_t j = 0; j < sys.s; ++j)
      if (m(i, j) < 0) sys.nonneg_row[i] = false;
  return sys;
}

// Enumerates k >= 0 with |k| == degree and M k == t; callback returns false to stop.
bool enumerate_degree(const SmallSystem& sys, long degree,
                      const std::function<bool(const std::vector<long>&)>& cb) {
  if (sys.s == 0) {
    if (degree != 0) return true;
    if (std::all_of(sys.target.begin(), sys.target.end(), [](long x) { return x == 0; }))
      return cb({});
    return true;
  }
  std::vector<long> k(sys.s, 0);
  std::vector<long> resid = sys.target;
  auto shift = [&](std::size_t j, long v) {
    for (std::size_t i = 0; i < sys.r; ++i) resid[i] -= v * sys.cols[j][i];
  };
  auto dead = [&]() {
    for (std::size_t i = 0; i < sys.r; ++i)
      if (sys.nonneg_row[i] && resid[i] < 0) return true;
    return false;
  };
  std::function<bool(std::size_t, long)> rec = [&](std::size_t j, long left) -> bool {
    if (j + 1 == sys.s) {
      shift(j, left);
      bool cont = true;
      if (std::all_of(resid.begin(), resid.end(), [](long x) { return x == 0; })) {
        k[j] = left;
        cont = cb(k);
        k[j] = 0;
      }
      shift(j, -left);
      return cont;
    }
    long used = 0;
    bool cont = true;
    for (long v = 0; v <= left; ++v) {
      if (v > 0) {
        shift(j, 1);
        used = v;
        if (dead()) break;
      }
      k[j] = v;
      if (!rec(j + 1, left - v)) {
        cont = false;
        break;
      }
    }
    shift(j, -used);
    k[j] = 0;
    return cont;
  };
  if (dead()) return true;
  return rec(0, degree);
}

// Upper bound on |k| proven by a row with all entries positive, or -1.
long proven_degree_cap(const SmallSystem& sys) {
  long cap = -1;
  for (std::size_t i = 0; i < sys.r; ++i) {
    long mn = LONG_MAX;
    bool pos = sys.s > 0;
    for (std::size_t j = 0; j < sys.s; ++j) {
      if (sys.cols[j][i] <= 0) pos = false;
      mn = std::min(mn, sys.cols[j][i]);
    }
    if (!pos) continue;
    long c = sys.target[i] < 0 ? -1 : sys.target[i] / mn;
    if (sys.target[i] < 0) return -2;
    if (cap < 0 || c < cap) cap = c;
  }
  return cap;
}

bool integrally_solvable(const IntMatrix& m, const IntVec& t) {
  // M k = t over Z  <=>  E y = C^{-1} t solvable with y integral.
  auto snf = smith_normal_form(m);
  IntVec ct = snf.C_inv.apply(t);
  for (std::size_t i = 0; i < ct.size(); ++i) {
    if (i < snf.rank) {
      if (ct[i] % snf.E(i, i) != 0) return false;
    } else if (ct[i] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<IntVec> nonneg_integer_solve(const IntMatrix& m, const IntVec& t, SolveOptions opts) {
  if (t.size() != m.rows()) throw std::invalid_argument("nonneg_integer_solve: dimension mismatch");
  if (std::all_of(t.begin(), t.end(), [](const Int& x) { return x == 0; }))
    return IntVec(m.cols(), Int(0));
  if (m.cols() == 0) return std::nullopt;
  if (m.rows() > 0 && !integrally_solvable(m, t)) return std::nullopt;
  SmallSystem sys = make_small(m, t);
  for (std::size_t i = 0; i < sys.r; ++i)
    if (sys.nonneg_row[i] && sys.target[i] < 0) return std::nullopt;
  long cap = proven_degree_cap(sys);
  if (cap == -2) return std::nullopt;
  long limit = cap >= 0 ? std::min(cap, opts.degree_bound) : opts.degree_bound;
  std::optional<IntVec> found;
  for (long d = 0; d <= limit && !found; ++d) {
    enumerate_degree(sys, d, [&](const std::vector<long>& k) {
      found = to_intvec(k);
      return false;
    });
  }
  if (found) return found;
  if (cap >= 0 && cap <= opts.degree_bound) return std::nullopt;
  throw BoundExceeded("nonneg_integer_solve: no solution up to total degree " +
                      std::to_string(opts.degree_bound));
}

std::vector<IntVec> nonneg_solutions_upto(const IntMatrix& m, const IntVec& t, long degree) {
  std::vector<IntVec> out;
  if (m.cols() == 0) {
    if (std::all_of(t.begin(), t.end(), [](const Int& x) { return x == 0; })) out.push_back({});
    return out;
  }
  SmallSystem sys = make_small(m, t);
  for (long d = 0; d <= degree; ++d) {
    std::vector<IntVec> layer;
    enumerate_degree(sys, d, [&](const std::vector<long>& k) {
      layer.push_back(to_intvec(k));
      return true;
    });
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace gkz
