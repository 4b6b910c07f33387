#include <gkzhodge/rational.hpp>

#include <optional>

namespace gkz {

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rat(m(i, j));
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

bool RatMatrix::is_zero() const {
  for (auto& x : data_)
    if (x != 0) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    Rat inv = 1 / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a).size();
}

std::vector<RatVec> nullspace(const RatMatrix& m) {
  RatMatrix a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    out.push_back(v);
  }
  return out;
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVec x(m.cols(), Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Rat& v) {
  if (v == 0) return;
  auto& row = data_[i];
  auto it = row.find(j);
  if (it == row.end()) {
    row.emplace(j, v);
  } else {
    it->second += v;
    if (it->second == 0) row.erase(it);
  }
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("sparse product: shape mismatch");
  SparseMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [k, a] : data_[i])
      for (auto& [j, b] : other.data_[k]) out.add(i, j, a * b);
  return out;
}

bool SparseMatrix::is_zero() const {
  for (auto& r : data_)
    if (!r.empty()) return false;
  return true;
}

std::size_t rank(const SparseMatrix& m) {
  RowSpan span(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) span.insert(m.row(i));
  return span.dimension();
}

void RowSpan::reduce(SparseRow& v) const {
  // pivots keyed by leading column; rows stored normalized with leading 1
  auto it = v.begin();
  while (it != v.end()) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    Rat f = it->second;
    std::size_t key = it->first;
    for (auto& [j, a] : p->second) {
      auto q = v.find(j);
      if (q == v.end()) {
        v.emplace(j, -f * a);
      } else {
        q->second -= f * a;
        if (q->second == 0) v.erase(q);
      }
    }
    it = v.upper_bound(key);
  }
}

bool RowSpan::insert(SparseRow v) {
  reduce(v);
  if (v.empty()) return false;
  Rat inv = 1 / v.begin()->second;
  for (auto& [j, a] : v) a *= inv;
  std::size_t lead = v.begin()->first;
  pivots_.emplace(lead, std::move(v));
  return true;
}

bool RowSpan::contains(SparseRow v) const {
  reduce(v);
  return v.empty();
}

}  // namespace gkz
