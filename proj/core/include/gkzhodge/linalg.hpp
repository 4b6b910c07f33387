#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec column(std::size_t j) const;
  std::vector<IntVec> columns() const;

  IntMatrix transpose() const;
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
  IntMatrix append_column(const IntVec& v) const;
  IntVec apply(const IntVec& v) const;

  // Row-operation helpers used by the Smith reduction.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

struct SmithDecomposition {
  IntMatrix C;      // unimodular, rows x rows
  IntMatrix E;      // diagonal form
  IntMatrix F;      // unimodular, cols x cols
  IntMatrix C_inv;
  IntMatrix F_inv;
  std::size_t rank = 0;

  IntVec diagonal() const;
};

struct LatticeBasis {
  std::vector<IntVec> vectors;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);
LatticeBasis kernel_lattice(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
bool spans_full_lattice(const IntMatrix& m);
Int determinant(const IntMatrix& m);

struct SolveOptions {
  long degree_bound = 64;
};

// Nonnegative integer solution of M k = t. Returns nullopt when infeasibility
// is proven; throws BoundExceeded when the search gave up.
std::optional<IntVec> nonneg_integer_solve(const IntMatrix& m, const IntVec& t,
                                           SolveOptions opts = {});

// All nonnegative solutions of M k = t with |k| <= degree, sorted by (|k|, lex).
std::vector<IntVec> nonneg_solutions_upto(const IntMatrix& m, const IntVec& t, long degree);

Int dot(const IntVec& a, const IntVec& b);
Int gcd_of(const IntVec& v);
IntVec primitive(const IntVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const IntVec& a, const Int& k);
IntVec to_intvec(std::initializer_list<long> v);
IntVec to_intvec(const std::vector<long>& v);
std::vector<long> to_longs(const IntVec& v);
std::string vec_to_string(const IntVec& v);

// Matrix file formats.
IntMatrix parse_matrix(const std::string& text);
IntMatrix parse_matrix_json(const std::string& text);
IntMatrix parse_matrix_text(const std::string& text);
std::string matrix_to_json(const IntMatrix& m);
std::string matrix_to_text(const IntMatrix& m);
IntMatrix read_matrix_file(const std::string& path);

}  // namespace gkz
