#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace flagiso {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense row-major matrix over Q.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;
  void set_column(std::size_t c, const std::vector<Rational>& v);
  /// Appends a column; the matrix must have `v.size()` rows (or be empty).
  void append_column(const std::vector<Rational>& v);

  bool is_zero() const;
  QMatrix transposed() const;

  QMatrix operator*(const QMatrix& rhs) const;
  QMatrix operator+(const QMatrix& rhs) const;
  QMatrix operator-(const QMatrix& rhs) const;
  QMatrix scaled(const Rational& s) const;

  friend bool operator==(const QMatrix& a, const QMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

namespace linalg {

/// Brings `m` to reduced row echelon form in place. Returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(QMatrix m);

/// Basis of {x : m x = 0}, one basis vector per column.
QMatrix nullspace(const QMatrix& m);

/// Reduced column-echelon basis of the column space of `m`. `pivots` receives
/// the pivot row of each output column (strictly increasing).
QMatrix column_echelon(const QMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Solves m x = b when consistent.
bool solve(const QMatrix& m, const std::vector<Rational>& b, std::vector<Rational>& x);

/// Homogeneous sparse linear system. Equations are collected first, then the
/// solution space is computed exactly. A modular pre-pass discards rows that
/// are dependent modulo a large prime; every stored equation is re-checked
/// over Q afterwards, so the result is exact regardless of the prime.
class SparseSystem {
public:
  using Term = std::pair<std::size_t, Rational>;

  explicit SparseSystem(std::size_t unknowns) : unknowns_(unknowns) {}

  std::size_t unknowns() const noexcept { return unknowns_; }
  std::size_t equations() const noexcept { return rows_.size(); }

  /// Adds the equation sum(coef * x[idx]) = 0. Empty equations are ignored.
  void add(std::vector<Term> row);

  /// Basis of the solution space, one column per basis vector.
  QMatrix solve() const;

private:
  std::size_t unknowns_;
  std::vector<std::vector<Term>> rows_;
};

} // namespace linalg
} // namespace flagiso
