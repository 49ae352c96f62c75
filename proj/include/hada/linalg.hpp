#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hada/rational.hpp"

namespace hada {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
  static Matrix from_integer_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct Echelon {
  Matrix reduced;                    // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination with columns scanned left to right.
Echelon reduced_row_echelon(Matrix m);

std::size_t rank(const Matrix& m);

/// Canonical basis of the right kernel {v : m v = 0}: one vector per free
/// column f of the reduced echelon form, with v[f] = 1 and zero on the other
/// free columns. The basis depends only on the row space of m, so two
/// matrices with the same row space yield identical bases.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

Rational determinant(Matrix m);

/// Incrementally built row space of integer vectors, kept in echelon form.
/// Elimination is fraction-free with content removal after every step.
class IntegerRowSpace {
 public:
  explicit IntegerRowSpace(std::size_t cols) : cols_(cols) {}

  /// Returns true when the vector was independent of the rows already held.
  bool insert(std::vector<Integer> v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<Integer> values;
  };
  std::size_t cols_;
  std::vector<Row> rows_;  // sorted by pivot
};

}  // namespace hada
