#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "graphreal/field.hpp"

namespace graphreal {

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  /// Builds from nested rows; every row must have `cols` entries in [0, q).
  static Matrix from_rows(Field field, std::size_t cols,
                          const std::vector<std::vector<std::uint64_t>>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Element operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Element> values);
  void truncate_rows(std::size_t count);
  void swap_rows(std::size_t a, std::size_t b);

  Matrix select_columns(std::span<const std::size_t> columns) const;
  Matrix transpose() const;

  std::vector<std::vector<std::uint64_t>> to_rows() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// Reduces `m` to reduced row-echelon form in place, dropping zero rows.
/// Pivots are chosen at the lowest available column. Returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Basis, in RREF, of {x : m * x^T = 0}. Result has m.cols() columns.
Matrix nullspace(const Matrix& m);

/// row_vector * m, for row_vector of length m.rows().
std::vector<Element> left_multiply(std::span<const Element> row_vector, const Matrix& m);

/// a * b.
Matrix multiply(const Matrix& a, const Matrix& b);

}  // namespace graphreal
