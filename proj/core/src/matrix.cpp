#include "graphreal/matrix.hpp"

#include <algorithm>
#include <string>

#include "graphreal/error.hpp"

namespace graphreal {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(Field field, std::size_t cols,
                         const std::vector<std::vector<std::uint64_t>>& rows) {
  Matrix m(field, 0, cols);
  std::vector<Element> buffer(cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ValidationError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                            " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (!field.contains(rows[r][c])) {
        throw ValidationError("entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " +
                              std::to_string(rows[r][c]) + " is not an element of GF(" +
                              std::to_string(field.order()) + ")");
      }
      buffer[c] = static_cast<Element>(rows[r][c]);
    }
    m.append_row(buffer);
  }
  return m;
}

void Matrix::append_row(std::span<const Element> values) {
  if (values.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::truncate_rows(std::size_t count) {
  if (count >= rows_) return;
  rows_ = count;
  data_.resize(rows_ * cols_);
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

Matrix Matrix::select_columns(std::span<const std::size_t> columns) const {
  Matrix out(field_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < columns.size(); ++j) out(r, j) = (*this)(r, columns[j]);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> Matrix::to_rows() const {
  std::vector<std::vector<std::uint64_t>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  const Field f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pick = lead;
    while (pick < m.rows() && m(pick, col) == 0) ++pick;
    if (pick == m.rows()) continue;
    m.swap_rows(lead, pick);
    const Element scale = f.inv(m(lead, col));
    if (scale != 1) {
      for (auto& x : m.row(lead)) x = f.mul(x, scale);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      const Element factor = m(r, col);
      if (factor == 0) continue;
      auto target = m.row(r);
      auto source = m.row(lead);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (source[c] != 0) target[c] = f.sub(target[c], f.mul(factor, source[c]));
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  m.truncate_rows(lead);
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

Matrix nullspace(const Matrix& m) {
  const Field f = m.field();
  Matrix reduced = m;
  const auto pivots = row_reduce(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  Matrix basis(f, 0, m.cols());
  std::vector<Element> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(reduced(r, free));
    basis.append_row(v);
  }
  row_reduce(basis);
  return basis;
}

std::vector<Element> left_multiply(std::span<const Element> row_vector, const Matrix& m) {
  const Field f = m.field();
  std::vector<Element> out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const Element a = row_vector[r];
    if (a == 0) continue;
    auto src = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (src[c] != 0) out[c] = f.add(out[c], f.mul(a, src[c]));
    }
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  Matrix out(a.field(), 0, b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.append_row(left_multiply(a.row(r), b));
  return out;
}

}  // namespace graphreal
