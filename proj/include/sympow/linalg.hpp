#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sympow/polynomial.hpp"

namespace sympow {

/// Dense row-major matrix over a field.
class Matrix {
 public:
  Matrix(FieldHandle field, std::size_t rows, std::size_t cols);

  FieldHandle field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;

 private:
  FieldHandle field_;
  std::size_t rows_, cols_;
  std::vector<FieldElement> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Some x with A x = b, or nothing when inconsistent.
std::optional<std::vector<FieldElement>> solve(const Matrix& a, std::span<const FieldElement> b);
/// Basis of { x : A x = 0 }.
std::vector<std::vector<FieldElement>> kernel(const Matrix& a);

/// Column j holds the coefficients of polys[j] on `basis` (one row per
/// basis monomial). Terms outside the basis are rejected.
Matrix coefficient_matrix(std::span<const Polynomial> polys, std::span<const Monomial> basis);

}  // namespace sympow
