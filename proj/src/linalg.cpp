#include "sympow/linalg.hpp"

#include <unordered_map>

namespace sympow {

Matrix::Matrix(FieldHandle field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field->zero()) {}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RowEchelon row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    FieldElement inv = m.at(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      FieldElement factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivot_columns.size(); }

std::optional<std::vector<FieldElement>> solve(const Matrix& a, std::span<const FieldElement> b) {
  if (b.size() != a.rows()) throw AlgebraError("right-hand side has the wrong length");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  RowEchelon e = row_reduce(std::move(aug));
  std::vector<FieldElement> x(a.cols(), a.field()->zero());
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
    std::size_t col = e.pivot_columns[i];
    if (col == a.cols()) return std::nullopt;
    x[col] = e.reduced.at(i, a.cols());
  }
  return x;
}

std::vector<std::vector<FieldElement>> kernel(const Matrix& a) {
  RowEchelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> out;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(a.cols(), a.field()->zero());
    v[free] = a.field()->one();
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i)
      v[e.pivot_columns[i]] = -e.reduced.at(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

Matrix coefficient_matrix(std::span<const Polynomial> polys, std::span<const Monomial> basis) {
  if (polys.empty()) throw AlgebraError("coefficient matrix of no polynomials");
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  Matrix m(polys.front().field(), basis.size(), polys.size());
  for (std::size_t j = 0; j < polys.size(); ++j)
    for (const Term& t : polys[j].terms()) {
      auto it = index.find(t.mon);
      if (it == index.end()) throw AlgebraError("term outside the coefficient basis");
      m.at(it->second, j) = t.coef;
    }
  return m;
}

}  // namespace sympow
