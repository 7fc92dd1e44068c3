#pragma once

// Exact linear algebra over Q and Z on Eigen dense types.

#include "bquant/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace bquant {

template <typename Field>
struct RowEchelon {
  MatrixX<Field> matrix;      // reduced row echelon form
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Exact for field scalars such as Rational.
template <typename Field>
RowEchelon<Field> reduced_row_echelon(MatrixX<Field> m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Field lead = m(row, col);
    for (Index c = col; c < m.cols(); ++c) m(row, c) /= lead;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Field factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename Field>
Index rank(const MatrixX<Field>& m) {
  return static_cast<Index>(reduced_row_echelon(m).pivots.size());
}

/// Basis of the right null space, one column per free variable of the RREF.
template <typename Field>
MatrixX<Field> nullspace(const MatrixX<Field>& m) {
  const auto rref = reduced_row_echelon(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : rref.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Index> free;
  for (Index c = 0; c < n; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);

  MatrixX<Field> basis = MatrixX<Field>::Zero(n, static_cast<Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Index f = free[k];
    basis(f, static_cast<Index>(k)) = Field(1);
    for (std::size_t r = 0; r < rref.pivots.size(); ++r)
      basis(rref.pivots[r], static_cast<Index>(k)) = -rref.matrix(static_cast<Index>(r), f);
  }
  return basis;
}

/// Solution of a x = b when it exists and is unique.
template <typename Field>
std::optional<VectorX<Field>> solve_unique(const MatrixX<Field>& a, const VectorX<Field>& b) {
  const Index n = a.cols();
  MatrixX<Field> augmented(a.rows(), n + 1);
  augmented.leftCols(n) = a;
  augmented.col(n) = b;
  const auto rref = reduced_row_echelon(std::move(augmented));
  // A pivot in the last column means the system is inconsistent.
  if (static_cast<Index>(rref.pivots.size()) != n || (n > 0 && rref.pivots.back() == n)) return std::nullopt;
  VectorX<Field> x(n);
  for (Index r = 0; r < n; ++r) x(r) = rref.matrix(r, n);
  return x;
}

/// Fraction-free determinant (Bareiss); exact over integral domains.
template <typename Ring>
Ring determinant(MatrixX<Ring> m) {
  const Index n = m.rows();
  if (n == 0) return Ring(1);
  Ring sign(1);
  Ring previous(1);
  for (Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Ring(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// gcd of the entries, nonnegative; zero for the zero vector.
Integer content(const IntVector& v);

bool is_primitive(const IntVector& v);

/// v divided by its content. The zero vector is returned unchanged.
IntVector primitive(const IntVector& v);

/// The primitive integer vector on the ray spanned by v (positive multiple).
IntVector primitive_direction(const RatVector& v);

/// Row-style Hermite normal form: rows spanning the same lattice, zero rows
/// dropped, each pivot positive, entries above a pivot reduced into
/// [0, pivot).
IntMatrix hermite_normal_form(IntMatrix rows);

/// Z-basis (as HNF rows) of { y in Z^n : <a, y> = 0 }.
IntMatrix integer_kernel_basis(const IntVector& a);

/// Inverse of a square integer matrix when it is unimodular.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

}  // namespace bquant
