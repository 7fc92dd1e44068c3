#include "bquant/lattice.hpp"

namespace bquant {

Integer content(const IntVector& v) {
  Integer g(0);
  for (Index i = 0; i < v.size(); ++i) g = mp::gcd(g, Integer(mp::abs(v(i))));
  return g;
}

bool is_primitive(const IntVector& v) { return content(v) == 1; }

IntVector primitive(const IntVector& v) {
  const Integer g = content(v);
  if (g <= 1) return v;
  IntVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = v(i) / g;
  return out;
}

IntVector primitive_direction(const RatVector& v) {
  Integer common(1);
  for (Index i = 0; i < v.size(); ++i) common = mp::lcm(common, Integer(mp::denominator(v(i))));
  IntVector scaled(v.size());
  for (Index i = 0; i < v.size(); ++i)
    scaled(i) = mp::numerator(v(i)) * (common / mp::denominator(v(i)));
  return primitive(scaled);
}

IntMatrix hermite_normal_form(IntMatrix m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  Index r = 0;
  std::vector<Index> pivots;
  for (Index c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r.., leaving one nonzero entry at row r.
    while (true) {
      Index best = -1;
      for (Index i = r; i < rows; ++i) {
        if (m(i, c) != 0 && (best < 0 || mp::abs(m(i, c)) < mp::abs(m(best, c)))) best = i;
      }
      if (best < 0) break;
      if (best != r) m.row(best).swap(m.row(r));
      bool done = true;
      for (Index i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        const Integer q = m(i, c) / m(r, c);
        for (Index k = c; k < cols; ++k) m(i, k) -= q * m(r, k);
        if (m(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) {
      for (Index k = c; k < cols; ++k) m(r, k) = -m(r, k);
    }
    for (Index i = 0; i < r; ++i) {
      // floor division keeps the reduced entry in [0, pivot)
      Integer q = m(i, c) / m(r, c);
      if (m(i, c) % m(r, c) != 0 && m(i, c) < 0) q -= 1;
      if (q != 0)
        for (Index k = c; k < cols; ++k) m(i, k) -= q * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return m.topRows(r);
}

IntMatrix integer_kernel_basis(const IntVector& a) {
  const Index n = a.size();
  IntMatrix unimodular = IntMatrix::Identity(n, n);
  IntVector work = a;
  // Column operations bring `work` to (g, 0, ..., 0); the same operations on
  // the identity leave a kernel basis in columns 1..n-1.
  while (true) {
    Index best = -1;
    for (Index i = 0; i < n; ++i) {
      if (work(i) != 0 && (best < 0 || mp::abs(work(i)) < mp::abs(work(best)))) best = i;
    }
    if (best < 0) break;
    if (best != 0) {
      std::swap(work(0), work(best));
      unimodular.col(0).swap(unimodular.col(best));
    }
    bool done = true;
    for (Index i = 1; i < n; ++i) {
      if (work(i) == 0) continue;
      const Integer q = work(i) / work(0);
      work(i) -= q * work(0);
      for (Index k = 0; k < n; ++k) unimodular(k, i) -= q * unimodular(k, 0);
      if (work(i) != 0) done = false;
    }
    if (done) break;
  }
  if (n == 0) return IntMatrix(0, 0);
  const bool zero = (work.array() == Integer(0)).all();
  IntMatrix kernel = zero ? IntMatrix(unimodular.transpose())
                          : IntMatrix(unimodular.rightCols(n - 1).transpose());
  return hermite_normal_form(std::move(kernel));
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Integer det = determinant<Integer>(m);
  if (det != 1 && det != -1) return std::nullopt;
  const Index n = m.rows();
  RatMatrix augmented(n, 2 * n);
  augmented.leftCols(n) = m.cast<Rational>();
  augmented.rightCols(n) = RatMatrix::Identity(n, n);
  const auto rref = reduced_row_echelon(std::move(augmented));
  IntMatrix inverse(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) inverse(i, j) = mp::numerator(rref.matrix(i, n + j));
  return inverse;
}

}  // namespace bquant
