#pragma once

// Exact dense linear algebra over Eigen matrices with an exact scalar
// (Rational, or BigInt for determinants). Eigen's own decompositions pivot on
// magnitude and assume rounding; everything here is plain exact elimination.

#include <optional>
#include <utility>

#include <Eigen/Core>

namespace quasidim {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

// Fraction-free (Bareiss) forward elimination on the first `pivot_cols`
// columns of m, in place. Returns the sign of the row permutation, or 0 if a
// zero column was met (singular leading block).
template <typename Scalar>
int bareiss_eliminate(MatrixX<Scalar>& m, Eigen::Index pivot_cols) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar previous(1);
  int sign = 1;
  for (Eigen::Index k = 0; k < pivot_cols; ++k) {
    Eigen::Index pivot = k;
    while (pivot < rows && m(pivot, k) == Scalar(0)) ++pivot;
    if (pivot == rows) return 0;
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < rows; ++i) {
      for (Eigen::Index j = k + 1; j < cols; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / previous;
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  return sign;
}

}  // namespace detail

/// Exact determinant by Bareiss elimination. Works for any integral domain
/// scalar since every division is exact.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(a.rows() == a.cols());
  if (a.rows() == 0) return Scalar(1);
  MatrixX<Scalar> m = a;
  const int sign = detail::bareiss_eliminate(m, m.cols());
  if (sign == 0) return Scalar(0);
  Scalar det = m(m.rows() - 1, m.cols() - 1);
  return sign < 0 ? Scalar(-det) : det;
}

/// Solves the square system a x = b exactly; std::nullopt when a is singular.
template <typename DerivedA, typename DerivedB>
std::optional<VectorX<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                        const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.rows();
  eigen_assert(a.cols() == n && b.rows() == n);
  MatrixX<Scalar> m(n, n + 1);
  m.leftCols(n) = a;
  m.col(n) = b;
  if (detail::bareiss_eliminate(m, n) == 0) return std::nullopt;
  VectorX<Scalar> x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Scalar acc = m(i, n);
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= m(i, j) * x(j);
    x(i) = acc / m(i, i);
  }
  return x;
}

/// Rank over the scalar's field of fractions (Scalar must support exact /).
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = a;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index pivot = r;
    while (pivot < m.rows() && m(pivot, c) == Scalar(0)) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(r).swap(m.row(pivot));
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == Scalar(0)) continue;
      const Scalar factor = m(i, c) / m(r, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace quasidim
