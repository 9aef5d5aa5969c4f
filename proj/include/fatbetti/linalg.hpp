#pragma once

// Exact elimination over ModP or Rational scalars. All routines take any
// Eigen expression and work on a private copy.

#include "fatbetti/field.hpp"

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace fatbetti {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct EchelonForm {
  DenseMatrix<Scalar> rows;            // rank x cols, reduced
  std::vector<Eigen::Index> pivots;    // pivot column of each row, increasing

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

namespace detail {

template <typename Scalar>
Eigen::Index find_pivot(const DenseMatrix<Scalar>& a, Eigen::Index from, Eigen::Index col) {
  for (Eigen::Index r = from; r < a.rows(); ++r)
    if (!is_zero(a(r, col))) return r;
  return -1;
}

}  // namespace detail

/// Rank by forward Gaussian elimination.
template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> a = m;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index p = detail::find_pivot(a, r, c);
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, c))) continue;
      const Scalar f = a(i, c) * inv;
      for (Eigen::Index j = c; j < a.cols(); ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

/// Reduced row echelon form with zero rows dropped.
template <typename Derived>
EchelonForm<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> a = m;
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index p = detail::find_pivot(a, r, c);
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index j = c; j < a.cols(); ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {a.topRows(r), std::move(pivots)};
}

/// Basis of the right kernel {v : m v = 0}, one basis vector per row.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const auto ech = reduced_row_echelon(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  DenseMatrix<Scalar> basis(cols - ech.rank(), cols);
  basis.setZero();
  Eigen::Index k = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(k, f) = Scalar(1);
    for (Eigen::Index r = 0; r < ech.rank(); ++r) basis(k, ech.pivots[r]) = -ech.rows(r, f);
    ++k;
  }
  return basis;
}

}  // namespace fatbetti
