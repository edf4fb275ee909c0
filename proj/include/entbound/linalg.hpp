#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

#include "entbound/errors.hpp"
#include "entbound/types.hpp"

namespace entbound {

/// Largest absolute deviation of m from its own adjoint.
template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Transpose of the second tensor factor: out[(i,k),(j,l)] = m[(i,l),(j,k)].
/// Product basis is first-subsystem major, index = a*dim_b + b.
template <typename Derived>
typename Derived::PlainObject partial_transpose(const Eigen::MatrixBase<Derived>& m, int dim_a,
                                                int dim_b) {
  const int side = dim_a * dim_b;
  if (m.rows() != side || m.cols() != side)
    fail(Errc::BadDims, "partial_transpose: matrix side does not match dim_a*dim_b");
  typename Derived::PlainObject out(side, side);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      for (int k = 0; k < dim_b; ++k)
        for (int l = 0; l < dim_b; ++l)
          out(product_index(i, k, dim_b), product_index(j, l, dim_b)) =
              m(product_index(i, l, dim_b), product_index(j, k, dim_b));
  return out;
}

/// Reduced matrix on the first tensor factor.
template <typename Derived>
typename Derived::PlainObject trace_out_second(const Eigen::MatrixBase<Derived>& m, int dim_a,
                                               int dim_b) {
  typename Derived::PlainObject out = Derived::PlainObject::Zero(dim_a, dim_a);
  for (int i = 0; i < dim_a; ++i)
    for (int j = 0; j < dim_a; ++j)
      for (int b = 0; b < dim_b; ++b)
        out(i, j) += m(product_index(i, b, dim_b), product_index(j, b, dim_b));
  return out;
}

/// Reduced matrix on the second tensor factor.
template <typename Derived>
typename Derived::PlainObject trace_out_first(const Eigen::MatrixBase<Derived>& m, int dim_a,
                                              int dim_b) {
  typename Derived::PlainObject out = Derived::PlainObject::Zero(dim_b, dim_b);
  for (int k = 0; k < dim_b; ++k)
    for (int l = 0; l < dim_b; ++l)
      for (int a = 0; a < dim_a; ++a)
        out(k, l) += m(product_index(a, k, dim_b), product_index(a, l, dim_b));
  return out;
}

/// Singular values of an arbitrary finite matrix, sorted descending.
template <typename Derived>
RVector singular_values(const Eigen::MatrixBase<Derived>& m) {
  Eigen::JacobiSVD<typename Derived::PlainObject> svd(m.derived());
  if (svd.info() != Eigen::Success) fail(Errc::NoConvergence, "singular value decomposition failed");
  return svd.singularValues();
}

/// Trace norm (sum of singular values).
template <typename Derived>
double trace_norm(const Eigen::MatrixBase<Derived>& m) {
  return singular_values(m).sum();
}

/// Eigendecomposition of a Hermitian matrix with a reproducible ordering:
/// eigenvalues descending, ties broken by the ascending index of the first
/// nonzero eigenvector component, and each eigenvector phase-fixed so that
/// component is real positive.
struct Spectrum {
  RVector eigenvalues;   ///< descending
  CMatrix eigenvectors;  ///< columns, same order
};

Spectrum hermitian_spectrum(const Eigen::Ref<const CMatrix>& mat,
                            const Tolerances& tol = default_tolerances());

/// Eigenvalues of a Hermitian matrix, ascending (no vectors, no reordering).
RVector hermitian_eigenvalues(const Eigen::Ref<const CMatrix>& mat);

}  // namespace entbound
