#pragma once

#include <complex>

#include <Eigen/Dense>

namespace entbound {

using Real = double;
using Complex = std::complex<Real>;

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Validation and detection thresholds used across the library.
///
/// Defaults are sized for double-precision dense solves on matrices up to a
/// few hundred rows, where eigendecompositions are accurate to ~1e-13.
struct Tolerances {
  double herm = 1e-9;     ///< Hermiticity defect allowed in inputs.
  double trace = 1e-9;    ///< Unit-trace defect allowed in density matrices.
  double norm = 1e-9;     ///< Unit-norm defect allowed in pure states.
  double psd = 1e-10;     ///< Most negative eigenvalue a density may carry.
  double phys = 1e-12;    ///< Most negative Bell weight treated as physical.
  double ppt = 1e-10;     ///< Negativity below this counts as PPT.
  double detect = 1e-10;  ///< Concurrence bound above this counts as detected.
  double ortho = 1e-9;    ///< Eigenbasis orthonormality defect.
  double recon = 1e-9;    ///< Spectral reconstruction defect.
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

/// Flat index of |a>|b> in the product basis, first subsystem major.
constexpr int product_index(int a, int b, int dim_b) { return a * dim_b + b; }

}  // namespace entbound
