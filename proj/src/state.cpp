#include "entbound/state.hpp"

#include <string>

namespace entbound {

PureState::PureState(int dim_a, int dim_b, CVector amplitudes, const Tolerances& tol)
    : dim_a_(dim_a), dim_b_(dim_b), amps_(std::move(amplitudes)) {
  if (dim_a_ < 1 || dim_b_ < 1) fail(Errc::BadDims, "PureState: dimensions must be positive");
  if (amps_.size() != dim_a_ * dim_b_)
    fail(Errc::BadDims, "PureState: amplitude count " + std::to_string(amps_.size()) +
                            " != " + std::to_string(dim_a_ * dim_b_));
  if (!amps_.allFinite()) fail(Errc::NotNormalized, "PureState: non-finite amplitude");
  if (std::abs(amps_.norm() - 1.0) > tol.norm)
    fail(Errc::NotNormalized, "PureState: norm " + std::to_string(amps_.norm()) + " is not 1");
}

BipartiteDensity density_from_matrix(const CMatrix& mat, int dim_a, int dim_b,
                                     const Tolerances& tol) {
  if (dim_a < 1 || dim_b < 1) fail(Errc::BadDims, "density: dimensions must be positive");
  const int side = dim_a * dim_b;
  if (mat.rows() != mat.cols() || mat.rows() != side)
    fail(Errc::BadDims, "density: matrix is " + std::to_string(mat.rows()) + "x" +
                            std::to_string(mat.cols()) + ", expected side " +
                            std::to_string(side));
  if (!mat.allFinite()) fail(Errc::NotHermitian, "density: non-finite entry");
  if (hermiticity_defect(mat) > tol.herm)
    fail(Errc::NotHermitian, "density: hermiticity defect exceeds tolerance");
  const Complex tr = mat.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol.trace)
    fail(Errc::NotUnitTrace, "density: trace " + std::to_string(tr.real()) + " is not 1");
  const RVector evs = hermitian_eigenvalues(mat);
  if (evs.minCoeff() < -tol.psd)
    fail(Errc::NotPositive,
         "density: smallest eigenvalue " + std::to_string(evs.minCoeff()) + " below -psd_tol");
  return BipartiteDensity(dim_a, dim_b, mat);
}

BipartiteDensity pure_density(const PureState& psi, const Tolerances& tol) {
  const CVector& v = psi.amplitudes();
  CMatrix mat = v * v.adjoint();
  // Normalize the trace exactly so boundary-normalized inputs stay valid.
  mat /= mat.trace().real();
  return density_from_matrix(mat, psi.dim_a(), psi.dim_b(), tol);
}

CMatrix partial_transpose(const BipartiteDensity& rho) {
  return partial_transpose(rho.matrix(), rho.dim_a(), rho.dim_b());
}

CMatrix partial_trace(const BipartiteDensity& rho, Subsystem keep) {
  if (keep == Subsystem::First) return trace_out_second(rho.matrix(), rho.dim_a(), rho.dim_b());
  return trace_out_first(rho.matrix(), rho.dim_a(), rho.dim_b());
}

double purity(const BipartiteDensity& rho) {
  // Tr(rho^2) = ||rho||_F^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

Spectrum hermitian_spectrum(const BipartiteDensity& rho, const Tolerances& tol) {
  return hermitian_spectrum(rho.matrix(), tol);
}

}  // namespace entbound
