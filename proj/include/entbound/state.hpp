#pragma once

#include "entbound/linalg.hpp"
#include "entbound/types.hpp"

namespace entbound {

enum class Subsystem { First, Second };

/// Unit vector on a dim_a x dim_b bipartite space.
class PureState {
 public:
  PureState(int dim_a, int dim_b, CVector amplitudes,
            const Tolerances& tol = default_tolerances());

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return dim_a_ * dim_b_; }
  const CVector& amplitudes() const { return amps_; }

  /// Amplitude of |a>|b>.
  Complex amp(int a, int b) const { return amps_(product_index(a, b, dim_b_)); }

 private:
  int dim_a_;
  int dim_b_;
  CVector amps_;
};

/// Validated density matrix on a dim_a x dim_b bipartite space:
/// Hermitian, unit trace, positive semidefinite within tolerances.
class BipartiteDensity {
 public:
  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return dim_a_ * dim_b_; }
  const CMatrix& matrix() const { return mat_; }

  friend BipartiteDensity density_from_matrix(const CMatrix& mat, int dim_a, int dim_b,
                                              const Tolerances& tol);

 private:
  BipartiteDensity(int dim_a, int dim_b, CMatrix mat)
      : dim_a_(dim_a), dim_b_(dim_b), mat_(std::move(mat)) {}

  int dim_a_;
  int dim_b_;
  CMatrix mat_;
};

/// Validates mat as a density matrix on the declared bipartition.
/// Throws BadDims, NotHermitian, NotUnitTrace or NotPositive.
BipartiteDensity density_from_matrix(const CMatrix& mat, int dim_a, int dim_b,
                                     const Tolerances& tol = default_tolerances());

/// Projector |psi><psi| as a validated density.
BipartiteDensity pure_density(const PureState& psi, const Tolerances& tol = default_tolerances());

CMatrix partial_transpose(const BipartiteDensity& rho);
CMatrix partial_trace(const BipartiteDensity& rho, Subsystem keep);

/// Tr(rho^2), in [1/(dim_a*dim_b), 1].
double purity(const BipartiteDensity& rho);

Spectrum hermitian_spectrum(const BipartiteDensity& rho,
                            const Tolerances& tol = default_tolerances());

}  // namespace entbound
