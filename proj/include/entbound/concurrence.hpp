#pragma once

#include <optional>

#include "entbound/bell.hpp"
#include "entbound/state.hpp"
#include "entbound/types.hpp"

namespace entbound {

/// Normalization of the auxiliary vector chi behind the quasi-pure bound.
///
/// ConcurrenceNormalized divides the antisymmetrized anchor by its own
/// concurrence, which calibrates the bound to be exact on pure states.
/// UnitChi keeps a unit vector; every singular value (and the bound) then
/// comes out a common factor of 2 smaller. The detection predicate
/// (bound > 0) is identical under both.
enum class ChiNorm { ConcurrenceNormalized, UnitChi };

struct QpConfig {
  double rank_tol = 1e-12;  ///< eigenvalues below this are outside the support
  ChiNorm chi_norm = ChiNorm::ConcurrenceNormalized;
};

/// Metadata of the dominant eigenvector anchoring the bound. For the generic
/// path `index` is the position in the deterministic spectral ordering (0);
/// for the Bell-diagonal path it is the flattened Bell label n*d + m.
struct DominantInfo {
  double eigenvalue = 0.0;
  int index = 0;
};

/// Quasi-pure concurrence bound plus the singular values behind it.
struct QpReport {
  double value = 0.0;      ///< max(0, S_0 - sum_{i>0} S_i)
  RVector singulars;       ///< descending
  DominantInfo dominant;
  int rank = 0;            ///< numerical rank of rho used
  bool degenerate_chi = false;  ///< anchor was a product state; bound carries no information
};

/// Applies the two-copy antisymmetrization operator (four times the tensor
/// product of the antisymmetric projectors on the doubled subsystem spaces)
/// to a vector on H_A (x) H_B (x) H_A (x) H_B.
CVector apply_antisym_pair(const CVector& x, int dim_a, int dim_b);

/// Squared pure-state concurrence 2(1 - Tr rho_r^2), evaluated as the
/// expectation of the two-copy antisymmetrizer on psi (x) psi.
double pure_concurrence_squared(const PureState& psi);

double pure_concurrence(const PureState& psi);

struct ChiVector {
  CVector vec;              ///< on the doubled space, zero when degenerate
  bool degenerate = false;  ///< anchor concurrence below 1e-12
};

/// Antisymmetrized doubled anchor state, normalized per cfg.chi_norm.
ChiVector chi_vector(const PureState& psi0, const QpConfig& cfg,
                     const Tolerances& tol = default_tolerances());

/// The r x r matrix T_ij = sqrt(mu_i mu_j) <Psi_i (x) Psi_j | chi> over the
/// eigenvectors with mu >= rank_tol, anchored on the dominant eigenvector.
/// Complex symmetric. Throws DegenerateChi when the anchor is a product state.
CMatrix qp_matrix(const BipartiteDensity& rho, const QpConfig& cfg,
                  const Tolerances& tol = default_tolerances());

/// Quasi-pure lower bound on the concurrence of rho (generic spectral path).
QpReport cqp(const BipartiteDensity& rho, const QpConfig& cfg = {},
             const Tolerances& tol = default_tolerances());

/// Closed-form singular value S_kl^{nm} of the quasi-pure construction for a
/// Bell-diagonal state anchored on P_nm:
///   { d/(2(d-1)) * lambda_kl * [ (1 - 2/d) lambda_nm delta_{k,n} delta_{l,m}
///     + (1/d^2) lambda_{(2n-k) mod d, (2m-l) mod d} ] }^{1/2}
/// This closed form carries the UnitChi scale: one global factor of 2 below
/// the generic path under ConcurrenceNormalized.
double bell_singular(const BellSpectrum& spec, BellIndex nm, BellIndex kl,
                     const Tolerances& tol = default_tolerances());

/// Quasi-pure bound for a Bell-diagonal state from the closed-form singular
/// values, anchored on the dominant weight (or on `anchor` when given).
QpReport cqp_bell(const BellSpectrum& spec, std::optional<BellIndex> anchor = std::nullopt,
                  const Tolerances& tol = default_tolerances(), double rank_tol = 1e-12);

/// Exact two-qubit concurrence max(0, nu_1 - nu_2 - nu_3 - nu_4) with nu_i
/// the descending square roots of the eigenvalues of
/// rho (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y).
double wootters_concurrence(const BipartiteDensity& rho);

}  // namespace entbound
