#pragma once

#include "entbound/state.hpp"
#include "entbound/types.hpp"

namespace entbound {

/// Label (k, l) of a generalized Bell state, 0 <= k, l < d.
struct BellIndex {
  int k = 0;
  int l = 0;
  friend bool operator==(const BellIndex&, const BellIndex&) = default;
};

/// d x d grid of mixing weights over the Bell projectors. Unphysical grids
/// (negative weights, off trace) are representable; physicality is a query.
struct BellSpectrum {
  int d = 0;
  RMatrix lambda;  ///< lambda(k, l)

  static BellSpectrum uniform(int d);
};

/// Parameters of the single-direction family: weight gamma on P_00,
/// alpha on P_10, beta on P_20, remainder spread uniformly.
struct LineParams {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
};

/// Parameters of the two-direction family: weight gamma on P_00,
/// alpha on P_10, beta on P_01.
struct BeyondLineParams {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
};

/// Weyl unitary W_kl = sum_s exp(2*pi*i*s*k/d) |s><(s+l) mod d|.
CMatrix weyl(int d, int k, int l);

/// Generalized Bell state |Omega_kl> = d^{-1/2} sum_s exp(2*pi*i*s*k/d) |s>|(s+l) mod d>.
PureState bell_state(int d, int k, int l);

/// Projector |Omega_kl><Omega_kl|.
CMatrix bell_projector(int d, int k, int l);

/// rho = sum_kl lambda_kl P_kl. Throws NotPhysical for spectra failing
/// spectrum_is_physical.
BipartiteDensity bell_diagonal(const BellSpectrum& spec,
                               const Tolerances& tol = default_tolerances());

BellSpectrum line_spectrum(const LineParams& p, int d = 3);
BellSpectrum beyond_line_spectrum(const BeyondLineParams& p, int d = 3);

/// True iff min lambda >= -phys_tol and the weights sum to 1 within trace_tol.
bool spectrum_is_physical(const BellSpectrum& spec, const Tolerances& tol = default_tolerances());

/// Index of the largest weight; ties resolved lexicographically by (k, l).
/// Throws NotPhysical on unphysical spectra.
BellIndex dominant_index(const BellSpectrum& spec, const Tolerances& tol = default_tolerances());

}  // namespace entbound
