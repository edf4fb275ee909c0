#pragma once

#include <complex>
#include <random>

#include "entbound/state.hpp"
#include "entbound/types.hpp"

namespace entbound::test {

inline std::mt19937_64 seeded_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline CVector random_unit_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  return v / v.norm();
}

inline PureState random_pure_state(std::mt19937_64& rng, int dim_a, int dim_b) {
  return PureState(dim_a, dim_b, random_unit_vector(rng, dim_a * dim_b));
}

inline CMatrix random_hermitian(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  return (m + m.adjoint()) / 2.0;
}

inline CMatrix random_complex_matrix(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  return m;
}

// Test-local Ginibre density, independent of the sampling module.
inline BipartiteDensity random_density(std::mt19937_64& rng, int dim_a, int dim_b) {
  CMatrix g = random_complex_matrix(rng, dim_a * dim_b);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return density_from_matrix(rho, dim_a, dim_b);
}

// Reduced state on the first subsystem by explicit summation; serves as the
// independent oracle for the reduced-purity identity.
inline CMatrix reduced_first_oracle(const PureState& psi) {
  const int m = psi.dim_a(), n = psi.dim_b();
  CMatrix out = CMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int b = 0; b < n; ++b) out(i, j) += psi.amp(i, b) * std::conj(psi.amp(j, b));
  return out;
}

inline double reduced_purity_oracle(const PureState& psi) {
  const CMatrix r = reduced_first_oracle(psi);
  return (r * r).trace().real();
}

}  // namespace entbound::test
