#include "entbound/bell.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

namespace entbound {

namespace {

void check_bell_index(int d, int k, int l) {
  if (d < 2) fail(Errc::BadDims, "bell: dimension must be >= 2");
  if (k < 0 || k >= d || l < 0 || l >= d)
    fail(Errc::IndexOutOfRange, "bell index (" + std::to_string(k) + "," + std::to_string(l) +
                                    ") outside [0," + std::to_string(d) + ")");
}

Complex phase(int d, long s_times_k) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(s_times_k) / d;
  return Complex(std::cos(angle), std::sin(angle));
}

// Scans sum the same d^2 projectors for every grid cell; cache them per d.
const std::vector<CMatrix>& cached_projectors(int d) {
  static std::mutex mutex;
  static std::map<int, std::vector<CMatrix>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& projectors = cache[d];
  if (projectors.empty()) {
    projectors.reserve(d * d);
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) projectors.push_back(bell_projector(d, k, l));
  }
  return projectors;
}

}  // namespace

BellSpectrum BellSpectrum::uniform(int d) {
  return BellSpectrum{d, RMatrix::Constant(d, d, 1.0 / (d * d))};
}

CMatrix weyl(int d, int k, int l) {
  check_bell_index(d, k, l);
  CMatrix w = CMatrix::Zero(d, d);
  for (int s = 0; s < d; ++s) w(s, (s + l) % d) = phase(d, static_cast<long>(s) * k);
  return w;
}

PureState bell_state(int d, int k, int l) {
  check_bell_index(d, k, l);
  CVector amps = CVector::Zero(d * d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int s = 0; s < d; ++s)
    amps(product_index(s, (s + l) % d, d)) = scale * phase(d, static_cast<long>(s) * k);
  return PureState(d, d, std::move(amps));
}

CMatrix bell_projector(int d, int k, int l) {
  const PureState state = bell_state(d, k, l);
  const CVector& v = state.amplitudes();
  return v * v.adjoint();
}

BipartiteDensity bell_diagonal(const BellSpectrum& spec, const Tolerances& tol) {
  if (!spectrum_is_physical(spec, tol))
    fail(Errc::NotPhysical, "bell_diagonal: weights are negative or do not sum to 1");
  const int d = spec.d;
  const std::vector<CMatrix>& projectors = cached_projectors(d);
  CMatrix rho = CMatrix::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      if (spec.lambda(k, l) != 0.0) rho += spec.lambda(k, l) * projectors[k * d + l];
  return density_from_matrix(rho, d, d, tol);
}

BellSpectrum line_spectrum(const LineParams& p, int d) {
  if (d < 3) fail(Errc::BadDims, "line_spectrum: needs d >= 3");
  BellSpectrum spec{d, RMatrix::Constant(d, d, (1.0 - p.alpha - p.beta - p.gamma) / (d * d))};
  spec.lambda(0, 0) += p.gamma;
  spec.lambda(1, 0) += p.alpha;
  spec.lambda(2, 0) += p.beta;
  return spec;
}

BellSpectrum beyond_line_spectrum(const BeyondLineParams& p, int d) {
  if (d < 2) fail(Errc::BadDims, "beyond_line_spectrum: needs d >= 2");
  BellSpectrum spec{d, RMatrix::Constant(d, d, (1.0 - p.alpha - p.beta - p.gamma) / (d * d))};
  spec.lambda(0, 0) += p.gamma;
  spec.lambda(1, 0) += p.alpha;
  spec.lambda(0, 1) += p.beta;
  return spec;
}

bool spectrum_is_physical(const BellSpectrum& spec, const Tolerances& tol) {
  if (spec.d < 2 || spec.lambda.rows() != spec.d || spec.lambda.cols() != spec.d) return false;
  if (!spec.lambda.allFinite()) return false;
  return spec.lambda.minCoeff() >= -tol.phys && std::abs(spec.lambda.sum() - 1.0) <= tol.trace;
}

BellIndex dominant_index(const BellSpectrum& spec, const Tolerances& tol) {
  if (!spectrum_is_physical(spec, tol))
    fail(Errc::NotPhysical, "dominant_index: spectrum is not physical");
  BellIndex best{0, 0};
  double max = spec.lambda(0, 0);
  for (int k = 0; k < spec.d; ++k)
    for (int l = 0; l < spec.d; ++l)
      if (spec.lambda(k, l) > max) {
        max = spec.lambda(k, l);
        best = BellIndex{k, l};
      }
  return best;
}

}  // namespace entbound
