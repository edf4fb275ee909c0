#include "entbound/classify.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace entbound {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ClassLabel unphysical_label() { return ClassLabel{StateClass::Unphysical, kNaN, kNaN}; }

ClassLabel decide(double neg, double cqp_value, const Tolerances& tol) {
  if (neg > tol.ppt) return ClassLabel{StateClass::NptEntangled, cqp_value, neg};
  if (cqp_value > tol.detect) return ClassLabel{StateClass::BoundEntangled, cqp_value, neg};
  return ClassLabel{StateClass::Undetected, cqp_value, neg};
}

}  // namespace

const char* to_string(StateClass tag) {
  switch (tag) {
    case StateClass::Unphysical: return "Unphysical";
    case StateClass::NptEntangled: return "NptEntangled";
    case StateClass::BoundEntangled: return "BoundEntangled";
    case StateClass::Undetected: return "Undetected";
  }
  return "Unknown";
}

std::optional<StateClass> state_class_from_string(const std::string& s) {
  if (s == "Unphysical") return StateClass::Unphysical;
  if (s == "NptEntangled") return StateClass::NptEntangled;
  if (s == "BoundEntangled") return StateClass::BoundEntangled;
  if (s == "Undetected") return StateClass::Undetected;
  return std::nullopt;
}

double negativity(const BipartiteDensity& rho) {
  return std::max(0.0, (trace_norm(partial_transpose(rho)) - 1.0) / 2.0);
}

bool is_ppt(const BipartiteDensity& rho, const Tolerances& tol) {
  return hermitian_eigenvalues(partial_transpose(rho)).minCoeff() >= -tol.ppt;
}

std::optional<std::pair<double, double>> beta_ent(double alpha, double gamma) {
  if (alpha < 0) fail(Errc::NegativeAlpha, "beta_ent: defined for alpha >= 0");
  const double radicand = 1.0 + 6.0 * alpha - 39.0 * alpha * alpha + 30.0 * gamma -
                          102.0 * alpha * gamma + 33.0 * gamma * gamma;
  if (radicand < 0) return std::nullopt;
  const double mid = 5.0 - 17.0 * alpha + 19.0 * gamma;
  const double span = 3.0 * std::sqrt(radicand);
  return std::make_pair((mid - span) / 8.0, (mid + span) / 8.0);
}

std::optional<std::pair<double, double>> beta_ppt(double alpha, double gamma) {
  if (alpha < 0) fail(Errc::NegativeAlpha, "beta_ppt: defined for alpha >= 0");
  const double radicand = 4.0 - 12.0 * alpha - 15.0 * alpha * alpha - 12.0 * gamma +
                          66.0 * alpha * gamma - 15.0 * gamma * gamma;
  if (radicand < 0) return std::nullopt;
  const double mid = -2.0 + 11.0 * alpha + 11.0 * gamma;
  const double span = 3.0 * std::sqrt(radicand);
  return std::make_pair((mid - span) / 16.0, (mid + span) / 16.0);
}

ClassLabel classify(const CMatrix& mat, int dim_a, int dim_b, const QpConfig& cfg,
                    const Tolerances& tol) {
  try {
    return classify(density_from_matrix(mat, dim_a, dim_b, tol), cfg, tol);
  } catch (const Error&) {
    return unphysical_label();
  }
}

ClassLabel classify(const BipartiteDensity& rho, const QpConfig& cfg, const Tolerances& tol) {
  return decide(negativity(rho), cqp(rho, cfg, tol).value, tol);
}

ClassLabel classify_spectrum(const BellSpectrum& spec, const QpConfig& cfg, CqpPath path,
                             const Tolerances& tol) {
  if (!spectrum_is_physical(spec, tol)) return unphysical_label();
  const BipartiteDensity rho = bell_diagonal(spec, tol);
  const double value = path == CqpPath::Analytic ? cqp_bell(spec, std::nullopt, tol).value
                                                 : cqp(rho, cfg, tol).value;
  return decide(negativity(rho), value, tol);
}

ClassLabel classify_line(const LineParams& p, const QpConfig& cfg, CqpPath path, int d,
                         const Tolerances& tol) {
  return classify_spectrum(line_spectrum(p, d), cfg, path, tol);
}

ClassLabel classify_beyond_line(const BeyondLineParams& p, const QpConfig& cfg, CqpPath path,
                                int d, const Tolerances& tol) {
  return classify_spectrum(beyond_line_spectrum(p, d), cfg, path, tol);
}

}  // namespace entbound
