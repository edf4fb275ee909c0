#pragma once

#include <optional>
#include <utility>

#include "entbound/bell.hpp"
#include "entbound/concurrence.hpp"
#include "entbound/state.hpp"

namespace entbound {

enum class StateClass { Unphysical, NptEntangled, BoundEntangled, Undetected };

const char* to_string(StateClass tag);
std::optional<StateClass> state_class_from_string(const std::string& s);

/// Classification outcome. Undetected means "not detected by this bound";
/// it makes no separability claim. For Unphysical inputs the numeric fields
/// are NaN.
struct ClassLabel {
  StateClass tag = StateClass::Undetected;
  double cqp_value = 0.0;
  double negativity = 0.0;
};

/// (||rho^T_B||_1 - 1) / 2. Zero exactly on PPT states.
double negativity(const BipartiteDensity& rho);

/// True iff the smallest eigenvalue of the partial transpose is >= -ppt_tol.
bool is_ppt(const BipartiteDensity& rho, const Tolerances& tol = default_tolerances());

/// Roots in beta of the detection borderline for the single-direction family,
/// sorted ascending; empty when the radicand is negative. Defined for
/// alpha >= 0 (throws NegativeAlpha otherwise; the parameter plane is
/// symmetric under the alpha <-> beta exchange, so map first).
std::optional<std::pair<double, double>> beta_ent(double alpha, double gamma);

/// Roots in beta of the positive-partial-transpose borderline, same contract.
std::optional<std::pair<double, double>> beta_ppt(double alpha, double gamma);

enum class CqpPath { Analytic, Generic };

/// Classifies an unvalidated matrix: Unphysical if it is not a density matrix
/// on the declared bipartition, NptEntangled if negativity > ppt_tol, else
/// BoundEntangled if the quasi-pure bound > detect_tol, else Undetected.
/// Never throws on bad input.
ClassLabel classify(const CMatrix& mat, int dim_a, int dim_b, const QpConfig& cfg = {},
                    const Tolerances& tol = default_tolerances());

/// Same decision rule for an already validated density (generic cqp path).
ClassLabel classify(const BipartiteDensity& rho, const QpConfig& cfg = {},
                    const Tolerances& tol = default_tolerances());

/// Classifies the single-direction family state at p; Unphysical when the
/// Bell weights fail physicality. The analytic Bell-diagonal path is the
/// default; the generic spectral path is available behind the flag.
ClassLabel classify_line(const LineParams& p, const QpConfig& cfg = {},
                         CqpPath path = CqpPath::Analytic, int d = 3,
                         const Tolerances& tol = default_tolerances());

/// Two-direction family analogue of classify_line.
ClassLabel classify_beyond_line(const BeyondLineParams& p, const QpConfig& cfg = {},
                                CqpPath path = CqpPath::Analytic, int d = 3,
                                const Tolerances& tol = default_tolerances());

/// Shared decision rule for a Bell spectrum of either family.
ClassLabel classify_spectrum(const BellSpectrum& spec, const QpConfig& cfg = {},
                             CqpPath path = CqpPath::Analytic,
                             const Tolerances& tol = default_tolerances());

}  // namespace entbound
