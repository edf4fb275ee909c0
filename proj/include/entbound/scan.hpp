#pragma once

#include <string>
#include <vector>

#include "entbound/classify.hpp"

namespace entbound {

enum class Family { Line, BeyondLine };

const char* to_string(Family family);
std::optional<Family> family_from_string(const std::string& s);

/// Inclusive numeric range. `stop` belongs to the grid whenever
/// (stop - start) / step is integral within 1e-9.
struct Range {
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
};

/// Number of grid points; throws InvalidRange for step <= 0 or stop < start.
int range_count(const Range& r);
inline double range_value(const Range& r, int i) { return r.start + i * r.step; }

struct ScanConfig {
  Family family = Family::Line;
  double gamma = 0.0;
  Range alpha_range;
  Range beta_range;
  CqpPath path = CqpPath::Analytic;
  bool overlay_curves = false;  ///< Line family only
};

struct ScanCell {
  double alpha = 0.0;
  double beta = 0.0;
  ClassLabel label;
  double purity = 0.0;  ///< NaN when Unphysical
};

/// Cells in row-major order: alpha outer, beta inner.
struct ScanResult {
  ScanConfig cfg;
  int alpha_count = 0;
  int beta_count = 0;
  std::vector<ScanCell> cells;

  const ScanCell& at(int ia, int ib) const { return cells[ia * beta_count + ib]; }
};

/// Classifies every grid cell of the configured family/plane.
ScanResult run_scan(const ScanConfig& cfg, const QpConfig& qp_cfg = {}, int threads = 1,
                    const Tolerances& tol = default_tolerances());

/// One sample of the borderline curves at a given alpha.
struct CurveRow {
  double alpha = 0.0;
  std::optional<std::pair<double, double>> ent;  ///< absent when no real roots
  std::optional<std::pair<double, double>> ppt;
};

/// Samples beta_ent / beta_ppt over the alpha grid. Rows with alpha < 0 carry
/// empty roots (the closed forms are stated for alpha >= 0).
std::vector<CurveRow> sample_curves(double gamma, const Range& alpha_range);

}  // namespace entbound
