#include "entbound/scan.hpp"

#include <cmath>
#include <limits>

#include "entbound/parallel.hpp"

namespace entbound {

const char* to_string(Family family) {
  return family == Family::Line ? "line" : "beyond_line";
}

std::optional<Family> family_from_string(const std::string& s) {
  if (s == "line") return Family::Line;
  if (s == "beyond_line" || s == "beyond-line") return Family::BeyondLine;
  return std::nullopt;
}

int range_count(const Range& r) {
  if (!(r.step > 0)) fail(Errc::InvalidRange, "range: step must be positive");
  if (r.stop < r.start) fail(Errc::InvalidRange, "range: stop below start");
  return static_cast<int>(std::floor((r.stop - r.start) / r.step + 1e-9)) + 1;
}

ScanResult run_scan(const ScanConfig& cfg, const QpConfig& qp_cfg, int threads,
                    const Tolerances& tol) {
  ScanResult result;
  result.cfg = cfg;
  result.alpha_count = range_count(cfg.alpha_range);
  result.beta_count = range_count(cfg.beta_range);
  result.cells.resize(static_cast<std::size_t>(result.alpha_count) * result.beta_count);

  parallel_for(static_cast<int>(result.cells.size()), threads, [&](int cell) {
    const int ia = cell / result.beta_count;
    const int ib = cell % result.beta_count;
    const double alpha = range_value(cfg.alpha_range, ia);
    const double beta = range_value(cfg.beta_range, ib);

    const BellSpectrum spec = cfg.family == Family::Line
                                  ? line_spectrum(LineParams{alpha, beta, cfg.gamma})
                                  : beyond_line_spectrum(BeyondLineParams{alpha, beta, cfg.gamma});
    ScanCell out{alpha, beta, {}, std::numeric_limits<double>::quiet_NaN()};
    out.label = classify_spectrum(spec, qp_cfg, cfg.path, tol);
    if (out.label.tag != StateClass::Unphysical) out.purity = spec.lambda.squaredNorm();
    result.cells[cell] = out;
  });
  return result;
}

std::vector<CurveRow> sample_curves(double gamma, const Range& alpha_range) {
  const int n = range_count(alpha_range);
  std::vector<CurveRow> rows(n);
  for (int i = 0; i < n; ++i) {
    const double alpha = range_value(alpha_range, i);
    rows[i].alpha = alpha;
    if (alpha >= 0) {
      rows[i].ent = beta_ent(alpha, gamma);
      rows[i].ppt = beta_ppt(alpha, gamma);
    }
  }
  return rows;
}

}  // namespace entbound
