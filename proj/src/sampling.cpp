#include "entbound/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "entbound/parallel.hpp"

namespace entbound {

std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

BipartiteDensity hs_random(int dim_a, int dim_b, std::mt19937_64& rng, const Tolerances& tol) {
  if (dim_a < 1 || dim_b < 1) fail(Errc::BadDims, "hs_random: dimensions must be positive");
  const int n = dim_a * dim_b;
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(r, c) = Complex(re, im);
    }
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return density_from_matrix(rho, dim_a, dim_b, tol);
}

BipartiteDensity mix(const BipartiteDensity& base, const BipartiteDensity& noise, double eps,
                     const Tolerances& tol) {
  if (base.dim_a() != noise.dim_a() || base.dim_b() != noise.dim_b())
    fail(Errc::BadDims, "mix: mismatched bipartitions");
  if (!(eps >= 0.0 && eps <= 1.0)) fail(Errc::EpsOutOfRange, "mix: eps must lie in [0, 1]");
  return density_from_matrix((1.0 - eps) * base.matrix() + eps * noise.matrix(), base.dim_a(),
                             base.dim_b(), tol);
}

std::vector<double> default_eps_grid() {
  std::vector<double> grid(201);
  for (int i = 0; i <= 200; ++i) grid[i] = i / 200.0;
  return grid;
}

std::vector<VolumeRecord> volume_experiment(const VolumeConfig& cfg, const QpConfig& qp_cfg,
                                            int threads, const Tolerances& tol) {
  if (cfg.samples_per_eps < 1) fail(Errc::InvalidRange, "volume: samples_per_eps must be >= 1");
  for (double eps : cfg.eps_values)
    if (!(eps >= 0.0 && eps <= 1.0)) fail(Errc::EpsOutOfRange, "volume: eps outside [0, 1]");

  const BellSpectrum base_spec = line_spectrum(cfg.base);
  if (!spectrum_is_physical(base_spec, tol))
    fail(Errc::BaseNotBoundEntangled, "volume: base state is unphysical");
  const BipartiteDensity base = bell_diagonal(base_spec, tol);
  if (classify(base, qp_cfg, tol).tag != StateClass::BoundEntangled)
    fail(Errc::BaseNotBoundEntangled, "volume: base state does not classify as bound entangled");

  const int per_eps = cfg.samples_per_eps;
  const int total = static_cast<int>(cfg.eps_values.size()) * per_eps;
  std::vector<VolumeRecord> records(total);

  parallel_for(total, threads, [&](int cell) {
    const int eps_index = cell / per_eps;
    const int sample = cell % per_eps;
    const double eps = cfg.eps_values[eps_index];

    std::mt19937_64 rng = substream(cfg.seed, static_cast<std::uint64_t>(eps_index),
                                    static_cast<std::uint64_t>(sample));
    const BipartiteDensity noise = hs_random(base.dim_a(), base.dim_b(), rng, tol);
    const BipartiteDensity state = mix(base, noise, eps, tol);

    const double neg = negativity(state);
    const double bound = cqp(state, qp_cfg, tol).value;
    const ClassLabel label = [&] {
      if (neg > tol.ppt) return ClassLabel{StateClass::NptEntangled, bound, neg};
      if (bound > tol.detect) return ClassLabel{StateClass::BoundEntangled, bound, neg};
      return ClassLabel{StateClass::Undetected, bound, neg};
    }();

    records[cell] = VolumeRecord{eps, sample, bound, neg, neg <= tol.ppt, label.tag};
  });
  return records;
}

namespace {

std::vector<long> histogram(const std::vector<double>& values, double lo, double hi, int bins) {
  std::vector<long> counts(bins, 0);
  if (values.empty()) return counts;
  const double width = hi - lo;
  for (double v : values) {
    int b = width > 0 ? static_cast<int>((v - lo) / width * bins) : 0;
    b = std::clamp(b, 0, bins - 1);
    ++counts[b];
  }
  return counts;
}

}  // namespace

std::vector<VolumeSummaryRow> summarize_volume(const std::vector<VolumeRecord>& records,
                                               int histogram_bins) {
  if (histogram_bins < 1) fail(Errc::InvalidRange, "summarize_volume: bins must be >= 1");
  std::map<double, std::vector<const VolumeRecord*>> by_eps;
  for (const auto& rec : records) by_eps[rec.eps].push_back(&rec);

  std::vector<VolumeSummaryRow> rows;
  rows.reserve(by_eps.size());
  for (const auto& [eps, recs] : by_eps) {
    VolumeSummaryRow row;
    row.eps = eps;
    row.samples = static_cast<int>(recs.size());
    std::vector<double> cqps, negs;
    cqps.reserve(recs.size());
    negs.reserve(recs.size());
    int n_ppt = 0, n_bound = 0;
    for (const auto* rec : recs) {
      cqps.push_back(rec->cqp);
      negs.push_back(rec->negativity);
      n_ppt += rec->ppt ? 1 : 0;
      n_bound += rec->label == StateClass::BoundEntangled ? 1 : 0;
    }
    row.frac_ppt = static_cast<double>(n_ppt) / row.samples;
    row.frac_bound = static_cast<double>(n_bound) / row.samples;
    row.cqp_min = *std::min_element(cqps.begin(), cqps.end());
    row.cqp_max = *std::max_element(cqps.begin(), cqps.end());
    row.cqp_hist = histogram(cqps, row.cqp_min, row.cqp_max, histogram_bins);
    row.negativity_min = *std::min_element(negs.begin(), negs.end());
    row.negativity_max = *std::max_element(negs.begin(), negs.end());
    row.negativity_hist = histogram(negs, row.negativity_min, row.negativity_max, histogram_bins);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace entbound
