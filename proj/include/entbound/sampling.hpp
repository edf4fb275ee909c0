#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "entbound/classify.hpp"
#include "entbound/state.hpp"

namespace entbound {

/// Independent generator for the (stream, index) cell of a seeded run.
/// Substreams are derived through std::seed_seq, so results do not depend on
/// which thread evaluates which cell.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Hilbert-Schmidt-distributed random density: rho = G G^dag / Tr(G G^dag)
/// with G a square matrix of independent standard complex Gaussian entries.
BipartiteDensity hs_random(int dim_a, int dim_b, std::mt19937_64& rng,
                           const Tolerances& tol = default_tolerances());

/// Convex mixture (1 - eps) * base + eps * noise.
BipartiteDensity mix(const BipartiteDensity& base, const BipartiteDensity& noise, double eps,
                     const Tolerances& tol = default_tolerances());

struct VolumeConfig {
  LineParams base{-0.092, 0.04, 0.2148};  ///< bound entangled reference state
  std::vector<double> eps_values;          ///< ascending, in [0, 1]
  int samples_per_eps = 1000;
  std::uint64_t seed = 0;
  int histogram_bins = 50;
};

/// 0 to 1 in 201 uniform steps.
std::vector<double> default_eps_grid();

struct VolumeRecord {
  double eps = 0.0;
  int sample_index = 0;
  double cqp = 0.0;
  double negativity = 0.0;
  bool ppt = false;  ///< negativity <= ppt_tol
  StateClass label = StateClass::Undetected;
};

/// Mixes Hilbert-Schmidt random states into the base state and classifies
/// every sample (generic cqp path; mixtures are not Bell-diagonal). Records
/// are ordered by (eps, sample index) regardless of scheduling. Throws
/// BaseNotBoundEntangled when the base fails its guard.
std::vector<VolumeRecord> volume_experiment(const VolumeConfig& cfg, const QpConfig& qp_cfg = {},
                                            int threads = 1,
                                            const Tolerances& tol = default_tolerances());

struct VolumeSummaryRow {
  double eps = 0.0;
  int samples = 0;
  double frac_ppt = 0.0;
  double frac_bound = 0.0;
  double cqp_min = 0.0, cqp_max = 0.0;
  std::vector<long> cqp_hist;
  double negativity_min = 0.0, negativity_max = 0.0;
  std::vector<long> negativity_hist;
};

/// Per-eps fractions and fixed-bin histograms over the record list.
std::vector<VolumeSummaryRow> summarize_volume(const std::vector<VolumeRecord>& records,
                                               int histogram_bins);

}  // namespace entbound
