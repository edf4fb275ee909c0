#pragma once

#include <string>
#include <vector>

#include "entbound/sampling.hpp"
#include "entbound/scan.hpp"

namespace entbound {

/// Shortest-faithful float formatting used by every CSV column
/// (17 significant digits; round-trips doubles exactly).
std::string format_float(double v);

/// Columns: alpha,beta,gamma,family,label,cqp,negativity,purity
std::string scan_to_csv(const ScanResult& result);

/// Columns: alpha,beta_ent_lo,beta_ent_hi,beta_ppt_lo,beta_ppt_hi
/// (fields left empty where roots are absent).
std::string curves_to_csv(const std::vector<CurveRow>& rows);

/// Columns: eps,sample,cqp,negativity,ppt,label
std::string volume_to_csv(const std::vector<VolumeRecord>& records);

/// Columns: eps,samples,frac_ppt,frac_bound_entangled,cqp_min,cqp_max,
/// cqp_hist,negativity_min,negativity_max,negativity_hist
/// (histogram counts joined with '|').
std::string volume_summary_to_csv(const std::vector<VolumeSummaryRow>& rows);

/// Row-level parsers for the files above (headers required).
struct ParsedScanRow {
  double alpha, beta, gamma;
  Family family;
  StateClass label;
  double cqp, negativity, purity;
};
std::vector<ParsedScanRow> parse_scan_csv(const std::string& text);
std::vector<VolumeRecord> parse_volume_csv(const std::string& text);

/// Writes text to path; throws IoError on failure.
void write_file(const std::string& path, const std::string& text);

/// Reads a whole file; throws IoError on failure.
std::string read_file(const std::string& path);

}  // namespace entbound
