#include "entbound/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace entbound {

namespace {

constexpr const char* kScanHeader = "alpha,beta,gamma,family,label,cqp,negativity,purity";
constexpr const char* kCurvesHeader = "alpha,beta_ent_lo,beta_ent_hi,beta_ppt_lo,beta_ppt_hi";
constexpr const char* kVolumeHeader = "eps,sample,cqp,negativity,ppt,label";
constexpr const char* kSummaryHeader =
    "eps,samples,frac_ppt,frac_bound_entangled,cqp_min,cqp_max,cqp_hist,"
    "negativity_min,negativity_max,negativity_hist";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  if (!line.empty() && line.back() == sep) fields.emplace_back();
  return fields;
}

double parse_double(const std::string& s, int line_no) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    fail(Errc::ParseError, "csv line " + std::to_string(line_no) + ": bad number '" + s + "'");
  return v;
}

std::vector<std::string> data_lines(const std::string& text, const char* header) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != header)
    fail(Errc::ParseError, std::string("csv: expected header '") + header + "'");
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::string join_hist(const std::vector<long>& counts) {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += '|';
    out += std::to_string(counts[i]);
  }
  return out;
}

}  // namespace

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string scan_to_csv(const ScanResult& result) {
  std::string out = kScanHeader;
  out += '\n';
  const std::string family = to_string(result.cfg.family);
  const std::string gamma = format_float(result.cfg.gamma);
  for (const ScanCell& cell : result.cells) {
    out += format_float(cell.alpha);
    out += ',';
    out += format_float(cell.beta);
    out += ',';
    out += gamma;
    out += ',';
    out += family;
    out += ',';
    out += to_string(cell.label.tag);
    out += ',';
    out += format_float(cell.label.cqp_value);
    out += ',';
    out += format_float(cell.label.negativity);
    out += ',';
    out += format_float(cell.purity);
    out += '\n';
  }
  return out;
}

std::string curves_to_csv(const std::vector<CurveRow>& rows) {
  std::string out = kCurvesHeader;
  out += '\n';
  auto pair_fields = [](const std::optional<std::pair<double, double>>& roots) {
    if (!roots) return std::string(",");
    return format_float(roots->first) + ',' + format_float(roots->second);
  };
  for (const CurveRow& row : rows) {
    out += format_float(row.alpha);
    out += ',';
    out += pair_fields(row.ent);
    out += ',';
    out += pair_fields(row.ppt);
    out += '\n';
  }
  return out;
}

std::string volume_to_csv(const std::vector<VolumeRecord>& records) {
  std::string out = kVolumeHeader;
  out += '\n';
  for (const VolumeRecord& rec : records) {
    out += format_float(rec.eps);
    out += ',';
    out += std::to_string(rec.sample_index);
    out += ',';
    out += format_float(rec.cqp);
    out += ',';
    out += format_float(rec.negativity);
    out += ',';
    out += rec.ppt ? '1' : '0';
    out += ',';
    out += to_string(rec.label);
    out += '\n';
  }
  return out;
}

std::string volume_summary_to_csv(const std::vector<VolumeSummaryRow>& rows) {
  std::string out = kSummaryHeader;
  out += '\n';
  for (const VolumeSummaryRow& row : rows) {
    out += format_float(row.eps);
    out += ',';
    out += std::to_string(row.samples);
    out += ',';
    out += format_float(row.frac_ppt);
    out += ',';
    out += format_float(row.frac_bound);
    out += ',';
    out += format_float(row.cqp_min);
    out += ',';
    out += format_float(row.cqp_max);
    out += ',';
    out += join_hist(row.cqp_hist);
    out += ',';
    out += format_float(row.negativity_min);
    out += ',';
    out += format_float(row.negativity_max);
    out += ',';
    out += join_hist(row.negativity_hist);
    out += '\n';
  }
  return out;
}

std::vector<ParsedScanRow> parse_scan_csv(const std::string& text) {
  std::vector<ParsedScanRow> rows;
  int line_no = 1;
  for (const std::string& line : data_lines(text, kScanHeader)) {
    ++line_no;
    const auto fields = split(line, ',');
    if (fields.size() != 8)
      fail(Errc::ParseError, "scan csv line " + std::to_string(line_no) + ": expected 8 fields");
    const auto family = family_from_string(fields[3]);
    if (!family)
      fail(Errc::ParseError,
           "scan csv line " + std::to_string(line_no) + ": unknown family '" + fields[3] + "'");
    const auto label = state_class_from_string(fields[4]);
    if (!label)
      fail(Errc::ParseError,
           "scan csv line " + std::to_string(line_no) + ": unknown label '" + fields[4] + "'");
    rows.push_back(ParsedScanRow{parse_double(fields[0], line_no), parse_double(fields[1], line_no),
                                 parse_double(fields[2], line_no), *family, *label,
                                 parse_double(fields[5], line_no), parse_double(fields[6], line_no),
                                 parse_double(fields[7], line_no)});
  }
  return rows;
}

std::vector<VolumeRecord> parse_volume_csv(const std::string& text) {
  std::vector<VolumeRecord> records;
  int line_no = 1;
  for (const std::string& line : data_lines(text, kVolumeHeader)) {
    ++line_no;
    const auto fields = split(line, ',');
    if (fields.size() != 6)
      fail(Errc::ParseError, "volume csv line " + std::to_string(line_no) + ": expected 6 fields");
    if (fields[4] != "0" && fields[4] != "1")
      fail(Errc::ParseError, "volume csv line " + std::to_string(line_no) + ": ppt must be 0 or 1");
    const auto label = state_class_from_string(fields[5]);
    if (!label)
      fail(Errc::ParseError,
           "volume csv line " + std::to_string(line_no) + ": unknown label '" + fields[5] + "'");
    records.push_back(VolumeRecord{parse_double(fields[0], line_no),
                                   static_cast<int>(parse_double(fields[1], line_no)),
                                   parse_double(fields[2], line_no),
                                   parse_double(fields[3], line_no), fields[4] == "1", *label});
  }
  return records;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::IoError, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) fail(Errc::IoError, "write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace entbound
