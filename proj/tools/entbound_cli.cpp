// Command-line driver: parameter-plane scans, single-state classification,
// borderline-curve sampling and the random-mixing volume experiment.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "entbound/csv.hpp"
#include "entbound/matrix_io.hpp"
#include "entbound/sampling.hpp"
#include "entbound/scan.hpp"

namespace {

using namespace entbound;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

Range parse_range(const std::string& text) {
  std::vector<double> parts;
  std::string token;
  for (char ch : text + ":") {
    if (ch == ':' || ch == ',') {
      if (token.empty()) fail(Errc::InvalidRange, "range '" + text + "': empty field");
      char* end = nullptr;
      parts.push_back(std::strtod(token.c_str(), &end));
      if (*end != '\0') fail(Errc::InvalidRange, "range '" + text + "': bad number '" + token + "'");
      token.clear();
    } else {
      token += ch;
    }
  }
  if (parts.size() != 3) fail(Errc::InvalidRange, "range '" + text + "': expected start:stop:step");
  return Range{parts[0], parts[1], parts[2]};
}

std::string sibling_path(const std::string& output, const std::string& tag) {
  std::filesystem::path p(output);
  const std::string ext = p.extension().string();
  p.replace_extension();
  return p.string() + "." + tag + (ext.empty() ? ".csv" : ext);
}

Family parse_family(const std::string& name) {
  const auto family = family_from_string(name);
  if (!family) fail(Errc::InvalidRange, "unknown family '" + name + "'");
  return *family;
}

CqpPath parse_path(const std::string& name) {
  if (name == "analytic") return CqpPath::Analytic;
  if (name == "generic") return CqpPath::Generic;
  fail(Errc::InvalidRange, "unknown path '" + name + "' (use analytic or generic)");
}

void print_classification(StateClass tag, double cqp_value, double neg, double pur) {
  std::printf("%s,%s,%s,%s\n", to_string(tag), format_float(cqp_value).c_str(),
              format_float(neg).c_str(), format_float(pur).c_str());
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::InvalidRange:
    case Errc::EpsOutOfRange:
      return kExitUsage;
    case Errc::IoError:
    case Errc::ParseError:
      return kExitIo;
    default:
      return kExitNumerical;
  }
}

struct ScanArgs {
  std::string family = "line";
  double gamma = 0.0;
  std::string alpha_range;
  std::string beta_range;
  std::string path = "analytic";
  std::string output;
  bool curves = false;
  int threads = 1;
};

int run_scan_cmd(const ScanArgs& args) {
  ScanConfig cfg;
  cfg.family = parse_family(args.family);
  cfg.gamma = args.gamma;
  cfg.alpha_range = parse_range(args.alpha_range);
  cfg.beta_range = parse_range(args.beta_range);
  cfg.path = parse_path(args.path);
  cfg.overlay_curves = args.curves;

  const ScanResult result = run_scan(cfg, QpConfig{}, args.threads);
  write_file(args.output, scan_to_csv(result));
  if (cfg.overlay_curves && cfg.family == Family::Line)
    write_file(sibling_path(args.output, "curves"),
               curves_to_csv(sample_curves(cfg.gamma, cfg.alpha_range)));
  return kExitOk;
}

struct ClassifyArgs {
  std::string family = "line";
  std::optional<double> alpha, beta, gamma;
  std::string matrix_path;
  std::string path = "analytic";
};

int run_classify_cmd(const ClassifyArgs& args) {
  if (!args.matrix_path.empty()) {
    const MatrixFile file = read_matrix_file(args.matrix_path);
    const ClassLabel label = classify(file.mat, file.dim_a, file.dim_b);
    double pur = std::numeric_limits<double>::quiet_NaN();
    if (label.tag != StateClass::Unphysical)
      pur = purity(density_from_matrix(file.mat, file.dim_a, file.dim_b));
    print_classification(label.tag, label.cqp_value, label.negativity, pur);
    return kExitOk;
  }
  if (!args.alpha || !args.beta || !args.gamma)
    fail(Errc::InvalidRange, "classify: give either --matrix or all of --alpha/--beta/--gamma");
  const Family family = parse_family(args.family);
  const BellSpectrum spec =
      family == Family::Line
          ? line_spectrum(LineParams{*args.alpha, *args.beta, *args.gamma})
          : beyond_line_spectrum(BeyondLineParams{*args.alpha, *args.beta, *args.gamma});
  const ClassLabel label = classify_spectrum(spec, QpConfig{}, parse_path(args.path));
  const double pur = label.tag == StateClass::Unphysical
                         ? std::numeric_limits<double>::quiet_NaN()
                         : spec.lambda.squaredNorm();
  print_classification(label.tag, label.cqp_value, label.negativity, pur);
  return kExitOk;
}

struct VolumeArgs {
  double alpha = -0.092, beta = 0.04, gamma = 0.2148;
  std::vector<double> eps;
  int samples = 1000;
  int bins = 50;
  std::uint64_t seed = 0;
  std::string output;
  std::string summary;
  int threads = 1;
};

int run_volume_cmd(const VolumeArgs& args) {
  VolumeConfig cfg;
  cfg.base = LineParams{args.alpha, args.beta, args.gamma};
  cfg.eps_values = args.eps.empty() ? default_eps_grid() : args.eps;
  cfg.samples_per_eps = args.samples;
  cfg.seed = args.seed;
  cfg.histogram_bins = args.bins;

  const auto records = volume_experiment(cfg, QpConfig{}, args.threads);
  write_file(args.output, volume_to_csv(records));
  const std::string summary_path =
      args.summary.empty() ? sibling_path(args.output, "summary") : args.summary;
  write_file(summary_path, volume_summary_to_csv(summarize_volume(records, cfg.histogram_bins)));
  return kExitOk;
}

struct CurvesArgs {
  double gamma = 0.0;
  std::string alpha_range;
  std::string output;
};

int run_curves_cmd(const CurvesArgs& args) {
  write_file(args.output, curves_to_csv(sample_curves(args.gamma, parse_range(args.alpha_range))));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite-qudit entanglement detection: quasi-pure concurrence bound, "
               "PPT/negativity, Bell-diagonal families"};
  app.require_subcommand(1);

  ScanArgs scan_args;
  CLI::App* scan = app.add_subcommand("scan", "classify a parameter-plane grid");
  scan->add_option("--family", scan_args.family, "line or beyond-line");
  scan->add_option("--gamma", scan_args.gamma, "fixed gamma of the plane");
  scan->add_option("--alpha-range", scan_args.alpha_range, "start:stop:step")->required();
  scan->add_option("--beta-range", scan_args.beta_range, "start:stop:step")->required();
  scan->add_option("--path", scan_args.path, "analytic or generic cqp route");
  scan->add_option("--output", scan_args.output, "CSV output path")->required();
  scan->add_flag("--curves", scan_args.curves, "also write borderline curves (line family)");
  scan->add_option("--threads", scan_args.threads, "worker cap (default 1)");

  ClassifyArgs classify_args;
  CLI::App* cls = app.add_subcommand("classify", "classify a single state");
  cls->add_option("--family", classify_args.family, "line or beyond-line");
  cls->add_option("--alpha", classify_args.alpha);
  cls->add_option("--beta", classify_args.beta);
  cls->add_option("--gamma", classify_args.gamma);
  cls->add_option("--matrix", classify_args.matrix_path, "JSON matrix file");
  cls->add_option("--path", classify_args.path, "analytic or generic cqp route");

  VolumeArgs volume_args;
  CLI::App* vol = app.add_subcommand("volume", "random-mixing volume experiment");
  vol->add_option("--alpha", volume_args.alpha, "base state alpha");
  vol->add_option("--beta", volume_args.beta, "base state beta");
  vol->add_option("--gamma", volume_args.gamma, "base state gamma");
  vol->add_option("--eps", volume_args.eps, "mixing weights (default: 0..1 in 201 steps)");
  vol->add_option("--samples", volume_args.samples, "samples per eps (default 1000)");
  vol->add_option("--bins", volume_args.bins, "histogram bins in the summary");
  vol->add_option("--seed", volume_args.seed, "RNG seed (required for reproducibility)")
      ->required();
  vol->add_option("--output", volume_args.output, "records CSV path")->required();
  vol->add_option("--summary", volume_args.summary, "summary CSV path (default sibling)");
  vol->add_option("--threads", volume_args.threads, "worker cap (default 1)");

  CurvesArgs curves_args;
  CLI::App* crv = app.add_subcommand("curves", "sample the borderline curves alone");
  crv->add_option("--gamma", curves_args.gamma, "fixed gamma");
  crv->add_option("--alpha-range", curves_args.alpha_range, "start:stop:step")->required();
  crv->add_option("--output", curves_args.output, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (scan->parsed()) return run_scan_cmd(scan_args);
    if (cls->parsed()) return run_classify_cmd(classify_args);
    if (vol->parsed()) return run_volume_cmd(volume_args);
    if (crv->parsed()) return run_curves_cmd(curves_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
