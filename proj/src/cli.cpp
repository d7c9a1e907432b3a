#include "diskbez/cli.hpp"

#include <fstream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "diskbez/curve_io.hpp"
#include "diskbez/reduction.hpp"
#include "diskbez/render.hpp"

namespace diskbez::cli {

namespace {

struct ReduceArgs {
  std::string input;
  std::string output;
  int degree = -1;
  std::string continuity = "0,0";
  int samples = 1001;
  DistanceMode d_mode = DistanceMode::MaxDistance;
  std::string svg;
  std::string report;
};

struct ElevateArgs {
  std::string input;
  std::string output;
  int by = 1;
};

bool parse_continuity(const std::string& text, int& k, int& h) {
  if (text.size() != 3 || text[1] != ',') return false;
  auto digit = [](char ch, int& v) {
    if (ch != '0' && ch != '1') return false;
    v = ch - '0';
    return true;
  };
  return digit(text[0], k) && digit(text[2], h);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CurveFileError(CurveFileError::Kind::Io, "", "cannot write " + path);
  f << text;
  if (!f) throw CurveFileError(CurveFileError::Kind::Io, "", "error writing " + path);
}

int run_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  ReductionConfig cfg;
  if (!parse_continuity(a.continuity, cfg.k, cfg.h)) {
    err << "usage error: --continuity expects K,H with K,H in {0,1}, got '" << a.continuity << "'\n";
    return kExitUsage;
  }
  cfg.m = a.degree;
  cfg.samples_M = a.samples;
  cfg.d_mode = a.d_mode;

  const DiskRationalBezier input = load_curve(a.input);
  if (cfg.m < 1 || cfg.m >= input.degree()) {
    err << "usage error: --degree must lie in 1.." << input.degree() - 1 << " for a degree-"
        << input.degree() << " input, got " << cfg.m << "\n";
    return kExitUsage;
  }
  if (cfg.m < cfg.k + cfg.h + 1) {
    err << "usage error: --degree " << cfg.m << " is too low for continuity " << a.continuity << "\n";
    return kExitUsage;
  }

  ReductionResult result = [&] {
    try {
      return reduce(input, cfg);
    } catch (const ReductionError& e) {
      err << "error: " << e.what() << "\n";
      throw;
    }
  }();

  const ReduceSummary summary = summarize(input, result, cfg);
  out << format_report_text(summary, result.reduced);
  if (!a.output.empty()) save_curve(result.reduced, a.output);
  if (!a.report.empty()) write_text(a.report, format_report_json(summary));
  if (!a.svg.empty()) write_text(a.svg, render_svg(input, result.reduced, cfg.samples_M));
  return kExitOk;
}

int run_elevate(const ElevateArgs& a, std::ostream& err) {
  if (a.by < 1) {
    err << "usage error: --by must be >= 1\n";
    return kExitUsage;
  }
  save_curve(elevate(load_curve(a.input), a.by), a.output);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disk rational Bezier curves: multi-degree reduction with bounding radii", "diskbez"};
  app.require_subcommand(1);

  ReduceArgs ra;
  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce the degree of a disk rational Bezier curve");
  reduce_cmd->add_option("--input", ra.input, "Input curve file (JSON)")->required();
  reduce_cmd->add_option("--output", ra.output, "Where to write the reduced curve");
  reduce_cmd->add_option("--degree", ra.degree, "Target degree")->required();
  reduce_cmd->add_option("--continuity", ra.continuity, "Endpoint continuity K,H (each 0 or 1)")
      ->capture_default_str();
  reduce_cmd->add_option("--samples", ra.samples, "Uniform samples for d and the error report")
      ->check(CLI::Range(2, 1 << 24))
      ->capture_default_str();
  const std::map<std::string, DistanceMode> modes{{"max", DistanceMode::MaxDistance},
                                                  {"sum", DistanceMode::SumDistance}};
  reduce_cmd->add_option("--d-mode", ra.d_mode, "Aggregate of sampled center distances: max or sum")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  reduce_cmd->add_option("--svg", ra.svg, "Write an SVG plot of both curves and the errors");
  reduce_cmd->add_option("--report", ra.report, "Write the machine-readable error report (JSON)");

  ElevateArgs ea;
  auto* elevate_cmd = app.add_subcommand("elevate", "Elevate the degree of a curve");
  elevate_cmd->add_option("--input", ea.input, "Input curve file (JSON)")->required();
  elevate_cmd->add_option("--output", ea.output, "Where to write the elevated curve")->required();
  elevate_cmd->add_option("--by", ea.by, "Number of degrees to add")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*reduce_cmd) return run_reduce(ra, out, err);
    return run_elevate(ea, err);
  } catch (const ReductionError&) {
    return kExitFailure;
  } catch (const CurveFileError& e) {
    err << "error [io]: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace diskbez::cli
