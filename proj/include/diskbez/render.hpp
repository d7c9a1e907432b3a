#pragma once

#include <string>

#include "diskbez/disk_bezier.hpp"
#include "diskbez/error_metrics.hpp"
#include "diskbez/reduction.hpp"

namespace diskbez {

/// SVG 1.1 document with three panels: both disk curves drawn as sampled
/// offset envelopes (original black, reduced blue), then the center and
/// radius error against t. Output depends only on the inputs.
std::string render_svg(const DiskRationalBezier& original, const DiskRationalBezier& reduced,
                       int samples_M);

struct ReduceSummary {
  int input_degree = 0;
  int output_degree = 0;
  int k = 0;
  int h = 0;
  DistanceMode d_mode = DistanceMode::MaxDistance;
  double d = 0.0;
  double weight_objective = 0.0;
  double radius_objective = 0.0;
  ErrorReport errors;
};

ReduceSummary summarize(const DiskRationalBezier& original, const ReductionResult& result,
                        const ReductionConfig& cfg);

std::string format_report_text(const ReduceSummary& s, const DiskRationalBezier& reduced);

/// Flat JSON object: the ErrorReport fields plus d, d_mode and QP objectives.
std::string format_report_json(const ReduceSummary& s);

}  // namespace diskbez
