#pragma once

#include <vector>

#include "diskbez/disk_bezier.hpp"

namespace diskbez {

/// Sampled deviation between two disk curves on a uniform grid of M points.
struct ErrorReport {
  double max_center_err = 0.0;
  double argmax_center_t = 0.0;
  double max_radius_err = 0.0;
  double argmax_radius_t = 0.0;
  int samples_M = 0;
};

/// Per-sample center distance and radius difference, as plotted against t.
struct ErrorSeries {
  std::vector<double> t;
  std::vector<double> center_err;  // ||p(t_j) - q(t_j)||_2
  std::vector<double> radius_err;  // |r(t_j) - s(t_j)|
};

ErrorSeries error_series(const DiskRationalBezier& original, const DiskRationalBezier& reduced,
                         int samples_M);

/// Grid maxima of error_series; ties resolve to the smallest t.
ErrorReport measure(const DiskRationalBezier& original, const DiskRationalBezier& reduced,
                    int samples_M);

}  // namespace diskbez
