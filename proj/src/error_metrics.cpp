#include "diskbez/error_metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace diskbez {

ErrorSeries error_series(const DiskRationalBezier& original, const DiskRationalBezier& reduced,
                         int samples_M) {
  if (samples_M < 2) throw std::invalid_argument("measure: need at least 2 samples");
  const auto grid = uniform_grid(samples_M);
  const auto a = sample(original, grid);
  const auto b = sample(reduced, grid);
  ErrorSeries s;
  s.t = grid;
  s.center_err.resize(grid.size());
  s.radius_err.resize(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    s.center_err[j] = std::hypot(a.x[j] - b.x[j], a.y[j] - b.y[j]);
    s.radius_err[j] = std::abs(a.r[j] - b.r[j]);
  }
  return s;
}

ErrorReport measure(const DiskRationalBezier& original, const DiskRationalBezier& reduced,
                    int samples_M) {
  const auto s = error_series(original, reduced, samples_M);
  ErrorReport rep;
  rep.samples_M = samples_M;
  for (std::size_t j = 0; j < s.t.size(); ++j) {
    if (s.center_err[j] > rep.max_center_err) {
      rep.max_center_err = s.center_err[j];
      rep.argmax_center_t = s.t[j];
    }
    if (s.radius_err[j] > rep.max_radius_err) {
      rep.max_radius_err = s.radius_err[j];
      rep.argmax_radius_t = s.t[j];
    }
  }
  return rep;
}

}  // namespace diskbez
