#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "diskbez/disk.hpp"

namespace diskbez {

/// Degree-n disk rational Bezier curve. The center is the rational Bezier
/// curve of the control-disk centers with the given weights; the radius is
/// the plain Bernstein polynomial of the control radii (no weights).
class DiskRationalBezier {
 public:
  /// Throws std::invalid_argument on empty input, length mismatch, or a
  /// non-positive / non-finite weight.
  DiskRationalBezier(std::vector<Disk> disks, std::vector<double> weights);

  int degree() const { return static_cast<int>(disks_.size()) - 1; }
  std::span<const Disk> disks() const { return disks_; }
  std::span<const double> weights() const { return weights_; }

  std::vector<double> radii() const;
  std::vector<double> xs() const;
  std::vector<double> ys() const;

 private:
  std::vector<Disk> disks_;
  std::vector<double> weights_;
};

struct CurvePoint {
  double x = 0.0;
  double y = 0.0;
  double r = 0.0;
  double t = 0.0;
};

/// Basis form: center = sum p_i R_i^n(t), radius = sum r_i B_i^n(t).
CurvePoint evaluate(const DiskRationalBezier& c, double t);

/// One entry p_i^j, w_i^j, r_i^j of the de Casteljau triangle.
struct CasteljauNode {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double r = 0.0;
};

struct CasteljauTriangle {
  /// levels[j][i] holds (p_i^j, w_i^j, r_i^j); level j has n - j + 1 entries.
  std::vector<std::vector<CasteljauNode>> levels;
  CurvePoint apex;
};

CasteljauTriangle de_casteljau(const DiskRationalBezier& c, double t);

/// Splits at `cut` in (0, 1). Each piece is reparametrized over [0, 1].
std::pair<DiskRationalBezier, DiskRationalBezier> subdivide(const DiskRationalBezier& c, double cut);

/// Degree elevation by s >= 1; same point set, degree n + s.
DiskRationalBezier elevate(const DiskRationalBezier& c, int s);

/// Absolute per-equation residual accepted by try_exact_reduce.
inline constexpr double kExactReduceTol = 1e-8;

/// Returns a degree-m curve representing `c` exactly, or nothing when `c` is
/// not exactly reducible to degree m. Recovered weights satisfy
/// w_0 (reduced) = w_0 (original).
std::optional<DiskRationalBezier> try_exact_reduce(const DiskRationalBezier& c, int m,
                                                   double tol = kExactReduceTol);

/// Samples at t_j = j / (count - 1), j = 0 .. count - 1.
std::vector<double> uniform_grid(int count);

struct CurveSamples {
  std::vector<double> t;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> r;
};

/// Batch evaluation through the runtime-selected SIMD kernel.
CurveSamples sample(const DiskRationalBezier& c, std::span<const double> t);

}  // namespace diskbez
