#pragma once

#include <span>

namespace diskbez {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point2&) const = default;
};

/// A closed disk in the plane: center (cx, cy) and radius r >= 0.
///
/// Construction validates finiteness and r >= 0; negative radii are rejected
/// rather than clamped.
class Disk {
 public:
  Disk() = default;
  Disk(double cx, double cy, double r);

  double cx() const { return cx_; }
  double cy() const { return cy_; }
  double r() const { return r_; }

  bool operator==(const Disk&) const = default;

 private:
  double cx_ = 0.0;
  double cy_ = 0.0;
  double r_ = 0.0;
};

enum class RadiusConvention {
  WeightedRadius,  // (X, Y, w)_R with R = w r
  PlainRadius,     // (X, Y, w)_r
};

/// A disk lifted to homogeneous coordinates.
struct HomogeneousDisk {
  double X = 0.0;
  double Y = 0.0;
  double w = 1.0;
  double rad = 0.0;
  RadiusConvention convention = RadiusConvention::PlainRadius;
};

/// k (q) = (k x, k y)_{|k| r}
Disk scale_disk(double k, const Disk& d);

/// Centers add componentwise, radii add.
Disk add_disks(const Disk& a, const Disk& b);

/// sum_i k_i (q_i): centers combine linearly, radius is sum_i |k_i| r_i.
Disk linear_combination(std::span<const double> coeffs, std::span<const Disk> disks);

/// Perspective projection onto w = 1; divides the radius by w.
Disk perspective_project(const HomogeneousDisk& h);

/// Oblique projection onto w = 1; leaves the radius unchanged.
Disk oblique_project(const HomogeneousDisk& h);

}  // namespace diskbez
