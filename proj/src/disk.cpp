#include "diskbez/disk.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace diskbez {

Disk::Disk(double cx, double cy, double r) : cx_(cx), cy_(cy), r_(r) {
  if (!std::isfinite(cx) || !std::isfinite(cy) || !std::isfinite(r)) {
    throw std::invalid_argument("Disk: non-finite field");
  }
  if (r < 0.0) {
    throw std::invalid_argument("Disk: negative radius " + std::to_string(r));
  }
}

Disk scale_disk(double k, const Disk& d) {
  if (!std::isfinite(k)) throw std::invalid_argument("scale_disk: non-finite factor");
  return {k * d.cx(), k * d.cy(), std::abs(k) * d.r()};
}

Disk add_disks(const Disk& a, const Disk& b) {
  return {a.cx() + b.cx(), a.cy() + b.cy(), a.r() + b.r()};
}

Disk linear_combination(std::span<const double> coeffs, std::span<const Disk> disks) {
  if (coeffs.size() != disks.size()) {
    throw std::invalid_argument("linear_combination: " + std::to_string(coeffs.size()) +
                                " coefficients for " + std::to_string(disks.size()) + " disks");
  }
  if (disks.empty()) throw std::invalid_argument("linear_combination: empty input");
  double x = 0.0, y = 0.0, r = 0.0;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    if (!std::isfinite(coeffs[i])) throw std::invalid_argument("linear_combination: non-finite coefficient");
    x += coeffs[i] * disks[i].cx();
    y += coeffs[i] * disks[i].cy();
    r += std::abs(coeffs[i]) * disks[i].r();
  }
  return {x, y, r};
}

namespace {

void check_homogeneous(const HomogeneousDisk& h, RadiusConvention expected, const char* who) {
  if (h.convention != expected) {
    throw std::invalid_argument(std::string(who) + ": wrong radius convention");
  }
  if (!(h.w > 0.0) || !std::isfinite(h.w)) {
    throw std::invalid_argument(std::string(who) + ": weight must be positive");
  }
  if (!(h.rad >= 0.0)) throw std::invalid_argument(std::string(who) + ": negative radius");
}

}  // namespace

Disk perspective_project(const HomogeneousDisk& h) {
  check_homogeneous(h, RadiusConvention::WeightedRadius, "perspective_project");
  return {h.X / h.w, h.Y / h.w, h.rad / h.w};
}

Disk oblique_project(const HomogeneousDisk& h) {
  check_homogeneous(h, RadiusConvention::PlainRadius, "oblique_project");
  return {h.X / h.w, h.Y / h.w, h.rad};
}

}  // namespace diskbez
