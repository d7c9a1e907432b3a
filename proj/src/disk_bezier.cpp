#include "diskbez/disk_bezier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "diskbez/bernstein.hpp"
#include "diskbez/kernels/eval.hpp"

namespace diskbez {

DiskRationalBezier::DiskRationalBezier(std::vector<Disk> disks, std::vector<double> weights)
    : disks_(std::move(disks)), weights_(std::move(weights)) {
  if (disks_.empty()) throw std::invalid_argument("DiskRationalBezier: no control disks");
  if (disks_.size() != weights_.size()) {
    throw std::invalid_argument("DiskRationalBezier: " + std::to_string(disks_.size()) +
                                " disks but " + std::to_string(weights_.size()) + " weights");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw std::invalid_argument("DiskRationalBezier: weights[" + std::to_string(i) +
                                  "] must be positive and finite");
    }
  }
}

std::vector<double> DiskRationalBezier::radii() const {
  std::vector<double> out;
  out.reserve(disks_.size());
  for (const auto& d : disks_) out.push_back(d.r());
  return out;
}

std::vector<double> DiskRationalBezier::xs() const {
  std::vector<double> out;
  out.reserve(disks_.size());
  for (const auto& d : disks_) out.push_back(d.cx());
  return out;
}

std::vector<double> DiskRationalBezier::ys() const {
  std::vector<double> out;
  out.reserve(disks_.size());
  for (const auto& d : disks_) out.push_back(d.cy());
  return out;
}

namespace {

void check_parameter(double t, const char* who) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument(std::string(who) + ": parameter " + std::to_string(t) +
                                " outside [0, 1]");
  }
}

}  // namespace

CurvePoint evaluate(const DiskRationalBezier& c, double t) {
  check_parameter(t, "evaluate");
  const int n = c.degree();
  const auto b = bernstein_all(n, t);
  const auto w = c.weights();
  const auto disks = c.disks();
  double denom = 0.0;
  for (int i = 0; i <= n; ++i) denom += w[i] * b[i];
  CurvePoint out;
  out.t = t;
  for (int i = 0; i <= n; ++i) {
    const double R = w[i] * b[i] / denom;
    out.x += disks[i].cx() * R;
    out.y += disks[i].cy() * R;
    out.r += disks[i].r() * b[i];
  }
  return out;
}

CasteljauTriangle de_casteljau(const DiskRationalBezier& c, double t) {
  check_parameter(t, "de_casteljau");
  const int n = c.degree();
  const double s = 1.0 - t;
  CasteljauTriangle tri;
  tri.levels.resize(static_cast<std::size_t>(n) + 1);
  auto& base = tri.levels[0];
  base.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const auto& d = c.disks()[i];
    base.push_back({d.cx(), d.cy(), c.weights()[i], d.r()});
  }
  for (int j = 1; j <= n; ++j) {
    const auto& prev = tri.levels[j - 1];
    auto& cur = tri.levels[j];
    cur.resize(static_cast<std::size_t>(n - j) + 1);
    for (int i = 0; i <= n - j; ++i) {
      const auto& a = prev[i];
      const auto& b = prev[i + 1];
      auto& node = cur[i];
      node.w = s * a.w + t * b.w;
      const double ca = s * a.w / node.w;
      const double cb = t * b.w / node.w;
      node.x = ca * a.x + cb * b.x;
      node.y = ca * a.y + cb * b.y;
      node.r = s * a.r + t * b.r;
    }
  }
  const auto& top = tri.levels[n][0];
  tri.apex = {top.x, top.y, top.r, t};
  return tri;
}

std::pair<DiskRationalBezier, DiskRationalBezier> subdivide(const DiskRationalBezier& c, double cut) {
  if (!(cut > 0.0 && cut < 1.0)) {
    throw std::invalid_argument("subdivide: cut " + std::to_string(cut) + " outside (0, 1)");
  }
  const int n = c.degree();
  const auto tri = de_casteljau(c, cut);
  std::vector<Disk> left_disks, right_disks;
  std::vector<double> left_w, right_w;
  for (int i = 0; i <= n; ++i) {
    // left: first entry of level i; right: entry i of level n - i
    const auto& l = tri.levels[i][0];
    const auto& r = tri.levels[n - i][i];
    left_disks.emplace_back(l.x, l.y, l.r);
    left_w.push_back(l.w);
    right_disks.emplace_back(r.x, r.y, r.r);
    right_w.push_back(r.w);
  }
  return {DiskRationalBezier(std::move(left_disks), std::move(left_w)),
          DiskRationalBezier(std::move(right_disks), std::move(right_w))};
}

DiskRationalBezier elevate(const DiskRationalBezier& c, int s) {
  if (s < 1) throw std::invalid_argument("elevate: elevation count must be >= 1");
  const int m = c.degree();
  const Eigen::MatrixXd E = elevation_matrix(m, s);
  std::vector<Disk> disks;
  std::vector<double> weights;
  for (int i = 0; i <= m + s; ++i) {
    double w = 0.0, hx = 0.0, hy = 0.0, r = 0.0;
    for (int j = std::max(0, i - s); j <= std::min(m, i); ++j) {
      const auto& d = c.disks()[j];
      const double wj = c.weights()[j];
      w += E(i, j) * wj;
      hx += E(i, j) * wj * d.cx();
      hy += E(i, j) * wj * d.cy();
      r += E(i, j) * d.r();
    }
    disks.emplace_back(hx / w, hy / w, r);
    weights.push_back(w);
  }
  return {std::move(disks), std::move(weights)};
}

std::optional<DiskRationalBezier> try_exact_reduce(const DiskRationalBezier& c, int m, double tol) {
  const int n = c.degree();
  if (m < 1 || m >= n) {
    throw std::invalid_argument("try_exact_reduce: target degree " + std::to_string(m) +
                                " outside 1.." + std::to_string(n - 1));
  }
  const Eigen::MatrixXd E = elevation_matrix(m, n - m);

  // Radius: overdetermined system E * r_reduced = r.
  Eigen::VectorXd r(n + 1);
  for (int i = 0; i <= n; ++i) r[i] = c.disks()[i].r();
  const Eigen::VectorXd rr = E.colPivHouseholderQr().solve(r);
  if ((E * rr - r).cwiseAbs().maxCoeff() >= tol) return std::nullopt;

  // Weights and homogeneous centers by forward substitution on rows 0..m,
  // where row i has its last nonzero in column i.
  std::vector<double> w(m + 1), hx(m + 1), hy(m + 1);
  for (int i = 0; i <= m; ++i) {
    const auto& d = c.disks()[i];
    const double wi = c.weights()[i];
    double sw = wi, sx = wi * d.cx(), sy = wi * d.cy();
    for (int j = std::max(0, i - (n - m)); j < i; ++j) {
      sw -= E(i, j) * w[j];
      sx -= E(i, j) * hx[j];
      sy -= E(i, j) * hy[j];
    }
    w[i] = sw / E(i, i);
    hx[i] = sx / E(i, i);
    hy[i] = sy / E(i, i);
    if (!(w[i] > 0.0)) return std::nullopt;
  }

  std::vector<Disk> disks;
  for (int j = 0; j <= m; ++j) {
    double rad = rr[j];
    if (rad < 0.0) {
      if (rad < -tol) return std::nullopt;
      rad = 0.0;
    }
    disks.emplace_back(hx[j] / w[j], hy[j] / w[j], rad);
  }

  // Center check: x(t) w_red(t) = x_red(t) w(t), coefficientwise in degree n + m.
  for (int i = 0; i <= n + m; ++i) {
    const double scale = binomial(m + n, i);
    double lx = 0.0, ly = 0.0, rx = 0.0, ry = 0.0;
    for (int j = std::max(0, i - n); j <= std::min(m, i); ++j) {
      const double coef = binomial(m, j) * binomial(n, i - j) / scale * w[j] * c.weights()[i - j];
      lx += coef * c.disks()[i - j].cx();
      ly += coef * c.disks()[i - j].cy();
      rx += coef * disks[j].cx();
      ry += coef * disks[j].cy();
    }
    if (std::abs(lx - rx) >= tol || std::abs(ly - ry) >= tol) return std::nullopt;
  }
  return DiskRationalBezier(std::move(disks), std::move(w));
}

std::vector<double> uniform_grid(int count) {
  if (count < 2) throw std::invalid_argument("uniform_grid: need at least 2 samples");
  std::vector<double> t(static_cast<std::size_t>(count));
  const double step = 1.0 / static_cast<double>(count - 1);
  for (int j = 0; j < count; ++j) t[j] = j * step;
  t.back() = 1.0;
  return t;
}

CurveSamples sample(const DiskRationalBezier& c, std::span<const double> t) {
  for (double tj : t) check_parameter(tj, "sample");
  const auto n1 = static_cast<std::size_t>(c.degree()) + 1;
  std::vector<double> wx(n1), wy(n1), r(n1);
  const auto w = c.weights();
  for (std::size_t i = 0; i < n1; ++i) {
    const auto& d = c.disks()[i];
    wx[i] = w[i] * d.cx();
    wy[i] = w[i] * d.cy();
    r[i] = d.r();
  }
  CurveSamples out;
  out.t.assign(t.begin(), t.end());
  out.x.resize(t.size());
  out.y.resize(t.size());
  out.r.resize(t.size());
  kernels::eval_batch({wx, wy, w, r}, t, {out.x, out.y, out.r});
  return out;
}

}  // namespace diskbez
