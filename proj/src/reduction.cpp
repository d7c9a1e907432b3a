#include "diskbez/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "diskbez/bernstein.hpp"
#include "diskbez/error_metrics.hpp"
#include "diskbez/linalg.hpp"

namespace diskbez {

std::string_view stage_name(ReductionStage stage) {
  switch (stage) {
    case ReductionStage::Config:
      return "config";
    case ReductionStage::Weights:
      return "weights";
    case ReductionStage::Center:
      return "center";
    case ReductionStage::Distance:
      return "distance";
    case ReductionStage::Radius:
      return "radius";
    case ReductionStage::Metrics:
      return "metrics";
  }
  return "unknown";
}

namespace {

Eigen::VectorXd to_vector(std::span<const double> v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

void check_target(int n, int m, const char* who) {
  if (m < 0 || m >= n) {
    throw std::invalid_argument(std::string(who) + ": target degree " + std::to_string(m) +
                                " must be below input degree " + std::to_string(n));
  }
}

}  // namespace

QpProblem weight_problem(std::span<const double> weights, int m, double eps) {
  if (weights.empty()) throw std::invalid_argument("reduce_weights: no weights");
  const int n = static_cast<int>(weights.size()) - 1;
  check_target(n, m, "reduce_weights");
  if (!(eps > 0.0)) throw std::invalid_argument("reduce_weights: eps must be positive");
  QpProblem p;
  p.H = gram_same(m);
  p.c = gram_cross(m, n) * to_vector(weights);
  p.A = Eigen::MatrixXd::Identity(m + 1, m + 1);
  p.b = Eigen::VectorXd::Constant(m + 1, eps);
  return p;
}

CoefficientReduction reduce_weights(std::span<const double> weights, int m, double eps) {
  const QpProblem p = weight_problem(weights, m, eps);
  CoefficientReduction out;
  out.qp = solve_qp(p);
  out.coeffs = to_std(out.qp.x);
  return out;
}

std::vector<Point2> solve_center(const DiskRationalBezier& c, std::span<const double> reduced_weights,
                                 int k, int h) {
  const int n = c.degree();
  const int m = static_cast<int>(reduced_weights.size()) - 1;
  check_target(n, m, "solve_center");
  if (k < 0 || k > 1 || h < 0 || h > 1) {
    throw std::invalid_argument("solve_center: continuity orders must be 0 or 1");
  }
  if (m < k + h + 1) {
    throw std::invalid_argument("solve_center: degree " + std::to_string(m) +
                                " too low for continuity (" + std::to_string(k) + "," +
                                std::to_string(h) + ")");
  }
  if (2 * m + n > kMaxBinomialN) throw std::invalid_argument("solve_center: degree too large");
  for (double w : reduced_weights) {
    if (!(w > 0.0)) throw std::invalid_argument("solve_center: reduced weights must be positive");
  }

  const auto w = c.weights();
  const auto& wr = reduced_weights;
  const auto p = c.disks();

  std::vector<Point2> q(static_cast<std::size_t>(m) + 1);
  q[0] = {p[0].cx(), p[0].cy()};
  q[m] = {p[n].cx(), p[n].cy()};
  if (k == 1) {
    const double f = n * wr[0] * w[1] / (m * w[0] * wr[1]);
    q[1] = {q[0].x + f * (p[1].cx() - p[0].cx()), q[0].y + f * (p[1].cy() - p[0].cy())};
  }
  if (h == 1) {
    const double f = n * w[n - 1] * wr[m] / (m * w[n] * wr[m - 1]);
    q[m - 1] = {q[m].x - f * (p[n].cx() - p[n - 1].cx()), q[m].y - f * (p[n].cy() - p[n - 1].cy())};
  }

  const int first = k + 1;
  const int last = m - h - 1;
  if (last < first) return q;

  // a(l, j) = sum_i C(m,j) C(n,i) / C(2m+n, i+j+l) w_i wr_j
  // b(l, j) = sum_i C(m,j) C(n,i) / C(2m+n, i+j+l) w_i p_i
  const int size = last - first + 1;
  Eigen::MatrixXd M(size, size);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(size, 2);
  for (int l = first; l <= last; ++l) {
    const int row = l - first;
    for (int j = 0; j <= m; ++j) {
      double a = 0.0, bx = 0.0, by = 0.0;
      for (int i = 0; i <= n; ++i) {
        const double g = binomial(m, j) * binomial(n, i) / binomial(2 * m + n, i + j + l) * w[i];
        a += g;
        bx += g * p[i].cx();
        by += g * p[i].cy();
      }
      a *= wr[j];
      rhs(row, 0) += wr[j] * bx;
      rhs(row, 1) += wr[j] * by;
      if (j >= first && j <= last) {
        M(row, j - first) = a;
      } else {
        rhs(row, 0) -= a * q[j].x;
        rhs(row, 1) -= a * q[j].y;
      }
    }
  }
  const Eigen::MatrixXd sol = solve_linear(M, rhs);
  for (int j = first; j <= last; ++j) q[j] = {sol(j - first, 0), sol(j - first, 1)};
  return q;
}

double compute_d(const DiskRationalBezier& original, const DiskRationalBezier& reduced, int samples_M,
                 DistanceMode mode) {
  if (samples_M < 2) throw std::invalid_argument("compute_d: need at least 2 samples");
  const auto grid = uniform_grid(samples_M);
  const auto a = sample(original, grid);
  const auto b = sample(reduced, grid);
  double acc = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double dist = std::hypot(a.x[j] - b.x[j], a.y[j] - b.y[j]);
    acc = mode == DistanceMode::MaxDistance ? std::max(acc, dist) : acc + dist;
  }
  return acc;
}

QpProblem radius_problem(std::span<const double> radii, int m, double d, double eps) {
  if (radii.empty()) throw std::invalid_argument("reduce_radius: no radii");
  const int n = static_cast<int>(radii.size()) - 1;
  check_target(n, m, "reduce_radius");
  if (!(d >= 0.0) || !std::isfinite(d)) throw std::invalid_argument("reduce_radius: d must be >= 0");
  if (!(eps >= 0.0)) throw std::invalid_argument("reduce_radius: eps must be >= 0");
  const Eigen::VectorXd r = to_vector(radii);
  QpProblem p;
  p.H = gram_same(m);
  p.c = gram_cross(m, n) * r;
  p.A = Eigen::MatrixXd(n + 1 + m + 1, m + 1);
  p.A.topRows(n + 1) = elevation_matrix(m, n - m);
  p.A.bottomRows(m + 1) = Eigen::MatrixXd::Identity(m + 1, m + 1);
  p.b = Eigen::VectorXd(n + 1 + m + 1);
  p.b.head(n + 1) = r.array() + d;
  p.b.tail(m + 1).setConstant(eps);
  return p;
}

CoefficientReduction reduce_radius(std::span<const double> radii, int m, double d, double eps) {
  const QpProblem p = radius_problem(radii, m, d, eps);
  CoefficientReduction out;
  out.qp = solve_qp(p);
  out.coeffs = to_std(out.qp.x);
  // The floor keeps coefficients >= eps >= 0 up to rounding.
  for (double& v : out.coeffs) v = std::max(v, 0.0);
  return out;
}

ReductionResult reduce(const DiskRationalBezier& c, const ReductionConfig& cfg) {
  const int n = c.degree();
  if (cfg.m < 1 || cfg.m >= n) {
    throw ReductionError(ReductionStage::Config, "target degree " + std::to_string(cfg.m) +
                                                     " must lie in 1.." + std::to_string(n - 1));
  }
  if (cfg.k < 0 || cfg.k > 1 || cfg.h < 0 || cfg.h > 1) {
    throw ReductionError(ReductionStage::Config, "continuity orders must be 0 or 1");
  }
  if (cfg.m < cfg.k + cfg.h + 1) {
    throw ReductionError(ReductionStage::Config, "target degree too low for the requested continuity");
  }
  if (cfg.samples_M < 2) throw ReductionError(ReductionStage::Config, "samples_M must be >= 2");

  const auto weights = c.weights();
  const auto radii = c.radii();
  const double eps_w = cfg.eps_weight.value_or(1e-6 * *std::max_element(weights.begin(), weights.end()));
  const double eps_r = cfg.eps_radius.value_or(1e-6 * *std::max_element(radii.begin(), radii.end()));

  auto run = [](ReductionStage stage, auto&& fn) {
    try {
      return fn();
    } catch (const ReductionError&) {
      throw;
    } catch (const std::exception& e) {
      throw ReductionError(stage, e.what());
    }
  };

  CoefficientReduction wred =
      run(ReductionStage::Weights, [&] { return reduce_weights(weights, cfg.m, eps_w); });
  const std::vector<Point2> centers =
      run(ReductionStage::Center, [&] { return solve_center(c, wred.coeffs, cfg.k, cfg.h); });

  std::vector<Disk> center_disks;
  center_disks.reserve(centers.size());
  for (const auto& q : centers) center_disks.emplace_back(q.x, q.y, 0.0);
  const DiskRationalBezier center_curve =
      run(ReductionStage::Center, [&] { return DiskRationalBezier(center_disks, wred.coeffs); });

  const double d = run(ReductionStage::Distance,
                       [&] { return compute_d(c, center_curve, cfg.samples_M, cfg.d_mode); });
  CoefficientReduction rred =
      run(ReductionStage::Radius, [&] { return reduce_radius(radii, cfg.m, d, eps_r); });

  std::vector<Disk> disks;
  disks.reserve(centers.size());
  for (std::size_t j = 0; j < centers.size(); ++j) disks.emplace_back(centers[j].x, centers[j].y, rred.coeffs[j]);

  ReductionResult res{DiskRationalBezier(std::move(disks), wred.coeffs), d, 0.0, 0.0,
                      std::move(wred.qp), std::move(rred.qp)};
  const ErrorReport rep = run(ReductionStage::Metrics, [&] { return measure(c, res.reduced, cfg.samples_M); });
  res.max_center_err = rep.max_center_err;
  res.max_radius_err = rep.max_radius_err;
  return res;
}

}  // namespace diskbez
