#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskbez/disk_bezier.hpp"
#include "diskbez/qp.hpp"

namespace diskbez {

/// How the sampled center displacement d is aggregated over the grid.
enum class DistanceMode {
  MaxDistance,  // max_j ||p(t_j) - q(t_j)||
  SumDistance,  // sum_j ||p(t_j) - q(t_j)||
};

struct ReductionConfig {
  int m = 1;          // target degree
  int k = 0;          // continuity order at t = 0 (0 or 1)
  int h = 0;          // continuity order at t = 1 (0 or 1)
  int samples_M = 1001;
  DistanceMode d_mode = DistanceMode::MaxDistance;
  /// Positivity floors; unset means 1e-6 times the largest input weight / radius.
  std::optional<double> eps_weight;
  std::optional<double> eps_radius;
};

struct ReductionResult {
  DiskRationalBezier reduced;
  double d = 0.0;
  double max_center_err = 0.0;
  double max_radius_err = 0.0;
  QpSolution weight_qp;
  QpSolution radius_qp;
};

enum class ReductionStage { Config, Weights, Center, Distance, Radius, Metrics };

std::string_view stage_name(ReductionStage stage);

/// A failure inside reduce(), tagged with the pipeline stage that raised it.
class ReductionError : public std::runtime_error {
 public:
  ReductionError(ReductionStage stage, const std::string& what)
      : std::runtime_error(std::string(stage_name(stage)) + ": " + what), stage_(stage) {}
  ReductionStage stage() const { return stage_; }

 private:
  ReductionStage stage_;
};

/// Reduced Bernstein coefficients together with the QP that produced them.
struct CoefficientReduction {
  std::vector<double> coeffs;
  QpSolution qp;
};

/// L2 projection QP for the weights: min w'Hw - 2 w'S w_orig s.t. w >= eps.
QpProblem weight_problem(std::span<const double> weights, int m, double eps);

CoefficientReduction reduce_weights(std::span<const double> weights, int m, double eps);

/// Center controls of the reduced curve for the given reduced weights. The
/// endpoints (and, for k/h = 1, their neighbours) come from closed forms; the
/// rest solve the weighted normal equations, one matrix shared by x and y.
std::vector<Point2> solve_center(const DiskRationalBezier& c, std::span<const double> reduced_weights,
                                 int k, int h);

/// Sampled center displacement between two curves (radii ignored).
double compute_d(const DiskRationalBezier& original, const DiskRationalBezier& reduced, int samples_M,
                 DistanceMode mode);

/// Radius QP: min r'Hr - 2 r'S r_orig s.t. elevate(r)_i >= r_orig_i + d, r_j >= eps.
QpProblem radius_problem(std::span<const double> radii, int m, double d, double eps);

CoefficientReduction reduce_radius(std::span<const double> radii, int m, double d, double eps);

/// Weights QP, then center solve, then d, then radius QP.
ReductionResult reduce(const DiskRationalBezier& c, const ReductionConfig& cfg);

}  // namespace diskbez
