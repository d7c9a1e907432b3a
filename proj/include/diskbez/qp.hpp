#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace diskbez {

/// min_x  x' H x - 2 c' x   subject to  A x >= b
///
/// H must be symmetric positive definite. A may have zero rows.
struct QpProblem {
  Eigen::MatrixXd H;
  Eigen::VectorXd c;
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
};

struct QpSolution {
  Eigen::VectorXd x;
  /// One multiplier per inequality row; zero for rows outside the active set.
  Eigen::VectorXd multipliers;
  /// Rows held as equalities at termination, ascending.
  std::vector<int> active_set;
  double kkt_residual = 0.0;
  double objective = 0.0;
  int iterations = 0;
};

/// Componentwise KKT violations of a candidate (x, multipliers).
struct KktReport {
  double stationarity = 0.0;      // ||2Hx - 2c - A' lambda||_inf
  double primal = 0.0;            // max(0, b - Ax)
  double dual = 0.0;              // max(0, -lambda)
  double complementarity = 0.0;   // max |lambda_i (Ax - b)_i|
  double max() const;
};

class QpInfeasibleError : public std::runtime_error {
 public:
  QpInfeasibleError(const std::string& what, int row, double violation)
      : std::runtime_error(what), row_(row), violation_(violation) {}
  /// Constraint row most violated by the best point phase one found.
  int row() const { return row_; }
  double violation() const { return violation_; }

 private:
  int row_;
  double violation_;
};

/// Primal active-set method started from a feasible point produced by a
/// phase-one shifted least-squares problem. Ties among blocking or
/// releasable constraints go to the lowest row index.
///
/// Throws std::invalid_argument for inconsistent shapes or an H that is not
/// symmetric positive definite, QpInfeasibleError when Ax >= b is empty.
QpSolution solve_qp(const QpProblem& problem);

double qp_objective(const QpProblem& problem, const Eigen::VectorXd& x);

KktReport check_kkt(const QpProblem& problem, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& multipliers);

}  // namespace diskbez
