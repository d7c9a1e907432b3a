#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace diskbez {

/// Condition-number estimate above which solve_linear refuses to answer.
inline constexpr double kMaxConditionEstimate = 1e12;

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, double condition_estimate)
      : std::runtime_error(what), condition_estimate_(condition_estimate) {}
  double condition_estimate() const { return condition_estimate_; }

 private:
  double condition_estimate_;
};

/// Solves M X = rhs (one or more right-hand-side columns) by LU with partial
/// pivoting. Throws SingularMatrixError when the 1-norm condition estimate
/// exceeds kMaxConditionEstimate.
Eigen::MatrixXd solve_linear(const Eigen::MatrixXd& M, const Eigen::MatrixXd& rhs);

inline Eigen::VectorXd solve_linear(const Eigen::MatrixXd& M, const Eigen::VectorXd& rhs) {
  return solve_linear(M, Eigen::MatrixXd(rhs)).col(0);
}

}  // namespace diskbez
