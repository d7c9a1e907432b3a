#include "diskbez/linalg.hpp"

#include <cmath>
#include <limits>

namespace diskbez {

Eigen::MatrixXd solve_linear(const Eigen::MatrixXd& M, const Eigen::MatrixXd& rhs) {
  if (M.rows() != M.cols()) throw std::invalid_argument("solve_linear: matrix is not square");
  if (rhs.rows() != M.rows()) throw std::invalid_argument("solve_linear: rhs row count mismatch");
  if (M.rows() == 0) return Eigen::MatrixXd(0, rhs.cols());
  if (!M.allFinite() || !rhs.allFinite()) throw std::invalid_argument("solve_linear: non-finite input");

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
  const double rcond = lu.rcond();
  const double cond = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
  if (!(cond <= kMaxConditionEstimate)) {
    throw SingularMatrixError("solve_linear: matrix is singular or ill-conditioned (condition estimate " +
                                  std::to_string(cond) + ")",
                              cond);
  }
  return lu.solve(rhs);
}

}  // namespace diskbez
