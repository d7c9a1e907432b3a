#include "diskbez/qp.hpp"

#include <algorithm>
#include <cmath>

#include "diskbez/linalg.hpp"

namespace diskbez {

double KktReport::max() const { return std::max({stationarity, primal, dual, complementarity}); }

double qp_objective(const QpProblem& problem, const Eigen::VectorXd& x) {
  return x.dot(problem.H * x) - 2.0 * problem.c.dot(x);
}

KktReport check_kkt(const QpProblem& problem, const Eigen::VectorXd& x,
                    const Eigen::VectorXd& multipliers) {
  KktReport rep;
  Eigen::VectorXd grad = 2.0 * problem.H * x - 2.0 * problem.c;
  if (problem.A.rows() > 0) grad -= problem.A.transpose() * multipliers;
  rep.stationarity = grad.cwiseAbs().maxCoeff();
  if (problem.A.rows() > 0) {
    const Eigen::VectorXd slack = problem.A * x - problem.b;
    rep.primal = std::max(0.0, -slack.minCoeff());
    rep.dual = std::max(0.0, -multipliers.minCoeff());
    rep.complementarity = multipliers.cwiseProduct(slack).cwiseAbs().maxCoeff();
  }
  return rep;
}

namespace {

void validate(const QpProblem& p) {
  const auto n = p.H.rows();
  if (n == 0 || p.H.cols() != n) throw std::invalid_argument("solve_qp: H must be square and nonempty");
  if (p.c.size() != n) throw std::invalid_argument("solve_qp: c has the wrong length");
  if (p.A.rows() > 0 && p.A.cols() != n) throw std::invalid_argument("solve_qp: A has the wrong column count");
  if (p.b.size() != p.A.rows()) throw std::invalid_argument("solve_qp: b has the wrong length");
  if (!p.H.allFinite() || !p.c.allFinite() || !p.A.allFinite() || !p.b.allFinite()) {
    throw std::invalid_argument("solve_qp: non-finite input");
  }
  const double hmax = std::max(1.0, p.H.cwiseAbs().maxCoeff());
  if ((p.H - p.H.transpose()).cwiseAbs().maxCoeff() > 1e-12 * hmax) {
    throw std::invalid_argument("solve_qp: H is not symmetric");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(p.H, Eigen::EigenvaluesOnly);
  if (!(eig.eigenvalues().minCoeff() > 0.0)) {
    throw std::invalid_argument("solve_qp: H is not positive definite");
  }
}

struct EqpSolution {
  Eigen::VectorXd x;
  Eigen::VectorXd lambda;  // indexed like the working set
};

// Minimizer of the objective with the working-set rows held as equalities.
EqpSolution solve_eqp(const QpProblem& p, const std::vector<int>& working) {
  const auto n = p.H.rows();
  const auto k = static_cast<Eigen::Index>(working.size());
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n + k, n + k);
  Eigen::VectorXd rhs(n + k);
  K.topLeftCorner(n, n) = 2.0 * p.H;
  rhs.head(n) = 2.0 * p.c;
  for (Eigen::Index a = 0; a < k; ++a) {
    const auto row = p.A.row(working[a]);
    K.block(0, n + a, n, 1) = -row.transpose();
    K.block(n + a, 0, 1, n) = row;
    rhs[n + a] = p.b[working[a]];
  }
  const Eigen::VectorXd sol = solve_linear(K, rhs);
  return {sol.head(n), sol.tail(k)};
}

// Whether row i of A lies in the span of the working-set rows.
bool depends_on(const Eigen::MatrixXd& A, const std::vector<int>& working, Eigen::Index i) {
  if (working.empty()) return false;
  if (static_cast<Eigen::Index>(working.size()) >= A.cols()) return true;
  Eigen::MatrixXd W(A.cols(), static_cast<Eigen::Index>(working.size()));
  for (std::size_t a = 0; a < working.size(); ++a) W.col(static_cast<Eigen::Index>(a)) = A.row(working[a]).transpose();
  const Eigen::VectorXd v = A.row(i).transpose();
  const Eigen::VectorXd coef = W.colPivHouseholderQr().solve(v);
  return (W * coef - v).norm() <= 1e-10 * v.norm();
}

// Active-set iterations from a feasible starting point.
QpSolution active_set(const QpProblem& p, Eigen::VectorXd x) {
  const auto n = p.H.rows();
  const auto q = p.A.rows();
  std::vector<int> working;
  std::vector<double> row_norm(static_cast<std::size_t>(q));
  for (Eigen::Index i = 0; i < q; ++i) row_norm[i] = p.A.row(i).norm();

  const double gscale = 1.0 + 2.0 * p.c.cwiseAbs().maxCoeff();
  const int max_iter = 100 + 20 * static_cast<int>(n + q);

  for (int iter = 1; iter <= max_iter; ++iter) {
    EqpSolution eqp = solve_eqp(p, working);
    const Eigen::VectorXd step = eqp.x - x;
    const double xscale = 1.0 + std::max(x.cwiseAbs().maxCoeff(), eqp.x.cwiseAbs().maxCoeff());

    if (step.cwiseAbs().maxCoeff() <= 1e-12 * xscale) {
      x = eqp.x;
      int release = -1;
      double most_negative = -1e-11 * gscale;
      for (std::size_t a = 0; a < working.size(); ++a) {
        if (eqp.lambda[a] < most_negative) {
          most_negative = eqp.lambda[a];
          release = static_cast<int>(a);
        }
      }
      if (release < 0) {
        QpSolution sol;
        sol.x = x;
        sol.multipliers = Eigen::VectorXd::Zero(q);
        for (std::size_t a = 0; a < working.size(); ++a) {
          sol.multipliers[working[a]] = std::max(0.0, eqp.lambda[a]);
        }
        sol.active_set = working;
        std::sort(sol.active_set.begin(), sol.active_set.end());
        sol.iterations = iter;
        return sol;
      }
      working.erase(working.begin() + release);
      continue;
    }

    double alpha = 1.0;
    int blocking = -1;
    const double step_norm = step.norm();
    for (Eigen::Index i = 0; i < q; ++i) {
      if (std::find(working.begin(), working.end(), static_cast<int>(i)) != working.end()) continue;
      const double ap = p.A.row(i).dot(step);
      if (ap >= -1e-14 * row_norm[i] * step_norm) continue;
      // A row spanned by the working set has a.p = 0 in exact arithmetic; a
      // round-off negative must not make it block, or the KKT matrix goes singular.
      if (depends_on(p.A, working, i)) continue;
      const double slack = std::max(0.0, p.A.row(i).dot(x) - p.b[i]);
      const double ratio = slack / -ap;
      if (ratio < alpha) {
        alpha = ratio;
        blocking = static_cast<int>(i);
      }
    }
    x += alpha * step;
    if (blocking >= 0) working.push_back(blocking);
  }
  throw std::runtime_error("solve_qp: active-set iteration limit reached");
}

// Phase one: min ||x - x0||^2 + s^2 + 2 M s  s.t.  A_unit x + s >= b_unit, s >= 0.
// The linear penalty is exact, so s ends at 0 whenever Ax >= b is nonempty
// and M dominates the projection multipliers.
Eigen::VectorXd phase_one(const QpProblem& p, const Eigen::VectorXd& x0) {
  const auto n = p.H.rows();
  const auto q = p.A.rows();
  Eigen::MatrixXd Au(q, n);
  Eigen::VectorXd bu(q);
  for (Eigen::Index i = 0; i < q; ++i) {
    const double norm = p.A.row(i).norm();
    if (norm == 0.0) {
      if (p.b[i] > 0.0) {
        throw QpInfeasibleError("solve_qp: constraint row " + std::to_string(i) + " reads 0 >= " +
                                    std::to_string(p.b[i]),
                                static_cast<int>(i), p.b[i]);
      }
      Au.row(i).setZero();
      bu[i] = 0.0;
      continue;
    }
    Au.row(i) = p.A.row(i) / norm;
    bu[i] = p.b[i] / norm;
  }
  const double shift0 = std::max(0.0, (bu - Au * x0).maxCoeff());

  QpProblem aux;
  aux.H = Eigen::MatrixXd::Identity(n + 1, n + 1);
  aux.A = Eigen::MatrixXd::Zero(q + 1, n + 1);
  aux.A.topLeftCorner(q, n) = Au;
  aux.A.block(0, n, q, 1).setOnes();
  aux.A(q, n) = 1.0;
  aux.b = Eigen::VectorXd::Zero(q + 1);
  aux.b.head(q) = bu;

  // Start small: a large penalty costs precision in x. Too small a penalty
  // shows up as s > 0 and is retried.
  double penalty = 10.0 * (1.0 + shift0);
  Eigen::VectorXd z(n + 1);
  std::vector<int> active;
  for (int attempt = 0; attempt < 5; ++attempt, penalty *= 1e3) {
    aux.c = Eigen::VectorXd(n + 1);
    aux.c.head(n) = x0;
    aux.c[n] = -penalty;
    z.head(n) = x0;
    z[n] = shift0;
    QpSolution sol = active_set(aux, z);
    z = sol.x;
    active = std::move(sol.active_set);
    // rows are unit length, so s is a distance
    if (z[n] <= 1e-9 * (1.0 + shift0)) break;
  }
  Eigen::VectorXd x = z.head(n);

  // Polish: move x onto the rows that were active with s = 0, removing the
  // round-off the penalty scale left behind.
  active.erase(std::remove(active.begin(), active.end(), static_cast<int>(q)), active.end());
  if (!active.empty()) {
    Eigen::MatrixXd Aw(static_cast<Eigen::Index>(active.size()), n);
    Eigen::VectorXd rw(Aw.rows());
    for (Eigen::Index a = 0; a < Aw.rows(); ++a) {
      Aw.row(a) = Au.row(active[a]);
      rw[a] = bu[active[a]] - Au.row(active[a]).dot(x);
    }
    try {
      x += Aw.transpose() * solve_linear(Aw * Aw.transpose(), rw);
    } catch (const SingularMatrixError&) {
      // keep the unpolished point; the check below decides
    }
  }

  const Eigen::VectorXd slack = p.A * x - p.b;
  Eigen::Index worst = 0;
  const double min_slack = slack.minCoeff(&worst);
  const double tol = 1e-9 * (1.0 + p.b.cwiseAbs().maxCoeff());
  if (min_slack < -tol) {
    throw QpInfeasibleError("solve_qp: constraints are infeasible; row " + std::to_string(worst) +
                                " violated by " + std::to_string(-min_slack),
                            static_cast<int>(worst), -min_slack);
  }
  return x;
}

}  // namespace

QpSolution solve_qp(const QpProblem& problem) {
  validate(problem);
  const Eigen::VectorXd unconstrained = solve_linear(problem.H, problem.c);
  Eigen::VectorXd start = unconstrained;
  if (problem.A.rows() > 0) {
    const Eigen::VectorXd slack = problem.A * unconstrained - problem.b;
    if (slack.minCoeff() < 0.0) start = phase_one(problem, unconstrained);
  }
  QpSolution sol = active_set(problem, start);
  sol.objective = qp_objective(problem, sol.x);
  sol.kkt_residual = check_kkt(problem, sol.x, sol.multipliers).max();
  return sol;
}

}  // namespace diskbez
