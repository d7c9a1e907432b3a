#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace diskbez {

/// Largest n accepted by binomial(); every C(n, k) with n <= 64 fits in 64 bits.
inline constexpr int kMaxBinomialN = 64;

/// C(n, k) via the multiplicative recurrence in integer arithmetic.
double binomial(int n, int k);

/// B_i^n(t) = C(n,i) t^i (1-t)^(n-i).
double bernstein(int n, int i, double t);

/// All B_0^n(t) .. B_n^n(t) at once. Powers of t and (1-t) are accumulated
/// iteratively rather than through std::pow.
std::vector<double> bernstein_all(int n, double t);

/// R_i^n(t) = w_i B_i^n(t) / sum_j w_j B_j^n(t); all weights must be positive.
double rational_basis(std::span<const double> weights, int i, double t);

/// A polynomial in Bernstein form; degree = coeffs.size() - 1.
class BernsteinPoly {
 public:
  explicit BernsteinPoly(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator()(double t) const;

 private:
  std::vector<double> coeffs_;
};

/// H_ij = int_0^1 B_i^m B_j^m dt, (m+1) x (m+1).
Eigen::MatrixXd gram_same(int m);

/// S_ij = int_0^1 B_i^m B_j^n dt, (m+1) x (n+1).
Eigen::MatrixXd gram_cross(int m, int n);

/// Degree-elevation matrix E, (m+s+1) x (m+1): elevated coefficients are
/// E * coeffs. E_ij = C(m,j) C(s,i-j) / C(m+s,i).
Eigen::MatrixXd elevation_matrix(int m, int s);

}  // namespace diskbez
