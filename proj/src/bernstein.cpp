#include "diskbez/bernstein.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace diskbez {

double binomial(int n, int k) {
  if (n < 0 || n > kMaxBinomialN || k < 0 || k > n) {
    throw std::invalid_argument("binomial: (" + std::to_string(n) + ", " + std::to_string(k) +
                                ") out of range");
  }
  if (k > n - k) k = n - k;
  // acc * (n - k + i) is divisible by i at every step; the product needs more
  // than 64 bits near C(64, 32).
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<double>(static_cast<std::uint64_t>(acc));
}

std::vector<double> bernstein_all(int n, double t) {
  if (n < 0) throw std::invalid_argument("bernstein: negative degree");
  const double s = 1.0 - t;
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  // first pass: t^i
  double p = 1.0;
  for (int i = 0; i <= n; ++i) {
    out[i] = p;
    p *= t;
  }
  // second pass: (1-t)^(n-i) from the top down, times C(n,i)
  double q = 1.0;
  for (int i = n; i >= 0; --i) {
    out[i] *= q * binomial(n, i);
    q *= s;
  }
  return out;
}

double bernstein(int n, int i, double t) {
  if (n < 0 || i < 0 || i > n) {
    throw std::invalid_argument("bernstein: index " + std::to_string(i) + " outside 0.." +
                                std::to_string(n));
  }
  return bernstein_all(n, t)[i];
}

double rational_basis(std::span<const double> weights, int i, double t) {
  if (weights.empty()) throw std::invalid_argument("rational_basis: no weights");
  const int n = static_cast<int>(weights.size()) - 1;
  if (i < 0 || i > n) throw std::invalid_argument("rational_basis: index out of range");
  for (double w : weights) {
    if (!(w > 0.0)) throw std::invalid_argument("rational_basis: weights must be positive");
  }
  const auto b = bernstein_all(n, t);
  double denom = 0.0;
  for (int j = 0; j <= n; ++j) denom += weights[j] * b[j];
  return weights[i] * b[i] / denom;
}

BernsteinPoly::BernsteinPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("BernsteinPoly: no coefficients");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw std::invalid_argument("BernsteinPoly: non-finite coefficient");
  }
}

double BernsteinPoly::operator()(double t) const {
  const auto b = bernstein_all(degree(), t);
  double v = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v += coeffs_[i] * b[i];
  return v;
}

Eigen::MatrixXd gram_cross(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("gram_cross: negative degree");
  Eigen::MatrixXd S(m + 1, n + 1);
  const double scale = 1.0 / static_cast<double>(m + n + 1);
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) {
      S(i, j) = binomial(m, i) * binomial(n, j) / binomial(m + n, i + j) * scale;
    }
  }
  return S;
}

Eigen::MatrixXd gram_same(int m) { return gram_cross(m, m); }

Eigen::MatrixXd elevation_matrix(int m, int s) {
  if (m < 0 || s < 0) throw std::invalid_argument("elevation_matrix: negative degree");
  Eigen::MatrixXd E = Eigen::MatrixXd::Zero(m + s + 1, m + 1);
  for (int i = 0; i <= m + s; ++i) {
    for (int j = std::max(0, i - s); j <= std::min(m, i); ++j) {
      E(i, j) = binomial(m, j) * binomial(s, i - j) / binomial(m + s, i);
    }
  }
  return E;
}

}  // namespace diskbez
