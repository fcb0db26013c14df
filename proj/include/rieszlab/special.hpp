#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace rieszlab {

/// Volume of the unit ball of (possibly fractional) dimension beta,
/// pi^{beta/2} / Gamma(beta/2 + 1).
inline double unit_ball_volume(double beta) {
  return std::pow(std::numbers::pi, beta / 2.0) / std::tgamma(beta / 2.0 + 1.0);
}

/// Normalization constant of the order-alpha fractional integral kernel in
/// dimension dim: pi^{dim/2} 2^alpha Gamma(alpha/2) / Gamma((dim-alpha)/2).
inline double riesz_normalization(int dim, double alpha) {
  return std::pow(std::numbers::pi, dim / 2.0) * std::pow(2.0, alpha) *
         std::tgamma(alpha / 2.0) / std::tgamma((dim - alpha) / 2.0);
}

/// sup_{x>0} x^{1/x} = e^{1/e}.  Uniform bound for the exchange factor
/// (qt/p)^{1/qt - 1/q} that appears when lowering the second Lorentz exponent.
inline double calderon_constant() { return std::exp(1.0 / std::numbers::e); }

/// n geometrically spaced points from lo to hi inclusive; requires 0 < lo < hi.
inline std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  std::vector<double> out;
  if (!(hi > lo) || !(lo > 0.0) || n == 0) return out;
  if (n == 1) return {hi};
  out.reserve(n);
  const double step = std::log(hi / lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(lo * std::exp(step * static_cast<double>(i)));
  return out;
}

}  // namespace rieszlab
