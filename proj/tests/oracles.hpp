#pragma once

// Test-only reference routines. They share no code with the library so
// they can serve as independent checks of it.

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

/// Double-exponential (tanh-sinh) quadrature over [a, b]. Nodes approach
/// the endpoints through their distance to them, so integrable endpoint
/// singularities are fine as long as f is finite in the open interval.
inline double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-14) {
  const double half = 0.5 * (b - a);
  const double center = 0.5 * (a + b);
  constexpr double t_max = 5.0;
  auto contribution = [&](double t) {
    const double u = 0.5 * std::numbers::pi * std::sinh(t);
    const double e = std::exp(2.0 * u);
    const double delta = 2.0 * half / (e + 1.0); // distance to the nearer endpoint
    const double cu = std::cosh(u);
    const double w = half * 0.5 * std::numbers::pi * std::cosh(t) / (cu * cu);
    if (!(w > 0.0) || !std::isfinite(w) || delta <= 0.0) return 0.0;
    const double left = a + delta;
    const double right = b - delta;
    if (t == 0.0) return w * f(center);
    return w * (f(left) + f(right));
  };

  double h = 1.0;
  double sum = contribution(0.0);
  for (double t = h; t <= t_max; t += h) sum += contribution(t);
  double estimate = sum * h;
  for (int level = 0; level < 12; ++level) {
    h *= 0.5;
    for (double t = h; t <= t_max; t += 2.0 * h) sum += contribution(t);
    const double next = sum * h;
    if (std::fabs(next - estimate) <= tol * std::max(1.0, std::fabs(next))) return next;
    estimate = next;
  }
  return estimate;
}

/// Gamma(z) for half-integer or integer z >= 1/2 by the recurrence from
/// Gamma(1/2) = sqrt(pi) or Gamma(1) = 1.
inline double gamma_by_recurrence(double z) {
  double base = (z == std::floor(z)) ? 1.0 : 0.5;
  double value = (base == 1.0) ? 1.0 : std::sqrt(std::numbers::pi);
  while (base < z) {
    value *= base;
    base += 1.0;
  }
  return value;
}

/// sum_{k=1}^{m} ln k.
inline double log_factorial(int m) {
  double s = 0.0;
  for (int k = 2; k <= m; ++k) s += std::log(static_cast<double>(k));
  return s;
}

inline std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

} // namespace oracle
