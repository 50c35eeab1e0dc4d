#include "hyperball/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "double_double.hpp"
#include "hyperball/errors.hpp"
#include "hyperball/quadrature.hpp"
#include "hyperball/specialfn.hpp"

namespace hyperball {

Dimension::Dimension(long long n) : n_(0) {
  if (n < 1) throw DomainError("dimension must be >= 1, got " + std::to_string(n));
  if (n > std::numeric_limits<int>::max()) throw DomainError("dimension too large");
  n_ = static_cast<int>(n);
}

} // namespace hyperball

namespace hyperball::geometry {

double log_ball_volume(Dimension n) {
  const double half_n = 0.5 * n.as_double();
  return half_n * std::log(std::numbers::pi) - specialfn::log_gamma(half_n + 1.0);
}

double ball_volume(Dimension n) {
  // Gamma(n/2 + 1) overflows past n = 340; stay in log space well before.
  if (n.value() > 170) return std::exp(log_ball_volume(n));
  // pi^(n/2) / Gamma(n/2 + 1) in double-double. For odd n the sqrt(pi) of
  // the numerator cancels the one in Gamma(m + 3/2).
  const int m = n.value() / 2;
  detail::DoubleDouble num(1.0);
  for (int i = 0; i < m; ++i) num = num * detail::kPi;
  detail::DoubleDouble den(1.0);
  if (n.value() % 2 == 0) {
    for (int k = 2; k <= m; ++k) den = den * static_cast<double>(k);
  } else {
    for (int k = 0; k <= m; ++k) den = den * (k + 0.5);
  }
  return (num / den).value();
}

double ball_volume_by_recursion(Dimension n, double quad_tol) {
  if (n.value() < 2 || n.value() > 50) {
    throw DomainError("ball_volume_by_recursion: n must lie in [2, 50]");
  }
  if (!(quad_tol > 0.0)) throw DomainError("ball_volume_by_recursion: quad_tol must be positive");

  const double slice_exponent = n.as_double() - 1.0;
  const double slice_base = ball_volume(Dimension(n.value() - 1));
  // Slice volume V_{n-1} (1 - x^2)^((n-1)/2); with x = sin u the chord
  // length is cos u exactly, which avoids forming 1 - x^2 near the poles.
  auto integrand = [&](double u) { return std::pow(std::cos(u), slice_exponent) * std::cos(u); };
  constexpr double half_pi = 0.5 * std::numbers::pi;
  const quad::QuadResult r =
      quad::integrate(integrand, -half_pi, half_pi, {.rel_tol = quad_tol * 0.1, .abs_tol = 0.0});
  return slice_base * r.value;
}

double cube_ratio(Dimension n) {
  if (n.value() == 1) return 1.0;
  return std::exp(log_ball_volume(n) - n.as_double() * std::numbers::ln2);
}

} // namespace hyperball::geometry
