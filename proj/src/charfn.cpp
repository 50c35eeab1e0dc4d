#include "hyperball/charfn.hpp"

#include <cmath>
#include <numbers>

#include "hyperball/errors.hpp"
#include "hyperball/quadrature.hpp"
#include "hyperball/specialfn.hpp"

namespace hyperball::charfn {

double charfn_hyp(Dimension n, double t) {
  if (!std::isfinite(t)) throw DomainError("charfn_hyp: t must be finite");
  const double nd = n.as_double();
  return specialfn::hyp0f1(0.5 * nd + 1.0, -(nd + 2.0) * t * t * 0.25);
}

double charfn_bessel(Dimension n, double t) {
  if (t == 0.0) throw DomainError("charfn_bessel: prefactor is singular at t = 0");
  if (!std::isfinite(t)) throw DomainError("charfn_bessel: t must be finite");
  if (std::fabs(t) < 1e-8) return charfn_hyp(n, t);

  const double nu = 0.5 * n.as_double();
  const double arg = std::sqrt(n.as_double() + 2.0) * std::fabs(t);
  const double log_prefactor = specialfn::log_gamma(nu + 1.0) + nu * std::log(2.0 / arg);
  return std::exp(log_prefactor) * specialfn::bessel_j(nu, arg);
}

ComplexParts charfn_quad_parts(Dimension n, double t, double quad_tol) {
  if (n.value() > 50) throw DomainError("charfn_quad: n must be <= 50");
  if (!(quad_tol > 0.0)) throw DomainError("charfn_quad: quad_tol must be positive");

  const double nd = n.as_double();
  const double half_width = std::sqrt(nd + 2.0);
  // C = Gamma(n/2+1) / (Gamma((n+1)/2) (n+2)^(n/2) sqrt(pi)) in front of
  // the integral of (n+2 - z^2)^((n-1)/2) e^{itz} over |z| <= sqrt(n+2).
  const double log_c = specialfn::log_gamma_ratio(0.5 * (nd + 1.0), 0.5) -
                       0.5 * nd * std::log(nd + 2.0) - 0.5 * std::log(std::numbers::pi);
  // With z = sqrt(n+2) sin u the kernel becomes (n+2)^(n/2) cos^n u du.
  const double scale = std::exp(log_c + 0.5 * nd * std::log(nd + 2.0));

  constexpr double half_pi = 0.5 * std::numbers::pi;
  const quad::QuadOptions opts{.rel_tol = 1e-15, .abs_tol = 0.1 * quad_tol / scale};
  auto kernel = [nd](double u) { return std::pow(std::cos(u), nd); };
  const double re = quad::integrate(
      [&](double u) { return kernel(u) * std::cos(t * half_width * std::sin(u)); }, -half_pi,
      half_pi, opts).value;
  const double im = quad::integrate(
      [&](double u) { return kernel(u) * std::sin(t * half_width * std::sin(u)); }, -half_pi,
      half_pi, opts).value;
  return {scale * re, scale * im};
}

double charfn_quad(Dimension n, double t, double quad_tol) {
  const ComplexParts parts = charfn_quad_parts(n, t, quad_tol);
  if (std::fabs(parts.imag) > quad_tol) {
    throw ConvergenceError("charfn_quad: imaginary part did not vanish");
  }
  return parts.real;
}

double charfn_gauss_limit(double t) { return std::exp(-0.5 * t * t); }

double series_term_ratio(Dimension n, unsigned k) {
  const double base = 0.5 * n.as_double() + 1.0;
  const double dk = static_cast<double>(k);
  return std::exp(dk * std::log(base) - specialfn::log_gamma_ratio(base, dk));
}

CharFnEval evaluate(Dimension n, double t) { return {n, t, charfn_hyp(n, t)}; }

} // namespace hyperball::charfn
