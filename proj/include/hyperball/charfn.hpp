#pragma once

#include "hyperball/geometry.hpp"

namespace hyperball::charfn {

/// A characteristic-function value. The law of z = sqrt(n+2) x is
/// symmetric, so the value is real, bounded by 1, and equals 1 at t = 0.
struct CharFnEval {
  Dimension n;
  double t;
  double value;
};

/// E[exp(i t z)] for z = sqrt(n+2) x as 0F1(; n/2 + 1; -(n+2) t^2 / 4).
double charfn_hyp(Dimension n, double t);

/// Same quantity via the Bessel form
///   Gamma(n/2 + 1) (2 / (sqrt(n+2) t))^(n/2) J_{n/2}(sqrt(n+2) t).
/// Throws DomainError at t = 0; |t| < 1e-8 is delegated to charfn_hyp since
/// the prefactor is singular there.
double charfn_bessel(Dimension n, double t);

struct ComplexParts {
  double real;
  double imag;
};

/// Direct quadrature of E[exp(i t z)] against the density of z, both parts.
/// Oracle route; 1 <= n <= 50.
ComplexParts charfn_quad_parts(Dimension n, double t, double quad_tol = 1e-10);

/// Real part of charfn_quad_parts. Throws ConvergenceError if the sine part
/// does not vanish to within quad_tol.
double charfn_quad(Dimension n, double t, double quad_tol = 1e-10);

/// exp(-t^2 / 2), the standard normal characteristic function.
double charfn_gauss_limit(double t);

/// The k-th series coefficient of charfn_hyp relative to that of the
/// Gaussian limit: (n/2+1)^k Gamma(n/2+1) / Gamma(n/2+1+k). Tends to 1 as
/// n grows for fixed k.
double series_term_ratio(Dimension n, unsigned k);

CharFnEval evaluate(Dimension n, double t);

} // namespace hyperball::charfn
