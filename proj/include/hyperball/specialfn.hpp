#pragma once

#include <cstddef>

namespace hyperball::specialfn {

/// Truncation policy for power series.
///
/// A series stops once the absolute ratio of consecutive terms has been
/// below `rel_tol` twice in a row. Exhausting `max_terms` first raises
/// ConvergenceError.
struct SeriesControl {
  std::size_t max_terms = 500;
  double rel_tol = 1e-15;

  /// Throws DomainError unless max_terms >= 1 and 0 < rel_tol < 1.
  void validate() const;
};

/// Gamma function for z > 0. Relative error below 1e-13 on (0, 170];
/// throws OverflowError once the result leaves the double range.
double gamma(double z);

/// ln Gamma(z) for z > 0.
double log_gamma(double z);

/// ln Gamma(x + a) - ln Gamma(x) for x > 0, x + a > 0, evaluated without
/// the cancellation of differencing two large log-gammas.
double log_gamma_ratio(double x, double a);

/// ln B(a, b).
double log_beta(double a, double b);

/// Rising factorial (b)_k = b (b+1) ... (b+k-1).
double pochhammer(double b, unsigned k);

/// Confluent hypergeometric limit function 0F1(;b;z) = sum z^k / ((b)_k k!).
///
/// Summed in double-double. For large negative z/b the terms grow to
/// ~exp(2 sqrt|z|) before cancelling; when that leaves fewer than about
/// eight significant digits ConvergenceError is raised instead of a result.
double hyp0f1(double b, double z, const SeriesControl& ctl = {});

/// Bessel function of the first kind J_nu(z), nu >= 0, z >= 0, evaluated
/// through J_nu(z) = (z/2)^nu / Gamma(nu+1) * 0F1(; nu+1; -z^2/4).
double bessel_j(double nu, double z, const SeriesControl& ctl = {});

/// Both tails of the Beta(a, b) CDF at x. The caller supplies y = 1 - x so
/// that an accurately known complement (e.g. (1-u)(1+u) for x = u^2) is not
/// rounded away.
struct BetaTails {
  double lower; ///< I_x(a, b)
  double upper; ///< 1 - I_x(a, b)
};
BetaTails inc_beta_tails(double a, double b, double x, double y);

/// Regularized incomplete beta function I_x(a, b), continued-fraction
/// evaluation with the usual symmetry swap.
double reg_inc_beta(double a, double b, double x);

/// Upper tail 1 - I_x(a, b), computed without cancellation.
double reg_inc_beta_complement(double a, double b, double x);

} // namespace hyperball::specialfn
