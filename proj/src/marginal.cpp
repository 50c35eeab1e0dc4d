#include "hyperball/marginal.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hyperball/errors.hpp"
#include "hyperball/specialfn.hpp"

namespace hyperball::marginal {

namespace {

// ln(1 - x^2) for |x| < 1.
double log_one_minus_square(double x) {
  const double ax = std::fabs(x);
  if (ax <= 0.5) return std::log1p(-ax * ax);
  return std::log((1.0 - ax) * (1.0 + ax));
}

} // namespace

MarginalDist::MarginalDist(Dimension n)
    : n_(n),
      log_norm_(specialfn::log_gamma_ratio(0.5 * (n.as_double() + 1.0), 0.5) -
                0.5 * std::log(std::numbers::pi)) {}

double pdf(const MarginalDist& d, double x) {
  const double ax = std::fabs(x);
  if (!(ax <= 1.0)) return 0.0;
  if (d.dimension().value() == 1) return 0.5;
  if (ax == 1.0) return 0.0;
  const double exponent = 0.5 * (d.dimension().as_double() - 1.0);
  return std::exp(d.log_norm() + exponent * log_one_minus_square(ax));
}

double log_pdf(const MarginalDist& d, double x) {
  if (!(std::fabs(x) < 1.0)) throw DomainError("log_pdf: |x| must be < 1");
  const double exponent = 0.5 * (d.dimension().as_double() - 1.0);
  if (exponent == 0.0) return d.log_norm();
  return d.log_norm() + exponent * log_one_minus_square(x);
}

double cdf(const MarginalDist& d, double x) {
  if (std::isnan(x)) throw DomainError("cdf: x is NaN");
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (x == 0.0) return 0.5;
  const double ax = std::fabs(x);
  const double b = 0.5 * (d.dimension().as_double() + 1.0);
  const auto tails = specialfn::inc_beta_tails(0.5, b, ax * ax, (1.0 - ax) * (1.0 + ax));
  // P(X < -|x|) = P(X^2 > x^2) / 2.
  return x < 0.0 ? 0.5 * tails.upper : 0.5 + 0.5 * tails.lower;
}

double quantile(const MarginalDist& d, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile: p must lie in [0, 1]");
  if (p == 0.0) return -1.0;
  if (p == 1.0) return 1.0;
  if (p == 0.5) return 0.0;
  if (d.dimension().value() == 1) return 2.0 * p - 1.0;

  // Safeguarded Newton on the bracket [lo, hi]; pdf is the exact derivative.
  double lo = -1.0;
  double hi = 1.0;
  double x = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double residual = cdf(d, x) - p;
    if (std::fabs(residual) <= 1e-14) return x;
    if (residual < 0.0) lo = x; else hi = x;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon()) return x;

    const double slope = pdf(d, x);
    double next = slope > 0.0 ? x - residual / slope : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  throw ConvergenceError("quantile: root search did not converge");
}

double moment(const MarginalDist& d, unsigned k) {
  if (k % 2 == 1) return 0.0;
  const unsigned m = k / 2;
  const double shifted = 0.5 * (d.dimension().as_double() + 2.0);
  double product = 1.0;
  for (unsigned j = 0; j < m; ++j) {
    product *= (0.5 + j) / (shifted + j);
  }
  return product;
}

void pdf_grid(const MarginalDist& d, std::span<const double> xs, std::span<double> out, Exec exec) {
  if (xs.size() != out.size()) throw DomainError("pdf_grid: input and output sizes differ");
  const auto count = static_cast<std::ptrdiff_t>(xs.size());
  if (exec == Exec::Serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = pdf(d, xs[i]);
    return;
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = pdf(d, xs[i]);
}

} // namespace hyperball::marginal
