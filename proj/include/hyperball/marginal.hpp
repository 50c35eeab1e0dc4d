#pragma once

#include <span>

#include "hyperball/exec.hpp"
#include "hyperball/geometry.hpp"

namespace hyperball::marginal {

/// Law of the first Cartesian coordinate of a point drawn uniformly from
/// the unit n-ball:
///
///   f_n(x) = Gamma(n/2 + 1) / (Gamma((n+1)/2) sqrt(pi)) * (1 - x^2)^((n-1)/2)
///
/// on [-1, 1], zero outside. Immutable once built.
class MarginalDist {
public:
  explicit MarginalDist(Dimension n);

  [[nodiscard]] Dimension dimension() const { return n_; }
  /// ln of the normalizing prefactor, computed once in log space.
  [[nodiscard]] double log_norm() const { return log_norm_; }

private:
  Dimension n_;
  double log_norm_;
};

/// Density. Exactly 0 for |x| > 1; at |x| = 1 it is 1/2 for n = 1 and 0
/// otherwise.
double pdf(const MarginalDist& d, double x);

/// ln pdf for |x| < 1; stays finite where pdf underflows.
double log_pdf(const MarginalDist& d, double x);

/// Uses x^2 ~ Beta(1/2, (n+1)/2).
double cdf(const MarginalDist& d, double x);

/// Inverse of cdf on [0, 1], accurate to 1e-12 in probability.
double quantile(const MarginalDist& d, double p);

/// E[x^k]; zero for odd k, and 1/(n+2) for k = 2.
double moment(const MarginalDist& d, unsigned k);

/// out[i] = pdf(d, xs[i]).
void pdf_grid(const MarginalDist& d, std::span<const double> xs, std::span<double> out,
              Exec exec = Exec::Parallel);

} // namespace hyperball::marginal
