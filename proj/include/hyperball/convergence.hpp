#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hyperball/exec.hpp"
#include "hyperball/geometry.hpp"
#include "hyperball/marginal.hpp"

namespace hyperball::convergence {

/// Density of z = sqrt(n+2) x, supported on |z| <= sqrt(n+2).
double g_pdf(Dimension n, double z);
double g_pdf(const marginal::MarginalDist& d, double z);

/// Standard normal density.
double normal_pdf(double z);

/// 1601 uniform points on [-8, 8].
std::vector<double> default_z_grid();
/// 25 uniform points on [0, 3].
std::vector<double> default_t_grid();

/// max over grid of |g_n(z) - normal_pdf(z)|. The grid must cover [-4, 4].
double pdf_sup_distance(Dimension n, std::span<const double> grid);

/// max over grid of |charfn_hyp(n, t) - exp(-t^2/2)|.
double cf_sup_distance(Dimension n, std::span<const double> t_grid);

struct ConvergenceReport {
  std::vector<Dimension> dims;
  std::vector<double> pdf_sup_err;
  std::vector<double> cf_sup_err;
  std::string grid_spec;
};

/// Both distances on the default grids for each dimension. dims must be
/// non-empty and strictly increasing; rows come back in dims order.
ConvergenceReport build_report(std::span<const Dimension> dims, Exec exec = Exec::Parallel);

/// 1, 2, 4, ..., 256.
std::vector<Dimension> default_report_dims();

struct GofReport {
  Dimension n;
  std::size_t sample_size;
  double ks_stat;
  double critical_value;
  bool passed;
};

/// Asymptotic Kolmogorov coefficient c(alpha) for alpha in
/// {0.05, 0.01, 0.001}; DomainError otherwise.
double ks_coefficient(double alpha);

/// sup |F_emp - F| for an arbitrary continuous reference CDF.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

/// One-sample KS test of `samples` against the exact marginal CDF, using the
/// asymptotic critical value c(alpha) / sqrt(N).
GofReport ks_test(std::span<const double> samples, const marginal::MarginalDist& d, double alpha);

struct TwoSampleReport {
  std::size_t size_a;
  std::size_t size_b;
  double ks_stat;
  double critical_value;
  bool passed;
};

/// Two-sample KS test with critical value c(alpha) sqrt((N+M)/(N M)).
TwoSampleReport ks_two_sample(std::span<const double> a, std::span<const double> b, double alpha);

} // namespace hyperball::convergence
