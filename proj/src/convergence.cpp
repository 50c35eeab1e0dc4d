#include "hyperball/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

#include "hyperball/charfn.hpp"
#include "hyperball/errors.hpp"

namespace hyperball::convergence {

namespace {

std::vector<double> uniform_grid(double lo, double hi, std::size_t steps) {
  std::vector<double> g(steps);
  const double step = (hi - lo) / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) g[i] = lo + static_cast<double>(i) * step;
  return g;
}

std::vector<double> sorted_copy(std::span<const double> xs) {
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

double g_pdf(const marginal::MarginalDist& d, double z) {
  const double scale = std::sqrt(d.dimension().as_double() + 2.0);
  const double x = z / scale;
  if (!(std::fabs(x) <= 1.0)) return 0.0;
  return marginal::pdf(d, x) / scale;
}

double g_pdf(Dimension n, double z) { return g_pdf(marginal::MarginalDist(n), z); }

double normal_pdf(double z) { return std::exp(-0.5 * z * z) * (0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2); }

std::vector<double> default_z_grid() { return uniform_grid(-8.0, 8.0, 1601); }

std::vector<double> default_t_grid() { return uniform_grid(0.0, 3.0, 25); }

double pdf_sup_distance(Dimension n, std::span<const double> grid) {
  if (grid.empty()) throw DomainError("pdf_sup_distance: empty grid");
  const auto [lo, hi] = std::minmax_element(grid.begin(), grid.end());
  if (*lo > -4.0 || *hi < 4.0) throw DomainError("pdf_sup_distance: grid must cover [-4, 4]");
  const marginal::MarginalDist d(n);
  double sup = 0.0;
  for (double z : grid) sup = std::max(sup, std::fabs(g_pdf(d, z) - normal_pdf(z)));
  return sup;
}

double cf_sup_distance(Dimension n, std::span<const double> t_grid) {
  if (t_grid.empty()) throw DomainError("cf_sup_distance: empty grid");
  double sup = 0.0;
  for (double t : t_grid) {
    sup = std::max(sup, std::fabs(charfn::charfn_hyp(n, t) - charfn::charfn_gauss_limit(t)));
  }
  return sup;
}

std::vector<Dimension> default_report_dims() {
  std::vector<Dimension> dims;
  for (int n = 1; n <= 256; n *= 2) dims.emplace_back(n);
  return dims;
}

ConvergenceReport build_report(std::span<const Dimension> dims, Exec exec) {
  if (dims.empty()) throw DomainError("build_report: no dimensions given");
  for (std::size_t i = 1; i < dims.size(); ++i) {
    if (!(dims[i - 1] < dims[i])) throw DomainError("build_report: dimensions must be strictly increasing");
  }

  const std::vector<double> z_grid = default_z_grid();
  const std::vector<double> t_grid = default_t_grid();
  ConvergenceReport report{{dims.begin(), dims.end()},
                           std::vector<double>(dims.size()),
                           std::vector<double>(dims.size()),
                           "z: 1601 points on [-8, 8]; t: 25 points on [0, 3]"};

  const auto count = static_cast<std::ptrdiff_t>(dims.size());
  auto row = [&](std::ptrdiff_t i) {
    report.pdf_sup_err[i] = pdf_sup_distance(dims[i], z_grid);
    report.cf_sup_err[i] = cf_sup_distance(dims[i], t_grid);
  };
  if (exec == Exec::Serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) row(i);
    return report;
  }

  // Exceptions may not cross the OpenMP region boundary.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      row(i);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return report;
}

double ks_coefficient(double alpha) {
  if (alpha == 0.05) return 1.358;
  if (alpha == 0.01) return 1.628;
  if (alpha == 0.001) return 1.949;
  throw DomainError("ks_coefficient: supported significance levels are 0.05, 0.01 and 0.001");
}

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_statistic: empty sample");
  const std::vector<double> xs = sorted_copy(samples);
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

GofReport ks_test(std::span<const double> samples, const marginal::MarginalDist& d, double alpha) {
  const double c = ks_coefficient(alpha);
  const double stat = ks_statistic(samples, [&d](double x) { return marginal::cdf(d, x); });
  const double critical = c / std::sqrt(static_cast<double>(samples.size()));
  return {d.dimension(), samples.size(), stat, critical, stat < critical};
}

TwoSampleReport ks_two_sample(std::span<const double> a, std::span<const double> b, double alpha) {
  if (a.empty() || b.empty()) throw DomainError("ks_two_sample: empty sample");
  const double c = ks_coefficient(alpha);
  const std::vector<double> xa = sorted_copy(a);
  const std::vector<double> xb = sorted_copy(b);
  const double na = static_cast<double>(xa.size());
  const double nb = static_cast<double>(xb.size());

  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < xa.size() && j < xb.size()) {
    const double x = std::min(xa[i], xb[j]);
    while (i < xa.size() && xa[i] == x) ++i;
    while (j < xb.size() && xb[j] == x) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double critical = c * std::sqrt((na + nb) / (na * nb));
  return {xa.size(), xb.size(), d, critical, d < critical};
}

} // namespace hyperball::convergence
