// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hyperball/charfn.hpp"
#include "hyperball/cli.hpp"
#include "hyperball/convergence.hpp"
#include "hyperball/geometry.hpp"
#include "hyperball/marginal.hpp"
#include "hyperball/quadrature.hpp"
#include "hyperball/rng.hpp"
#include "hyperball/sampling.hpp"

using namespace hyperball;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> check;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

Outcome closed_form_anchors() {
  const double pi = std::numbers::pi;
  const double e2 = rel_err(geometry::ball_volume(Dimension(2)), pi);
  const double e3 = rel_err(geometry::ball_volume(Dimension(3)), 4.0 * pi / 3.0);
  const marginal::MarginalDist d1{Dimension(1)};
  bool uniform = true;
  for (int i = 0; i <= 2000; ++i) uniform = uniform && marginal::pdf(d1, -1.0 + i / 1000.0) == 0.5;
  const double e_disk = rel_err(marginal::pdf(marginal::MarginalDist(Dimension(2)), 0.0), 2.0 / pi);
  return {e2 <= 1e-12 && e3 <= 1e-12 && uniform && e_disk <= 1e-12,
          fmt("V2 rel err %.2e, V3 rel err %.2e, f1 == 1/2 on grid: %s, f2(0) rel err %.2e", e2, e3,
              uniform ? "yes" : "no", e_disk)};
}

Outcome volume_recursion() {
  double worst = 0.0;
  for (int n = 2; n <= 15; ++n) {
    worst = std::max(worst, rel_err(geometry::ball_volume_by_recursion(Dimension(n), 1e-10),
                                    geometry::ball_volume(Dimension(n))));
  }
  return {worst <= 1e-8, fmt("max rel err over n=2..15: %.2e (tol 1e-8)", worst)};
}

Outcome pdf_normalization() {
  double worst = 0.0;
  for (int n = 1; n <= 50; ++n) {
    const marginal::MarginalDist d{Dimension(n)};
    const auto r = quad::integrate_chord([&d](double x) { return marginal::pdf(d, x); }, {.rel_tol = 1e-13});
    worst = std::max(worst, std::fabs(r.value - 1.0));
  }
  return {worst <= 1e-10, fmt("max |mass - 1| over n=1..50: %.2e (tol 1e-10)", worst)};
}

Outcome charfn_agreement() {
  double worst_bessel = 0.0;
  double worst_quad = 0.0;
  for (int n : {1, 2, 3, 5, 10, 20, 30}) {
    for (int i = 1; i <= 20; ++i) {
      const double t = 0.25 * i;
      const double hyp = charfn::charfn_hyp(Dimension(n), t);
      worst_bessel = std::max(worst_bessel, std::fabs(hyp - charfn::charfn_bessel(Dimension(n), t)));
      worst_quad = std::max(worst_quad, std::fabs(hyp - charfn::charfn_quad(Dimension(n), t, 1e-10)));
    }
  }
  const double worst = std::max(worst_bessel, worst_quad);
  return {worst <= 1e-8, fmt("max |hyp - bessel| %.2e, max |hyp - quad| %.2e (tol 1e-8)", worst_bessel, worst_quad)};
}

Outcome gaussian_limit() {
  const auto grid = convergence::default_t_grid();
  const double e10 = convergence::cf_sup_distance(Dimension(10), grid);
  const double e100 = convergence::cf_sup_distance(Dimension(100), grid);
  const double e1000 = convergence::cf_sup_distance(Dimension(1000), grid);
  return {e10 > e100 && e100 > e1000 && e1000 <= 0.01,
          fmt("err(10)=%.4e > err(100)=%.4e > err(1000)=%.4e, bound 0.01", e10, e100, e1000)};
}

Outcome scaling_identity() {
  double worst = 0.0;
  double worst_z = 0.0;
  for (int n = 1; n <= 2000; ++n) {
    const double m2 = marginal::moment(marginal::MarginalDist(Dimension(n)), 2);
    worst = std::max(worst, rel_err(m2, 1.0 / (n + 2.0)));
    worst_z = std::max(worst_z, std::fabs((n + 2.0) * m2 - 1.0));
  }
  double worst_quad = 0.0;
  for (int n = 1; n <= 50; ++n) {
    const marginal::MarginalDist d{Dimension(n)};
    const double a = std::sqrt(n + 2.0);
    const auto r = quad::integrate([&](double u) {
      const double z = a * std::sin(u);
      return z * z * convergence::g_pdf(d, z) * a * std::cos(u);
    }, -0.5 * std::numbers::pi, 0.5 * std::numbers::pi, {.rel_tol = 1e-13});
    worst_quad = std::max(worst_quad, std::fabs(r.value - 1.0));
  }
  return {worst <= 1e-12 && worst_z <= 1e-12 && worst_quad <= 1e-9,
          fmt("moment(n,2) vs 1/(n+2) rel err %.2e (n<=2000); |Var z - 1| %.2e closed form, %.2e quadrature (n<=50)",
              worst, worst_z, worst_quad)};
}

Outcome statistical_end_to_end() {
  std::ostringstream detail;
  bool ok = true;
  const std::size_t count = 100000;
  std::vector<double> xs3;
  for (int n : {2, 3, 10}) {
    const auto xs = sampling::sample_coordinate_streams(Dimension(n), sampling::Method::DirRadius, count,
                                                        0x5eed0000ULL + n);
    const auto r = convergence::ks_test(xs, marginal::MarginalDist(Dimension(n)), 0.001);
    ok = ok && r.passed;
    detail << fmt("KS n=%d D=%.5f crit=%.5f %s; ", n, r.ks_stat, r.critical_value, r.passed ? "pass" : "FAIL");
    if (n == 3) xs3 = xs;
  }
  const auto neg = convergence::ks_test(xs3, marginal::MarginalDist(Dimension(10)), 0.001);
  ok = ok && !neg.passed;
  detail << fmt("negative control n=3 vs n=10 D=%.4f %s; ", neg.ks_stat, neg.passed ? "PASSED (bad)" : "rejected");

  const std::size_t attempts = 1000000;
  double worst_sigmas = 0.0;
  for (int n = 1; n <= 10; ++n) {
    RngStream rng(0xacce97ULL, static_cast<std::uint64_t>(n));
    const double p = geometry::cube_ratio(Dimension(n));
    const double rate = static_cast<double>(sampling::count_cube_hits(Dimension(n), attempts, rng)) / attempts;
    const double sigma = std::sqrt(p * (1.0 - p) / attempts);
    const double sigmas = sigma > 0.0 ? std::fabs(rate - p) / sigma : (rate == p ? 0.0 : INFINITY);
    worst_sigmas = std::max(worst_sigmas, sigmas);
  }
  ok = ok && worst_sigmas <= 3.0;
  detail << fmt("acceptance rates n=1..10 worst deviation %.2f sigma (limit 3)", worst_sigmas);
  return {ok, detail.str()};
}

Outcome convergence_report() {
  const auto report = convergence::build_report(convergence::default_report_dims());
  bool decreasing = true;
  for (std::size_t i = 1; i < report.dims.size(); ++i) {
    decreasing = decreasing && report.pdf_sup_err[i] < report.pdf_sup_err[i - 1];
  }

  std::ostringstream out, err;
  const int code = cli::run({"pdf", "--dims", "1..30", "--steps", "201"}, out, err);
  std::map<int, std::vector<double>> columns;
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  const bool header_ok = line == "n,x,pdf";
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    columns[std::stoi(line.substr(0, c1))].push_back(std::stod(line.substr(c2 + 1)));
  }
  bool symmetric = true;
  bool unimodal = true;
  for (const auto& [n, col] : columns) {
    for (std::size_t i = 0; i < col.size(); ++i) {
      const double mirror = col[col.size() - 1 - i];
      symmetric = symmetric && std::fabs(col[i] - mirror) <= 1e-12 * std::max(1.0, col[i]);
    }
    if (n < 2) continue;
    const std::size_t mid = col.size() / 2;
    for (std::size_t i = 1; i <= mid; ++i) unimodal = unimodal && col[i] >= col[i - 1];
    for (std::size_t i = mid + 1; i < col.size(); ++i) unimodal = unimodal && col[i] <= col[i - 1];
  }
  const bool ok = decreasing && code == 0 && header_ok && rows == 30 * 201 && columns.size() == 30 && symmetric && unimodal;
  return {ok, fmt("pdf_sup_err strictly decreasing over 1..256: %s (%.4e -> %.4e); surface rows %zu (want %d), "
                  "symmetric: %s, unimodal n>=2: %s",
                  decreasing ? "yes" : "no", report.pdf_sup_err.front(), report.pdf_sup_err.back(), rows, 30 * 201,
                  symmetric ? "yes" : "no", unimodal ? "yes" : "no")};
}

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "closed-form anchors", 1.0, closed_form_anchors},
      {"AC2", "volume recursion vs closed form", 5.0, volume_recursion},
      {"AC3", "pdf normalization", 5.0, pdf_normalization},
      {"AC4", "three-way characteristic function agreement", 10.0, charfn_agreement},
      {"AC5", "Gaussian limit of the characteristic function", 10.0, gaussian_limit},
      {"AC6", "variance scaling identity", 10.0, scaling_identity},
      {"AC7", "statistical end-to-end", 60.0, statistical_end_to_end},
      {"AC8", "convergence report and surface CSV", 10.0, convergence_report},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool passed = o.passed && in_time;
    if (!passed) ++failures;
    std::printf("[%s] %s %s: %s [%.3f s, budget %.0f s%s]\n", passed ? "PASS" : "FAIL", c.id.c_str(),
                c.title.c_str(), o.detail.c_str(), secs, c.budget_seconds, in_time ? "" : ", OVER BUDGET");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
