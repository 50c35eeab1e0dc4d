#include "hyperball/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <vector>

#include "hyperball/errors.hpp"

namespace hyperball::quad {

namespace {

// Kronrod abscissae on [0, 1]; odd indices are the Gauss nodes.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWk[7];
  double gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::fabs(kronrod - gauss)};
}

} // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts) {
  if (!(opts.rel_tol >= 0.0) || !(opts.abs_tol >= 0.0) || (opts.rel_tol == 0.0 && opts.abs_tol == 0.0)) {
    throw DomainError("integrate: need a positive relative or absolute tolerance");
  }
  if (a == b) return {};

  std::priority_queue<Segment> heap;
  Segment first = gauss_kronrod(f, a, b);
  double total = first.value;
  double error = first.error;
  std::size_t evals = 15;
  heap.push(first);

  while (error > std::max(opts.abs_tol, opts.rel_tol * std::fabs(total))) {
    if (heap.size() >= opts.max_subdivisions) {
      throw ConvergenceError("integrate: subdivision limit reached");
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      throw ConvergenceError("integrate: interval shrank below floating-point resolution");
    }
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    evals += 30;
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);

    // Re-sum occasionally; the running updates drift.
    if (heap.size() % 64 == 0) {
      std::vector<Segment> items;
      items.reserve(heap.size());
      total = 0.0;
      error = 0.0;
      while (!heap.empty()) {
        items.push_back(heap.top());
        total += items.back().value;
        error += items.back().error;
        heap.pop();
      }
      for (const Segment& s : items) heap.push(s);
    }
  }
  return {total, error, evals};
}

QuadResult integrate_chord(const std::function<double(double)>& f, const QuadOptions& opts) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  return integrate([&f](double u) { return f(std::sin(u)) * std::cos(u); }, -half_pi, half_pi, opts);
}

} // namespace hyperball::quad
