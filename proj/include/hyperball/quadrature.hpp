#pragma once

#include <cstddef>
#include <functional>

namespace hyperball::quad {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
};

struct QuadOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  std::size_t max_subdivisions = 4000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over [a, b].
///
/// The interval with the largest |K15 - G7| estimate is bisected until the
/// summed estimate drops below max(abs_tol, rel_tol * |value|). Throws
/// ConvergenceError when max_subdivisions is reached first.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadOptions& opts = {});

/// Integral over [-1, 1] of a function with (1 - x^2)^p-type endpoint
/// behaviour, taken as the integral of f(sin u) cos u over [-pi/2, pi/2].
QuadResult integrate_chord(const std::function<double(double)>& f, const QuadOptions& opts = {});

} // namespace hyperball::quad
