#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hyperball/errors.hpp"
#include "hyperball/quadrature.hpp"
#include "oracles.hpp"

using namespace hyperball;

TEST_CASE("integrate is exact for low-degree polynomials") {
  const auto r = quad::integrate([](double x) { return 3 * x * x - 2 * x + 1; }, -1.0, 2.0);
  CHECK(std::fabs(r.value - 9.0) < 1e-14);
  CHECK(r.evaluations == 15);
}

TEST_CASE("integrate handles oscillation and endpoint singularities") {
  const auto osc = quad::integrate([](double x) { return std::cos(40.0 * x); }, 0.0, 3.0, {.rel_tol = 1e-12});
  CHECK(std::fabs(osc.value - std::sin(120.0) / 40.0) < 1e-12);

  const auto root = quad::integrate([](double x) { return std::sqrt(1.0 - x * x); }, -1.0, 1.0, {.rel_tol = 1e-10});
  CHECK(std::fabs(root.value - std::numbers::pi / 2) < 1e-9);

  const auto chord = quad::integrate_chord([](double x) { return std::sqrt(1.0 - x * x); });
  CHECK(std::fabs(chord.value - std::numbers::pi / 2) < 1e-13);
  CHECK(chord.evaluations < root.evaluations);
}

TEST_CASE("tanh-sinh oracle sanity") {
  CHECK(std::fabs(oracle::tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0) - 2.0) < 1e-12);
  CHECK(std::fabs(oracle::tanh_sinh([](double x) { return std::exp(x); }, 0.0, 1.0) - (std::exp(1.0) - 1.0)) < 1e-14);
}

TEST_CASE("integrate errors") {
  CHECK_THROWS_AS(quad::integrate([](double) { return 1.0; }, 0.0, 1.0, {.rel_tol = 0.0, .abs_tol = 0.0}),
                  DomainError);
  CHECK_THROWS_AS(quad::integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, {.rel_tol = 1e-12, .max_subdivisions = 50}),
                  ConvergenceError);
  CHECK(quad::integrate([](double) { return 1.0; }, 2.0, 2.0).value == 0.0);
}
