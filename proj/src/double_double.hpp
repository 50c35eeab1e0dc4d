#pragma once

// Unevaluated sum hi + lo carrying ~106 bits of significand. Only the
// handful of operations needed by the series kernels are provided.

#include <cmath>

namespace hyperball::detail {

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double h) : hi(h) {}
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  [[nodiscard]] double value() const { return hi + lo; }
};

inline constexpr DoubleDouble kPi{3.141592653589793, 1.2246467991473532e-16};
inline constexpr DoubleDouble kSqrtPi{1.772453850905516, -7.666586499825799e-17};

inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator*(DoubleDouble a, double b) {
  const double p = a.hi * b;
  double e = std::fma(a.hi, b, -p);
  e += a.lo * b;
  return quick_two_sum(p, e);
}

inline DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
  const double p = a.hi * b.hi;
  double e = std::fma(a.hi, b.hi, -p);
  e += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p, e);
}

inline DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
  // One Newton correction on the double quotient.
  const double q1 = a.hi / b.hi;
  const DoubleDouble r = a + DoubleDouble(-1.0) * (b * q1);
  const double q2 = r.hi / b.hi;
  return quick_two_sum(q1, q2);
}

inline DoubleDouble operator/(DoubleDouble a, double b) {
  const double q1 = a.hi / b;
  const double p1 = q1 * b;
  const double p2 = std::fma(q1, b, -p1);
  DoubleDouble s = two_sum(a.hi, -p1);
  s.lo -= p2;
  s.lo += a.lo;
  const double q2 = (s.hi + s.lo) / b;
  return quick_two_sum(q1, q2);
}

} // namespace hyperball::detail
