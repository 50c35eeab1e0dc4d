#pragma once

namespace hyperball {

/// Spatial dimension n >= 1.
class Dimension {
public:
  /// Throws DomainError for n < 1.
  explicit Dimension(long long n);

  [[nodiscard]] int value() const { return n_; }
  [[nodiscard]] double as_double() const { return static_cast<double>(n_); }

  friend bool operator==(Dimension, Dimension) = default;
  friend auto operator<=>(Dimension, Dimension) = default;

private:
  int n_;
};

} // namespace hyperball

namespace hyperball::geometry {

/// Volume of the unit n-ball, pi^(n/2) / Gamma(n/2 + 1). Underflows to 0
/// for very large n (the volume itself tends to 0).
double ball_volume(Dimension n);

/// ln of ball_volume(n); finite for every supported n.
double log_ball_volume(Dimension n);

/// Volume obtained by slicing the ball into (n-1)-balls of radius
/// sqrt(1 - x^2) and integrating over x in [-1, 1], with V_{n-1} taken
/// from ball_volume. Valid for 2 <= n <= 50.
double ball_volume_by_recursion(Dimension n, double quad_tol = 1e-10);

/// Fraction of the enclosing cube [-1, 1]^n occupied by the unit ball.
double cube_ratio(Dimension n);

} // namespace hyperball::geometry
