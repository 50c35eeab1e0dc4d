#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hyperball/exec.hpp"
#include "hyperball/geometry.hpp"
#include "hyperball/rng.hpp"

namespace hyperball::sampling {

enum class Method { RejectCube, DirRadius };

/// Parses "reject-cube" / "dir-radius"; throws DomainError otherwise.
Method parse_method(std::string_view name);
std::string_view method_name(Method m);

/// Rejection sampling stops being practical past this dimension (the
/// acceptance rate V_n / 2^n is below 1e-4 at n = 16).
inline constexpr int kMaxRejectDimension = 15;

/// A point of the closed unit ball, sum of squared coordinates <= 1.
struct BallPoint {
  std::vector<double> coords;
  Method method;
  /// Cube draws consumed (always 1 for DirRadius).
  std::size_t trials = 1;
};

double squared_norm(std::span<const double> v);

/// Draws uniform points of [-1, 1]^n until one lands in the ball.
/// Throws DomainError for n > kMaxRejectDimension.
BallPoint sample_reject_cube(Dimension n, RngStream& rng);

/// Normalized Gaussian direction scaled by radius U^(1/n), U ~ U(0, 1].
BallPoint sample_dir_radius(Dimension n, RngStream& rng);

BallPoint sample_point(Dimension n, Method method, RngStream& rng);

/// First coordinate of `count` ball points drawn from a single stream.
std::vector<double> sample_coordinate(Dimension n, Method method, std::size_t count, RngStream& rng);

/// Block size of the multi-stream sampler: draw i comes from stream
/// (seed, i / kStreamBlock).
inline constexpr std::size_t kStreamBlock = 8192;

/// First coordinate of `count` ball points. Block b is drawn from
/// RngStream(seed, b) and written to its own slice, so the output depends
/// only on (n, method, count, seed) and not on thread count or Exec.
std::vector<double> sample_coordinate_streams(Dimension n, Method method, std::size_t count,
                                              std::uint64_t seed, Exec exec = Exec::Parallel);

/// z = sqrt(n+2) x elementwise; throws DomainError if any |x| > 1.
std::vector<double> rescale_z(std::span<const double> xs, Dimension n);

/// Number of `attempts` uniform cube points that land inside the ball.
std::size_t count_cube_hits(Dimension n, std::size_t attempts, RngStream& rng);

} // namespace hyperball::sampling
