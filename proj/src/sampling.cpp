#include "hyperball/sampling.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "hyperball/errors.hpp"

namespace hyperball::sampling {

Method parse_method(std::string_view name) {
  if (name == "reject-cube") return Method::RejectCube;
  if (name == "dir-radius") return Method::DirRadius;
  throw DomainError("unknown sampling method '" + std::string(name) + "'");
}

std::string_view method_name(Method m) {
  return m == Method::RejectCube ? "reject-cube" : "dir-radius";
}

double squared_norm(std::span<const double> v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return s;
}

namespace {

// Both fillers write a point of the ball into `coords` (size n) and return
// the number of cube draws used.
std::size_t fill_reject_cube(std::span<double> coords, RngStream& rng) {
  std::size_t trials = 0;
  do {
    for (double& c : coords) c = rng.uniform_sym();
    ++trials;
  } while (squared_norm(coords) > 1.0);
  assert(squared_norm(coords) <= 1.0);
  return trials;
}

std::size_t fill_dir_radius(std::span<double> coords, RngStream& rng) {
  double norm2 = 0.0;
  do {
    for (double& c : coords) c = rng.normal();
    norm2 = squared_norm(coords);
  } while (norm2 == 0.0);

  const double radius = std::pow(rng.uniform_pos(), 1.0 / static_cast<double>(coords.size()));
  const double scale = radius / std::sqrt(norm2);
  for (double& c : coords) c *= scale;
  // Rounding can leave |p|^2 a few ulps above 1 when radius == 1.
  while (squared_norm(coords) > 1.0) {
    for (double& c : coords) c *= 1.0 - 0x1.0p-52;
  }
  assert(squared_norm(coords) <= 1.0);
  return 1;
}

void check_method(Dimension n, Method method, const char* who) {
  if (method == Method::RejectCube && n.value() > kMaxRejectDimension) {
    throw DomainError(std::string(who) + ": reject-cube supports n <= " + std::to_string(kMaxRejectDimension) +
                      ", got " + std::to_string(n.value()));
  }
}

// First coordinates of xs.size() draws into xs, reusing one scratch point.
void fill_coordinates(Dimension n, Method method, std::span<double> xs, RngStream& rng) {
  std::vector<double> scratch(static_cast<std::size_t>(n.value()));
  for (double& x : xs) {
    if (method == Method::RejectCube) fill_reject_cube(scratch, rng); else fill_dir_radius(scratch, rng);
    x = scratch.front();
  }
}

} // namespace

BallPoint sample_reject_cube(Dimension n, RngStream& rng) {
  check_method(n, Method::RejectCube, "sample_reject_cube");
  BallPoint p{std::vector<double>(static_cast<std::size_t>(n.value())), Method::RejectCube, 0};
  p.trials = fill_reject_cube(p.coords, rng);
  return p;
}

BallPoint sample_dir_radius(Dimension n, RngStream& rng) {
  BallPoint p{std::vector<double>(static_cast<std::size_t>(n.value())), Method::DirRadius, 1};
  fill_dir_radius(p.coords, rng);
  return p;
}

BallPoint sample_point(Dimension n, Method method, RngStream& rng) {
  return method == Method::RejectCube ? sample_reject_cube(n, rng) : sample_dir_radius(n, rng);
}

std::vector<double> sample_coordinate(Dimension n, Method method, std::size_t count, RngStream& rng) {
  if (count == 0) throw DomainError("sample_coordinate: count must be >= 1");
  check_method(n, method, "sample_coordinate");
  std::vector<double> xs(count);
  fill_coordinates(n, method, xs, rng);
  return xs;
}

std::vector<double> sample_coordinate_streams(Dimension n, Method method, std::size_t count,
                                              std::uint64_t seed, Exec exec) {
  if (count == 0) throw DomainError("sample_coordinate_streams: count must be >= 1");
  check_method(n, method, "sample_coordinate_streams");
  std::vector<double> xs(count);
  const auto blocks = static_cast<std::ptrdiff_t>((count + kStreamBlock - 1) / kStreamBlock);

  auto fill_block = [&](std::ptrdiff_t b) {
    RngStream rng(seed, static_cast<std::uint64_t>(b));
    const std::size_t begin = static_cast<std::size_t>(b) * kStreamBlock;
    const std::size_t end = std::min(count, begin + kStreamBlock);
    fill_coordinates(n, method, std::span<double>(xs).subspan(begin, end - begin), rng);
  };

  if (exec == Exec::Serial) {
    for (std::ptrdiff_t b = 0; b < blocks; ++b) fill_block(b);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t b = 0; b < blocks; ++b) fill_block(b);
  }
  return xs;
}

std::vector<double> rescale_z(std::span<const double> xs, Dimension n) {
  const double factor = std::sqrt(n.as_double() + 2.0);
  std::vector<double> zs;
  zs.reserve(xs.size());
  for (double x : xs) {
    if (!(std::fabs(x) <= 1.0)) throw DomainError("rescale_z: coordinate outside [-1, 1]");
    zs.push_back(factor * x);
  }
  return zs;
}

std::size_t count_cube_hits(Dimension n, std::size_t attempts, RngStream& rng) {
  std::vector<double> u(static_cast<std::size_t>(n.value()));
  std::size_t hits = 0;
  for (std::size_t i = 0; i < attempts; ++i) {
    for (double& c : u) c = rng.uniform_sym();
    if (squared_norm(u) <= 1.0) ++hits;
  }
  return hits;
}

} // namespace hyperball::sampling
