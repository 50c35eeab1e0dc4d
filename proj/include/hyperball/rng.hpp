#pragma once

#include <cstdint>
#include <limits>

namespace hyperball {

/// Deterministic xoshiro256** stream. The 256-bit state is filled by
/// SplitMix64 from a mix of (seed, stream_id), so streams with different ids
/// under one seed are independent for all practical purposes.
///
/// Single-owner: do not share one stream between threads; derive one per
/// worker with a distinct stream id instead.
class RngStream {
public:
  using result_type = std::uint64_t;

  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0);

  [[nodiscard]] std::uint64_t seed() const { return seed_; }
  [[nodiscard]] std::uint64_t stream_id() const { return stream_id_; }

  /// Sibling stream under the same seed.
  [[nodiscard]] RngStream derive(std::uint64_t stream_id) const { return RngStream(seed_, stream_id); }

  std::uint64_t next_u64();
  result_type operator()() { return next_u64(); }
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1].
  double uniform_pos();
  /// Uniform on [-1, 1).
  double uniform_sym();
  /// Standard normal deviate (Marsaglia polar method; the second deviate of
  /// each pair is cached).
  double normal();

private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t s_[4];
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

/// One step of SplitMix64: advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

} // namespace hyperball
