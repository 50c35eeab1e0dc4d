#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hyperball/geometry.hpp"

namespace hyperball::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumeric = 1;
inline constexpr int kExitUsage = 2;

/// Evaluation grid: abscissae lo + i (hi - lo) / (steps - 1), i < steps.
struct GridSpec {
  double lo = -1.0;
  double hi = 1.0;
  int steps = 201;

  /// Throws DomainError unless lo < hi and steps >= 2.
  void validate() const;
  [[nodiscard]] std::vector<double> points() const;
};

/// Parses "a..b" (inclusive) or "a,b,c". Throws DomainError on bad input.
std::vector<Dimension> parse_dims(const std::string& text);

/// Runs the command line `args` (without the program name). CSV goes to
/// `out` unless --out is given; diagnostics go to `err`. Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hyperball::cli
