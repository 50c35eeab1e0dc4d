#pragma once

#include <string>

namespace hyperball {

/// Shortest decimal representation that parses back to exactly `v`.
std::string format_number(double v);

} // namespace hyperball
