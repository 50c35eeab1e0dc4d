#pragma once

namespace hyperball {

/// Selects between the serial reference loop and the OpenMP kernel. Both
/// paths produce bit-identical results.
enum class Exec { Serial, Parallel };

} // namespace hyperball
