#pragma once

namespace spinbell {

/// Selects the OpenMP kernel or the serial reference loop. Both produce
/// bit-identical results; the serial path is kept for testing and benchmarks.
enum class Execution { Serial, Parallel };

}  // namespace spinbell
