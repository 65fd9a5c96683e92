#pragma once

namespace homext {

/// Parallel kernels keep a serial path with identical output for testing.
enum class Execution { Serial, Parallel };

}  // namespace homext
