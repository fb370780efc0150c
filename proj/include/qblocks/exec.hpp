#pragma once

namespace qblocks {

/// Serial runs are kept as the reference for the OpenMP kernels.
enum class Exec { Serial, Parallel };

}  // namespace qblocks
