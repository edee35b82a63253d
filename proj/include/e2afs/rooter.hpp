#pragma once

#include "e2afs/fp16.hpp"

namespace e2afs {

// Which square rooter the application pipelines route through.
enum class RooterChoice { Exact, E2afs };

/// HalfWord -> HalfWord square root under the chosen rooter. The exact
/// rooter rounds the ground-truth root to nearest FP16 and follows the same
/// specials policy as the approximate one, except that subnormal inputs are
/// rooted at their true value instead of flushing.
HalfWord apply_rooter(RooterChoice choice, HalfWord w);

}  // namespace e2afs
