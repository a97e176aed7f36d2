#pragma once

#include <cstddef>

namespace banach {

// Tolerance/budget knobs shared by every certified computation.
// abs_tol is the target enclosure width; circle_samples seeds the coarse
// scan of the unit circle; refine_max_iters caps adaptive refinement steps
// before a computation gives up with CertificationFailed.
struct CertConfig {
    double abs_tol = 1e-9;
    std::size_t circle_samples = 1024;
    std::size_t refine_max_iters = 4000000;
};

}  // namespace banach
