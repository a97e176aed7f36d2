#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>

#include "banach/element.hpp"
#include "banach/norm_bound.hpp"

namespace banach {

// What the items of a witness sequence mean.
//  UnitMultiplier: items z_n have norm 1 and the product certificates bound
//    the annihilation rate ||x * z_n|| (tending to 0 exactly when x is a
//    topological divisor of zero).
//  ApproximationChain: items are approximants q_n and the product slot bounds
//    the approximation error ||f - q_n||.
enum class WitnessKind { UnitMultiplier, ApproximationChain };

struct WitnessItem {
    Element element;
    NormBound element_norm;
    NormBound product_norm;
};

// Lazily indexed family of certified witnesses, 1-based. Product-norm upper
// bounds are non-increasing for indices >= monotone_from; a monotone_from
// past the usable range makes no monotonicity claim.
struct WitnessSequence {
    std::string description;
    WitnessKind kind = WitnessKind::UnitMultiplier;
    std::size_t monotone_from = 1;
    std::size_t max_index = 0;  // 0: unbounded
    std::function<WitnessItem(std::size_t)> at;

    WitnessItem operator()(std::size_t n) const {
        if (n == 0 || (max_index && n > max_index))
            throw std::out_of_range("witness index out of range");
        return at(n);
    }
};

}  // namespace banach
