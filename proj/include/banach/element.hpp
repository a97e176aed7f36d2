#pragma once

#include <string>
#include <variant>

#include "banach/bounded_sequence.hpp"
#include "banach/disk_element.hpp"
#include "banach/grid_function.hpp"
#include "banach/real_polynomial.hpp"

namespace banach {

// A member of one of the supported algebras. Grid functions and polynomials
// on [a,b] both live in the continuous-function algebra.
using Element =
    std::variant<GridFunction, RealPolynomial, BoundedSequence, DiskElement>;

inline std::string algebra_name(const Element& e) {
    switch (e.index()) {
        case 0:
        case 1: return "C[a,b]";
        case 2: return "linf";
        default: return "disk";
    }
}

inline bool is_zero(const Element& e) {
    return std::visit([](const auto& x) { return x.is_zero(); }, e);
}

inline bool is_one(const Element& e) {
    return std::visit(
        [](const auto& x) -> bool {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>,
                                         RealPolynomial>) {
                return x.basis == PolyBasis::Monomial && x.degree() == 0 &&
                       x.coeffs[0] == cplx{1.0, 0.0};
            } else {
                return x.is_one();
            }
        },
        e);
}

}  // namespace banach
