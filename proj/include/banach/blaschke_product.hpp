#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "banach/errors.hpp"
#include "banach/grid_function.hpp"  // cplx alias

namespace banach {

// Finite Blaschke product gamma * prod (z - z_i) / (1 - conj(z_i) z) with
// every zero strictly inside the open unit disk and |gamma| = 1. Analytic on
// a neighbourhood of the closed disk, unimodular on the unit circle.
struct BlaschkeProduct {
    std::vector<cplx> zeros;
    cplx gamma{1.0, 0.0};

    explicit BlaschkeProduct(std::vector<cplx> zs, cplx g = cplx{1.0, 0.0})
        : zeros(std::move(zs)), gamma(g) {
        for (const cplx& z : zeros) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw ParseError("blaschke zeros must be finite");
            if (!(std::abs(z) < 1.0))
                throw ParseError("blaschke zeros must satisfy |z| < 1");
        }
        if (std::abs(std::abs(gamma) - 1.0) > 1e-12)
            throw ParseError("|gamma| must equal 1 within 1e-12");
    }

    std::size_t factor_count() const { return zeros.size(); }

    cplx eval(cplx z) const {
        cplx acc = gamma;
        for (const cplx& w : zeros) acc *= (z - w) / (1.0 - std::conj(w) * z);
        return acc;
    }

    // Angular Lipschitz bound for B restricted to the unit circle: each
    // factor contributes (1+|z_i|)/(1-|z_i|) and the others have modulus 1.
    double angular_lipschitz() const {
        double l = 0.0;
        for (const cplx& w : zeros) {
            double r = std::abs(w);
            l += (1.0 + r) / (1.0 - r);
        }
        return l;
    }
};

}  // namespace banach
