#pragma once

#include <cmath>
#include <complex>
#include <optional>

#include "banach/blaschke_product.hpp"
#include "banach/complex_polynomial.hpp"
#include "banach/errors.hpp"

namespace banach {

// Element of the disk algebra in factored form: polynomial part times an
// optional finite Blaschke product. Continuous on the closed disk, analytic
// inside; the sup norm lives on the boundary circle by maximum modulus.
struct DiskElement {
    ComplexPolynomial poly = ComplexPolynomial::one();
    std::optional<BlaschkeProduct> blaschke;

    DiskElement() = default;
    explicit DiskElement(ComplexPolynomial p,
                         std::optional<BlaschkeProduct> b = std::nullopt)
        : poly(std::move(p)), blaschke(std::move(b)) {}
    explicit DiskElement(BlaschkeProduct b)
        : poly(ComplexPolynomial::one()), blaschke(std::move(b)) {}

    cplx eval(cplx z) const {
        if (std::abs(z) > 1.0 + 1e-12)
            throw OutsideDomain("point outside the closed unit disk");
        cplx v = poly.eval(z);
        if (blaschke) v *= blaschke->eval(z);
        return v;
    }

    bool is_zero() const { return poly.is_zero(); }
    bool is_one() const { return poly.is_one() && !blaschke; }

    // Bounds used by the certified circle scans.
    double circle_sup_bound() const { return poly.coeff_abs_sum(); }
    double circle_lipschitz() const {
        double lp = poly.deriv_abs_sum();
        if (!blaschke) return lp;
        return lp + poly.coeff_abs_sum() * blaschke->angular_lipschitz();
    }
};

// (z - z0)/2, the model linear factor.
inline DiskElement linear_factor(cplx z0) {
    return DiskElement(ComplexPolynomial({-0.5 * z0, cplx{0.5, 0.0}}));
}

}  // namespace banach
