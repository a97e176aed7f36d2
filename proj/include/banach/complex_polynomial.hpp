#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "banach/errors.hpp"
#include "banach/grid_function.hpp"  // cplx alias

namespace banach {

// Polynomial in the complex variable z, monomial coefficients c_0..c_d.
struct ComplexPolynomial {
    std::vector<cplx> coeffs;

    ComplexPolynomial() : coeffs{cplx{}} {}
    explicit ComplexPolynomial(std::vector<cplx> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) coeffs.push_back(cplx{});
        for (const cplx& z : coeffs)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw ParseError("polynomial coefficients must be finite");
    }

    static ComplexPolynomial one() { return ComplexPolynomial({cplx{1.0, 0.0}}); }

    std::size_t degree() const {
        std::size_t d = coeffs.size() - 1;
        while (d > 0 && coeffs[d] == cplx{}) --d;
        return d;
    }

    bool is_zero() const {
        for (const cplx& z : coeffs)
            if (z != cplx{}) return false;
        return true;
    }
    bool is_one() const {
        return degree() == 0 && coeffs[0] == cplx{1.0, 0.0};
    }

    cplx eval(cplx z) const {
        cplx acc{};
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
        return acc;
    }

    cplx deriv_eval(cplx z) const {
        cplx acc{};
        for (std::size_t i = coeffs.size(); i-- > 1;)
            acc = acc * z + double(i) * coeffs[i];
        return acc;
    }

    // sum |c_k| and sum k|c_k|: bounds for |p| and |p'| on the closed unit disk.
    double coeff_abs_sum() const {
        double s = 0.0;
        for (const cplx& z : coeffs) s += std::abs(z);
        return s;
    }
    double deriv_abs_sum() const {
        double s = 0.0;
        for (std::size_t k = 1; k < coeffs.size(); ++k)
            s += double(k) * std::abs(coeffs[k]);
        return s;
    }
    // sum k^2 |c_k|: bound for the second angle derivative of p(e^{i theta}).
    double angular_curvature_sum() const {
        double s = 0.0;
        for (std::size_t k = 1; k < coeffs.size(); ++k)
            s += double(k) * double(k) * std::abs(coeffs[k]);
        return s;
    }
};

inline ComplexPolynomial operator*(const ComplexPolynomial& p,
                                   const ComplexPolynomial& q) {
    std::vector<cplx> c(p.coeffs.size() + q.coeffs.size() - 1, cplx{});
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs.size(); ++j)
            c[i + j] += p.coeffs[i] * q.coeffs[j];
    return ComplexPolynomial(std::move(c));
}

inline ComplexPolynomial operator+(const ComplexPolynomial& p,
                                   const ComplexPolynomial& q) {
    std::vector<cplx> c(std::max(p.coeffs.size(), q.coeffs.size()), cplx{});
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < p.coeffs.size()) c[i] += p.coeffs[i];
        if (i < q.coeffs.size()) c[i] += q.coeffs[i];
    }
    return ComplexPolynomial(std::move(c));
}

// All roots of p via Aberth-Ehrlich iteration, or nullopt when the iteration
// stalls (extreme coefficient spreads). Deterministic: fixed initial ring,
// fixed iteration budget. Intended for the modest degrees (<= 64) the disk
// classification works with.
inline std::optional<std::vector<cplx>> polynomial_roots(
    const ComplexPolynomial& p, std::size_t max_iters = 400) {
    std::size_t deg = p.degree();
    std::vector<cplx> c(p.coeffs.begin(), p.coeffs.begin() + deg + 1);
    if (deg == 0) return std::vector<cplx>{};
    if (deg > 64) return std::nullopt;
    // roots at the origin split off exactly
    std::size_t nz = 0;
    while (nz < deg && c[nz] == cplx{}) ++nz;
    std::vector<cplx> roots(nz, cplx{});
    if (nz) c.erase(c.begin(), c.begin() + nz);
    std::size_t d = c.size() - 1;
    if (d == 0) return roots;
    if (d == 1) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }

    // Cauchy-style radius for the initial ring
    double lead = std::abs(c[d]);
    double radius = 0.0;
    for (std::size_t k = 0; k < d; ++k)
        radius = std::max(radius, std::pow(std::abs(c[k]) / lead, 1.0 / double(d - k)));
    radius = 2.0 * radius + 1.0;

    std::vector<cplx> x(d);
    for (std::size_t k = 0; k < d; ++k) {
        double th = 2.0 * M_PI * (double(k) + 0.35) / double(d);
        x[k] = radius * cplx{std::cos(th), std::sin(th)};
    }
    ComplexPolynomial q(c);
    double scale = 0.0;
    for (const cplx& z : c) scale = std::max(scale, std::abs(z));

    bool converged = false;
    for (std::size_t it = 0; it < max_iters && !converged; ++it) {
        converged = true;
        for (std::size_t k = 0; k < d; ++k) {
            cplx pv = q.eval(x[k]);
            if (std::abs(pv) <= 1e-14 * scale) continue;
            cplx dv = q.deriv_eval(x[k]);
            cplx newton = (dv == cplx{}) ? cplx{1e-12, 0} : pv / dv;
            cplx sum{};
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) sum += 1.0 / (x[k] - x[j]);
            cplx denom = 1.0 - newton * sum;
            cplx step = (denom == cplx{}) ? newton : newton / denom;
            x[k] -= step;
            if (std::abs(step) > 1e-13 * (1.0 + std::abs(x[k]))) converged = false;
        }
    }
    if (!converged) return std::nullopt;
    roots.insert(roots.end(), x.begin(), x.end());
    return roots;
}

}  // namespace banach
