#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "banach/errors.hpp"
#include "banach/grid_function.hpp"

namespace banach {

// Polynomial restricted to [a, b], with complex coefficients.
//
// Two coefficient bases are supported. Monomial is the interchange format;
// Bernstein is what the approximation pipeline produces, because expanding
// node-sampled Bernstein polynomials of degree ~100+ into monomials loses
// every significant digit (the basis change has condition ~4^n), while
// de Casteljau evaluation stays stable at any degree.
enum class PolyBasis { Monomial, Bernstein };

struct RealPolynomial {
    double a = 0.0;
    double b = 1.0;
    PolyBasis basis = PolyBasis::Monomial;
    std::vector<cplx> coeffs;  // monomial: sum c_k x^k; bernstein: control values

    RealPolynomial(double a_, double b_, std::vector<cplx> c,
                   PolyBasis basis_ = PolyBasis::Monomial)
        : a(a_), b(b_), basis(basis_), coeffs(std::move(c)) {
        if (!(a < b)) throw ParseError("a must be < b");
        if (coeffs.empty()) coeffs.push_back(cplx{});
        for (const cplx& z : coeffs)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw ParseError("polynomial coefficients must be finite");
    }

    std::size_t degree() const {
        if (basis == PolyBasis::Bernstein) return coeffs.size() - 1;
        std::size_t d = coeffs.size() - 1;
        while (d > 0 && coeffs[d] == cplx{}) --d;
        return d;
    }

    cplx eval(double x) const {
        if (basis == PolyBasis::Monomial) {
            cplx acc{};
            for (std::size_t i = coeffs.size(); i-- > 0;)
                acc = acc * x + coeffs[i];
            return acc;
        }
        // de Casteljau on t = (x-a)/(b-a)
        double t = (x - a) / (b - a);
        std::vector<cplx> w = coeffs;
        for (std::size_t r = 1; r < w.size(); ++r)
            for (std::size_t i = 0; i + r < w.size(); ++i)
                w[i] = (1.0 - t) * w[i] + t * w[i + 1];
        return w.empty() ? cplx{} : w[0];
    }

    // Global bound for |p'| on [a, b]; certified but not tight.
    double lipschitz_bound() const {
        if (basis == PolyBasis::Monomial) {
            double r = std::max(std::abs(a), std::abs(b));
            double l = 0.0, pw = 1.0;
            for (std::size_t k = 1; k < coeffs.size(); ++k) {
                l += double(k) * std::abs(coeffs[k]) * pw;
                pw *= r;
            }
            return l;
        }
        double dmax = 0.0;
        for (std::size_t k = 0; k + 1 < coeffs.size(); ++k)
            dmax = std::max(dmax, std::abs(coeffs[k + 1] - coeffs[k]));
        return double(coeffs.size() - 1) * dmax / (b - a);
    }

    cplx deriv_eval(double x) const {
        if (coeffs.size() < 2) return cplx{};
        if (basis == PolyBasis::Monomial) {
            cplx acc{};
            for (std::size_t k = coeffs.size(); k-- > 1;)
                acc = acc * x + double(k) * coeffs[k];
            return acc;
        }
        // p' has Bernstein control values n * (c_{k+1} - c_k) / (b - a)
        double t = (x - a) / (b - a);
        std::vector<cplx> w(coeffs.size() - 1);
        for (std::size_t k = 0; k + 1 < coeffs.size(); ++k)
            w[k] = coeffs[k + 1] - coeffs[k];
        for (std::size_t r = 1; r < w.size(); ++r)
            for (std::size_t i = 0; i + r < w.size(); ++i)
                w[i] = (1.0 - t) * w[i] + t * w[i + 1];
        return w[0] * (double(coeffs.size() - 1) / (b - a));
    }

    // Global bound for |p''| on [a, b]; certified but not tight.
    double curvature_bound() const {
        if (coeffs.size() < 3) return 0.0;
        if (basis == PolyBasis::Monomial) {
            double r = std::max(std::abs(a), std::abs(b));
            double l = 0.0, pw = 1.0;
            for (std::size_t k = 2; k < coeffs.size(); ++k) {
                l += double(k) * double(k - 1) * std::abs(coeffs[k]) * pw;
                pw *= r;
            }
            return l;
        }
        double d2max = 0.0;
        for (std::size_t k = 0; k + 2 < coeffs.size(); ++k)
            d2max = std::max(
                d2max, std::abs(coeffs[k + 2] - 2.0 * coeffs[k + 1] + coeffs[k]));
        double n = double(coeffs.size() - 1);
        return n * (n - 1.0) * d2max / ((b - a) * (b - a));
    }

    // p - v: exact constant shift in either basis.
    RealPolynomial shifted_by(cplx v) const {
        RealPolynomial q = *this;
        if (basis == PolyBasis::Monomial) {
            q.coeffs[0] -= v;
        } else {
            for (cplx& c : q.coeffs) c -= v;
        }
        return q;
    }

    bool is_zero() const {
        for (const cplx& z : coeffs)
            if (z != cplx{}) return false;
        return true;
    }
};

inline double grid_lipschitz(const GridFunction& f) {
    double l = 0.0;
    const double h = f.step();
    for (std::size_t k = 0; k + 1 < f.size(); ++k)
        l = std::max(l, std::abs(f.values[k + 1] - f.values[k]) / h);
    return l;
}

}  // namespace banach
