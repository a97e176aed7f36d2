#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <vector>

#include "banach/errors.hpp"

namespace banach {

using cplx = std::complex<double>;

// Continuous piecewise-linear function on [a, b], stored by its values at
// the uniform nodes a + k*(b-a)/(N-1). Evaluation at a node reproduces the
// stored value bit-for-bit; between nodes it interpolates linearly.
struct GridFunction {
    double a = 0.0;
    double b = 1.0;
    std::vector<cplx> values;

    GridFunction(double a_, double b_, std::vector<cplx> v)
        : a(a_), b(b_), values(std::move(v)) {
        if (!(a < b)) throw ParseError("a must be < b");
        if (values.size() < 2)
            throw ParseError("grid needs at least two nodes");
        for (const cplx& z : values)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw ParseError("grid values must be finite");
    }

    std::size_t size() const { return values.size(); }
    std::size_t segments() const { return values.size() - 1; }
    double step() const { return (b - a) / double(segments()); }
    double node(std::size_t k) const { return a + double(k) * step(); }

    static GridFunction constant(double a, double b, cplx c,
                                 std::size_t n = 2) {
        return GridFunction(a, b, std::vector<cplx>(n < 2 ? 2 : n, c));
    }

    template <class F>
    static GridFunction sampled(double a, double b, std::size_t n, F&& f) {
        std::vector<cplx> v;
        v.reserve(n);
        GridFunction g(a, b, std::vector<cplx>(n < 2 ? 2 : n, cplx{}));
        for (std::size_t k = 0; k < g.size(); ++k) g.values[k] = f(g.node(k));
        return g;
    }

    cplx eval(double x) const {
        if (x == a) return values.front();
        if (x == b) return values.back();
        const double h = step();
        double t = (x - a) / h;
        if (t < -1e-9 || t > double(segments()) + 1e-9)
            throw OutsideDomain("evaluation point outside [a,b]");
        // Snap to a node when x matches one exactly; keeps stored values
        // authoritative and products with co-located grids exactly zero.
        double r = std::nearbyint(t);
        if (r >= 0.0 && r <= double(segments())) {
            std::size_t k = std::size_t(r);
            if (node(k) == x) return values[k];
        }
        std::size_t k = t <= 0.0 ? 0 : std::size_t(t);
        if (k >= segments()) k = segments() - 1;
        double x0 = node(k), x1 = node(k + 1);
        double lam = (x - x0) / (x1 - x0);
        if (lam < 0.0) lam = 0.0;
        if (lam > 1.0) lam = 1.0;
        return values[k] + lam * (values[k + 1] - values[k]);
    }

    bool is_zero() const {
        for (const cplx& z : values)
            if (z != cplx{}) return false;
        return true;
    }
    bool is_one() const {
        for (const cplx& z : values)
            if (z != cplx{1.0, 0.0}) return false;
        return true;
    }
    bool real_valued() const {
        for (const cplx& z : values)
            if (z.imag() != 0.0) return false;
        return true;
    }
};

inline GridFunction operator*(double s, const GridFunction& f) {
    GridFunction g = f;
    for (cplx& z : g.values) z *= s;
    return g;
}

// Pointwise sum on the coarsest common refinement of the two node sets.
// Grids over the same [a,b] with segment counts p and q refine into
// lcm(p, q); the refinement is capped to keep degenerate pairs affordable,
// beyond the cap the sum is a (documented) resampling.
inline GridFunction add(const GridFunction& f, const GridFunction& g) {
    if (f.a != g.a || f.b != g.b)
        throw Unrepresentable("sum of grid functions needs a common domain");
    std::size_t p = f.segments(), q = g.segments();
    std::size_t l = std::lcm(p, q);
    const std::size_t cap = std::size_t(1) << 20;
    if (l > cap) l = cap;
    GridFunction s(f.a, f.b, std::vector<cplx>(l + 1, cplx{}));
    for (std::size_t k = 0; k <= l; ++k) {
        double x = s.node(k);
        s.values[k] = f.eval(x) + g.eval(x);
    }
    return s;
}

}  // namespace banach
