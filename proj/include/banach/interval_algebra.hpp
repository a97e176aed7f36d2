#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "banach/config.hpp"
#include "banach/errors.hpp"
#include "banach/grid_function.hpp"
#include "banach/norm_bound.hpp"
#include "banach/optimize.hpp"
#include "banach/real_polynomial.hpp"
#include "banach/verdict.hpp"
#include "banach/witness_sequence.hpp"

namespace banach {

// |f|^2 restricted to a segment is a convex quadratic in the interpolation
// parameter, so its maximum sits at a node: the sup norm is the exact node
// maximum.
inline NormBound sup_norm(const GridFunction& f) {
    double m = 0.0;
    for (const cplx& v : f.values) m = std::max(m, std::abs(v));
    return NormBound::exact(m);
}

// Exact min of |f| over [a,b]. The interior minimum of |u + lam*(w-u)| on a
// segment equals |cross|/|w-u| with cross = Re(u)Im(w-u) - Im(u)Re(w-u)
// (Lagrange's identity), which vanishes exactly when the interpolant has a
// root there -- so min_abs == 0 and zero_structure agree by construction.
inline double min_abs(const GridFunction& f) {
    double best = std::numeric_limits<double>::infinity();
    for (const cplx& v : f.values) best = std::min(best, std::abs(v));
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
        cplx u = f.values[k], d = f.values[k + 1] - u;
        if (d == cplx{}) continue;
        double dot = u.real() * d.real() + u.imag() * d.imag();
        double dd = std::norm(d);
        if (!(dot < 0.0) || !(-dot < dd)) continue;  // vertex not interior
        double cross = u.real() * d.imag() - u.imag() * d.real();
        best = std::min(best, std::abs(cross) / std::abs(d));
    }
    return best;
}

// The exact zero set of the interpolant: maximal closed intervals (node runs
// of zeros) plus isolated points. All decisions are sign tests and exact
// comparisons on the stored values; no tolerances are involved.
struct ZeroStructure {
    std::vector<std::pair<double, double>> intervals;
    std::vector<double> points;
    bool empty() const { return intervals.empty() && points.empty(); }
};

namespace detail {

// Maximal runs [i, j] (node indices, j > i) of consecutive zero values.
inline std::vector<std::pair<std::size_t, std::size_t>> zero_runs(
    const GridFunction& f) {
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    std::size_t k = 0;
    while (k < f.size()) {
        if (f.values[k] != cplx{}) {
            ++k;
            continue;
        }
        std::size_t j = k;
        while (j + 1 < f.size() && f.values[j + 1] == cplx{}) ++j;
        if (j > k) runs.emplace_back(k, j);
        k = j + 1;
    }
    return runs;
}

}  // namespace detail

inline ZeroStructure zero_structure(const GridFunction& f) {
    ZeroStructure zs;
    auto runs = detail::zero_runs(f);
    for (auto [i, j] : runs) zs.intervals.emplace_back(f.node(i), f.node(j));

    // zero nodes not inside a run of length >= 2
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f.values[k] != cplx{}) continue;
        bool in_run = false;
        for (auto [i, j] : runs) in_run |= (k >= i && k <= j);
        if (!in_run) zs.points.push_back(f.node(k));
    }

    // strictly interior zeros. A component c_u + lam*c_d has its root in
    // (0,1) iff c_u and c_d have strictly opposite signs and |c_u| < |c_d|;
    // two point-rooted components share the root iff the cross products
    // match exactly.
    auto interior = [](double cu, double cd) {
        return cu != 0.0 && cd != 0.0 && ((cu < 0.0) != (cd < 0.0)) &&
               std::abs(cu) < std::abs(cd);
    };
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
        cplx u = f.values[k], w = f.values[k + 1];
        if (u == cplx{} || w == cplx{}) continue;  // node zeros handled above
        cplx d = w - u;
        double ur = u.real(), ui = u.imag(), dr = d.real(), di = d.imag();
        bool re_full = (ur == 0.0 && dr == 0.0);
        bool im_full = (ui == 0.0 && di == 0.0);
        double lam = -1.0;
        if (re_full && interior(ui, di)) {
            lam = -ui / di;
        } else if (im_full && interior(ur, dr)) {
            lam = -ur / dr;
        } else if (interior(ur, dr) && interior(ui, di)) {
            if (ur * di == ui * dr) lam = std::abs(dr) >= std::abs(di) ? -ur / dr : -ui / di;
        }
        if (lam > 0.0 && lam < 1.0)
            zs.points.push_back(f.node(k) + lam * f.step());
    }

    std::sort(zs.points.begin(), zs.points.end());
    zs.points.erase(std::unique(zs.points.begin(), zs.points.end()),
                    zs.points.end());
    std::erase_if(zs.points, [&](double p) {
        for (auto [c, d] : zs.intervals)
            if (c <= p && p <= d) return true;
        return false;
    });
    return zs;
}

inline Classification classify(const GridFunction& f) {
    ZeroStructure zs = zero_structure(f);
    double m = min_abs(f);
    Classification c;
    if (zs.empty()) {
        c.regular = Verdict::proved(
            "f is bounded away from zero on [a,b], so 1/f is continuous and inverts f",
            {{"min_abs", m}});
        c.zero_divisor = Verdict::refuted(
            "f never vanishes, so f*g = 0 forces g = 0 pointwise");
        c.topological_divisor = Verdict::refuted(
            "min |f| = m > 0 gives ||f*g|| >= m*||g|| for every g",
            {{"min_abs", m}});
        c.singular = Verdict::refuted("f is invertible in C[a,b]");
        return c;
    }
    c.regular = Verdict::refuted(
        "f vanishes on [a,b], and invertible continuous functions are nowhere zero",
        {{"min_abs", m}});
    c.singular = Verdict::proved(
        "f has a zero, so no continuous g can satisfy f*g = 1");
    c.topological_divisor = Verdict::proved(
        "f vanishes at a point of [a,b]; unit-norm bumps shrinking onto the "
        "zero drive ||f*bump|| to 0");
    if (!zs.intervals.empty()) {
        c.zero_divisor = Verdict::proved(
            "the zero set of f contains an open interval, and the tent "
            "function supported there annihilates f",
            {{"interval_lo", zs.intervals.front().first},
             {"interval_hi", zs.intervals.front().second}});
    } else {
        c.zero_divisor = Verdict::refuted(
            "the zero set of f contains no open interval, so f*g = 0 forces "
            "g to vanish on a dense set, hence everywhere");
    }
    return c;
}

// Tent function supported on the leftmost widest zero interval of f,
// represented on the halved grid so the feet and the peak are nodes.
// f*g vanishes at every node of the refined grid exactly, and
// ||g|| = (d-c)/2 exactly (the stored peak value).
inline GridFunction zero_divisor_witness(const GridFunction& f) {
    auto runs = detail::zero_runs(f);
    if (runs.empty())
        throw NotAZeroDivisor(
            "the zero set of f contains no open interval, so f has no "
            "annihilating partner");
    std::size_t bi = 0, bj = 0;
    double bw = -1.0;
    for (auto [i, j] : runs) {
        double w = f.node(j) - f.node(i);
        if (w > bw) {
            bw = w;
            bi = i;
            bj = j;
        }
    }
    double c = f.node(bi), d = f.node(bj);
    double peak = (d - c) * 0.5;
    std::size_t M = 2 * f.segments();
    GridFunction g(f.a, f.b, std::vector<cplx>(M + 1, cplx{}));
    for (std::size_t k = 2 * bi + 1; k < 2 * bj; ++k) {
        if (k == bi + bj) {
            g.values[k] = peak;
        } else {
            double x = g.node(k);
            g.values[k] = (k < bi + bj) ? x - c : d - x;
        }
    }
    return g;
}

namespace detail {

// max over [t0, t1] of |u + sigma*t| * (1 - n*t). The squared objective is
// Q(t)*(1-nt)^2 with Q convex quadratic, so interior critical points solve
// a quadratic; together with the endpoints this is exhaustive.
inline double affine_bump_piece_max(cplx u, cplx sigma, double n, double t0,
                                    double t1) {
    auto m = [&](double t) {
        double g = 1.0 - n * t;
        if (g < 0.0) g = 0.0;
        return std::abs(u + sigma * t) * g;
    };
    double best = std::max(m(t0), m(t1));
    double A0 = std::norm(u);
    double A1 = 2.0 * (u.real() * sigma.real() + u.imag() * sigma.imag());
    double A2 = std::norm(sigma);
    double qa = -4.0 * n * A2;
    double qb = 2.0 * A2 - 3.0 * n * A1;
    double qc = A1 - 2.0 * n * A0;
    auto consider = [&](double t) {
        if (t > t0 && t < t1) best = std::max(best, m(t));
    };
    if (qa == 0.0) {
        if (qb != 0.0) consider(-qc / qb);
    } else {
        double disc = qb * qb - 4.0 * qa * qc;
        if (disc >= 0.0) {
            double r = std::sqrt(disc);
            consider((-qb + r) / (2.0 * qa));
            consider((-qb - r) / (2.0 * qa));
        }
    }
    return best;
}

// Exact max of |f(x)| * (1 - n|x-c|) over one side of the bump window.
// dir = +1 walks right from c, -1 walks left; len is the clipped half-width.
// When the side lies inside a single segment and f(c) = 0, the maximum has
// the closed form |slope| * max t(1-nt): |slope|/(4n) for a full side.
inline double bump_side_max(const GridFunction& f, double c, double n,
                            int dir, double len, bool fc_zero) {
    if (!(len > 0.0)) return 0.0;
    const double h = f.step();
    std::vector<double> ts;
    ts.push_back(0.0);
    for (std::size_t k = 0; k < f.size(); ++k) {
        double x = f.node(k);
        double t = double(dir) * (x - c);
        if (t > 0.0 && t < len) ts.push_back(t);
    }
    ts.push_back(len);
    std::sort(ts.begin(), ts.end());

    if (fc_zero && ts.size() == 2) {
        // single piece through c: f(c + dir*t) = slope * t
        double xm = c + double(dir) * 0.5 * len;
        std::size_t k = std::min(f.segments() - 1,
                                 std::size_t(std::max(0.0, (xm - f.a) / h)));
        cplx sigma = (f.values[k + 1] - f.values[k]) / h;
        double s = std::abs(sigma);
        if (len >= 0.5 / n) return s / (4.0 * n);
        return s * len * (1.0 - n * len);
    }

    double best = 0.0;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        double tp = ts[i], tq = ts[i + 1];
        if (!(tq > tp)) continue;
        double xm = c + double(dir) * 0.5 * (tp + tq);
        std::size_t k = std::min(f.segments() - 1,
                                 std::size_t(std::max(0.0, (xm - f.a) / h)));
        cplx delta = f.values[k + 1] - f.values[k];
        cplx u = f.values[k] + ((c - f.node(k)) / h) * delta;
        cplx sigma = double(dir) * delta / h;
        best = std::max(best, affine_bump_piece_max(u, sigma, n, tp, tq));
    }
    return best;
}

inline GridFunction render_bump(const GridFunction& f, double c,
                                std::size_t n) {
    const std::size_t segs = f.segments();
    // power-of-two refinement keeps refined nodes exactly on f's nodes
    double target = 4.0 * double(n) * f.step();
    std::size_t m = 1;
    while (double(m) < target && segs * m * 2 <= (std::size_t(1) << 18))
        m <<= 1;
    GridFunction g(f.a, f.b, std::vector<cplx>(segs * m + 1, cplx{}));
    for (std::size_t k = 0; k < g.size(); ++k) {
        double v = 1.0 - double(n) * std::abs(g.node(k) - c);
        g.values[k] = v > 0.0 ? v : 0.0;
    }
    // peak snaps to the nearest node; certificates are computed analytically
    // for the ideal bump, the grid is its rendering
    double tc = (c - g.a) / g.step();
    std::size_t kc = std::size_t(std::min(
        double(g.size() - 1), std::max(0.0, std::nearbyint(tc))));
    g.values[kc] = 1.0;
    return g;
}

}  // namespace detail

// Exact value of ||f * bump_n,c|| where bump_n,c(x) = max(0, 1 - n|x-c|).
inline NormBound bump_product_norm(const GridFunction& f, double c,
                                   std::size_t n) {
    if (n == 0) throw ParseError("bump index must be >= 1");
    bool fc_zero = (f.eval(c) == cplx{});
    double nd = double(n);
    double right = std::min(f.b, c + 1.0 / nd) - c;
    double left = c - std::max(f.a, c - 1.0 / nd);
    double r = detail::bump_side_max(f, c, nd, +1, right, fc_zero);
    double l = detail::bump_side_max(f, c, nd, -1, left, fc_zero);
    return NormBound::exact(std::max(l, r));
}

struct BumpWitness {
    GridFunction bump;
    NormBound unit_norm;
    NormBound product_norm;
};

// Unit-norm bump at a zero of f. ||f * bump|| <= max |f| over the window
// [c-1/n, c+1/n] (the certificate is the exact product norm, which is
// tighter); certificates tend to 0 in n by continuity.
inline BumpWitness tdz_bump_witness(const GridFunction& f, double c,
                                    std::size_t n) {
    if (c < f.a || c > f.b) throw OutsideDomain("c must lie in [a,b]");
    if (f.eval(c) != cplx{})
        throw NotAZero("the bump witness needs f(c) = 0 exactly");
    return BumpWitness{detail::render_bump(f, c, n), NormBound::exact(1.0),
                       bump_product_norm(f, c, n)};
}

inline WitnessSequence tdz_witness_sequence(const GridFunction& f) {
    ZeroStructure zs = zero_structure(f);
    if (zs.empty())
        throw NotATDZ("f has no zero on [a,b], so min |f| > 0 bounds every "
                      "product norm below");
    std::vector<double> cands;
    for (auto [c, d] : zs.intervals) cands.push_back(c);
    for (double p : zs.points) cands.push_back(p);
    std::sort(cands.begin(), cands.end());
    double c0 = cands.front();
    for (double p : cands)
        if (f.eval(p) == cplx{}) {
            c0 = p;
            break;
        }
    GridFunction fc = f;
    WitnessSequence w;
    w.description =
        "unit bumps shrinking onto the zero at x = " + std::to_string(c0);
    w.kind = WitnessKind::UnitMultiplier;
    w.monotone_from = 1;  // narrower bumps never increase the product norm
    w.at = [fc, c0](std::size_t n) {
        BumpWitness bw{detail::render_bump(fc, c0, n), NormBound::exact(1.0),
                       bump_product_norm(fc, c0, n)};
        return WitnessItem{Element(bw.bump), bw.unit_norm, bw.product_norm};
    };
    return w;
}

// Certified enclosure of ||p|| on [a,b] by adaptive sampling with a global
// derivative bound.
inline NormBound sup_norm(const RealPolynomial& p, const CertConfig& cfg = {}) {
    auto g = [&](double x) { return std::abs(p.eval(x)); };
    std::size_t init = std::max<std::size_t>(64, 2 * p.coeffs.size());
    auto r = certified_max(g, p.a, p.b, p.lipschitz_bound(), cfg.abs_tol,
                           cfg.refine_max_iters, init);
    if (!r.converged)
        throw CertificationFailed(
            r.evals, "sup-norm enclosure did not reach tolerance in budget");
    return r.bound;
}

// Certified enclosure of ||f - p|| on the common domain.
inline NormBound sup_norm_diff(const GridFunction& f, const RealPolynomial& p,
                               const CertConfig& cfg = {}) {
    if (f.a != p.a || f.b != p.b)
        throw Unrepresentable("sup_norm_diff needs a common domain");
    auto g = [&](double x) { return std::abs(f.eval(x) - p.eval(x)); };
    double lip = grid_lipschitz(f) + p.lipschitz_bound();
    // When p tracks f closely, |f - p| can be almost flat where it peaks
    // (Bernstein approximants of piecewise-linear f match low-order
    // derivatives at the endpoints), and the global constant alone refuses
    // to discard plateau intervals wider than tol/lip. On an interval inside
    // one grid segment the difference has slope |f' - p'|, which the segment
    // slope, p' at the midpoint and a curvature pad bound from above.
    const double curv = p.curvature_bound();
    const double h = f.step();
    auto local = [&f, &p, curv, h](double x0, double x1, double g0, double g1) {
        double t = std::floor((x0 - f.a) / h);
        double kmax = double(f.segments() - 1);
        std::size_t k = std::size_t(std::clamp(t, 0.0, kmax));
        if (x1 > f.node(k + 1))
            return std::numeric_limits<double>::infinity();
        cplx slope = (f.values[k + 1] - f.values[k]) / h;
        double l = std::abs(slope - p.deriv_eval(0.5 * (x0 + x1))) +
                   0.5 * curv * (x1 - x0);
        return 0.5 * (g0 + g1) + 0.5 * l * (x1 - x0);
    };
    std::size_t init = std::max<std::size_t>(256, 2 * f.size());
    auto r = certified_max(g, f.a, f.b, lip, cfg.abs_tol,
                           cfg.refine_max_iters, init, local);
    if (!r.converged)
        throw CertificationFailed(
            r.evals, "sup-norm enclosure did not reach tolerance in budget");
    return r.bound;
}

// Bernstein polynomial of f of degree n, in the stable Bernstein basis.
inline RealPolynomial bernstein_approx(const GridFunction& f, std::size_t n) {
    if (n == 0) throw ParseError("bernstein degree must be >= 1");
    std::vector<cplx> ctrl(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        double x = f.a + (f.b - f.a) * (double(k) / double(n));
        ctrl[k] = f.eval(x);
    }
    return RealPolynomial(f.a, f.b, std::move(ctrl), PolyBasis::Bernstein);
}

// p - p(c): vanishes at c and moves the sup norm by exactly |p(c)|.
inline RealPolynomial vanishing_shift(const RealPolynomial& p, double c) {
    return p.shifted_by(p.eval(c));
}

// Degree-indexed chain q_n = B_n(f) - B_n(f)(c): each q_n vanishes at c and
// ||f - q_n|| <= ||f - B_n f|| + |B_n f(c)| -> 0, exhibiting f as a uniform
// limit of elements that vanish at c.
inline WitnessSequence weierstrass_tdz_route(const GridFunction& f, double c,
                                             std::vector<std::size_t> degrees,
                                             const CertConfig& cfg = {}) {
    if (f.eval(c) != cplx{})
        throw NotAZero("the route needs f(c) = 0 exactly");
    if (degrees.empty()) throw ParseError("need at least one degree");
    GridFunction fc = f;
    CertConfig cc = cfg;
    std::vector<std::size_t> degs = std::move(degrees);
    WitnessSequence w;
    w.description = "shifted Bernstein approximants vanishing at x = " +
                    std::to_string(c);
    w.kind = WitnessKind::ApproximationChain;
    w.monotone_from = degs.size() + 1;  // no per-step monotonicity claimed
    w.max_index = degs.size();
    w.at = [fc, c, cc, degs](std::size_t k) {
        std::size_t n = degs.at(k - 1);
        RealPolynomial bn = bernstein_approx(fc, n);
        RealPolynomial q = bn.shifted_by(bn.eval(c));
        // ||f - q_n|| <= ||f - B_n f|| + |B_n f(c)| -> 0; certifying the
        // difference directly gives a tighter enclosure than the triangle
        // inequality
        NormBound err = sup_norm_diff(fc, q, cc);
        return WitnessItem{Element(q), sup_norm(q, cc), err};
    };
    return w;
}

}  // namespace banach
