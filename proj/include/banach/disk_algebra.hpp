#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "banach/blaschke_product.hpp"
#include "banach/complex_polynomial.hpp"
#include "banach/config.hpp"
#include "banach/disk_element.hpp"
#include "banach/errors.hpp"
#include "banach/norm_bound.hpp"
#include "banach/optimize.hpp"
#include "banach/verdict.hpp"
#include "banach/witness_sequence.hpp"

namespace banach {

// Radii within this distance of 1 are treated as lying on the unit circle.
inline constexpr double kBoundaryRegime = 1e-12;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

struct CircleExtremum {
    NormBound bound{0.0, 0.0};
    double theta = 0.0;  // sample angle realising the best value found
    std::size_t evals = 0;
};

// Certified enclosure of max |f| over the unit circle. By the maximum
// modulus principle this is the sup norm of f over the closed disk.
namespace detail {

// c * z^k has constant modulus |c| on the circle; a Lipschitz-only scan
// cannot certify a flat objective cheaply, so it is answered in closed form
inline std::optional<double> single_term_modulus(const ComplexPolynomial& p) {
    std::optional<double> m;
    for (const cplx& c : p.coeffs) {
        if (c == cplx{}) continue;
        if (m) return std::nullopt;
        m = std::abs(c);
    }
    return m ? m : std::optional<double>(0.0);
}

// Second-order bounds for |p(e^{i theta})| on a node of a circle scan.
// Around the midpoint, p(e^{i theta}) stays within curv * h^2 / 2 of the
// affine path q + s*dq, s in [-h, h], whose modulus peaks at an end and
// bottoms out at the closest point to the origin. Near a flat modulus
// extremum the first-order term cancels, so these bounds shrink with the
// square of the node width where a Lipschitz cut stalls.
inline double angular_node_sup(const ComplexPolynomial& p, double curv,
                               double t0, double t1) {
    double h = 0.5 * (t1 - t0);
    cplx zm = std::polar(1.0, 0.5 * (t0 + t1));
    cplx q = p.eval(zm);
    cplx dq = cplx(0.0, 1.0) * zm * p.deriv_eval(zm);
    return std::max(std::abs(q - h * dq), std::abs(q + h * dq)) +
           0.5 * curv * h * h;
}

inline double angular_node_inf(const ComplexPolynomial& p, double curv,
                               double t0, double t1) {
    double h = 0.5 * (t1 - t0);
    cplx zm = std::polar(1.0, 0.5 * (t0 + t1));
    cplx q = p.eval(zm);
    cplx dq = cplx(0.0, 1.0) * zm * p.deriv_eval(zm);
    double dd = std::norm(dq);
    double s = 0.0;
    if (dd > 0.0) {
        s = -(q.real() * dq.real() + q.imag() * dq.imag()) / dd;
        s = std::clamp(s, -h, h);
    }
    return std::max(0.0, std::abs(q + s * dq) - 0.5 * curv * h * h);
}

inline NodeBound angular_sup_bound(const ComplexPolynomial& p) {
    double curv = p.angular_curvature_sum();
    return [p, curv](double t0, double t1, double, double) {
        return angular_node_sup(p, curv, t0, t1);
    };
}

inline NodeBound angular_inf_bound(const ComplexPolynomial& p) {
    double curv = p.angular_curvature_sum();
    return [p, curv](double t0, double t1, double, double) {
        return angular_node_inf(p, curv, t0, t1);
    };
}

}  // namespace detail

inline CircleExtremum circle_sup(const DiskElement& f,
                                 const CertConfig& cfg = {}) {
    if (auto m = detail::single_term_modulus(f.poly))
        return CircleExtremum{NormBound::exact(*m), 0.0, 0};
    // any Blaschke factor has modulus exactly 1 on the circle, so |f| there
    // equals |poly|: scanning the polynomial part alone is exact, avoids the
    // Blaschke evaluation noise, and keeps constant-modulus elements cheap
    auto g = [&](double th) {
        return std::abs(f.poly.eval(std::polar(1.0, th)));
    };
    auto r = certified_max(g, 0.0, kTwoPi, f.poly.deriv_abs_sum(), cfg.abs_tol,
                           cfg.refine_max_iters, cfg.circle_samples,
                           detail::angular_sup_bound(f.poly));
    if (!r.converged)
        throw CertificationFailed(
            r.evals, "circle sup enclosure did not reach tolerance in budget");
    return CircleExtremum{r.bound, r.arg, r.evals};
}

inline NormBound circle_sup_norm(const DiskElement& f,
                                 const CertConfig& cfg = {}) {
    return circle_sup(f, cfg).bound;
}

// Zeros of f sorted by their position relative to the unit circle. Blaschke
// zeros are strictly interior by construction; polynomial roots are located
// numerically, so availability is reported rather than assumed.
struct RootInventory {
    bool available = false;
    std::vector<cplx> inside;
    std::vector<cplx> boundary;
    std::vector<cplx> outside;
};

inline RootInventory root_inventory(const DiskElement& f) {
    RootInventory inv;
    if (f.poly.is_zero()) return inv;
    auto roots = polynomial_roots(f.poly);
    if (!roots) return inv;
    inv.available = true;
    if (f.blaschke)
        for (const cplx& w : f.blaschke->zeros) inv.inside.push_back(w);
    for (const cplx& r : *roots) {
        double m = std::abs(r);
        if (std::abs(m - 1.0) <= kBoundaryRegime)
            inv.boundary.push_back(r);
        else if (m < 1.0)
            inv.inside.push_back(r);
        else
            inv.outside.push_back(r);
    }
    return inv;
}

// Certified enclosure of min |f| over the unit circle. A root located on
// the circle pins the minimum at exactly 0, keeping the enclosure coherent
// with the zero inventory.
inline CircleExtremum circle_min(const DiskElement& f,
                                 const CertConfig& cfg = {}) {
    auto inv = root_inventory(f);
    if (inv.available && !inv.boundary.empty()) {
        double th = std::arg(inv.boundary.front());
        if (th < 0.0) th += kTwoPi;
        return CircleExtremum{NormBound::exact(0.0), th, 0};
    }
    if (f.is_zero()) return CircleExtremum{NormBound::exact(0.0), 0.0, 0};
    if (auto m = detail::single_term_modulus(f.poly))
        return CircleExtremum{NormBound::exact(*m), 0.0, 0};
    // |f| = |poly| on the circle (Blaschke factors are unimodular there)
    auto g = [&](double th) {
        return std::abs(f.poly.eval(std::polar(1.0, th)));
    };
    auto r = certified_min(g, 0.0, kTwoPi, f.poly.deriv_abs_sum(), cfg.abs_tol,
                           cfg.refine_max_iters, cfg.circle_samples,
                           detail::angular_inf_bound(f.poly));
    if (!r.converged)
        throw CertificationFailed(
            r.evals, "circle min enclosure did not reach tolerance in budget");
    return CircleExtremum{r.bound, r.arg, r.evals};
}

inline NormBound circle_min_abs(const DiskElement& f,
                                const CertConfig& cfg = {}) {
    return circle_min(f, cfg).bound;
}

inline Classification classify(const DiskElement& f,
                               const CertConfig& cfg = {}) {
    Classification c;
    if (f.is_zero()) {
        c.regular = Verdict::refuted("the zero element is not invertible");
        c.zero_divisor = Verdict::refuted(
            "the zero element is excluded from the zero-divisor notion");
        c.topological_divisor =
            Verdict::proved("||0 * g|| = 0 for every multiplier g");
        c.singular = Verdict::proved("the zero element is not invertible");
        return c;
    }
    c.zero_divisor = Verdict::refuted(
        "a nonzero disk-algebra element has isolated zeros, so f*g = 0 "
        "forces g = 0 on a set with a limit point, hence g = 0");
    auto inv = root_inventory(f);
    if (!inv.available) {
        auto m = circle_min(f, cfg);
        if (m.bound.lo > 0.0) {
            c.topological_divisor = Verdict::refuted(
                "min |f| on the unit circle is m > 0, and the maximum "
                "modulus principle gives ||f*g|| >= m*||g||",
                {{"circle_min", m.bound.lo}});
            c.regular = Verdict::unknown(
                "the zero inventory is unavailable at this degree, and the "
                "circle minimum alone cannot rule out interior zeros");
            c.singular = Verdict::unknown(
                "the zero inventory is unavailable at this degree");
        } else {
            c.topological_divisor = Verdict::unknown(
                "the circle minimum enclosure touches zero but no root was "
                "certified on the circle",
                {{"circle_min_hi", m.bound.hi}});
            c.regular = Verdict::unknown("the zero inventory is unavailable");
            c.singular = Verdict::unknown("the zero inventory is unavailable");
        }
        return c;
    }
    if (!inv.boundary.empty()) {
        const cplx& w = inv.boundary.front();
        c.topological_divisor = Verdict::proved(
            "f vanishes on the unit circle; binomial peak multipliers "
            "concentrated at the boundary zero drive ||f*g||/||g|| to 0",
            {{"root_re", w.real()}, {"root_im", w.imag()}});
        c.singular =
            Verdict::proved("f vanishes on the closed unit disk");
        c.regular = Verdict::refuted("f vanishes on the closed unit disk");
        return c;
    }
    if (!inv.inside.empty()) {
        const cplx& w = inv.inside.front();
        auto m = circle_min(f, cfg);
        c.singular = Verdict::proved(
            "f vanishes inside the open disk, so f*g = 1 fails there",
            {{"root_re", w.real()}, {"root_im", w.imag()}});
        c.regular = Verdict::refuted("f has a zero inside the disk");
        if (m.bound.lo > 0.0)
            c.topological_divisor = Verdict::refuted(
                "min |f| on the unit circle is m > 0, and the maximum "
                "modulus principle gives ||f*g|| >= m*||g|| even though f "
                "is singular",
                {{"circle_min", m.bound.lo}});
        else
            c.topological_divisor = Verdict::unknown(
                "the circle minimum enclosure touches zero: the zeros sit "
                "too close to the circle to separate at this tolerance",
                {{"circle_min_hi", m.bound.hi}});
        return c;
    }
    auto m = circle_min(f, cfg);
    c.regular = Verdict::proved(
        "f has no zero in the closed unit disk, so 1/f is analytic on a "
        "neighbourhood of it",
        {{"circle_min", m.bound.lo}});
    c.singular = Verdict::refuted("f is invertible in the disk algebra");
    c.topological_divisor = Verdict::refuted(
        "f is invertible in the disk algebra, so ||f*g|| >= ||g|| / ||1/f|| "
        "keeps every product norm away from zero",
        {{"circle_min", m.bound.lo}});
    return c;
}

// ||B*g|| = ||g|| for every Blaschke product B: |B| = 1 on the circle and
// both norms are attained there. The check certifies both norms and
// compares the enclosures.
inline Verdict blaschke_isometry_check(const BlaschkeProduct& B,
                                       const DiskElement& g,
                                       const CertConfig& cfg = {}) {
    auto gs = circle_sup(g, cfg);
    auto prod = [&](double th) {
        cplx z = std::polar(1.0, th);
        return std::abs(B.eval(z) * g.eval(z));
    };
    // |B| = 1 on the circle, so |B*g| = |g| pointwise there and g's own
    // angular Lipschitz bound applies to the product; a single-term g even
    // has constant product modulus
    double L = detail::single_term_modulus(g.poly) ? 0.0
                                                   : g.circle_lipschitz();
    auto ps = certified_max(prod, 0.0, kTwoPi, L, cfg.abs_tol,
                            cfg.refine_max_iters, cfg.circle_samples,
                            detail::angular_sup_bound(g.poly));
    if (!ps.converged)
        throw CertificationFailed(
            ps.evals, "product norm enclosure did not reach tolerance");
    double gp = gap(ps.bound, gs.bound);
    std::map<std::string, double> ev{{"product_lo", ps.bound.lo},
                                     {"product_hi", ps.bound.hi},
                                     {"base_lo", gs.bound.lo},
                                     {"base_hi", gs.bound.hi},
                                     {"gap", gp}};
    if (gp <= cfg.abs_tol)
        return Verdict::proved(
            "multiplication by a Blaschke product preserves the sup norm: "
            "the certified enclosures of ||B*g|| and ||g|| agree within "
            "tolerance",
            ev);
    return Verdict::unknown(
        "the enclosures of ||B*g|| and ||g|| are separated by more than the "
        "tolerance; certification failed to confirm the isometry",
        ev);
}

// No multiplier sequence can witness a Blaschke product as a topological
// zero divisor: each trial ratio ||B*g||/||g|| is pinned at 1. The lower
// bound per trial is |B(z*) g(z*)| / hi(||g||) at the angle realising the
// best ||g|| sample.
inline Verdict blaschke_non_tdz_certificate(const BlaschkeProduct& B,
                                            const std::vector<DiskElement>& trials,
                                            const CertConfig& cfg = {}) {
    if (trials.empty()) throw ParseError("need at least one trial multiplier");
    // scan each trial tighter than the proof threshold so the enclosure
    // width cannot eat the whole tolerance on unit-norm multipliers
    CertConfig sc = cfg;
    sc.abs_tol = 0.25 * cfg.abs_tol;
    double min_ratio = std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    for (const DiskElement& g : trials) {
        if (g.is_zero()) continue;
        auto gs = circle_sup(g, sc);
        if (!(gs.bound.hi > 0.0)) continue;
        cplx z = std::polar(1.0, gs.theta);
        double lb = std::abs(B.eval(z) * g.eval(z)) / gs.bound.hi;
        min_ratio = std::min(min_ratio, lb);
        ++used;
    }
    if (used == 0)
        throw ParseError("all trial multipliers were zero");
    std::map<std::string, double> ev{{"min_ratio", min_ratio},
                                     {"trials", double(used)}};
    if (min_ratio >= 1.0 - cfg.abs_tol)
        return Verdict::proved(
            "|B| = 1 on the unit circle, so ||B*g|| = ||g||: every trial "
            "ratio stays at 1 within tolerance",
            ev);
    return Verdict::unknown(
        "a trial ratio fell below 1 - tol; the evaluation is "
        "ill-conditioned for this Blaschke product",
        ev);
}

inline Classification linear_factor_classify(cplx z0,
                                             const CertConfig& cfg = {}) {
    (void)cfg;
    double r = std::abs(z0);
    double dist = std::abs(1.0 - r);
    double circle_min_val = dist * 0.5;
    Classification c;
    c.zero_divisor = Verdict::refuted(
        "a nonzero disk-algebra element has isolated zeros, so f*g = 0 "
        "forces g = 0 on a set with a limit point, hence g = 0");
    if (dist <= kBoundaryRegime) {
        c.topological_divisor = Verdict::proved(
            "z0 lies on the unit circle; the binomial peak multipliers g_n "
            "keep ||g_n|| = 1 while ||f*g_n|| -> 0",
            {{"radius", r}});
        c.regular = Verdict::refuted("f(z0) = 0 on the closed unit disk");
        c.singular = Verdict::proved("f(z0) = 0 on the closed unit disk");
    } else if (r < 1.0) {
        c.regular = Verdict::refuted("f vanishes at z0 inside the disk",
                                     {{"radius", r}});
        c.singular = Verdict::proved(
            "f(z0) = 0 with |z0| < 1, so f*g = 1 fails at z0",
            {{"radius", r}});
        c.topological_divisor = Verdict::refuted(
            "min |f| over the unit circle is (1-r)/2 > 0, and the maximum "
            "modulus principle gives ||f*g|| >= min_circle|f| * ||g||",
            {{"circle_min", circle_min_val}});
    } else {
        c.regular = Verdict::proved(
            "the only zero z0 lies outside the closed disk at distance "
            "r - 1, so 1/f is analytic on the closed disk",
            {{"radius", r}, {"annulus_gap", r - 1.0},
             {"circle_min", circle_min_val}});
        c.singular = Verdict::refuted("f is invertible in the disk algebra");
        c.topological_divisor = Verdict::refuted(
            "min |f| over the unit circle is (r-1)/2 > 0, so "
            "||f*g|| >= min_circle|f| * ||g||",
            {{"circle_min", circle_min_val}});
    }
    return c;
}

// Exact sup of |f*g_n| on the circle for f = (z-z0)/2, g_n the binomial
// peak: max over angles of sin(t/2) cos(t/2)^n with t the angle from z0,
// attained at tan^2(t/2) = 1/n.
inline double closed_form_witness_norm(std::size_t n) {
    double nd = double(n);
    return std::pow(nd / (nd + 1.0), nd * 0.5) / std::sqrt(nd + 1.0);
}

struct LinearFactorWitness {
    DiskElement multiplier;
    NormBound unit_norm{0.0, 1.0};
    NormBound product_norm{0.0, 1.0};
};

// g_n = ((z + z0)/2)^n concentrates at the boundary zero z0 of
// f = (z - z0)/2: |g_n| = |cos(t/2)|^n on the circle peaks at 1 over z0,
// while ||f*g_n|| decays like 1/sqrt(n).
inline LinearFactorWitness linear_factor_witness(cplx z0, std::size_t n,
                                                 const CertConfig& cfg = {}) {
    double r = std::abs(z0);
    if (std::abs(r - 1.0) > kBoundaryRegime)
        throw NotUnimodular(
            "|z0| must equal 1 within 1e-12 for the vanishing route");
    if (n == 0) throw ParseError("witness index must be >= 1");
    if (n > 1020)
        throw Unrepresentable(
            "witness indices beyond 1020 underflow the binomial scale");

    // coefficients C(n,k) z0^(n-k) 2^(-n), built at final scale so the
    // largest intermediate stays near sqrt(2/(pi n))
    std::vector<double> w(n + 1);
    w[0] = std::ldexp(1.0, -int(n));
    for (std::size_t k = 1; k <= n; ++k)
        w[k] = w[k - 1] * (double(n - k + 1) / double(k));
    std::vector<cplx> pw(n + 1);
    pw[0] = 1.0;
    for (std::size_t j = 1; j <= n; ++j) pw[j] = pw[j - 1] * z0;
    std::vector<cplx> coef(n + 1);
    for (std::size_t k = 0; k <= n; ++k) coef[k] = w[k] * pw[n - k];
    DiskElement g{ComplexPolynomial(std::move(coef))};

    double ub = std::pow((1.0 + r) * 0.5, double(n));
    double lb = std::min(std::pow(r, double(n)), ub);

    auto obj = [z0, n](double th) {
        cplx z = std::polar(1.0, th);
        return std::abs(z - z0) * 0.5 *
               std::pow(std::abs((z + z0) * 0.5), double(n));
    };
    // degree n+1 polynomial on the circle: |d/dtheta| <= deg * sup
    double M = std::pow((1.0 + r) * 0.5, double(n + 1));
    double L = double(n + 1) * std::max(1.0, M);
    // the product norm itself decays like 1/sqrt(n); scaling the scan
    // tolerance with n keeps large indices affordable while staying far
    // below the gap between consecutive certified values
    double tol = std::max(cfg.abs_tol, 1e-9 * double(n));
    auto ps = certified_max(obj, 0.0, kTwoPi, L, tol,
                            cfg.refine_max_iters, cfg.circle_samples);
    if (!ps.converged)
        throw CertificationFailed(
            ps.evals, "product norm enclosure did not reach tolerance");
    return LinearFactorWitness{std::move(g), NormBound(lb, std::max(lb, ub)),
                               ps.bound};
}

// Binomial peak multipliers g_n = ((z + zeta)/2)^n concentrated at a
// certified boundary zero zeta of f: ||g_n|| = 1 (attained at zeta) and
// ||f*g_n|| -> |f(zeta)| = 0.
inline WitnessSequence tdz_witness_sequence(const DiskElement& f,
                                            const CertConfig& cfg = {}) {
    if (f.is_zero()) {
        WitnessSequence w;
        w.description = "any unit multiplier annihilates the zero element";
        w.kind = WitnessKind::UnitMultiplier;
        w.monotone_from = 1;
        w.at = [](std::size_t) {
            return WitnessItem{Element(DiskElement{ComplexPolynomial::one()}),
                               NormBound::exact(1.0), NormBound::exact(0.0)};
        };
        return w;
    }
    auto inv = root_inventory(f);
    if (!inv.available)
        throw CertificationFailed(
            0, "the zero inventory is unavailable at this degree");
    if (inv.boundary.empty())
        throw NotATDZ(
            "f has no certified zero on the unit circle, so min_circle|f| "
            "bounds ||f*g||/||g|| below");
    cplx zeta = inv.boundary.front();
    DiskElement fc = f;
    CertConfig cc = cfg;
    WitnessSequence w;
    w.description =
        "binomial peak multipliers concentrated at the boundary zero";
    w.kind = WitnessKind::UnitMultiplier;
    w.monotone_from = 1;
    w.at = [fc, zeta, cc](std::size_t n) {
        double r = std::abs(zeta);
        double ubg = std::pow((1.0 + r) * 0.5, double(n));
        double lbg = std::min(std::pow(r, double(n)), ubg);
        auto obj = [&fc, zeta, n](double th) {
            cplx z = std::polar(1.0, th);
            return std::abs(fc.eval(z)) *
                   std::pow(std::abs((z + zeta) * 0.5), double(n));
        };
        double L = fc.circle_lipschitz() * ubg +
                   fc.circle_sup_bound() * double(n) * ubg;
        double tol = std::max(cc.abs_tol, 1e-9 * double(n));
        auto ps = certified_max(obj, 0.0, kTwoPi, L, tol,
                                cc.refine_max_iters, cc.circle_samples);
        if (!ps.converged)
            throw CertificationFailed(
                ps.evals, "product norm enclosure did not reach tolerance");
        // rendering the multiplier needs the binomial expansion; reuse the
        // scaled-binomial build
        std::vector<double> wts(n + 1);
        wts[0] = std::ldexp(1.0, -int(std::min<std::size_t>(n, 1020)));
        for (std::size_t k = 1; k <= n; ++k)
            wts[k] = wts[k - 1] * (double(n - k + 1) / double(k));
        std::vector<cplx> pw(n + 1);
        pw[0] = 1.0;
        for (std::size_t j = 1; j <= n; ++j) pw[j] = pw[j - 1] * zeta;
        std::vector<cplx> coef(n + 1);
        for (std::size_t k = 0; k <= n; ++k) coef[k] = wts[k] * pw[n - k];
        return WitnessItem{Element(DiskElement{ComplexPolynomial(coef)}),
                           NormBound(lbg, std::max(lbg, ubg)), ps.bound};
    };
    w.max_index = 1020;
    return w;
}

inline WitnessSequence linear_factor_witness_sequence(
    cplx z0, const CertConfig& cfg = {}) {
    double r = std::abs(z0);
    if (std::abs(r - 1.0) > kBoundaryRegime)
        throw NotUnimodular(
            "|z0| must equal 1 within 1e-12 for the vanishing route");
    CertConfig cc = cfg;
    WitnessSequence w;
    w.description = "binomial peak multipliers concentrated at the boundary "
                    "zero";
    w.kind = WitnessKind::UnitMultiplier;
    w.monotone_from = 1;
    w.max_index = 1020;
    w.at = [z0, cc](std::size_t n) {
        auto lw = linear_factor_witness(z0, n, cc);
        return WitnessItem{Element(std::move(lw.multiplier)), lw.unit_norm,
                           lw.product_norm};
    };
    return w;
}

}  // namespace banach
