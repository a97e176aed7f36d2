#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "banach/config.hpp"
#include "banach/disk_algebra.hpp"
#include "banach/element.hpp"
#include "banach/errors.hpp"
#include "banach/interval_algebra.hpp"
#include "banach/phi.hpp"
#include "banach/sequence_algebra.hpp"
#include "banach/verdict.hpp"

namespace banach {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

inline double urand(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline cplx crand_box(std::mt19937_64& rng, double r) {
    return cplx(urand(rng, -r, r), urand(rng, -r, r));
}

// complex value bounded away from zero (moduli in roughly [0.2, 1.9])
inline cplx crand_nonzero(std::mt19937_64& rng) {
    double re = (0.2 + urand(rng, 0.0, 1.0)) *
                (urand(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
    double im = urand(rng, -0.7, 0.7);
    return cplx(re, im);
}

inline BlaschkeProduct random_blaschke(std::mt19937_64& rng,
                                       std::size_t max_zeros) {
    std::size_t nz =
        1 + std::size_t(urand(rng, 0.0, double(max_zeros)) * 0.999999);
    std::vector<cplx> zeros;
    for (std::size_t i = 0; i < nz; ++i)
        zeros.push_back(std::polar(urand(rng, 0.0, 0.85),
                                   urand(rng, 0.0, kTwoPi)));
    return BlaschkeProduct(std::move(zeros),
                           std::polar(1.0, urand(rng, 0.0, kTwoPi)));
}

inline ComplexPolynomial random_poly(std::mt19937_64& rng,
                                     std::size_t max_deg) {
    std::size_t deg = std::size_t(urand(rng, 0.0, double(max_deg) + 0.999));
    if (deg > max_deg) deg = max_deg;
    std::vector<cplx> c(deg + 1);
    for (auto& z : c) z = crand_box(rng, 1.0);
    if (std::abs(c[0]) < 0.1) c[0] += cplx(1.0, 0.0);  // keep it nonzero
    return ComplexPolynomial(std::move(c));
}

// random polynomial rescaled by its certified sup norm, so the trial is
// unit-norm up to the (loose) enclosure width
inline DiskElement random_unit_poly(std::mt19937_64& rng) {
    ComplexPolynomial p = random_poly(rng, 10);
    CertConfig loose;
    loose.abs_tol = 1e-6;
    double s = circle_sup_norm(DiskElement{p}, loose).hi;
    std::vector<cplx> c = p.coeffs;
    for (auto& z : c) z /= s;
    return DiskElement{ComplexPolynomial(std::move(c))};
}

}  // namespace detail

// Criterion 1: for z0 = 1 and n = 1..50, the certified enclosure of
// ||f * g_n|| contains the closed-form value with width <= 1e-6.
inline CheckResult check_closed_form_match(const CertConfig& base = {}) {
    CertConfig cfg = base;
    // a 1e-7 scan keeps every enclosure an order of magnitude inside the
    // 1e-6 width requirement at a fraction of the tight-tolerance cost
    cfg.abs_tol = 1e-7;
    bool ok = true;
    double max_width = 0.0, max_dev = 0.0;
    for (std::size_t n = 1; n <= 50; ++n) {
        auto lw = linear_factor_witness(cplx(1.0, 0.0), n, cfg);
        double cf = closed_form_witness_norm(n);
        double w = lw.product_norm.width();
        bool contains = lw.product_norm.lo - 1e-12 <= cf &&
                        cf <= lw.product_norm.hi + 1e-12;
        bool unit_ok = lw.unit_norm.lo <= 1.0 && 1.0 <= lw.unit_norm.hi;
        max_width = std::max(max_width, w);
        max_dev = std::max(max_dev, std::abs(lw.product_norm.mid() - cf));
        ok = ok && contains && unit_ok && w <= 1e-6;
    }
    return CheckResult{1, "closed-form witness norm match", ok,
                       "n=1..50: max enclosure width " + detail::fmt(max_width) +
                           ", max |mid - formula| " + detail::fmt(max_dev)};
}

// Criterion 2: 100 random (Blaschke, polynomial) pairs have
// | ||B*f|| - ||f|| | <= 1e-8 via overlapping enclosures, and every B is
// unimodular to 1e-10 at 2^16 circle samples.
inline CheckResult check_blaschke_isometry(std::uint64_t seed = 0,
                                           const CertConfig& base = {}) {
    CertConfig cfg = base;
    // both norms enclose the same value, so the midpoint deviation is at
    // most the sum of the half-widths: 4e-9 keeps it under the 1e-8 bar
    cfg.abs_tol = 4e-9;
    std::mt19937_64 rng(seed);
    bool ok = true;
    double max_dev = 0.0;
    std::vector<BlaschkeProduct> bs;
    for (int i = 0; i < 100; ++i) {
        BlaschkeProduct B = detail::random_blaschke(rng, 5);
        DiskElement f{detail::random_poly(rng, 10)};
        Verdict v = blaschke_isometry_check(B, f, cfg);
        double dev = std::abs((v.evidence.at("product_lo") +
                               v.evidence.at("product_hi")) *
                                  0.5 -
                              (v.evidence.at("base_lo") +
                               v.evidence.at("base_hi")) *
                                  0.5);
        max_dev = std::max(max_dev, dev);
        ok = ok && v.proved_() && dev <= 1e-8;
        bs.push_back(std::move(B));
    }
    double max_uni = 0.0;
    const std::size_t samples = std::size_t(1) << 16;
    for (const auto& B : bs)
        for (std::size_t k = 0; k < samples; ++k) {
            double th = kTwoPi * double(k) / double(samples);
            max_uni = std::max(
                max_uni, std::abs(std::abs(B.eval(std::polar(1.0, th))) - 1.0));
        }
    ok = ok && max_uni <= 1e-10;
    return CheckResult{2, "blaschke isometry and unimodularity", ok,
                       "100 pairs: max | ||Bf|| - ||f|| | " +
                           detail::fmt(max_dev) +
                           "; max ||B|-1| over 2^16 samples " +
                           detail::fmt(max_uni)};
}

// Criterion 3: 10 random Blaschke products x 100 random trial polynomials:
// min ||B*g||/||g|| >= 1 - 1e-8.
inline CheckResult check_blaschke_non_tdz(std::uint64_t seed = 0,
                                          const CertConfig& base = {}) {
    CertConfig cfg = base;
    cfg.abs_tol = 1e-8;
    std::mt19937_64 rng(seed + 1);
    bool ok = true;
    double worst = 1.0;
    for (int i = 0; i < 10; ++i) {
        BlaschkeProduct B = detail::random_blaschke(rng, 5);
        std::vector<DiskElement> trials;
        for (int t = 0; t < 100; ++t)
            trials.push_back(detail::random_unit_poly(rng));
        Verdict v = blaschke_non_tdz_certificate(B, trials, cfg);
        double mr = v.evidence.at("min_ratio");
        worst = std::min(worst, mr);
        ok = ok && v.proved_() && mr >= 1.0 - 1e-8;
    }
    return CheckResult{3, "blaschke non-tdz ratio floor", ok,
                       "10 products x 100 trials: min ||Bg||/||g|| = " +
                           detail::fmt(worst)};
}

// Criterion 4: 50 random piecewise-linear functions vanishing on a node
// interval; the tent witness gives node-exact f*g = 0 and
// ||g|| = (d-c)/2 bit-for-bit.
inline CheckResult check_tent_round_trip(std::uint64_t seed = 0) {
    std::mt19937_64 rng(seed + 2);
    bool ok = true;
    int exact_norms = 0, exact_products = 0;
    for (int t = 0; t < 50; ++t) {
        std::size_t segs = 6 + std::size_t(detail::urand(rng, 0.0, 30.0));
        double a = (t % 3 == 0) ? -1.0 : 0.0;
        double b = (t % 3 == 0) ? 1.5 : 1.0;
        std::size_t i = std::size_t(detail::urand(rng, 0.0, double(segs - 3)));
        std::size_t maxw = segs - i;
        std::size_t w =
            2 + std::size_t(detail::urand(rng, 0.0, double(maxw - 2)));
        std::size_t j = std::min(segs, i + w);
        std::vector<cplx> vals(segs + 1);
        for (std::size_t k = 0; k <= segs; ++k)
            vals[k] = (k >= i && k <= j) ? cplx{}
                                         : detail::crand_nonzero(rng);
        GridFunction f(a, b, std::move(vals));
        GridFunction g = zero_divisor_witness(f);
        double want = (f.node(j) - f.node(i)) * 0.5;
        bool norm_ok = sup_norm(g).hi == want && sup_norm(g).lo == want;
        bool prod_ok = true;
        for (std::size_t k = 0; k < g.size(); ++k) {
            double x = g.node(k);
            if (f.eval(x) * g.eval(x) != cplx{}) prod_ok = false;
        }
        exact_norms += norm_ok;
        exact_products += prod_ok;
        ok = ok && norm_ok && prod_ok;
    }
    return CheckResult{4, "tent zero-divisor round trip", ok,
                       "50 cases: " + std::to_string(exact_norms) +
                           " exact norms, " + std::to_string(exact_products) +
                           " node-exact zero products"};
}

// Criterion 5: for f(x) = x - 1/2 the bump witnesses give
// ||f*g_n|| = 1/(4n) bit-for-bit for n = 1..10^4; Lipschitz-L corpus
// functions obey ||f*g_n|| <= L/n.
inline CheckResult check_bump_rate(std::uint64_t seed = 0) {
    GridFunction f(0.0, 1.0, {cplx(-0.5, 0.0), cplx(0.5, 0.0)});
    bool ok = true;
    std::size_t exact = 0;
    for (std::size_t n = 1; n <= 10000; ++n) {
        NormBound p = bump_product_norm(f, 0.5, n);
        double want = 1.0 / (4.0 * double(n));
        if (p.lo == want && p.hi == want) ++exact;
    }
    ok = ok && exact == 10000;
    for (std::size_t n : {std::size_t(1), std::size_t(10), std::size_t(100),
                          std::size_t(1000), std::size_t(10000)}) {
        BumpWitness bw = tdz_bump_witness(f, 0.5, n);
        ok = ok && bw.unit_norm.lo == 1.0 && bw.unit_norm.hi == 1.0;
        ok = ok && sup_norm(bw.bump).hi == 1.0;
        ok = ok && bw.product_norm.hi == 1.0 / (4.0 * double(n));
    }
    // Lipschitz corpus: random grids with a forced zero node
    std::mt19937_64 rng(seed + 3);
    double worst_margin = 0.0;
    for (int t = 0; t < 8; ++t) {
        std::size_t segs = 5 + std::size_t(detail::urand(rng, 0.0, 20.0));
        std::vector<cplx> vals(segs + 1);
        for (auto& z : vals) z = detail::crand_box(rng, 2.0);
        std::size_t zk = 1 + std::size_t(detail::urand(rng, 0.0,
                                                       double(segs - 2)));
        vals[zk] = cplx{};
        GridFunction h(0.0, 1.0, std::move(vals));
        double L = grid_lipschitz(h);
        double c = h.node(zk);
        for (std::size_t n = 1; n <= 100; ++n) {
            double bound = L / double(n) + 1e-12;
            double got = bump_product_norm(h, c, n).hi;
            worst_margin = std::max(worst_margin, got - L / double(n));
            ok = ok && got <= bound;
        }
    }
    return CheckResult{5, "bump witness decay rate", ok,
                       std::to_string(exact) +
                           "/10000 exact 1/(4n) norms; corpus slack above "
                           "L/n at most " +
                           detail::fmt(worst_margin)};
}

// Criterion 6: for f(x) = |x - 1/2| the shifted Bernstein chain vanishes at
// 1/2 to 1e-14 and its certified sup-error strictly decreases along degrees
// 10, 20, 40, 80, 160.
inline CheckResult check_weierstrass_route(const CertConfig& base = {}) {
    CertConfig cfg = base;
    cfg.abs_tol = std::min(base.abs_tol, 1e-8);
    GridFunction f(0.0, 1.0, {cplx(0.5, 0.0), cplx(0.0, 0.0), cplx(0.5, 0.0)});
    std::vector<std::size_t> degrees{10, 20, 40, 80, 160};
    WitnessSequence route = weierstrass_tdz_route(f, 0.5, degrees, cfg);
    bool ok = true;
    double max_at_c = 0.0;
    std::vector<NormBound> errs;
    for (std::size_t k = 1; k <= degrees.size(); ++k) {
        WitnessItem it = route(k);
        const auto& q = std::get<RealPolynomial>(it.element);
        double at_c = std::abs(q.eval(0.5));
        max_at_c = std::max(max_at_c, at_c);
        ok = ok && at_c <= 1e-14;
        errs.push_back(it.product_norm);
    }
    for (std::size_t k = 0; k + 1 < errs.size(); ++k)
        ok = ok && errs[k + 1].hi < errs[k].lo;
    return CheckResult{6, "vanishing approximation route", ok,
                       "max |q(1/2)| = " + detail::fmt(max_at_c) +
                           "; sup-errors " + detail::fmt(errs.front().hi) +
                           " .. " + detail::fmt(errs.back().hi) +
                           " strictly decreasing"};
}

namespace detail {

struct SequenceOracle {
    double inf = std::numeric_limits<double>::infinity();
    bool has_zero = false;
};

// Independent ground truth: brute-force scan of the first 10^6 coordinates
// plus the tail limit and the tail vertex beyond the scan horizon.
inline SequenceOracle brute_force_oracle(const BoundedSequence& x) {
    SequenceOracle o;
    const std::size_t horizon = 1000000;
    for (std::size_t n = 1; n <= horizon; ++n) {
        cplx v = x.term(n);
        o.inf = std::min(o.inf, std::abs(v));
        if (v == cplx{}) o.has_zero = true;
    }
    const AffineTail& t = x.tail;
    o.inf = std::min(o.inf, std::abs(t.c));
    if (t.s != cplx{}) {
        double num = -(t.c.real() * t.s.real() + t.c.imag() * t.s.imag());
        double ustar = num / std::norm(t.s);
        if (ustar > 0.0) {
            double n0 = std::floor(1.0 / ustar);
            for (double k = n0 - 1.0; k <= n0 + 2.0; k += 1.0) {
                if (k <= double(horizon)) continue;
                cplx v = t.at(std::size_t(k));
                o.inf = std::min(o.inf, std::abs(v));
                if (v == cplx{}) o.has_zero = true;
            }
        }
    }
    if (t.is_zero()) o.has_zero = true;
    return o;
}

inline std::vector<BoundedSequence> sequence_corpus() {
    using BS = BoundedSequence;
    std::vector<BS> xs;
    xs.push_back(BS::constant_tail({cplx{}}, cplx(1.0, 0.0)));  // (0,1,1,...)
    xs.push_back(unit_vector(1));
    xs.push_back(BS::constant_tail({}, cplx(1.0, 0.0)));
    xs.push_back(BS::constant_tail({}, cplx(0.3, -0.4)));
    xs.push_back(BS::constant_tail({}, cplx{}));  // zero element
    xs.push_back(BS::reciprocal_tail({}, cplx(1.0, 0.0)));  // 1/n
    xs.push_back(BS::reciprocal_tail({}, cplx(3.0, 4.0)));
    xs.push_back(BS::reciprocal_tail({cplx(2.0, 0.0), cplx(0.5, 0.0)},
                                     cplx(0.0, 1.0)));
    xs.push_back(BS({}, AffineTail{cplx(0.2, 0.0), cplx(1.0, 0.0)}));
    xs.push_back(BS({}, AffineTail{cplx(0.2, 0.0), cplx(-1.0, 0.0)}));
    xs.push_back(BS::constant_tail({cplx(1.0, 1.0), cplx(-2.0, 0.0),
                                    cplx(3.0, 0.0)},
                                   cplx(1.0, 0.0)));
    xs.push_back(BS::constant_tail({cplx(1.0, 0.0), cplx{}, cplx(3.0, 0.0)},
                                   cplx(2.0, 0.0)));
    xs.push_back(BS::reciprocal_tail({cplx(5.0, 0.0)}, cplx(0.0, 1.0)));
    xs.push_back(BS({}, AffineTail{cplx(1.0, 0.0), cplx(-0.999999, 0.0)}));
    xs.push_back(BS::constant_tail({cplx(1e-8, 0.0)}, cplx(1.0, 0.0)));
    xs.push_back(BS::reciprocal_tail({}, cplx(1e6, 0.0)));
    xs.push_back(BS({}, AffineTail{cplx(-0.5, 0.0), cplx(0.25, 0.0)}));
    xs.push_back(BS::constant_tail({cplx{}, cplx{}, cplx{}}, cplx(1.0, 0.0)));
    xs.push_back(BS({cplx(0.0, 1.0)}, AffineTail{cplx{}, cplx(2.0, 1.0)}));
    xs.push_back(BS::constant_tail({cplx(-1.0, 0.0), cplx(-1.0, 0.0)},
                                   cplx(-1.0, 0.0)));
    xs.push_back(BS({}, AffineTail{cplx(0.1, 0.0), cplx(-0.1, 0.0)}));
    xs.push_back(BS({cplx(0.5, 0.0)},
                    AffineTail{cplx(0.1, 0.0), cplx(-0.1, 0.0)}));
    return xs;
}

}  // namespace detail

// Criterion 7: classification of a curated corpus matches brute-force
// ground truth; regular <=> inf > 0, zero divisor <=> some exact zero,
// TDZ verdict == singular verdict; the inclusion witnesses behave exactly
// as expected.
inline CheckResult check_sequence_table() {
    auto corpus = detail::sequence_corpus();
    bool ok = corpus.size() >= 20;
    std::size_t agree = 0;
    for (const auto& x : corpus) {
        auto oracle = detail::brute_force_oracle(x);
        Classification c = classify(x);
        bool good = coherent(c);
        good = good && c.regular.proved_() == (oracle.inf > 0.0);
        good = good && !c.regular.unknown_();
        good = good && c.zero_divisor.proved_() == oracle.has_zero;
        good = good && c.topological_divisor.status == c.singular.status;
        good = good && c.topological_divisor.proved_() == (oracle.inf == 0.0);
        agree += good;
        ok = ok && good;
    }
    // proper inclusions: (0,1,1,...) is a zero divisor and TDZ but not in
    // c0; e_1 is finitely supported; 1/n is in c0 but not c00
    const auto& zd = corpus[0];
    ok = ok && classify(zd).zero_divisor.proved_() &&
         classify(zd).topological_divisor.proved_() &&
         !space_membership(zd).in_c0;
    ok = ok && space_membership(corpus[1]).in_c00;
    const auto& recip = corpus[5];
    auto sm = space_membership(recip);
    ok = ok && sm.in_c0 && !sm.in_c00 &&
         classify(recip).topological_divisor.proved_() &&
         !classify(recip).zero_divisor.proved_();
    return CheckResult{7, "sequence classification table", ok,
                       std::to_string(agree) + "/" +
                           std::to_string(corpus.size()) +
                           " corpus elements match the brute-force oracle"};
}

namespace detail {

inline std::vector<Element> phi_corpus() {
    std::vector<Element> xs;
    // C[a,b]
    xs.emplace_back(GridFunction(0.0, 1.0, {cplx(-0.5, 0.0), cplx(0.5, 0.0)}));
    xs.emplace_back(GridFunction::constant(0.0, 1.0, cplx(1.0, 0.0)));
    xs.emplace_back(GridFunction(0.0, 1.0,
                                 {cplx(1.0, 0.0), cplx{}, cplx{}, cplx{},
                                  cplx(2.0, 1.0)}));
    xs.emplace_back(GridFunction(0.0, 1.0,
                                 {cplx(1.0, 0.5), cplx(0.7, -0.2),
                                  cplx(2.0, 1.0)}));
    xs.emplace_back(GridFunction(0.0, 1.0, {cplx(-1.0, 0.0), cplx(3.0, 0.0)}));
    xs.emplace_back(GridFunction(-1.0, 2.0,
                                 {cplx(0.3, 0.1), cplx(0.4, -0.3),
                                  cplx(1.0, 0.0), cplx(0.2, 0.9)}));
    // l-infinity
    xs.emplace_back(BoundedSequence::constant_tail({cplx{}}, cplx(1.0, 0.0)));
    xs.emplace_back(BoundedSequence::reciprocal_tail({}, cplx(1.0, 0.0)));
    xs.emplace_back(BoundedSequence::constant_tail({}, cplx(0.3, -0.4)));
    xs.emplace_back(BoundedSequence({}, AffineTail{cplx(0.2, 0.0),
                                                   cplx(-1.0, 0.0)}));
    xs.emplace_back(BoundedSequence::constant_tail({cplx(1e-8, 0.0)},
                                                   cplx(1.0, 0.0)));
    // disk algebra
    xs.emplace_back(linear_factor(cplx(1.0, 0.0)));
    xs.emplace_back(linear_factor(std::polar(1.0, std::numbers::pi / 7.0)));
    xs.emplace_back(linear_factor(cplx(0.5, 0.0)));
    xs.emplace_back(linear_factor(cplx(2.0, 0.0)));
    xs.emplace_back(DiskElement{ComplexPolynomial({cplx(1.0, 0.0)})});
    xs.emplace_back(DiskElement{ComplexPolynomial({cplx{}, cplx(1.0, 0.0)})});
    xs.emplace_back(DiskElement{ComplexPolynomial({cplx(-1.0, 0.0),
                                                   cplx(1.0, 0.0)})});
    xs.emplace_back(DiskElement{
        ComplexPolynomial({cplx(1.0, 0.0)}),
        BlaschkeProduct({cplx(0.3, 0.2), cplx(-0.1, -0.4)}, cplx(1.0, 0.0))});
    xs.emplace_back(DiskElement{ComplexPolynomial({cplx{}})});
    return xs;
}

}  // namespace detail

// Criterion 8: phi enclosure equals [0,0] exactly when the TDZ verdict is
// Proved (over decisive classifications), and phi is 1-Lipschitz within
// enclosure widths on 200 random perturbation pairs.
inline CheckResult check_phi_coherence(std::uint64_t seed = 0,
                                       const CertConfig& cfg = {}) {
    bool ok = true;
    std::size_t decisive = 0, coherent_count = 0;
    for (const Element& x : detail::phi_corpus()) {
        Classification c = classify(x, cfg);
        if (c.topological_divisor.unknown_()) continue;
        ++decisive;
        NormBound p = phi(x, cfg);
        bool match = p.is_zero() == c.topological_divisor.proved_();
        coherent_count += match;
        ok = ok && match && coherent(c);
    }
    ok = ok && decisive > 0;

    std::mt19937_64 rng(seed + 4);
    std::size_t lipschitz_pass = 0;
    const std::size_t pairs = 200;
    for (std::size_t t = 0; t < pairs; ++t) {
        Element f{GridFunction::constant(0.0, 1.0, cplx(1.0, 0.0))};
        Element h = f;
        switch (t % 4) {
            case 0: {  // grid pairs on a shared node set
                std::size_t segs =
                    4 + std::size_t(detail::urand(rng, 0.0, 12.0));
                std::vector<cplx> fv(segs + 1), hv(segs + 1);
                double scale = detail::urand(rng, 1e-3, 0.5);
                for (std::size_t k = 0; k <= segs; ++k) {
                    fv[k] = detail::crand_box(rng, 1.5);
                    hv[k] = scale * detail::crand_box(rng, 1.0);
                }
                f = GridFunction(0.0, 1.0, std::move(fv));
                h = GridFunction(0.0, 1.0, std::move(hv));
                break;
            }
            case 1: {  // sequence pairs (affine tails are closed under +)
                std::size_t L = std::size_t(detail::urand(rng, 0.0, 4.0));
                std::vector<cplx> fp(L), hp(L);
                for (auto& z : fp) z = detail::crand_box(rng, 1.5);
                double scale = detail::urand(rng, 1e-3, 0.3);
                for (auto& z : hp) z = scale * detail::crand_box(rng, 1.0);
                AffineTail ft{detail::crand_box(rng, 1.0),
                              detail::crand_box(rng, 1.0)};
                AffineTail ht{scale * detail::crand_box(rng, 1.0),
                              scale * detail::crand_box(rng, 1.0)};
                f = BoundedSequence(std::move(fp), ft);
                h = BoundedSequence(std::move(hp), ht);
                break;
            }
            case 2: {  // monomial pairs on [0,1]
                std::size_t df = std::size_t(detail::urand(rng, 0.0, 6.0));
                std::size_t dh = std::size_t(detail::urand(rng, 0.0, 6.0));
                std::vector<cplx> fc(df + 1), hc(dh + 1);
                double scale = detail::urand(rng, 1e-3, 0.3);
                for (auto& z : fc) z = detail::crand_box(rng, 1.0);
                for (auto& z : hc) z = scale * detail::crand_box(rng, 1.0);
                f = RealPolynomial(0.0, 1.0, std::move(fc),
                                   PolyBasis::Monomial);
                h = RealPolynomial(0.0, 1.0, std::move(hc),
                                   PolyBasis::Monomial);
                break;
            }
            default: {  // disk polynomial pairs
                f = DiskElement{detail::random_poly(rng, 6)};
                std::size_t dh = std::size_t(detail::urand(rng, 0.0, 6.0));
                std::vector<cplx> hc(dh + 1);
                double scale = detail::urand(rng, 1e-3, 0.3);
                for (auto& z : hc) z = scale * detail::crand_box(rng, 1.0);
                h = DiskElement{ComplexPolynomial(std::move(hc))};
                break;
            }
        }
        Verdict v = phi_lipschitz_check(f, h, cfg);
        lipschitz_pass += v.proved_();
        ok = ok && v.proved_();
    }
    return CheckResult{
        8, "phi coherence and lipschitz", ok,
        std::to_string(coherent_count) + "/" + std::to_string(decisive) +
            " decisive elements have phi = [0,0] iff TDZ; " +
            std::to_string(lipschitz_pass) + "/" + std::to_string(pairs) +
            " perturbation pairs within 1-Lipschitz slack"};
}

// Criterion 9: z0 on the circle classifies TDZ Proved; z0 off the circle
// classifies TDZ Refuted with certified circle minimum within 0.01% of
// |1-r|/2.
inline CheckResult check_dichotomy(const CertConfig& base = {}) {
    CertConfig cfg = base;
    cfg.abs_tol = std::min(base.abs_tol, 1e-9);
    bool ok = true;
    double max_rel = 0.0;
    const std::vector<cplx> on{cplx(1.0, 0.0), cplx(0.0, 1.0),
                               std::polar(1.0, std::numbers::pi / 7.0)};
    for (const cplx& z0 : on) {
        Classification c = linear_factor_classify(z0, cfg);
        ok = ok && c.topological_divisor.proved_() && c.singular.proved_() &&
             coherent(c);
    }
    const std::vector<double> off{0.0, 0.5, 0.99, 1.01, 2.0};
    for (double r : off) {
        cplx z0(r, 0.0);
        Classification c = linear_factor_classify(z0, cfg);
        ok = ok && c.topological_divisor.refuted_() && coherent(c);
        NormBound m = circle_min_abs(linear_factor(z0), cfg);
        double want = std::abs(1.0 - r) * 0.5;
        double rel = std::abs(m.mid() - want) / want;
        max_rel = std::max(max_rel, rel);
        ok = ok && rel <= 1e-4;
    }
    return CheckResult{9, "dichotomy boundary", ok,
                       "3 on-circle TDZ proved, 5 off-circle refuted; max "
                       "relative deviation of circle min from |1-r|/2: " +
                           detail::fmt(max_rel)};
}

inline std::vector<std::string> suite_names() {
    return {"phi", "blaschke", "linear-factor", "bernstein", "linf", "all"};
}

inline std::vector<CheckResult> run_suite(const std::string& suite,
                                          std::uint64_t seed = 0,
                                          const CertConfig& cfg = {}) {
    std::vector<CheckResult> out;
    auto want = [&](const char* name) { return suite == name || suite == "all"; };
    if (want("linear-factor")) out.push_back(check_closed_form_match(cfg));
    if (want("blaschke")) {
        out.push_back(check_blaschke_isometry(seed, cfg));
        out.push_back(check_blaschke_non_tdz(seed, cfg));
    }
    if (want("bernstein")) {
        out.push_back(check_tent_round_trip(seed));
        out.push_back(check_bump_rate(seed));
        out.push_back(check_weierstrass_route(cfg));
    }
    if (want("linf")) out.push_back(check_sequence_table());
    if (want("phi")) out.push_back(check_phi_coherence(seed, cfg));
    if (want("linear-factor")) out.push_back(check_dichotomy(cfg));
    if (out.empty())
        throw ParseError("unknown suite '" + suite +
                         "'; expected phi, blaschke, linear-factor, "
                         "bernstein, linf or all");
    std::sort(out.begin(), out.end(),
              [](const CheckResult& a, const CheckResult& b) {
                  return a.criterion < b.criterion;
              });
    return out;
}

}  // namespace banach
