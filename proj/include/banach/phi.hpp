#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "banach/config.hpp"
#include "banach/disk_algebra.hpp"
#include "banach/element.hpp"
#include "banach/errors.hpp"
#include "banach/interval_algebra.hpp"
#include "banach/norm_bound.hpp"
#include "banach/optimize.hpp"
#include "banach/sequence_algebra.hpp"
#include "banach/verdict.hpp"
#include "banach/witness_sequence.hpp"

namespace banach {

inline NormBound sup_norm(const Element& x, const CertConfig& cfg = {}) {
    return std::visit(
        [&](const auto& v) -> NormBound {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GridFunction>)
                return sup_norm(v);
            else if constexpr (std::is_same_v<T, RealPolynomial>)
                return sup_norm(v, cfg);
            else if constexpr (std::is_same_v<T, BoundedSequence>)
                return sup_norm(v);
            else
                return circle_sup_norm(v, cfg);
        },
        x);
}

// Certified enclosure of min |p| over [a,b].
inline NormBound min_abs_enclosure(const RealPolynomial& p,
                                   const CertConfig& cfg = {}) {
    auto g = [&](double x) { return std::abs(p.eval(x)); };
    std::size_t init = std::max<std::size_t>(64, 2 * p.coeffs.size());
    auto r = certified_min(g, p.a, p.b, p.lipschitz_bound(), cfg.abs_tol,
                           cfg.refine_max_iters, init);
    if (!r.converged)
        throw CertificationFailed(
            r.evals, "min enclosure did not reach tolerance in budget");
    return r.bound;
}

// phi(x) = inf over unit-norm y of ||x*y||.
//
// In C[a,b] and l-infinity the value is the exact min/inf of |x|: the lower
// bound is ||x*y|| >= min|x| * ||y|| at the argmax of |y|, and bump or
// unit-vector multipliers concentrated near the argmin attain it.
//
// In the disk algebra the same argument pins phi between min |f| on the
// circle and the best sampled unit-norm multiplier ratio; only the
// enclosure is claimed. A certified boundary zero collapses it to [0,0].
inline NormBound phi(const GridFunction& f) {
    return NormBound::exact(min_abs(f));
}

inline NormBound phi(const BoundedSequence& x) {
    return NormBound::exact(inf_abs(x));
}

inline NormBound phi(const RealPolynomial& p, const CertConfig& cfg = {}) {
    return min_abs_enclosure(p, cfg);
}

inline NormBound phi(const DiskElement& f, const CertConfig& cfg = {}) {
    if (f.is_zero()) return NormBound::exact(0.0);
    auto inv = root_inventory(f);
    if (inv.available && !inv.boundary.empty()) return NormBound::exact(0.0);
    auto m = circle_min(f, cfg);
    // upper bound: trial multipliers ((z+zeta)/2)^k peaked at the circle
    // argmin; ||f*g_k||/||g_k|| squeezes toward min_circle|f|
    cplx zeta = std::polar(1.0, m.theta);
    double ub = sup_norm(Element(f), cfg).hi;
    for (std::size_t k : {4, 16, 64, 256}) {
        auto obj = [&f, zeta, k](double th) {
            cplx z = std::polar(1.0, th);
            return std::abs(f.eval(z)) *
                   std::pow(std::abs((z + zeta) * 0.5), double(k));
        };
        double L = f.circle_lipschitz() + f.circle_sup_bound() * double(k);
        // the trial scans only feed the upper end of the enclosure, so a
        // loose tolerance keeps them cheap at large k without losing rigor
        double tol = std::max(cfg.abs_tol, 1e-4);
        auto ps = certified_max(obj, 0.0, kTwoPi, L, tol,
                                cfg.refine_max_iters, cfg.circle_samples);
        if (!ps.converged) continue;
        double gl = std::pow(std::abs(zeta), double(k));  // |g_k(zeta)| <= ||g_k||
        if (gl > 0.0) ub = std::min(ub, ps.bound.hi / gl);
    }
    return NormBound(m.bound.lo, std::max(m.bound.lo, ub));
}

inline NormBound phi(const Element& x, const CertConfig& cfg = {}) {
    return std::visit(
        [&](const auto& v) -> NormBound {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GridFunction>)
                return phi(v);
            else if constexpr (std::is_same_v<T, BoundedSequence>)
                return phi(v);
            else
                return phi(v, cfg);
        },
        x);
}

inline Classification classify(const Element& x, const CertConfig& cfg = {}) {
    return std::visit(
        [&](const auto& v) -> Classification {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, GridFunction>)
                return classify(v);
            else if constexpr (std::is_same_v<T, BoundedSequence>)
                return classify(v);
            else if constexpr (std::is_same_v<T, DiskElement>)
                return classify(v, cfg);
            else
                throw UnsupportedAlgebra(
                    "classification operates on grid functions, bounded "
                    "sequences, and disk elements; polynomials enter only "
                    "as approximants");
        },
        x);
}

// Pointwise sum within one algebra, staying inside the representable class.
inline Element add(const Element& x, const Element& y) {
    if (x.index() != y.index())
        throw UnsupportedAlgebra("cannot add elements of different algebras");
    if (const auto* f = std::get_if<GridFunction>(&x))
        return Element(add(*f, std::get<GridFunction>(y)));
    if (const auto* p = std::get_if<RealPolynomial>(&x)) {
        const auto& q = std::get<RealPolynomial>(y);
        if (p->a != q.a || p->b != q.b)
            throw Unrepresentable("sum needs a common domain");
        if (p->basis != q.basis)
            throw Unrepresentable("sum needs a common polynomial basis");
        if (p->basis == PolyBasis::Bernstein &&
            p->coeffs.size() != q.coeffs.size())
            throw Unrepresentable(
                "sum of Bernstein forms needs equal degrees");
        std::vector<cplx> c(std::max(p->coeffs.size(), q.coeffs.size()),
                            cplx{});
        for (std::size_t i = 0; i < p->coeffs.size(); ++i) c[i] += p->coeffs[i];
        for (std::size_t i = 0; i < q.coeffs.size(); ++i) c[i] += q.coeffs[i];
        return Element(RealPolynomial(p->a, p->b, std::move(c), p->basis));
    }
    if (const auto* s = std::get_if<BoundedSequence>(&x)) {
        const auto& t = std::get<BoundedSequence>(y);
        std::size_t L = std::max(s->prefix_len(), t.prefix_len());
        std::vector<cplx> p(L);
        for (std::size_t n = 1; n <= L; ++n) p[n - 1] = s->term(n) + t.term(n);
        AffineTail tail{s->tail.c + t.tail.c, s->tail.s + t.tail.s};
        return Element(BoundedSequence(std::move(p), tail));
    }
    const auto& f = std::get<DiskElement>(x);
    const auto& g = std::get<DiskElement>(y);
    if (f.blaschke || g.blaschke)
        throw Unrepresentable(
            "sums of Blaschke forms leave the representable class; expand "
            "to polynomials first");
    std::vector<cplx> c(std::max(f.poly.coeffs.size(), g.poly.coeffs.size()),
                        cplx{});
    for (std::size_t i = 0; i < f.poly.coeffs.size(); ++i)
        c[i] += f.poly.coeffs[i];
    for (std::size_t i = 0; i < g.poly.coeffs.size(); ++i)
        c[i] += g.poly.coeffs[i];
    return Element(DiskElement{ComplexPolynomial(std::move(c))});
}

// |phi(f+h) - phi(f)| <= ||h||: phi moves by at most the distance between
// the elements. Certified form: the enclosure gap must not exceed ||h||
// plus the enclosure widths.
inline Verdict phi_lipschitz_check(const Element& f, const Element& h,
                                   const CertConfig& cfg = {}) {
    Element y = add(f, h);
    NormBound pf = phi(f, cfg);
    NormBound py = phi(y, cfg);
    NormBound hn = sup_norm(h, cfg);
    double g = gap(pf, py);
    double slack = hn.hi + pf.width() + py.width() + cfg.abs_tol;
    std::map<std::string, double> ev{
        {"phi_f_lo", pf.lo},   {"phi_f_hi", pf.hi}, {"phi_fh_lo", py.lo},
        {"phi_fh_hi", py.hi},  {"h_norm", hn.hi},   {"gap", g},
        {"slack", slack}};
    if (g <= slack)
        return Verdict::proved(
            "the phi invariant moved by no more than the perturbation norm, "
            "within the enclosure widths",
            ev);
    return Verdict::refuted(
        "the phi enclosures moved apart by more than the perturbation norm "
        "plus enclosure widths",
        ev);
}

// Witness transport along multiplication: if the items g_n witness x, then
// ||(x*y)*g_n|| <= ||y|| * ||x*g_n||, so the same multipliers witness x*y
// with certificates scaled by ||y||.
inline WitnessSequence propagate_tdz_witness(const WitnessSequence& w,
                                             const Element& y,
                                             const CertConfig& cfg = {}) {
    if (is_one(y)) {
        WitnessSequence out = w;
        out.description = w.description + " (multiplier is the identity)";
        return out;
    }
    WitnessSequence out;
    out.description = w.description + ", transported along multiplication";
    out.kind = w.kind;
    out.monotone_from = w.monotone_from;
    out.max_index = w.max_index;
    if (is_zero(y)) {
        WitnessSequence base = w;
        out.at = [base](std::size_t n) {
            WitnessItem it = base(n);
            it.product_norm = NormBound::exact(0.0);
            return it;
        };
        return out;
    }
    NormBound yn = sup_norm(y, cfg);
    WitnessSequence base = w;
    out.at = [base, yn](std::size_t n) {
        WitnessItem it = base(n);
        it.product_norm = NormBound(0.0, yn.hi * it.product_norm.hi);
        return it;
    };
    return out;
}

}  // namespace banach
