#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "banach/bounded_sequence.hpp"
#include "banach/errors.hpp"
#include "banach/norm_bound.hpp"
#include "banach/verdict.hpp"
#include "banach/witness_sequence.hpp"

namespace banach {

namespace detail {

// Smallest tail index n >= start with term(n) == 0 exactly. For c != 0 a
// zero needs c + s/n == 0, so n sits next to -s/c; only the few integers
// around that ratio can evaluate to zero in floating point. For c == 0 and
// s != 0 the terms s/n are nonzero for every representable index.
inline std::optional<std::size_t> first_tail_zero(const AffineTail& t,
                                                  std::size_t start) {
    if (t.is_zero()) return start;
    if (t.c == cplx{}) return std::nullopt;
    double n0 = t.c.real() != 0.0 ? -t.s.real() / t.c.real()
                                  : -t.s.imag() / t.c.imag();
    if (!(n0 > 0.0) || !std::isfinite(n0)) return std::nullopt;
    double fl = std::floor(n0);
    for (double k = fl - 2.0; k <= fl + 3.0; k += 1.0) {
        if (k < double(start) || k < 1.0) continue;
        std::size_t n = std::size_t(k);
        if (t.at(n) == cplx{}) return n;
    }
    return std::nullopt;
}

}  // namespace detail

// Smallest index with x_n == 0 exactly, if any.
inline std::optional<std::size_t> first_zero_index(const BoundedSequence& x) {
    for (std::size_t n = 1; n <= x.prefix_len(); ++n)
        if (x.prefix[n - 1] == cplx{}) return n;
    return detail::first_tail_zero(x.tail, x.prefix_len() + 1);
}

// Exact sup of |x_n|. Over the tail, |c + s*u|^2 is a convex quadratic in
// u = 1/n on [0, 1/(L+1)], so the sup is attained at an endpoint: either the
// limit |c| or the first tail term.
inline double sup_abs(const BoundedSequence& x) {
    double best = 0.0;
    for (const cplx& z : x.prefix) best = std::max(best, std::abs(z));
    best = std::max(best, std::abs(x.tail.c));
    best = std::max(best, std::abs(x.tail.at(x.prefix_len() + 1)));
    return best;
}

inline NormBound sup_norm(const BoundedSequence& x) {
    return NormBound::exact(sup_abs(x));
}

// Exact inf of |x_n| (including the limit point |c|). The convex quadratic
// |c + s*u|^2 has its vertex at u* = -Re(conj(c) s)/|s|^2; the only integer
// indices that can realise the interior minimum are the neighbours of 1/u*.
inline double inf_abs(const BoundedSequence& x) {
    double best = std::numeric_limits<double>::infinity();
    for (const cplx& z : x.prefix) best = std::min(best, std::abs(z));
    const AffineTail& t = x.tail;
    const std::size_t L1 = x.prefix_len() + 1;
    best = std::min(best, std::abs(t.c));
    best = std::min(best, std::abs(t.at(L1)));
    if (t.s != cplx{}) {
        double num = -(t.c.real() * t.s.real() + t.c.imag() * t.s.imag());
        double den = std::norm(t.s);
        double ustar = num / den;
        if (ustar > 0.0 && ustar < 1.0 / double(L1)) {
            double n0 = std::floor(1.0 / ustar);
            for (double k = n0 - 1.0; k <= n0 + 2.0; k += 1.0) {
                if (k < double(L1)) continue;
                best = std::min(best, std::abs(t.at(std::size_t(k))));
            }
        }
    }
    if (auto z = detail::first_tail_zero(t, L1)) best = 0.0;
    return best;
}

inline Classification classify(const BoundedSequence& x) {
    double m = inf_abs(x);
    auto zero = first_zero_index(x);
    Classification c;
    if (m > 0.0) {
        c.regular = Verdict::proved(
            "inf |x_n| = m > 0, so the termwise reciprocal is bounded by 1/m "
            "and inverts x",
            {{"inf_abs", m}});
        c.zero_divisor = Verdict::refuted(
            "every term of x is nonzero, so x*y = 0 forces y = 0 termwise");
        c.topological_divisor = Verdict::refuted(
            "inf |x_n| = m > 0 gives ||x*y|| >= m*||y|| for every y",
            {{"inf_abs", m}});
        c.singular = Verdict::refuted("x is invertible in l-infinity");
        return c;
    }
    c.regular = Verdict::refuted(
        "inf |x_n| = 0, so no bounded sequence can multiply x to the "
        "constant 1",
        {{"inf_abs", m}});
    c.singular = Verdict::proved("inf |x_n| = 0 rules out a bounded inverse");
    c.topological_divisor = Verdict::proved(
        "terms of x get arbitrarily small; unit vectors at those indices "
        "shrink the product norm below any bound",
        {{"inf_abs", m}});
    if (zero) {
        c.zero_divisor = Verdict::proved(
            "x vanishes at an index, and the unit vector there multiplies x "
            "to zero",
            {{"zero_index", double(*zero)}});
    } else {
        c.zero_divisor = Verdict::refuted(
            "every term of x is nonzero, so x*y = 0 forces y = 0 termwise");
    }
    return c;
}

// Termwise reciprocal. Only constant tails invert inside the representable
// class: for s != 0 the reciprocal tail 1/(c + s/n) is not of the form
// c' + s'/n.
inline BoundedSequence inverse(const BoundedSequence& x) {
    double m = inf_abs(x);
    if (m <= 0.0)
        throw NotRegular("inf |x_n| = 0, so x has no bounded inverse");
    if (!x.tail.is_constant())
        throw Unrepresentable(
            "x is invertible, but 1/(c + s/n) does not have the form "
            "c' + s'/n; the inverse is not representable here");
    std::vector<cplx> p;
    p.reserve(x.prefix_len());
    for (const cplx& z : x.prefix) p.push_back(1.0 / z);
    return BoundedSequence(std::move(p), AffineTail{1.0 / x.tail.c, cplx{}});
}

// 1 at index n (1-based), 0 elsewhere.
inline BoundedSequence unit_vector(std::size_t n) {
    if (n == 0) throw OutsideDomain("sequence indices are 1-based");
    std::vector<cplx> p(n, cplx{});
    p[n - 1] = 1.0;
    return BoundedSequence::finitely_supported(std::move(p));
}

struct SequenceZeroDivisorWitness {
    BoundedSequence partner;
    std::size_t index = 0;
    NormBound unit_norm{1.0, 1.0};
    NormBound product_norm{0.0, 0.0};
};

// Unit vector at the smallest exact zero of x; x * e_(n0) = 0 termwise.
inline SequenceZeroDivisorWitness zero_divisor_witness(
    const BoundedSequence& x) {
    auto zero = first_zero_index(x);
    if (!zero)
        throw NotAZeroDivisor(
            "every term of x is nonzero, so x has no annihilating partner");
    return SequenceZeroDivisorWitness{unit_vector(*zero), *zero,
                                      NormBound::exact(1.0),
                                      NormBound::exact(0.0)};
}

// k-th unit-vector witness: if x has an exact zero the same unit vector is
// recycled (product norm exactly 0 at every k); otherwise the tail decays
// and the k-th tail index gives product norm |s|/(L+k), non-increasing in k.
inline WitnessSequence tdz_witness_sequence(const BoundedSequence& x) {
    auto zero = first_zero_index(x);
    bool decays = x.tail.decays_to_zero() && !x.tail.is_constant();
    if (!zero && !decays)
        throw NotATDZ(
            "inf |x_n| > 0, so ||x*y|| >= inf|x_n| * ||y|| for every y");
    BoundedSequence xc = x;
    WitnessSequence w;
    w.kind = WitnessKind::UnitMultiplier;
    w.monotone_from = 1;
    if (zero) {
        std::size_t n0 = *zero;
        w.description = "unit vector at the zero index " + std::to_string(n0);
        w.at = [n0](std::size_t) {
            return WitnessItem{Element(unit_vector(n0)), NormBound::exact(1.0),
                               NormBound::exact(0.0)};
        };
    } else {
        std::size_t L = x.prefix_len();
        w.description = "unit vectors marching along the decaying tail";
        w.at = [xc, L](std::size_t k) {
            std::size_t n = L + k;
            return WitnessItem{Element(unit_vector(n)), NormBound::exact(1.0),
                               NormBound::exact(std::abs(xc.term(n)))};
        };
    }
    return w;
}

inline WitnessItem tdz_witness(const BoundedSequence& x, std::size_t k) {
    return tdz_witness_sequence(x)(k);
}

struct SpaceMembership {
    bool in_c0 = false;   // x_n -> 0
    bool in_c00 = false;  // finitely supported
};

inline SpaceMembership space_membership(const BoundedSequence& x) {
    SpaceMembership m;
    m.in_c0 = (x.tail.c == cplx{});
    m.in_c00 = x.tail.is_zero();
    return m;
}

}  // namespace banach
