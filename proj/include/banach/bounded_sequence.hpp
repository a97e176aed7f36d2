#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "banach/errors.hpp"
#include "banach/grid_function.hpp"  // cplx alias

namespace banach {

// Eventual behaviour of a sequence: x_n = c + s/n for every n beyond the
// prefix. Covers constant tails (s = 0), pure reciprocal decay (c = 0) and
// the zero tail (both 0), and -- unlike those three alone -- is closed under
// pointwise addition, which the perturbation checks need.
struct AffineTail {
    cplx c{};
    cplx s{};

    bool is_constant() const { return s == cplx{}; }
    bool is_zero() const { return c == cplx{} && s == cplx{}; }
    bool decays_to_zero() const { return c == cplx{}; }
    cplx at(std::size_t n) const { return c + s / double(n); }
};

// Element of l-infinity: finitely many explicit leading terms, then a tail
// descriptor. Indices are 1-based throughout.
struct BoundedSequence {
    std::vector<cplx> prefix;
    AffineTail tail;

    BoundedSequence(std::vector<cplx> p, AffineTail t)
        : prefix(std::move(p)), tail(t) {
        for (const cplx& z : prefix)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw ParseError("sequence terms must be finite");
        if (!std::isfinite(tail.c.real()) || !std::isfinite(tail.c.imag()) ||
            !std::isfinite(tail.s.real()) || !std::isfinite(tail.s.imag()))
            throw ParseError("tail parameters must be finite");
    }

    static BoundedSequence constant_tail(std::vector<cplx> p, cplx c) {
        return BoundedSequence(std::move(p), AffineTail{c, cplx{}});
    }
    static BoundedSequence reciprocal_tail(std::vector<cplx> p, cplx s) {
        return BoundedSequence(std::move(p), AffineTail{cplx{}, s});
    }
    static BoundedSequence finitely_supported(std::vector<cplx> p) {
        return BoundedSequence(std::move(p), AffineTail{});
    }

    std::size_t prefix_len() const { return prefix.size(); }

    cplx term(std::size_t n) const {
        if (n == 0) throw OutsideDomain("sequence indices are 1-based");
        if (n <= prefix.size()) return prefix[n - 1];
        return tail.at(n);
    }

    bool is_zero() const {
        if (!tail.is_zero()) return false;
        for (const cplx& z : prefix)
            if (z != cplx{}) return false;
        return true;
    }
    bool is_one() const {
        if (!(tail.c == cplx{1.0, 0.0} && tail.s == cplx{})) return false;
        for (const cplx& z : prefix)
            if (z != cplx{1.0, 0.0}) return false;
        return true;
    }
};

}  // namespace banach
