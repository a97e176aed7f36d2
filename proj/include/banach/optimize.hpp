#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "banach/norm_bound.hpp"

namespace banach {

// Result of a certified 1-D scan: an enclosure of the extremum and the
// abscissa of the best sample found (useful as a witness point).
struct ExtremumResult {
    NormBound bound;
    double arg = 0.0;
    std::size_t evals = 0;
    bool converged = false;
};

// Optional sharper bound for the objective on a subinterval: given the
// interval ends and the samples there, returns a certified upper bound when
// maximizing (lower when minimizing); +-infinity where no local information
// applies. A single global Lipschitz constant forces intervals near a flat
// extremum down to width tol/L before they can be discarded; a bound that
// tightens quadratically with the interval discards them at sqrt rate
// instead.
using NodeBound = std::function<double(double, double, double, double)>;

namespace detail {

// Branch-and-bound for the extremum of a nonnegative function g on [lo, hi]
// with a known global Lipschitz constant. On an interval with endpoint
// samples g0, g1, every value is bounded by (g0+g1)/2 + L*len/2 from above
// (and mirrored from below), so intervals whose potential cannot beat the
// best sample by more than tol are discarded. The returned enclosure is
// certified regardless of convergence; `converged` reports width <= tol.
template <class F>
ExtremumResult bb_extremum(F&& g, double lo, double hi, double lip,
                           double tol, std::size_t max_nodes,
                           std::size_t init_samples, bool maximize,
                           const NodeBound& node_bound = {}) {
    if (!(lo <= hi)) throw std::invalid_argument("bb_extremum: empty interval");
    if (!(lip >= 0.0) || !std::isfinite(lip))
        throw std::invalid_argument("bb_extremum: bad Lipschitz constant");

    struct Node {
        double potential;  // bound on values inside (upper if maximizing)
        double x0, x1;
        double g0, g1;
    };
    const double sign = maximize ? 1.0 : -1.0;
    auto potential = [&](const Node& n) {
        double p = 0.5 * (n.g0 + n.g1) + sign * lip * 0.5 * (n.x1 - n.x0);
        if (node_bound) {
            double q = node_bound(n.x0, n.x1, n.g0, n.g1);
            if (sign * q < sign * p) p = q;
        }
        return p;
    };
    // Heap ordered so the interval that could move the extremum most pops first.
    auto worse = [&](const Node& a, const Node& b) {
        return sign * a.potential < sign * b.potential;
    };
    std::priority_queue<Node, std::vector<Node>, decltype(worse)> heap(worse);

    ExtremumResult res;
    double best = g(lo);
    res.arg = lo;
    res.evals = 1;
    auto record = [&](double x, double v) {
        if (sign * v > sign * best) {
            best = v;
            res.arg = x;
        }
    };

    if (hi > lo) {
        std::size_t m = init_samples < 1 ? 1 : init_samples;
        double prev_x = lo, prev_g = best;
        for (std::size_t i = 1; i <= m; ++i) {
            double x = lo + (hi - lo) * (double(i) / double(m));
            double v = g(x);
            ++res.evals;
            record(x, v);
            Node n{0.0, prev_x, x, prev_g, v};
            n.potential = potential(n);
            heap.push(n);
            prev_x = x;
            prev_g = v;
        }
    }

    double outer = best;  // bound valid for all discarded intervals
    while (!heap.empty() && res.evals < max_nodes) {
        Node n = heap.top();
        if (sign * n.potential <= sign * best + tol) break;  // done: gap <= tol
        heap.pop();
        double mid = 0.5 * (n.x0 + n.x1);
        if (mid <= n.x0 || mid >= n.x1) continue;  // interval at fp resolution
        double v = g(mid);
        ++res.evals;
        record(mid, v);
        Node left{0.0, n.x0, mid, n.g0, v};
        Node right{0.0, mid, n.x1, v, n.g1};
        left.potential = potential(left);
        right.potential = potential(right);
        if (sign * left.potential > sign * best) heap.push(left);
        if (sign * right.potential > sign * best) heap.push(right);
    }
    outer = heap.empty() ? best : heap.top().potential;
    if (sign * outer < sign * best) outer = best;

    if (maximize)
        res.bound = NormBound(best, outer);
    else
        res.bound = NormBound(std::max(0.0, outer), std::max(0.0, best));
    res.converged = res.bound.width() <= tol;
    return res;
}

}  // namespace detail

// Certified enclosure of max g over [lo, hi]; g must be nonnegative with
// global Lipschitz constant <= lip.
template <class F>
ExtremumResult certified_max(F&& g, double lo, double hi, double lip,
                             double tol, std::size_t max_nodes,
                             std::size_t init_samples = 64,
                             const NodeBound& node_bound = {}) {
    return detail::bb_extremum(g, lo, hi, lip, tol, max_nodes, init_samples,
                               /*maximize=*/true, node_bound);
}

template <class F>
ExtremumResult certified_min(F&& g, double lo, double hi, double lip,
                             double tol, std::size_t max_nodes,
                             std::size_t init_samples = 64,
                             const NodeBound& node_bound = {}) {
    return detail::bb_extremum(g, lo, hi, lip, tol, max_nodes, init_samples,
                               /*maximize=*/false, node_bound);
}

}  // namespace banach
