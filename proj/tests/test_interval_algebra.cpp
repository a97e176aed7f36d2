#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "banach/interval_algebra.hpp"

using namespace banach;
using Catch::Approx;

namespace {

double dense_max_abs(const GridFunction& f, std::size_t per_seg = 200) {
    double m = 0.0;
    for (std::size_t k = 0; k < f.segments(); ++k)
        for (std::size_t i = 0; i <= per_seg; ++i) {
            double x = f.node(k) +
                       (f.node(k + 1) - f.node(k)) * double(i) / double(per_seg);
            m = std::max(m, std::abs(f.eval(x)));
        }
    return m;
}

double dense_min_abs(const GridFunction& f, std::size_t per_seg = 400) {
    double m = std::abs(f.values[0]);
    for (std::size_t k = 0; k < f.segments(); ++k)
        for (std::size_t i = 0; i <= per_seg; ++i) {
            double x = f.node(k) +
                       (f.node(k + 1) - f.node(k)) * double(i) / double(per_seg);
            m = std::min(m, std::abs(f.eval(x)));
        }
    return m;
}

// brute-force max of |f(x)| * max(0, 1 - n|x-c|) over the window
double dense_bump_product(const GridFunction& f, double c, std::size_t n,
                          std::size_t samples = 40000) {
    double lo = std::max(f.a, c - 1.0 / double(n));
    double hi = std::min(f.b, c + 1.0 / double(n));
    double m = 0.0;
    for (std::size_t i = 0; i <= samples; ++i) {
        double x = lo + (hi - lo) * double(i) / double(samples);
        double bump = 1.0 - double(n) * std::abs(x - c);
        if (bump < 0.0) bump = 0.0;
        m = std::max(m, std::abs(f.eval(x)) * bump);
    }
    return m;
}

}  // namespace

TEST_CASE("sup norm is the exact node maximum") {
    GridFunction f(0.0, 1.0,
                   {cplx{0.3, -0.4}, cplx{1.0, 1.0}, cplx{-0.25, 0.0}});
    NormBound s = sup_norm(f);
    CHECK(s.width() == 0.0);
    CHECK(s.hi == std::abs(cplx{1.0, 1.0}));
    CHECK(s.hi >= dense_max_abs(f));
    CHECK(s.hi <= dense_max_abs(f) + 1e-12);
    CHECK(sup_norm(GridFunction::constant(0.0, 1.0, cplx{})).is_zero());
}

TEST_CASE("minimum modulus sees dips between nodes") {
    // real sign change: the segment passes through zero
    GridFunction cross(0.0, 1.0, {cplx{1.0, 0.0}, cplx{-1.0, 0.0}});
    CHECK(min_abs(cross) == 0.0);

    // segment from 1 to i stays at distance 1/sqrt(2) from the origin
    GridFunction diag(0.0, 1.0, {cplx{1.0, 0.0}, cplx{0.0, 1.0}});
    CHECK(min_abs(diag) == Approx(1.0 / std::sqrt(2.0)).margin(1e-15));
    CHECK(min_abs(diag) <= dense_min_abs(diag) + 1e-12);

    // monotone segment: minimum at a node
    GridFunction mono(0.0, 1.0, {cplx{1.0, 0.0}, cplx{2.0, 0.0}});
    CHECK(min_abs(mono) == 1.0);

    GridFunction many = GridFunction::sampled(-1.0, 2.0, 17, [](double x) {
        return cplx{std::cos(3.0 * x) + 1.5, std::sin(2.0 * x)};
    });
    double oracle = dense_min_abs(many);
    CHECK(min_abs(many) <= oracle + 1e-12);
    CHECK(min_abs(many) >= oracle - 1e-3);
}

TEST_CASE("zero structure separates runs, node zeros and crossings") {
    GridFunction runf(0.0, 1.0, {cplx{}, cplx{}, cplx{1.0, 0.0}, cplx{}});
    ZeroStructure zs = zero_structure(runf);
    REQUIRE(zs.intervals.size() == 1);
    CHECK(zs.intervals[0].first == runf.node(0));
    CHECK(zs.intervals[0].second == runf.node(1));
    REQUIRE(zs.points.size() == 1);
    CHECK(zs.points[0] == Approx(1.0));
    CHECK_FALSE(zs.empty());

    GridFunction cross(0.0, 1.0, {cplx{1.0, 0.0}, cplx{-1.0, 0.0}});
    zs = zero_structure(cross);
    CHECK(zs.intervals.empty());
    REQUIRE(zs.points.size() == 1);
    CHECK(zs.points[0] == 0.5);

    // complex segment through the origin: both components vanish at the
    // same interior parameter
    GridFunction shared(0.0, 1.0, {cplx{1.0, 1.0}, cplx{-1.0, -1.0}});
    zs = zero_structure(shared);
    REQUIRE(zs.points.size() == 1);
    CHECK(zs.points[0] == 0.5);

    // components vanish at different parameters: no zero on the segment
    GridFunction miss(0.0, 1.0, {cplx{1.0, 1.0}, cplx{-1.0, -2.0}});
    CHECK(zero_structure(miss).empty());

    GridFunction positive = GridFunction::constant(0.0, 1.0, cplx{2.0, 0.0});
    CHECK(zero_structure(positive).empty());

    // a zero node adjacent to a run folds into the run, not the point list
    GridFunction wide(0.0, 1.0,
                      {cplx{1.0, 0.0}, cplx{}, cplx{}, cplx{}, cplx{1.0, 0.0}});
    zs = zero_structure(wide);
    REQUIRE(zs.intervals.size() == 1);
    CHECK(zs.intervals[0].first == wide.node(1));
    CHECK(zs.intervals[0].second == wide.node(3));
    CHECK(zs.points.empty());
}

TEST_CASE("classification of grid functions matches their zero structure") {
    GridFunction pos = GridFunction::sampled(
        0.0, 1.0, 9, [](double x) { return cplx{x + 1.0, 0.5}; });
    Classification c = classify(pos);
    CHECK(c.regular.proved_());
    CHECK(c.zero_divisor.refuted_());
    CHECK(c.topological_divisor.refuted_());
    CHECK(c.singular.refuted_());
    CHECK(coherent(c));
    CHECK(c.regular.evidence.at("min_abs") > 0.0);

    GridFunction run(0.0, 1.0,
                     {cplx{1.0, 0.0}, cplx{}, cplx{}, cplx{1.0, 0.0}});
    c = classify(run);
    CHECK(c.regular.refuted_());
    CHECK(c.zero_divisor.proved_());
    CHECK(c.topological_divisor.proved_());
    CHECK(c.singular.proved_());
    CHECK(coherent(c));
    CHECK(c.zero_divisor.evidence.at("interval_lo") == run.node(1));
    CHECK(c.zero_divisor.evidence.at("interval_hi") == run.node(2));

    GridFunction isolated(0.0, 1.0,
                          {cplx{1.0, 0.0}, cplx{}, cplx{1.0, 0.0}});
    c = classify(isolated);
    CHECK(c.regular.refuted_());
    CHECK(c.zero_divisor.refuted_());
    CHECK(c.topological_divisor.proved_());
    CHECK(c.singular.proved_());
    CHECK(coherent(c));
}

TEST_CASE("tent witnesses annihilate exactly and have exact norm") {
    GridFunction f(0.0, 1.0,
                   {cplx{1.0, 0.0}, cplx{}, cplx{}, cplx{}, cplx{1.0, 0.0}});
    GridFunction g = zero_divisor_witness(f);
    CHECK(g.segments() == 2 * f.segments());
    NormBound gn = sup_norm(g);
    CHECK(gn.hi == (f.node(3) - f.node(1)) * 0.5);
    CHECK(gn.lo == gn.hi);
    for (std::size_t i = 0; i <= 1000; ++i) {
        double x = double(i) / 1000.0;
        CHECK(f.eval(x) * g.eval(x) == cplx{});
    }

    // two runs of equal width: the leftmost wins
    GridFunction ties(0.0, 1.0,
                      {cplx{}, cplx{}, cplx{1.0, 0.0}, cplx{}, cplx{}});
    GridFunction gt = zero_divisor_witness(ties);
    CHECK(std::abs(gt.values[1]) > 0.0);        // inside the left run
    CHECK(gt.values[2 * 3 + 1] == cplx{});      // right run untouched
    CHECK(sup_norm(gt).hi == (ties.node(1) - ties.node(0)) * 0.5);

    // a wider run beats an earlier narrow one
    GridFunction wider(0.0, 1.0,
                       {cplx{}, cplx{}, cplx{1.0, 0.0}, cplx{}, cplx{}, cplx{},
                        cplx{1.0, 0.0}});
    GridFunction gw = zero_divisor_witness(wider);
    CHECK(sup_norm(gw).hi == (wider.node(5) - wider.node(3)) * 0.5);
    CHECK(gw.values[3 + 5] == cplx{(wider.node(5) - wider.node(3)) * 0.5, 0.0});

    GridFunction lonely(0.0, 1.0, {cplx{1.0, 0.0}, cplx{}, cplx{1.0, 0.0}});
    CHECK_THROWS_AS(zero_divisor_witness(lonely), NotAZeroDivisor);
}

TEST_CASE("bump product norms match a dense scan") {
    GridFunction f = GridFunction::sampled(0.0, 1.0, 16, [](double x) {
        return cplx{std::sin(5.0 * x), 0.25 * std::cos(2.0 * x)};
    });
    for (std::size_t n : {1, 2, 3, 7, 20}) {
        NormBound p = bump_product_norm(f, 0.4375, n);  // a node of f
        double oracle = dense_bump_product(f, 0.4375, n);
        CHECK(p.width() == 0.0);
        CHECK(p.hi >= oracle - 1e-12);
        CHECK(p.hi <= oracle + 1e-3);
    }

    // constant 1 times any bump has norm exactly 1
    GridFunction one = GridFunction::constant(0.0, 1.0, cplx{1.0, 0.0});
    CHECK(bump_product_norm(one, 0.5, 4).hi == 1.0);

    // zero at the domain edge: only the inner half of the bump survives
    GridFunction ramp(0.0, 1.0, {cplx{}, cplx{1.0, 0.0}});
    CHECK(bump_product_norm(ramp, 0.0, 2).hi == 0.125);
    CHECK(bump_product_norm(ramp, 0.0, 1).hi == 0.25);

    // window clipped by the domain before the vertex of the parabola
    GridFunction clipped(0.0, 0.2, {cplx{}, cplx{1.0, 0.0}});
    CHECK(bump_product_norm(clipped, 0.0, 2).hi == Approx(0.6).margin(1e-15));

    CHECK_THROWS_AS(bump_product_norm(f, 0.5, 0), ParseError);
}

TEST_CASE("bump witnesses need an exact zero inside the domain") {
    GridFunction f = GridFunction::sampled(
        0.0, 1.0, 9, [](double x) { return cplx{std::abs(x - 0.5), 0.0}; });
    BumpWitness w = tdz_bump_witness(f, 0.5, 12);
    CHECK(w.unit_norm.lo == 1.0);
    CHECK(w.unit_norm.hi == 1.0);
    CHECK(w.product_norm.hi == 1.0 / 48.0);  // slope 1, window inside [0,1]
    CHECK(sup_norm(w.bump).hi == 1.0);

    // rendered bump peaks at 1 and vanishes outside the window
    CHECK(w.bump.eval(0.5) == cplx{1.0, 0.0});
    CHECK(w.bump.eval(0.0) == cplx{});
    CHECK(w.bump.eval(1.0) == cplx{});

    CHECK_THROWS_AS(tdz_bump_witness(f, 0.25, 4), NotAZero);
    CHECK_THROWS_AS(tdz_bump_witness(f, 1.5, 4), OutsideDomain);
}

TEST_CASE("bump witness sequences shrink their certificates") {
    GridFunction tent(0.0, 1.0,
                      {cplx{1.0, 0.0}, cplx{}, cplx{1.0, 0.0}});
    WitnessSequence w = tdz_witness_sequence(tent);
    CHECK(w.kind == WitnessKind::UnitMultiplier);
    CHECK(w.monotone_from == 1);
    CHECK(w.max_index == 0);
    double prev = 1e300;
    for (std::size_t n = 1; n <= 8; ++n) {
        WitnessItem it = w(n);
        CHECK(it.element_norm.lo == 1.0);
        CHECK(it.element_norm.hi == 1.0);
        CHECK(it.product_norm.hi <= prev);
        prev = it.product_norm.hi;
    }
    CHECK(w(2).product_norm.hi == 0.25);   // slope 2 tent: 2/(4n)
    CHECK(w(4).product_norm.hi == 0.125);
    CHECK_THROWS_AS(w(0), std::out_of_range);

    GridFunction run(0.0, 1.0,
                     {cplx{1.0, 0.0}, cplx{}, cplx{}, cplx{1.0, 0.0}});
    WitnessSequence wr = tdz_witness_sequence(run);
    prev = 1e300;
    for (std::size_t n = 1; n <= 8; ++n) {
        double hi = wr(n).product_norm.hi;
        CHECK(hi <= prev);
        prev = hi;
    }

    GridFunction positive = GridFunction::constant(0.0, 1.0, cplx{1.0, 0.0});
    CHECK_THROWS_AS(tdz_witness_sequence(positive), NotATDZ);
}

TEST_CASE("polynomial sup norms are certified enclosures") {
    RealPolynomial p(0.0, 2.0,
                     {cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{-1.0, 0.0}});
    NormBound b = sup_norm(p, CertConfig{});
    CHECK(b.contains(3.0));
    CHECK(b.width() <= 1e-9);

    RealPolynomial bump(0.0, 1.0, {cplx{}, cplx{1.0, 0.0}, cplx{}},
                        PolyBasis::Bernstein);
    b = sup_norm(bump, CertConfig{});
    CHECK(b.contains(0.5));
    CHECK(b.width() <= 1e-9);
}

TEST_CASE("grid-polynomial differences are certified") {
    // linear interpolation of x^2 on segments of width h overshoots by
    // exactly h^2/4 at each segment midpoint
    GridFunction f = GridFunction::sampled(
        0.0, 1.0, 5, [](double x) { return cplx{x * x, 0.0}; });
    RealPolynomial sq(0.0, 1.0, {cplx{}, cplx{}, cplx{1.0, 0.0}});
    NormBound d = sup_norm_diff(f, sq, CertConfig{});
    CHECK(d.contains(0.015625));
    CHECK(d.width() <= 2e-9);

    RealPolynomial elsewhere(0.0, 2.0, {cplx{}, cplx{1.0, 0.0}});
    CHECK_THROWS_AS(sup_norm_diff(f, elsewhere, CertConfig{}),
                    Unrepresentable);
}

TEST_CASE("bernstein approximants reproduce affine data and converge") {
    GridFunction aff = GridFunction::sampled(
        -1.0, 1.0, 9, [](double x) { return cplx{2.0 * x - 1.0, 0.0}; });
    RealPolynomial b4 = bernstein_approx(aff, 4);
    CHECK(b4.basis == PolyBasis::Bernstein);
    for (double x : {-1.0, -0.3, 0.0, 0.7, 1.0})
        CHECK(b4.eval(x).real() == Approx(2.0 * x - 1.0).margin(1e-12));
    CHECK_THROWS_AS(bernstein_approx(aff, 0), ParseError);

    GridFunction vee = GridFunction::sampled(
        0.0, 1.0, 16, [](double x) { return cplx{std::abs(x - 0.5), 0.0}; });
    double prev = 1e300;
    for (std::size_t n : {4, 8, 16}) {
        NormBound err = sup_norm_diff(vee, bernstein_approx(vee, n),
                                      CertConfig{});
        CHECK(err.hi < prev);
        prev = err.hi;
    }
}

TEST_CASE("vanishing shifts plant an exact root") {
    RealPolynomial p(0.0, 1.0,
                     {cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{1.0, 0.0}});
    RealPolynomial q = vanishing_shift(p, 0.5);
    CHECK(q.eval(0.5) == cplx{});

    RealPolynomial bump(0.0, 1.0, {cplx{}, cplx{1.0, 0.0}, cplx{}},
                        PolyBasis::Bernstein);
    RealPolynomial qb = vanishing_shift(bump, 0.5);
    CHECK(qb.eval(0.5) == cplx{});
}

TEST_CASE("the polynomial route to a zero certifies its chain") {
    GridFunction vee = GridFunction::sampled(
        0.0, 1.0, 9, [](double x) { return cplx{std::abs(x - 0.5), 0.0}; });
    WitnessSequence w =
        weierstrass_tdz_route(vee, 0.5, {4, 8, 16}, CertConfig{});
    CHECK(w.kind == WitnessKind::ApproximationChain);
    CHECK(w.max_index == 3);
    CHECK(w.monotone_from == 4);  // no per-step monotonicity claimed

    double prev = 1e300;
    for (std::size_t k = 1; k <= 3; ++k) {
        WitnessItem it = w(k);
        const auto* q = std::get_if<RealPolynomial>(&it.element);
        REQUIRE(q != nullptr);
        CHECK(std::abs(q->eval(0.5)) <= 1e-12);
        CHECK(it.product_norm.hi < prev);
        prev = it.product_norm.hi;
    }
    CHECK_THROWS_AS(w(4), std::out_of_range);
    CHECK_THROWS_AS(w(0), std::out_of_range);

    CHECK_THROWS_AS(weierstrass_tdz_route(vee, 0.25, {4}, CertConfig{}),
                    NotAZero);
    CHECK_THROWS_AS(weierstrass_tdz_route(vee, 0.5, {}, CertConfig{}),
                    ParseError);
}
