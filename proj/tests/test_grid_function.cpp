#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "banach/errors.hpp"
#include "banach/grid_function.hpp"
#include "banach/real_polynomial.hpp"

using namespace banach;
using Catch::Approx;

TEST_CASE("grid construction validates its arguments") {
    CHECK_THROWS_AS(GridFunction(1.0, 0.0, {cplx{}, cplx{}}), ParseError);
    CHECK_THROWS_AS(GridFunction(0.0, 0.0, {cplx{}, cplx{}}), ParseError);
    CHECK_THROWS_AS(GridFunction(0.0, 1.0, {cplx{1.0, 0.0}}), ParseError);
    CHECK_THROWS_AS(
        GridFunction(0.0, 1.0, {cplx{std::nan(""), 0.0}, cplx{}}),
        ParseError);
    CHECK_THROWS_WITH(GridFunction(1.0, 0.0, {cplx{}, cplx{}}),
                      "a must be < b");
}

TEST_CASE("node evaluation reproduces stored values bit for bit") {
    GridFunction f(0.0, 0.3,
                   {cplx{1.0, -2.0}, cplx{0.25, 0.125}, cplx{-3.0, 0.5},
                    cplx{0.7, 0.0}});
    REQUIRE(f.segments() == 3);
    for (std::size_t k = 0; k < f.size(); ++k)
        CHECK(f.eval(f.node(k)) == f.values[k]);
    // the endpoints are authoritative even when (b-a)/segs rounds so that
    // node(segments()) lands an ulp away from b
    CHECK(f.eval(0.3) == f.values.back());
    CHECK(f.eval(0.0) == f.values.front());
}

TEST_CASE("evaluation interpolates linearly between nodes") {
    GridFunction f(0.0, 1.0, {cplx{0.0, 0.0}, cplx{2.0, -4.0}});
    cplx v = f.eval(0.25);
    CHECK(v.real() == Approx(0.5));
    CHECK(v.imag() == Approx(-1.0));
    CHECK_THROWS_AS(f.eval(1.5), OutsideDomain);
    CHECK_THROWS_AS(f.eval(-0.5), OutsideDomain);
}

TEST_CASE("factories, predicates and scalar multiplication") {
    GridFunction c = GridFunction::constant(-1.0, 2.0, cplx{1.0, 0.0}, 5);
    CHECK(c.size() == 5);
    CHECK(c.is_one());
    CHECK(c.real_valued());
    CHECK_FALSE(c.is_zero());

    GridFunction s = GridFunction::sampled(
        0.0, 1.0, 11, [](double x) { return cplx{x * x, 0.0}; });
    CHECK(s.size() == 11);
    CHECK(s.eval(s.node(7)) == cplx{s.node(7) * s.node(7), 0.0});
    CHECK_FALSE(GridFunction::constant(0.0, 1.0, cplx{0.0, 0.5}).real_valued());

    CHECK((0.0 * s).is_zero());
    GridFunction d = 2.0 * s;
    CHECK(d.values[7] == 2.0 * s.values[7]);
}

TEST_CASE("sums refine to the least common node set") {
    GridFunction f = GridFunction::sampled(
        0.0, 1.0, 3, [](double x) { return cplx{x, 0.0}; });
    GridFunction g = GridFunction::sampled(
        0.0, 1.0, 4, [](double x) { return cplx{1.0 - x, 0.0}; });
    GridFunction s = add(f, g);
    CHECK(s.segments() == 6);
    for (std::size_t k = 0; k < s.size(); ++k) {
        CHECK(s.values[k].real() == Approx(1.0));
        CHECK(s.values[k].imag() == 0.0);
    }
    CHECK_THROWS_AS(add(f, GridFunction::constant(0.0, 2.0, cplx{})),
                    Unrepresentable);
}

TEST_CASE("sums on a shared node set stay exact") {
    GridFunction f(0.0, 1.0, {cplx{0.25, 1.0}, cplx{-0.5, 0.0}, cplx{3.0, -2.0}});
    GridFunction g(0.0, 1.0, {cplx{0.75, -1.0}, cplx{0.5, 0.5}, cplx{-3.0, 2.0}});
    GridFunction s = add(f, g);
    REQUIRE(s.segments() == 2);
    CHECK(s.values[0] == cplx{1.0, 0.0});
    CHECK(s.values[1] == cplx{0.0, 0.5});
    CHECK(s.values[2] == cplx{0.0, 0.0});
}

TEST_CASE("monomial polynomials evaluate by Horner") {
    RealPolynomial p(0.0, 2.0,
                     {cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{-1.0, 0.0}});
    CHECK(p.degree() == 2);
    CHECK(p.eval(0.0) == cplx{1.0, 0.0});
    CHECK(p.eval(1.0) == cplx{0.0, 0.0});
    CHECK(p.eval(2.0).real() == Approx(-3.0));
    CHECK(p.lipschitz_bound() >= 4.0);  // |p'(2)| = 4
    RealPolynomial q = p.shifted_by(cplx{1.0, 0.0});
    CHECK(q.eval(0.0) == cplx{0.0, 0.0});
    CHECK_FALSE(p.is_zero());
    CHECK(RealPolynomial(0.0, 1.0, {}).is_zero());
    CHECK_THROWS_AS(RealPolynomial(1.0, 1.0, {cplx{}}), ParseError);
    CHECK(RealPolynomial(0.0, 1.0, {cplx{2.0, 0.0}, cplx{}, cplx{}}).degree() ==
          0);
}

TEST_CASE("bernstein polynomials evaluate by de Casteljau") {
    RealPolynomial lin(0.0, 1.0, {cplx{0.0, 0.0}, cplx{1.0, 0.0}},
                       PolyBasis::Bernstein);
    CHECK(lin.eval(0.25).real() == Approx(0.25));
    CHECK(lin.degree() == 1);

    // control values {0, 1, 0} give 2t(1-t): peak 1/2 at the midpoint
    RealPolynomial bump(0.0, 1.0, {cplx{}, cplx{1.0, 0.0}, cplx{}},
                        PolyBasis::Bernstein);
    CHECK(bump.eval(0.5).real() == Approx(0.5));
    CHECK(bump.eval(0.0) == cplx{});
    CHECK(bump.eval(1.0) == cplx{});
    CHECK(bump.lipschitz_bound() >= 2.0);

    RealPolynomial s = bump.shifted_by(cplx{0.25, 0.0});
    CHECK(s.eval(0.5).real() == Approx(0.25));
    CHECK(s.eval(0.0).real() == Approx(-0.25));
}

TEST_CASE("grid slopes bound the lipschitz constant") {
    GridFunction f(0.0, 1.0,
                   {cplx{0.0, 0.0}, cplx{1.0, 0.0}, cplx{-1.0, 0.0}});
    CHECK(grid_lipschitz(f) == Approx(4.0));
    CHECK(grid_lipschitz(GridFunction::constant(0.0, 1.0, cplx{3.0, 0.0})) ==
          0.0);
}
