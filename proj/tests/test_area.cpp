#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dunklkit/area.hpp"

using namespace dunklkit;

TEST_CASE("cutoff profile") {
    CutoffPsi psi = make_cutoff();
    CHECK(psi.eval(0.0) == 1.0);
    CHECK(psi.eval(0.5) == 1.0);
    CHECK(psi.eval(1.0) == 0.0);
    CHECK(psi.eval(3.0) == 0.0);
    double a = psi.eval(0.6), b = psi.eval(0.8);
    CHECK(a > b);
    CHECK(b > 0.0);
    CHECK(a < 1.0);
    CHECK_THROWS_AS(psi.eval(-0.1), DomainError);
}

TEST_CASE("cone membership") {
    ConeSpec cone{{0.0}, 0.5, 1.0};
    CHECK(cone.contains({0.2}, 0.5));
    CHECK(!cone.contains({0.4}, 0.5));  // outside the aperture
    CHECK(!cone.contains({0.0}, 1.5));  // above the truncation height
    CHECK_THROWS_AS(cone.contains({0.1, 0.1}, 0.5), DomainError);
}

TEST_CASE("verdict names") {
    CHECK(to_string(AreaVerdict::Finite) == "finite");
    CHECK(to_string(AreaVerdict::Infinite) == "infinite");
    CHECK(to_string(AreaVerdict::Indeterminate) == "indeterminate");
}

TEST_CASE("non-annihilated polynomial is refused") {
    Poly y2 = Poly::monomial(2, {0, 2}, Rational(1));
    CHECK_THROWS_AS(HarmonicField::from_poly({Rational(1, 2)}, y2), ValidationError);
    Poly x = Poly::variable(1, 0);
    CHECK_THROWS_AS(HarmonicField::from_poly({Rational(1, 2)}, x), DomainError);
}

TEST_CASE("closed form for the vertical coordinate") {
    HarmonicField uy =
        HarmonicField::from_poly({Rational(1, 2)}, Poly::monomial(2, {0, 1}, Rational(1)));
    AreaResult r = area_integral(uy, {0.0}, 1.0, 1.0);
    CHECK(r.verdict == AreaVerdict::Finite);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
    // invariant under horizontal translation of the vertex
    AreaResult r2 = area_integral(uy, {1.7}, 1.0, 1.0);
    CHECK(r2.value == doctest::Approx(r.value).epsilon(1e-9));
}

TEST_CASE("constants carry no area") {
    HarmonicField uc =
        HarmonicField::from_poly({Rational(1, 2)}, Poly::constant(2, Rational(3)));
    AreaResult r = area_integral(uc, {0.4}, 1.0, 1.0);
    CHECK(r.value == doctest::Approx(0.0));
    CHECK(r.verdict == AreaVerdict::Finite);
}

TEST_CASE("polynomial fields have finite area and it grows with the aperture") {
    HarmonicField uxy =
        HarmonicField::from_poly({Rational(7, 10)}, Poly::monomial(2, {1, 1}, Rational(1)));
    AreaResult narrow = area_integral(uxy, {0.5}, 0.5, 1.0);
    AreaResult wide = area_integral(uxy, {0.5}, 1.5, 1.0);
    CHECK(narrow.verdict == AreaVerdict::Finite);
    CHECK(wide.verdict == AreaVerdict::Finite);
    CHECK(narrow.value > 0.0);
    CHECK(wide.value >= narrow.value);
    CHECK_THROWS_AS(area_integral(uxy, {0.5}, -1.0, 1.0), DomainError);
    CHECK_THROWS_AS(area_integral(uxy, {0.5, 0.0}, 1.0, 1.0), DomainError);
}

TEST_CASE("a positive cutoff floor forces a finite verdict") {
    PoissonField ind{{0.5}, BoundaryDatum::indicator({-1.0}, {1.0}), 12};
    HarmonicField f = HarmonicField::from_poisson(ind);
    AreaResult r = area_integral(f, {1.0}, 0.5, 0.5, 0.05);
    CHECK(r.verdict == AreaVerdict::Finite);
    CHECK(std::isfinite(r.value));
}

TEST_CASE("smooth cutoffs bracket the sharp cone") {
    HarmonicField uy =
        HarmonicField::from_poly({Rational(1, 2)}, Poly::monomial(2, {0, 1}, Rational(1)));
    SandwichTriple s = sandwich_residual(uy, {0.0}, 0.5, 1.0);
    CHECK(s.psi_a <= s.s * 1.05 + 1e-9);
    CHECK(s.s <= s.psi_2a * 1.05 + 1e-9);
    CHECK(s.psi_a > 0.0);
    // the smooth variant only exists on the line
    HarmonicField u2 = HarmonicField::from_poly(
        {Rational(1, 2), Rational(1, 2)}, Poly::monomial(3, {1, 1, 0}, Rational(1)));
    CHECK_THROWS_AS(area_integral_psi(u2, {0.1, 0.2}, 0.5, 1.0), DomainError);
}

TEST_CASE("translated ball indicator") {
    for (double lam : {0.0, 0.5, 1.3}) {
        // huge radius captures everything
        CHECK(translated_ball_indicator(lam, 0.6, 0.4, 100.0) == doctest::Approx(1.0));
        // tiny radius misses the orbit of t entirely when |x| != |t|
        CHECK(translated_ball_indicator(lam, 0.6, 1.8, 1e-6) == doctest::Approx(0.0));
        // monotone in the radius and confined to [0, 1]
        double prev = 0.0;
        for (double R : {0.3, 0.8, 1.5, 3.0}) {
            double v = translated_ball_indicator(lam, 0.6, 0.4, R);
            CHECK(v >= prev - 1e-12);
            CHECK(v <= 1.0 + 1e-12);
            prev = v;
        }
    }
    // zero multiplicity: the classical shift, an indicator of |x - t| <= R
    CHECK(translated_ball_indicator(0.0, 1.0, 0.4, 0.7) == doctest::Approx(1.0));
    CHECK(translated_ball_indicator(0.0, 1.0, -0.4, 0.7) == doctest::Approx(0.0));
}
