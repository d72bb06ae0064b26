#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dunklkit/quadrature.hpp"

using namespace dunklkit;

TEST_CASE("pairwise sum is deterministic and exact on cancellations") {
    std::vector<double> v{1e16, -1e16, 1.0, 1.0};
    CHECK(pairwise_sum(v) == 2.0);
    CHECK(pairwise_sum({1.0, 2.0, 3.0, 4.0, 5.0}) == 15.0);
    CHECK(pairwise_sum({}) == 0.0);
    CHECK(pairwise_sum({3.5}) == 3.5);
}

TEST_CASE("gauss-legendre integrates polynomials of degree 2n-1") {
    const Rule1D& r = gauss_legendre(6);
    // integral of x^10 over [-1, 1] = 2/11
    double v = integrate(r, [](double x) { return std::pow(x, 10); });
    CHECK(v == doctest::Approx(2.0 / 11.0).epsilon(1e-14));
    double odd = integrate(r, [](double x) { return x * x * x; });
    CHECK(odd == doctest::Approx(0.0).epsilon(1e-15));
    CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("gauss-jacobi handles the chebyshev-type corner") {
    // weight (1-x)^{-1/2} (1+x)^{-1/2}: total mass pi
    Rule1D r = gauss_jacobi(8, -0.5, -0.5);
    double mass = integrate(r, [](double) { return 1.0; });
    CHECK(mass == doctest::Approx(M_PI).epsilon(1e-13));
    double second = integrate(r, [](double x) { return x * x; });
    CHECK(second == doctest::Approx(M_PI / 2.0).epsilon(1e-13));
    CHECK_THROWS_AS(gauss_jacobi(4, -1.0, 0.0), DomainError);
}

TEST_CASE("boundary measure rule moments") {
    for (double lam : {0.3, 0.5, 1.0, 2.5}) {
        Rule1D r = jacobi_rule(lam, 24);
        CHECK(integrate(r, [](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(integrate(r, [](double t) { return t; }) ==
              doctest::Approx(1.0 / (2.0 * lam + 1.0)).epsilon(1e-12));
    }
    // lambda = 0 degenerates to the point mass at 1
    Rule1D r0 = jacobi_rule(0.0, 24);
    REQUIRE(r0.nodes.size() == 1);
    CHECK(r0.nodes[0] == 1.0);
    CHECK(r0.weights[0] == 1.0);
}

TEST_CASE("distribution function of the boundary measure") {
    CHECK(dm_tail_mass(0.7, -1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dm_tail_mass(0.7, 1.0) == 0.0);
    // consistency with the moment of t: integral of t dm = 1/(2 lam + 1)
    double lam = 0.9;
    double mean = 0.0;
    int N = 2000;
    for (int i = 0; i < N; ++i) {
        double a = -1.0 + 2.0 * i / N, b = -1.0 + 2.0 * (i + 1) / N;
        mean += 0.5 * (a + b) * dm_interval_mass(lam, a, b);
    }
    CHECK(mean == doctest::Approx(1.0 / (2.0 * lam + 1.0)).epsilon(1e-5));
}

TEST_CASE("endpoint-singular integration") {
    // integral_0^1 u^{1/2} (1-u)^{1/2} du = pi / 8
    double v = integrate_endpoint_singular(0.0, 1.0, 0.5, 0.5, 12,
                                           [](double) { return 1.0; });
    CHECK(v == doctest::Approx(M_PI / 8.0).epsilon(1e-13));
    // integral_0^2 u^{3} du with the power absorbed: g == 1, exponents (3, 0)
    double w = integrate_endpoint_singular(0.0, 2.0, 3.0, 0.0, 8,
                                           [](double) { return 1.0; });
    CHECK(w == doctest::Approx(4.0).epsilon(1e-13));
}

TEST_CASE("poisoned integrands are reported") {
    CHECK_THROWS_AS(integrate(gauss_legendre(4), [](double x) { return 1.0 / (x - x); }),
                    PoisonedIntegral);
    CHECK_THROWS_AS(integrate_panels({0.0, 1.0}, 4, [](double) { return std::nan(""); }),
                    PoisonedIntegral);
}

TEST_CASE("weighted line rule") {
    for (double lam : {0.0, 0.5, 1.25}) {
        LineRule r = weighted_line_rule(lam, {-1.0, 0.0, 1.0}, 16);
        double mass = 0.0, dip = 0.0;
        for (size_t i = 0; i < r.nodes.size(); ++i) {
            mass += r.weights[i];
            dip += r.weights[i] * r.nodes[i];
        }
        CHECK(mass == doctest::Approx(2.0 / (2.0 * lam + 1.0)).epsilon(1e-12));
        CHECK(dip == doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(weighted_line_rule(-0.5, {0.0, 1.0}, 8), DomainError);
}

TEST_CASE("refinement toward an interior point") {
    std::set<double> pts{0.0, 4.0};
    refine_toward(pts, 0.0, 4.0, 1.0, 0.01);
    REQUIRE(pts.size() > 4);
    // the two breakpoints nearest the target bracket it within the resolution
    auto it = pts.lower_bound(1.0);
    double above = *it;
    double below = *std::prev(it);
    CHECK(above - below <= 0.02 + 1e-12);
    CHECK(below <= 1.0);
    CHECK(above >= 1.0);
}

TEST_CASE("sphere rule with coordinate power weights") {
    // d = 1 convention: two points, unit weights
    SphereRule one = sphere_rule_powers({0.7}, 8);
    REQUIRE(one.points.size() == 2);
    CHECK(one.total_weight == doctest::Approx(2.0));
    // d = 2, no weight: circumference 2 pi
    SphereRule circ = sphere_rule_powers({0.0, 0.0}, 24);
    CHECK(circ.total_weight == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
    // d = 2 with weight |t1 t2|: integral over the circle is 2
    SphereRule w = sphere_rule_powers({0.5, 0.5}, 24);
    CHECK(w.total_weight == doctest::Approx(2.0).epsilon(1e-12));
    // all points on the unit sphere
    for (const auto& p : w.points)
        CHECK(p[0] * p[0] + p[1] * p[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("adaptive boundary-measure integration with a peak hint") {
    // sharp bump at theta = 1 - 1e-4; without the hint this would be missed
    double lam = 0.5, center = 1.0 - 1e-4, width = 1e-5;
    auto g = [&](double th) {
        double z = (th - center) / width;
        return std::exp(-z * z);
    };
    double with_hint = integrate_dm_adaptive(lam, g, {{center, width}}, 1e-9);
    // reference: fine midpoint rule over the bump's support against the
    // density (1/pi)(1+t)/sqrt(1-t^2); the tails of g are negligible
    double lo = center - 12.0 * width, hi = std::min(1.0, center + 12.0 * width);
    double ref = 0.0;
    int N = 400000;
    for (int i = 0; i < N; ++i) {
        double t = lo + (hi - lo) * (i + 0.5) / N;
        ref += g(t) * (1.0 + t) / (M_PI * std::sqrt(1.0 - t * t)) * ((hi - lo) / N);
    }
    CHECK(with_hint == doctest::Approx(ref).epsilon(1e-5));
}
