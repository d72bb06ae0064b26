#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "dunklkit/poisson.hpp"

using namespace dunklkit;

TEST_CASE("unweighted kernel is the classical one") {
    for (double x : {0.0, 0.8, 2.5})
        for (double y : {0.2, 1.4}) {
            double k = poisson_measure_constant({0.0}) * poisson_kernel({0.0}, {x}, y);
            CHECK(k == doctest::Approx(y / (M_PI * (y * y + x * x))).epsilon(1e-13));
        }
}

TEST_CASE("kernel homogeneity") {
    std::vector<double> lam{0.8};
    double s = 2.3;
    double lhs = poisson_kernel(lam, {s * 0.6}, s * 0.9);
    double rhs = std::pow(s, -(2.0 * 0.8 + 1.0)) * poisson_kernel(lam, {0.6}, 0.9);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("unit mass, plain and translated") {
    for (double lam : {0.0, 0.5, 1.0})
        CHECK(translated_poisson_mass({lam}, {0.0}, 0.6) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(translated_poisson_mass({0.5}, {1.1}, 0.4) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(translated_poisson_mass({0.7, 0.3}, {0.5, -0.2}, 0.8) ==
          doctest::Approx(1.0).epsilon(1e-7));
    CHECK_THROWS_AS(translated_poisson_mass({0.5}, {0.0}, 0.0), DomainError);
}

TEST_CASE("translated kernel reduces to the plain kernel at the origin") {
    std::vector<double> lam{0.9};
    for (double t : {0.3, 1.7})
        CHECK(translated_poisson(lam, {0.0}, 0.5, {t}) ==
              doctest::Approx(poisson_kernel(lam, {t}, 0.5)).epsilon(1e-10));
}

TEST_CASE("boundary data evaluation and support") {
    BoundaryDatum box = BoundaryDatum::indicator({-1.0}, {2.0});
    CHECK(box.eval({0.5}) == 1.0);
    CHECK(box.eval({-1.5}) == 0.0);
    CHECK(box.support_radius() >= 2.0);
    CHECK(!box.even_in_each_coordinate());
    CHECK(BoundaryDatum::indicator({-1.0}, {1.0}).even_in_each_coordinate());

    Poly p = Poly::parse("x^2", 1, {"x"});
    BoundaryDatum pb = BoundaryDatum::polynomial(p, {-1.0}, {1.0});
    CHECK(pb.eval({0.5}) == doctest::Approx(0.25));
    CHECK(pb.eval({1.5}) == 0.0);

    BoundaryDatum tab = BoundaryDatum::tabulated({0.0, 1.0, 2.0}, {0.0, 2.0, 0.0});
    CHECK(tab.eval({0.5}) == doctest::Approx(1.0));
    CHECK(tab.eval({1.5}) == doctest::Approx(1.0));
    CHECK(tab.eval({2.5}) == 0.0);
}

TEST_CASE("unweighted extension of the interval indicator has a closed form") {
    BoundaryDatum box = BoundaryDatum::indicator({-1.0}, {1.0});
    for (double x : {0.0, 0.5, 1.2, 2.0})
        for (double y : {0.1, 0.6, 1.5}) {
            double want =
                (std::atan((1.0 - x) / y) + std::atan((1.0 + x) / y)) / M_PI;
            CHECK(poisson_integral({0.0}, box, {x}, y) ==
                  doctest::Approx(want).epsilon(1e-7));
        }
}

TEST_CASE("weighted indicator extension") {
    PoissonField u{{0.5}, BoundaryDatum::indicator({-1.0}, {1.0}), 12};
    // boundary limits inside and outside
    CHECK(u.eval({0.0}, 1e-3) == doctest::Approx(1.0).epsilon(5e-3));
    CHECK(u.eval({0.5}, 1e-3) == doctest::Approx(1.0).epsilon(5e-3));
    CHECK(u.eval({3.0}, 1e-3) == doctest::Approx(0.0).epsilon(5e-3));
    // contraction and positivity
    for (double x : {0.0, 0.9, 1.4})
        for (double yy : {0.05, 0.7, 3.0}) {
            double v = u.eval({x}, yy);
            CHECK(v >= -1e-10);
            CHECK(v <= 1.0 + 1e-8);
        }
    // evenness in x for the symmetric datum
    CHECK(u.eval({0.7}, 0.4) == doctest::Approx(u.eval({-0.7}, 0.4)).epsilon(1e-10));
}

TEST_CASE("extensions are harmonic away from the boundary") {
    PoissonField ind{{0.5}, BoundaryDatum::indicator({-1.0}, {1.0}), 12};
    auto u = [&](const std::vector<double>& x, double y) { return ind.eval(x, y); };
    CHECK(harmonicity_residual({0.5}, u, {0.4}, 0.6) < 1e-3);
    CHECK(harmonicity_residual({0.5}, u, {1.6}, 0.9) < 1e-3);
    PoissonField gauss{{0.8}, BoundaryDatum::gaussian(1, 1.0), 12};
    auto v = [&](const std::vector<double>& x, double y) { return gauss.eval(x, y); };
    CHECK(harmonicity_residual({0.8}, v, {0.5}, 0.7) < 1e-2);
    // probes straddling a reflecting hyperplane are refused
    CHECK_THROWS_AS(harmonicity_residual({0.5}, u, {1e-6}, 0.5), DomainError);
}

TEST_CASE("two-sided bounds against the ball-volume comparator") {
    std::vector<KernelGridPoint> grid;
    for (double x : {0.4, 1.0})
        for (double t : {-0.8, 0.6})
            for (double y : {0.3, 1.2}) grid.push_back({x, t, y});
    auto rep = kernel_bound_ratio(0.5, grid);
    CHECK(rep.count == grid.size());
    CHECK(rep.min_lower > 0.0);
    CHECK(std::isfinite(rep.max_upper));
    CHECK(rep.min_lower <= rep.max_lower);
    CHECK(rep.min_upper <= rep.max_upper);
    CHECK_THROWS_AS(kernel_bound_ratio(0.5, {{0.5, 0.5, 0.3}}), DomainError);
}

TEST_CASE("bad inputs") {
    CHECK_THROWS_AS(poisson_kernel({0.5}, {1.0, 2.0}, 0.5), DomainError);
    CHECK_THROWS_AS(translated_poisson({0.5}, {1.0}, -0.2, {0.5}), DomainError);
    CHECK_THROWS_AS(BoundaryDatum::tabulated({0.0, 1.0}, {1.0}), DomainError);
}
