#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "dunklkit/intertwine.hpp"

using namespace dunklkit;

TEST_CASE("intertwining operator moments") {
    std::vector<double> lam{0.8};
    CHECK(intertwine_apply(lam, [](const std::vector<double>&) { return 1.0; }, {2.1}) ==
          doctest::Approx(1.0).epsilon(1e-13));
    // V x = x / (2 lambda + 1)
    double x = -1.4;
    CHECK(intertwine_apply(lam, [](const std::vector<double>& t) { return t[0]; }, {x}) ==
          doctest::Approx(x / 2.6).epsilon(1e-11));
    // product structure in two variables: V (t1 t2) = x1 x2 / ((2l1+1)(2l2+1))
    std::vector<double> lam2{0.5, 1.0};
    double v = intertwine_apply(lam2, [](const std::vector<double>& t) { return t[0] * t[1]; },
                                {0.7, -0.9});
    CHECK(v == doctest::Approx(0.7 * -0.9 / (2.0 * 3.0)).epsilon(1e-10));
    CHECK_THROWS_AS(intertwine_apply(lam, [](const std::vector<double>&) { return 1.0; },
                                     {1.0, 2.0}),
                    DomainError);
}

TEST_CASE("kernel properties") {
    std::vector<double> lam{0.6, 0.9};
    using C = std::complex<double>;
    CHECK(std::abs(dunkl_kernel_eval(lam, {0.0, 0.0}, {C(1.1, 0), C(-0.4, 0)}) - C(1.0, 0)) <
          1e-13);
    // classical limit
    CHECK(std::abs(dunkl_kernel_eval({0.0}, {0.8}, {C(1.5, 0)}) - std::exp(C(1.2, 0))) <
          1e-12);
    // contraction on the imaginary axis
    for (double x : {0.4, 1.7})
        CHECK(std::abs(dunkl_kernel_eval({0.7}, {x}, {C(0, 2.3)})) <= 1.0 + 1e-12);
    // symmetric in x and z on the real axis
    double a = 0.9, b = 1.3;
    CHECK(std::abs(dunkl_kernel_eval({0.4}, {a}, {C(b, 0)}) -
                   dunkl_kernel_eval({0.4}, {b}, {C(a, 0)})) < 1e-10);
    // arguments that would overflow the exponential are rejected
    CHECK_THROWS_AS(dunkl_kernel_eval({0.4}, {1000.0}, {C(1000.0, 0)}), DomainError);
}

TEST_CASE("translation basics") {
    std::vector<double> lam{0.9};
    double a = 1.2, b = -0.4;
    CHECK(translate_point(lam, {a}, [](const std::vector<double>& t) { return t[0]; }, {b}) ==
          doctest::Approx(a + b).epsilon(1e-11));
    double q = translate_point(lam, {a},
                               [](const std::vector<double>& t) { return t[0] * t[0]; }, {b});
    CHECK(q == doctest::Approx(a * a + b * b + 2.0 * a * b / 2.8).epsilon(1e-10));
    // zero multiplicity: the classical shift
    auto g = [](const std::vector<double>& t) { return std::cos(t[0]); };
    CHECK(translate_point({0.0}, {a}, g, {b}) == doctest::Approx(std::cos(a + b)).epsilon(1e-13));
}

TEST_CASE("translation agrees with its radial representation") {
    auto f0 = [](double r) { return 1.0 / (1.0 + r * r); };
    for (double lam : {0.3, 1.1}) {
        for (double x : {0.5, -1.3})
            for (double t : {0.2, 0.9}) {
                auto f = [&](const std::vector<double>& p) { return f0(std::abs(p[0])); };
                CHECK(translate_point({lam}, {x}, f, {t}) ==
                      doctest::Approx(translate_radial({lam}, {x}, f0, {t})).epsilon(1e-7));
            }
    }
    // two dimensions
    auto f2 = [&](const std::vector<double>& p) { return f0(std::hypot(p[0], p[1])); };
    CHECK(translate_point({0.5, 0.8}, {0.4, -0.6}, f2, {0.7, 0.3}) ==
          doctest::Approx(translate_radial({0.5, 0.8}, {0.4, -0.6}, f0, {0.7, 0.3}))
              .epsilon(1e-6));
}

TEST_CASE("support window") {
    SupportWindow w = translation_window({1.0}, {0.4});
    CHECK(w.lo == doctest::Approx(0.6));
    CHECK(w.hi == doctest::Approx(1.4));
    SupportWindow w2 = translation_window({3.0, 0.0}, {0.0, 4.0});
    CHECK(w2.lo == doctest::Approx(5.0));
    CHECK(w2.hi == doctest::Approx(5.0));
    // a radial profile supported outside the window is invisible
    auto far = [&](double r) { return r > 2.0 ? 1.0 : 0.0; };
    CHECK(translate_radial({0.7}, {1.0}, far, {0.4}) == doctest::Approx(0.0));
}

TEST_CASE("weighted ball volume") {
    CHECK(ball_measure_lambda({0.0}, {0.0}, 1.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ball_measure_lambda({1.0}, {0.0}, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    // off-center, exact antiderivative: integral of t^2 over [1, 3] = 26/3
    CHECK(ball_measure_lambda({1.0}, {2.0}, 1.0) == doctest::Approx(26.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("representing measure density lower bound") {
    for (double lam : {0.4, 1.0})
        for (double x : {0.6, 1.5})
            for (double delta : {0.1, 0.4}) {
                auto rep = density_bound_probe({lam}, {x}, delta);
                CHECK(rep.set_mass > 0.0);
                CHECK(rep.set_mass <= 1.0 + 1e-12);
                CHECK(rep.ratio > 1e-4);
            }
    // at the origin the measure is a point mass there: full mass
    auto rep0 = density_bound_probe({0.5}, {0.0}, 0.3);
    CHECK(rep0.set_mass == doctest::Approx(1.0));
}
