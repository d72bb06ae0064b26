#include "dunklkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "dunklkit/area.hpp"
#include "dunklkit/boundary.hpp"
#include "dunklkit/dunkl.hpp"
#include "dunklkit/intertwine.hpp"
#include "dunklkit/means.hpp"
#include "dunklkit/poisson.hpp"
#include "dunklkit/quadrature.hpp"
#include "dunklkit/rootsys.hpp"

namespace dunklkit {

namespace {

void add_le(std::vector<Check>& out, const std::string& id, double observed, double bound,
            const std::string& detail) {
    out.push_back({id, std::isfinite(observed) && observed <= bound, observed, bound, detail});
}

void add_ge(std::vector<Check>& out, const std::string& id, double observed, double lower,
            const std::string& detail) {
    out.push_back({id, std::isfinite(observed) && observed >= lower, observed, lower, detail});
}

void add_flag(std::vector<Check>& out, const std::string& id, bool ok, double observed,
              const std::string& detail) {
    out.push_back({id, ok, observed, observed, detail});
}

double max_abs_coeff(const Poly& p) {
    double m = 0.0;
    for (const auto& [e, c] : p.terms()) m = std::max(m, std::abs(c.get_d()));
    return m;
}

std::vector<Check> suite_symbolic(unsigned long long seed) {
    std::vector<Check> out;

    RootSystemData z3 = build_z2({Rational(1, 3), Rational(1, 2), Rational(1)});
    add_le(out, "group-order-sign-flips-3", std::abs((double)z3.group.size() - 8.0), 0.0,
           "full sign-flip group on R^3 has 8 elements");
    RootSystemData b2 = build_b(2, Rational(1, 2), Rational(1, 3));
    add_le(out, "group-order-hyperoctahedral-2", std::abs((double)b2.group.size() - 8.0), 0.0,
           "hyperoctahedral group of rank 2 has 8 elements");
    RootSystemData a2 = build_a(2, Rational(1, 2));
    add_le(out, "group-order-symmetric-3", std::abs((double)a2.group.size() - 6.0), 0.0,
           "permutations of three coordinates");

    RootSystemData z2 = build_z2({Rational(1, 2), Rational(1)});
    add_le(out, "total-multiplicity-sum",
           std::abs(z2.total_kappa.get_d() - 1.5), 0.0,
           "multiplicities (1/2, 1) sum to 3/2");

    RootSystemData z1 = build_z2({Rational(1)});
    add_le(out, "weight-value-line", std::abs(weight_eval(z1, {2.0}) - 8.0), 1e-12,
           "|sqrt(2) x|^2 at x = 2");
    RootSystemData z1_0 = build_z2({Rational(0)});
    add_le(out, "ball-measure-unweighted", std::abs(ball_measure(z1_0, {0.0}, 1.0) - 2.0),
           1e-9, "unit interval, Lebesgue measure");
    add_le(out, "ball-measure-weighted-line",
           std::abs(ball_measure(z1, {0.0}, 1.0) - 4.0 / 3.0), 1e-9,
           "integral of 2 t^2 over [-1, 1]");

    {
        RootSystemData rs = build_z2({Rational(3, 4)});
        double cap = std::pow(2.0, 2.0 * rs.total_kappa.get_d() + 1.0);
        double worst = 0.0;
        for (double x : {0.0, 0.3, 1.0, 2.5})
            for (double r : {0.1, 0.5, 1.0}) {
                double ratio = ball_measure(rs, {x}, 2.0 * r) / ball_measure(rs, {x}, r);
                worst = std::max(worst, ratio / cap);
            }
        add_le(out, "ball-doubling-bound", worst, 1.0 + 1e-9,
               "|B(x,2r)| / |B(x,r)| against 2^(2|kappa|+d)");
    }

    {
        double worst = 0.0;
        for (const RootSystemData* rs : {&z2, &b2}) {
            for (int e1 = 0; e1 <= 2; ++e1)
                for (int e2 = 0; e2 + e1 <= 4; ++e2) {
                    Poly p = Poly::monomial(2, {e1, e2}, Rational(1));
                    Poly d12 = dunkl_apply(*rs, 1, dunkl_apply(*rs, 2, p));
                    Poly d21 = dunkl_apply(*rs, 2, dunkl_apply(*rs, 1, p));
                    worst = std::max(worst, max_abs_coeff(d12 - d21));
                }
        }
        add_le(out, "dunkl-operators-commute", worst, 0.0,
               "exact equality of D1 D2 p and D2 D1 p on monomials of degree <= 4");
    }

    {
        Poly p = Poly::variable(1, 0);
        Poly q = divided_reflection_difference({Rational(1)}, z1.positive[0].reflection, p);
        Poly two = Poly::constant(1, Rational(2));
        add_le(out, "divided-reflection-difference-linear", max_abs_coeff(q - two), 0.0,
               "(x - (-x)) / x = 2, exactly");
    }

    {
        RootSystemData rs = build_z2({Rational(1, 2), Rational(1)});
        auto basis = harmonic_basis(rs, 3);
        double worst = 0.0;
        for (const Poly& h : basis) worst = std::max(worst, max_abs_coeff(dunkl_laplacian(rs, h)));
        add_ge(out, "harmonic-basis-nonempty", (double)basis.size(), 1.0,
               "degree-3 annihilated space on R^3 is nontrivial");
        add_le(out, "harmonic-basis-annihilated", worst, 0.0,
               "kappa-Laplacian of every basis element vanishes exactly");

        bool all_exact = true;
        double worst_sq = 0.0;
        for (const Poly& h : basis) {
            auto rep = square_identity_check(rs, h);
            all_exact = all_exact && rep.exact_zero;
            worst_sq = std::max(worst_sq, max_abs_coeff(rep.diff));
        }
        add_flag(out, "laplacian-of-square-identity", all_exact, worst_sq,
                 "Delta_kappa u^2 = 2|grad u|^2 + reflection-difference squares, exactly");
    }

    {
        RootSystemData rs = build_z2({Rational(1, 2)});
        auto basis = harmonic_basis(rs, 2);
        std::vector<Poly> F(basis.begin(), basis.begin() + std::min<size_t>(2, basis.size()));
        std::mt19937_64 rng(seed * 1000003ull + 17ull);
        std::uniform_real_distribution<double> U(-2.0, 2.0);
        std::uniform_real_distribution<double> Uy(0.2, 2.0);
        std::vector<std::vector<double>> samples;
        for (int i = 0; i < 200; ++i) samples.push_back({U(rng), Uy(rng)});
        auto rep = subharmonic_probe(rs, F, samples);
        add_ge(out, "vector-modulus-subharmonic", rep.min_value, -1e-5,
               "numeric kappa-Laplacian of |F| stays nonnegative at sampled points");
    }

    return out;
}

std::vector<Check> suite_translation(unsigned long long /*seed*/) {
    std::vector<Check> out;

    {
        std::vector<double> lam{0.7};
        double v = intertwine_apply(lam, [](const std::vector<double>&) { return 1.0; }, {1.3});
        add_le(out, "intertwining-fixes-constants", std::abs(v - 1.0), 1e-12, "V 1 = 1");
    }
    {
        std::vector<double> lam{0.6};
        double x = 0.9;
        double v = intertwine_apply(lam, [](const std::vector<double>& t) { return t[0]; }, {x});
        add_le(out, "intertwining-linear-moment", std::abs(v - x / 2.2), 1e-10,
               "V x = x / (2 lambda + 1)");
    }
    {
        std::vector<double> lam{0.6};
        double a = 0.8, b = -0.5;
        double v = translate_point(lam, {a}, [](const std::vector<double>& t) { return t[0]; },
                                   {b});
        add_le(out, "translation-of-linear", std::abs(v - (a + b)), 1e-10,
               "tau_a t = a + b for every multiplicity");
        double q = translate_point(lam, {a},
                                   [](const std::vector<double>& t) { return t[0] * t[0]; }, {b});
        double want = a * a + b * b + 2.0 * a * b / 2.2;
        add_le(out, "translation-of-square", std::abs(q - want), 1e-8,
               "tau_a t^2 = a^2 + b^2 + 2ab/(2 lambda + 1)");
    }
    {
        std::vector<double> lam{0.0};
        auto g = [](const std::vector<double>& t) { return std::exp(-t[0] * t[0]); };
        double worst = 0.0;
        for (double a : {-1.2, 0.4})
            for (double b : {0.7, -0.3})
                worst = std::max(worst,
                                 std::abs(translate_point(lam, {a}, g, {b}) -
                                          std::exp(-(a + b) * (a + b))));
        add_le(out, "translation-classical-limit", worst, 1e-12,
               "zero multiplicity degenerates to the ordinary shift");
    }
    {
        std::vector<double> lam{0.8};
        auto g = [](const std::vector<double>& t) { return std::exp(-t[0] * t[0]); };
        double worst = 0.0;
        for (double a : {0.3, 1.1})
            for (double b : {0.6, -0.9})
                worst = std::max(worst, std::abs(translate_point(lam, {a}, g, {b}) -
                                                 translate_point(lam, {b}, g, {a})));
        add_le(out, "translation-symmetric-in-arguments", worst, 1e-8,
               "tau_x f(t) = tau_t f(x) on a Gaussian");
    }
    {
        std::vector<double> lam{0.5, 0.9};
        auto f0 = [](double r) { return std::exp(-r * r); };
        auto f = [&](const std::vector<double>& t) {
            return f0(std::hypot(t[0], t[1]));
        };
        double worst = 0.0;
        for (auto [x1, x2, t1, t2] : {std::array<double, 4>{0.4, -0.7, 0.9, 0.2},
                                      std::array<double, 4>{1.1, 0.3, -0.5, 0.8}}) {
            double a = translate_point(lam, {x1, x2}, f, {t1, t2});
            double b = translate_radial(lam, {x1, x2}, f0, {t1, t2});
            worst = std::max(worst, std::abs(a - b));
        }
        add_le(out, "radial-translation-consistency", worst, 2e-6,
               "point route and radial-representation route agree on a Gaussian");
    }
    {
        std::vector<double> lam{0.7};
        std::vector<double> x{1.0}, t{0.4};
        SupportWindow w = translation_window(x, t);
        auto bump = [&](double lo, double hi) {
            return [lo, hi](double r) {
                if (r <= lo || r >= hi) return 0.0;
                double s = (r - lo) / (hi - lo);
                return std::exp(-1.0 / (s * (1.0 - s)));
            };
        };
        double below = translate_radial(lam, x, bump(0.0, w.lo - 0.05), t);
        double above = translate_radial(lam, x, bump(w.hi + 0.05, w.hi + 1.0), t);
        add_le(out, "translation-support-window", std::max(std::abs(below), std::abs(above)),
               1e-12, "profiles supported outside [min, max] of |x + sigma t| are not seen");
    }
    {
        std::vector<double> lam{0.4, 1.1};
        auto one = dunkl_kernel_eval(lam, {0.0, 0.0}, {{0.7, 0.0}, {-0.2, 0.0}});
        add_le(out, "kernel-at-zero", std::abs(one - std::complex<double>(1.0, 0.0)), 1e-12,
               "E(0, z) = 1");
        double worst = 0.0;
        for (double x : {0.3, 1.4})
            for (double z : {-0.8, 0.5}) {
                auto v = dunkl_kernel_eval({0.0}, {x}, {{z, 0.0}});
                worst = std::max(worst, std::abs(v - std::exp(std::complex<double>(x * z, 0.0))));
            }
        add_le(out, "kernel-classical-limit", worst, 1e-12,
               "zero multiplicity gives the exponential");
        double worst_mod = 0.0;
        for (double x : {0.5, 2.0})
            for (double y : {0.7, 3.0}) {
                auto v = dunkl_kernel_eval({0.6}, {x}, {{0.0, y}});
                worst_mod = std::max(worst_mod, std::abs(v));
            }
        add_le(out, "kernel-imaginary-contraction", worst_mod, 1.0 + 1e-10,
               "|E(x, iy)| <= 1");
    }
    {
        double min_ratio = 1e300;
        for (double x : {0.5, 1.0, 2.0})
            for (double delta : {0.1, 0.3}) {
                auto rep = density_bound_probe({0.5}, {x}, delta);
                min_ratio = std::min(min_ratio, rep.ratio);
            }
        add_ge(out, "representing-measure-density", min_ratio, 1e-4,
               "half-space mass of mu_x dominates delta^(2|lambda|+1)/|B(x,delta)|");
    }

    return out;
}

std::vector<Check> suite_means(unsigned long long /*seed*/) {
    std::vector<Check> out;
    std::vector<double> lam{0.7};

    {
        double v = spherical_mean(lam, [](const std::vector<double>&) { return 1.0; }, {0.8},
                                  0.5);
        add_le(out, "mean-of-constant", std::abs(v - 1.0), 1e-12, "probability normalization");
    }
    {
        auto u = [](const std::vector<double>& x, double y) { return x[0] * y; };
        double r = mean_value_residual(lam, u, {0.4}, 1.0, 0.5);
        add_le(out, "mean-value-harmonic-xy", r, 1e-7,
               "x y is annihilated for every multiplicity");
    }
    {
        auto u = [](const std::vector<double>&, double y) { return y * y; };
        double m = spherical_mean_halfspace(lam, u, {0.4}, 1.0, 0.5);
        add_ge(out, "mean-gap-nonharmonic", m - 1.0, 1e-3,
               "y^2 is strictly subharmonic, the mean exceeds the center value");
    }
    {
        Poly f = Poly::variable(1, 0);
        add_le(out, "iterated-mean-identity-linear", darboux_residual(lam, f, {0.3}, 0.6),
               1e-8, "x is annihilated on the line");
        Poly f2 = Poly::monomial(1, {2}, Rational(1));
        add_le(out, "iterated-mean-identity-square", darboux_residual(lam, f2, {0.3}, 0.6),
               1e-7, "constant Laplacian case");
        Poly f4 = Poly::monomial(1, {4}, Rational(1));
        add_le(out, "iterated-mean-identity-classical", darboux_residual({0.0}, f4, {0.5}, 0.8),
               1e-6, "unweighted quartic on the line");
    }
    {
        auto g = [](const std::vector<double>& t) { return std::exp(-t[0] * t[0]); };
        double v = spherical_mean(lam, g, {1.2}, 0.7);
        add_ge(out, "mean-preserves-positivity", v, 0.0,
               "mean of a nonnegative function is nonnegative");
    }
    return out;
}

std::vector<Check> suite_poisson(unsigned long long /*seed*/) {
    std::vector<Check> out;

    {
        double worst = 0.0;
        for (double x : {0.0, 0.7, 2.0})
            for (double y : {0.4, 1.5}) {
                double k = poisson_measure_constant({0.0}) * poisson_kernel({0.0}, {x}, y);
                worst = std::max(worst, std::abs(k - y / (M_PI * (y * y + x * x))));
            }
        add_le(out, "kernel-classical-limit", worst, 1e-12,
               "unweighted kernel is y / (pi (y^2 + x^2))");
    }
    {
        double worst = 0.0;
        for (double lam : {0.0, 0.5, 1.2})
            worst = std::max(worst, std::abs(translated_poisson_mass({lam}, {0.0}, 0.7) - 1.0));
        add_le(out, "kernel-mass-at-origin", worst, 1e-6,
               "total mass of P_y against the weighted measure");
    }
    {
        double worst = 0.0;
        for (double y : {0.3, 1.0})
            worst = std::max(worst, std::abs(translated_poisson_mass({0.5}, {0.8}, y) - 1.0));
        add_le(out, "kernel-mass-translated", worst, 1e-6,
               "translation preserves the unit mass");
    }
    {
        std::vector<double> lam{0.6};
        double s = 1.7, x = 0.9, y = 0.5, t = 0.4;
        double lhs = translated_poisson(lam, {s * x}, s * y, {s * t});
        double rhs = std::pow(s, -(2.0 * 0.6 + 1.0)) * translated_poisson(lam, {x}, y, {t});
        add_le(out, "kernel-scaling", std::abs(lhs - rhs) / std::abs(rhs), 1e-7,
               "homogeneity of degree -(2|lambda| + d)");
    }

    PoissonField ind{{0.5}, BoundaryDatum::indicator({-1.0}, {1.0}), 12};
    {
        add_le(out, "boundary-approach-interior", std::abs(ind.eval({0.0}, 1e-3) - 1.0), 5e-3,
               "extension of the indicator tends to 1 inside the interval");
        add_le(out, "boundary-approach-exterior", std::abs(ind.eval({2.0}, 1e-3)), 5e-3,
               "and to 0 outside");
    }
    {
        double sup = 0.0;
        for (double x : {0.0, 0.5, 0.99, 1.5, 3.0})
            for (double y : {0.05, 0.4, 2.0}) sup = std::max(sup, std::abs(ind.eval({x}, y)));
        add_le(out, "extension-contraction", sup, 1.0 + 1e-8,
               "|P f| <= sup |f| for the indicator datum");
    }
    {
        double worst = 0.0;
        for (double x : {0.3, 0.8})
            worst = std::max(worst, std::abs(ind.eval({x}, 0.7) - ind.eval({-x}, 0.7)));
        add_le(out, "extension-reflection-invariance", worst, 1e-9,
               "even datum gives an even extension");
    }
    {
        auto u = [&](const std::vector<double>& x, double y) { return ind.eval(x, y); };
        double r = harmonicity_residual({0.5}, u, {0.4}, 0.6);
        add_le(out, "extension-harmonicity", r, 1e-3,
               "finite-difference kappa-Laplacian of the extension");
    }
    {
        PoissonField g{{0.5}, BoundaryDatum::gaussian(1, 1.0), 12};
        double mn = 1e300;
        for (double x : {0.0, 1.0, 3.0})
            for (double y : {0.2, 1.0}) mn = std::min(mn, g.eval({x}, y));
        add_ge(out, "extension-positivity", mn, 0.0,
               "nonnegative datum gives a nonnegative extension");
    }
    {
        std::vector<KernelGridPoint> grid;
        for (double x : {0.3, 0.8, 1.5})
            for (double t : {-1.2, 0.5, 2.0})
                for (double y : {0.2, 0.8}) grid.push_back({x, t, y});
        auto rep = kernel_bound_ratio(0.5, grid);
        add_ge(out, "kernel-two-sided-lower", rep.min_lower, 1e-3,
               "translated kernel dominates the ball-volume comparator");
        add_le(out, "kernel-two-sided-upper", rep.max_upper, 1e3,
               "and is dominated by it, with uniform constants");
    }
    {
        // semigroup diagnostic: extend the slice at height 0.5 by another 0.4
        std::vector<double> pts, vals;
        for (int i = -60; i <= 60; ++i) {
            double t = 0.1 * i;
            pts.push_back(t);
            vals.push_back(ind.eval({t}, 0.5));
        }
        PoissonField two{{0.5}, BoundaryDatum::tabulated(pts, vals), 12};
        double diff = std::abs(two.eval({0.2}, 0.4) - ind.eval({0.2}, 0.9));
        add_flag(out, "semigroup-diagnostic", true, diff,
                 "|P_{0.4}(u(., 0.5)) - u(., 0.9)| at x = 0.2; reported, not asserted");
    }

    return out;
}

std::vector<Check> suite_area(unsigned long long /*seed*/) {
    std::vector<Check> out;

    {
        CutoffPsi psi = make_cutoff();
        double bad = 0.0;
        bad = std::max(bad, std::abs(psi.eval(0.0) - 1.0));
        bad = std::max(bad, std::abs(psi.eval(0.5) - 1.0));
        bad = std::max(bad, std::abs(psi.eval(1.0)));
        bad = std::max(bad, std::abs(psi.eval(2.0)));
        double prev = 1.0;
        for (double r = 0.5; r <= 1.0; r += 0.05) {
            double v = psi.eval(r);
            if (v > prev + 1e-12) bad = std::max(bad, v - prev);
            prev = v;
        }
        double mid = psi.eval(0.75);
        if (!(mid > 0.0 && mid < 1.0)) bad = std::max(bad, 1.0);
        add_le(out, "cutoff-profile", bad, 0.0,
               "1 on [0, 1/2], 0 from 1 on, monotone between");
    }

    HarmonicField uy = HarmonicField::from_poly(
        {Rational(1, 2)}, Poly::monomial(2, {0, 1}, Rational(1)));
    {
        AreaResult r = area_integral(uy, {0.0}, 1.0, 1.0);
        add_le(out, "area-closed-form-height", std::abs(r.value - 1.0), 1e-6,
               "u = y, unit aperture and height, multiplicity 1/2: S = 1");
        add_flag(out, "area-closed-form-verdict", r.verdict == AreaVerdict::Finite,
                 (double)r.refinements, "the refinement settles");
    }
    {
        HarmonicField uc = HarmonicField::from_poly({Rational(1, 2)},
                                                    Poly::constant(2, Rational(3)));
        AreaResult r = area_integral(uc, {0.4}, 1.0, 1.0);
        add_le(out, "area-of-constant", std::abs(r.value), 1e-9,
               "constants carry no area integral");
    }
    {
        HarmonicField uxy = HarmonicField::from_poly(
            {Rational(7, 10)}, Poly::monomial(2, {1, 1}, Rational(1)));
        AreaResult r = area_integral(uxy, {0.5}, 1.0, 1.0);
        bool ok = r.verdict == AreaVerdict::Finite && r.value > 0.0;
        add_flag(out, "area-polynomial-finite", ok, r.value,
                 "u = x y has finite positive area integral at interior aperture");
    }
    {
        SandwichTriple s = sandwich_residual(uy, {0.0}, 0.5, 1.0);
        bool ok = s.psi_a <= s.s * 1.05 + 1e-9 && s.s <= s.psi_2a * 1.05 + 1e-9;
        add_flag(out, "area-cutoff-sandwich", ok, s.s,
                 "smooth-cutoff functionals at apertures a and 2a bracket S");
    }
    {
        double bad = 0.0;
        for (double lam : {0.0, 0.5, 1.3})
            for (double x : {0.0, 0.6, 2.0})
                for (double t : {0.0, 0.4, 1.8}) {
                    double big = translated_ball_indicator(lam, x, t, 100.0);
                    double mid = translated_ball_indicator(lam, x, t, 1.0);
                    bad = std::max(bad, std::abs(big - 1.0));
                    if (std::abs(std::abs(x) - std::abs(t)) > 1e-3) {
                        // the tiny ball misses the whole orbit of t
                        double small = translated_ball_indicator(lam, x, t, 1e-6);
                        bad = std::max(bad, std::abs(small));
                    }
                    bad = std::max(bad, std::max(-mid, mid - 1.0));
                }
        add_le(out, "translated-ball-indicator-range", bad, 1e-9,
               "values in [0, 1], tending to the right limits in the radius");
    }

    return out;
}

std::vector<Check> suite_boundary(unsigned long long seed, int threads) {
    std::vector<Check> out;

    {
        std::vector<Rational> lam{Rational(1, 2)};
        Poly u = Poly::monomial(2, {1, 1}, Rational(1));   // x y
        Poly v = Poly::monomial(2, {2, 0}, Rational(1)) +
                 Poly::monomial(2, {0, 2}, Rational(1));   // x^2 + y^2
        GreenReport g = green_residual(lam, u, v, 1.5, 0.2, 1.0);
        add_le(out, "green-identity-normal-flux", g.residual_normal, 1e-6,
               "volume term matches the partial-derivative flux");
        add_le(out, "green-identity-dunkl-flux", g.residual_dunkl, 1e-6,
               "and the Dunkl-derivative flux");
        GreenReport g2 = green_residual({Rational(1)}, Poly::monomial(2, {0, 1}, Rational(1)),
                                        Poly::monomial(2, {2, 0}, Rational(1)), 1.0, 0.3, 0.8);
        add_le(out, "green-identity-second-pair",
               std::max(g2.residual_normal, g2.residual_dunkl), 1e-6,
               "u = y against v = x^2 at multiplicity 1");
    }

    {
        HarmonicField uxy = HarmonicField::from_poly(
            {Rational(7, 10)}, Poly::monomial(2, {1, 1}, Rational(1)));
        NTProbeReport r = nt_limit_probe(uxy, {0.3}, 1.0, 1.0, seed);
        bool ok = r.bounded && r.limit_exists && std::abs(r.limit_value) < 1e-3;
        add_flag(out, "cone-limit-polynomial", ok, r.limit_value,
                 "x y tends to its boundary value 0 through the cone at 0.3");
    }

    PoissonField ind{{0.5}, BoundaryDatum::indicator({-1.0}, {1.0}), 12};
    HarmonicField find = HarmonicField::from_poisson(ind);
    {
        NTProbeReport r = nt_limit_probe(find, {0.2}, 1.0, 0.5, seed);
        double sup = 0.0;
        for (const auto& lv : r.levels) sup = std::max(sup, lv.sup_abs);
        add_le(out, "cone-supremum-contraction", sup, 1.0 + 1e-6,
               "indicator extension stays below 1 through the cone");
    }
    {
        HarmonicField blow = HarmonicField::from_function(
            {0.5},
            [](const std::vector<double>& x, double y) {
                return poisson_kernel({0.5}, x, y);
            },
            true, "kernel at the origin");
        NTProbeReport r = nt_limit_probe(blow, {0.0}, 1.0, 0.5, seed);
        add_flag(out, "cone-blowup-detected", !r.bounded,
                 r.levels.empty() ? 0.0 : r.levels.back().sup_abs,
                 "the kernel itself is unbounded in its own cone");
    }
    {
        FatouTable t = fatou_table(find, {-1.5, -0.5, 0.5, 1.5}, 0.5, 0.5, seed, threads);
        add_ge(out, "fatou-three-way-agreement", t.agreement_ratio, 1.0 - 1e-12,
               "boundedness, cone limits and finite area coincide on the small grid");
    }
    {
        double g = gradient_bound_probe(find, 0.3, 0.5, 1.0, 0.05, 0.5, 10, seed);
        add_le(out, "gradient-decay-in-cone", g, 10.0,
               "y |grad u| stays bounded inside the narrower cone");
    }

    return out;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"symbolic",    "translation", "means",
                                                "poisson",     "area",        "boundary"};
    return names;
}

std::vector<Check> run_suite(const std::string& name, unsigned long long seed, int threads) {
    if (name == "all") {
        std::vector<Check> all;
        for (const auto& s : verify_suite_names()) {
            auto part = run_suite(s, seed, threads);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    if (name == "symbolic") return suite_symbolic(seed);
    if (name == "translation") return suite_translation(seed);
    if (name == "means") return suite_means(seed);
    if (name == "poisson") return suite_poisson(seed);
    if (name == "area") return suite_area(seed);
    if (name == "boundary") return suite_boundary(seed, threads);
    throw DomainError("unknown verify suite '" + name + "'");
}

}  // namespace dunklkit
