// End-to-end acceptance gate: ten criteria, one PASS/FAIL line each.
// Exit code 0 only if every criterion holds.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dunklkit/area.hpp"
#include "dunklkit/boundary.hpp"
#include "dunklkit/dunkl.hpp"
#include "dunklkit/means.hpp"
#include "dunklkit/poisson.hpp"
#include "dunklkit/rootsys.hpp"

using namespace dunklkit;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail) {
    std::printf("%s criterion-%d %s: %s\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Poly::Exponent> monomials_upto(int nvars, int maxdeg) {
    std::vector<Poly::Exponent> out;
    Poly::Exponent e(nvars, 0);
    while (true) {
        int total = 0;
        for (int v : e) total += v;
        if (total <= maxdeg) out.push_back(e);
        int j = nvars - 1;
        while (j >= 0) {
            if (++e[j] <= maxdeg) break;
            e[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

// 1. exact commutativity of the Dunkl operators
void criterion_commutativity() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<RootSystemData> systems;
    systems.push_back(build_z2({Rational(1, 2), Rational(1), Rational(2)}));
    systems.push_back(build_a(2, Rational(1)));
    systems.push_back(build_b(2, Rational(1, 2), Rational(3, 2)));
    bool ok = true;
    long checked = 0;
    for (const auto& rs : systems) {
        auto monos = monomials_upto(rs.dim, 8);
        for (int i = 1; i <= rs.dim && ok; ++i)
            for (int j = i + 1; j <= rs.dim && ok; ++j)
                for (const auto& e : monos) {
                    Poly p = Poly::monomial(rs.dim, e, Rational(1));
                    Poly dij = dunkl_apply(rs, i, dunkl_apply(rs, j, p));
                    Poly dji = dunkl_apply(rs, j, dunkl_apply(rs, i, p));
                    ++checked;
                    if (dij != dji) {
                        ok = false;
                        break;
                    }
                }
    }
    std::ostringstream d;
    d << checked << " exact identities on three systems, degree <= 8 (" << elapsed(t0) << " s)";
    report(1, "operator-commutativity", ok, d.str());
}

// 2. exact identity for the Laplacian of a squared harmonic polynomial
void criterion_square_identity() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<RootSystemData> systems;
    systems.push_back(build_z2({Rational(1, 2), Rational(1)}));
    systems.push_back(build_b(2, Rational(1, 2), Rational(3, 2)));
    bool ok = true;
    long checked = 0;
    for (const auto& rs : systems)
        for (int n = 0; n <= 6 && ok; ++n)
            for (const Poly& u : harmonic_basis(rs, n)) {
                ++checked;
                if (!square_identity_check(rs, u).exact_zero) {
                    ok = false;
                    break;
                }
            }
    std::ostringstream d;
    d << checked << " basis elements, both systems, degrees 0..6 (" << elapsed(t0) << " s)";
    report(2, "square-identity", ok, d.str());
}

// 3. mean-value property of annihilated polynomials
void criterion_mean_value() {
    auto t0 = std::chrono::steady_clock::now();
    struct Setup {
        std::vector<Rational> lam;
        std::vector<double> lam_d;
    };
    std::vector<Setup> setups{{{Rational(1, 2)}, {0.5}}, {{Rational(1, 2), Rational(1)}, {0.5, 1.0}}};
    double worst = 0.0;
    int triples = 0;
    bool ok = true;
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (const auto& s : setups) {
        RootSystemData rs = build_z2(s.lam);
        std::vector<Poly> pool;
        for (int n = 1; n <= 4; ++n)
            for (const Poly& u : harmonic_basis(rs, n)) pool.push_back(u);
        for (size_t k = 0; k < pool.size() && triples < 20; ++k) {
            const Poly& u = pool[(k * 7) % pool.size()];
            std::vector<double> x(rs.dim);
            for (double& c : x) c = U(rng);
            double y = 1.0 + 0.5 * std::abs(U(rng));
            double r = 0.3 + 0.4 * std::abs(U(rng));
            auto fn = [&](const std::vector<double>& xx, double yy) {
                std::vector<double> pt = xx;
                pt.push_back(yy);
                return u.eval(pt);
            };
            double res = mean_value_residual(s.lam_d, fn, x, y, r);
            std::vector<double> pt = x;
            pt.push_back(y);
            double tol = 1e-7 * (1.0 + std::abs(u.eval(pt)));
            worst = std::max(worst, res / tol);
            if (res > tol) ok = false;
            ++triples;
        }
    }
    std::ostringstream d;
    d << triples << " (u, x, r) triples, worst residual at " << worst
      << " of tolerance (" << elapsed(t0) << " s)";
    report(3, "mean-value-property", ok, d.str());
}

// 4. unit mass of the half-space kernel, plain and translated
void criterion_kernel_mass() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    double worst0 = 0.0;
    for (double l : {0.0, 0.5, 1.0}) {
        worst0 = std::max(worst0, std::abs(translated_poisson_mass({l}, {0.0}, 0.7) - 1.0));
        worst0 = std::max(worst0,
                          std::abs(translated_poisson_mass({l, l}, {0.0, 0.0}, 0.7) - 1.0));
    }
    if (worst0 > 1e-8) ok = false;
    double worst1 = 0.0;
    std::vector<std::pair<double, double>> pairs{{0.2, 0.3}, {0.5, 0.8}, {0.9, 0.4},
                                                 {1.3, 1.1}, {2.0, 0.6}, {0.1, 2.5},
                                                 {1.7, 0.2}, {0.8, 1.6}, {2.4, 0.9},
                                                 {3.0, 0.5}};
    for (auto [x, y] : pairs)
        worst1 = std::max(worst1, std::abs(translated_poisson_mass({0.5}, {x}, y) - 1.0));
    if (worst1 > 1e-6) ok = false;
    std::ostringstream d;
    d << "plain mass off by " << worst0 << " (d = 1, 2), translated by " << worst1
      << " over 10 pairs (" << elapsed(t0) << " s)";
    report(4, "kernel-normalization", ok, d.str());
}

// 5. two routes to the translation of radial profiles
void criterion_translation_routes() {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> L(0.1, 1.5), X(-2.0, 2.0);
    auto f0 = [](double r) { return std::exp(-r * r); };
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        int d = (k % 2) + 1;
        std::vector<double> lam(d), x(d), t(d);
        for (int j = 0; j < d; ++j) lam[j] = L(rng), x[j] = X(rng), t[j] = X(rng);
        auto f = [&](const std::vector<double>& p) {
            double s = 0.0;
            for (double c : p) s += c * c;
            return f0(std::sqrt(s));
        };
        worst = std::max(worst, std::abs(translate_point(lam, x, f, t) -
                                         translate_radial(lam, x, f0, t)));
    }
    double worst_shift = 0.0;
    for (double a : {-1.1, 0.6})
        for (double b : {0.4, -0.9}) {
            auto g = [&](const std::vector<double>& p) { return f0(std::abs(p[0])); };
            worst_shift = std::max(worst_shift, std::abs(translate_point({0.0}, {a}, g, {b}) -
                                                         f0(std::abs(a + b))));
        }
    bool ok = worst <= 2e-6 && worst_shift <= 1e-10;
    std::ostringstream d;
    d << "50 random radial cases off by " << worst << "; classical shift off by "
      << worst_shift << " (" << elapsed(t0) << " s)";
    report(5, "translation-cross-validation", ok, d.str());
}

// 6. two-sided kernel bounds, regression-pinned extremes
void criterion_kernel_bounds() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<KernelGridPoint> grid;
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j)
            for (int k = 1; k <= 10; ++k)
                grid.push_back({0.2 * i, -1.53 + 0.3 * j, 0.1 * k});
    KernelBoundReport rep = kernel_bound_ratio(0.5, grid);
    // extremes pinned from the first run of this grid; 1% drift allowed
    const double pinned_lower = 0.92475499074;
    const double pinned_upper = 4.44655116219;
    bool ok = std::isfinite(rep.min_lower) && std::isfinite(rep.max_upper) &&
              rep.min_lower > 0.0 && rep.max_upper > 0.0 &&
              std::abs(rep.min_lower - pinned_lower) <= 0.01 * pinned_lower &&
              std::abs(rep.max_upper - pinned_upper) <= 0.01 * pinned_upper;
    std::ostringstream d;
    d << "1000-point grid: lower ratio >= " << rep.min_lower << ", upper ratio <= "
      << rep.max_upper << " (pinned " << pinned_lower << " / " << pinned_upper << ", "
      << elapsed(t0) << " s)";
    report(6, "two-sided-kernel-bounds", ok, d.str());
}

// 7. smooth-cutoff sandwich around the square function, plus the closed form
void criterion_area_sandwich() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::pair<HarmonicField, double>> fields;
    fields.emplace_back(
        HarmonicField::from_poly({Rational(1, 2)}, Poly::monomial(2, {0, 1}, Rational(1))),
        0.0);
    fields.emplace_back(
        HarmonicField::from_poly({Rational(1, 2)}, Poly::monomial(2, {1, 1}, Rational(1))),
        0.3);
    fields.emplace_back(
        HarmonicField::from_poly({Rational(3, 4)}, Poly::monomial(2, {1, 0}, Rational(1))),
        0.5);
    Poly u4(2);
    u4.add_term({0, 2}, Rational(1));
    u4.add_term({2, 0}, Rational(-1, 2));
    fields.emplace_back(HarmonicField::from_poly({Rational(1, 2)}, u4), 0.25);
    fields.emplace_back(HarmonicField::from_poisson(
                            {{0.5}, BoundaryDatum::indicator({-1.0}, {1.0}), 12}),
                        0.4);
    bool ok = true;
    double worst_gap = 0.0;
    for (auto& [f, x] : fields) {
        SandwichTriple s = sandwich_residual(f, {x}, 0.5, 1.0);
        double tol = 1e-5 * (1.0 + s.s);
        double gap = std::max(s.psi_a - s.s, s.s - s.psi_2a);
        worst_gap = std::max(worst_gap, gap);
        if (gap > tol) ok = false;
    }
    AreaResult closed = area_integral(
        HarmonicField::from_poly({Rational(1, 2)}, Poly::monomial(2, {0, 1}, Rational(1))),
        {0.0}, 1.0, 1.0);
    double closed_err = std::abs(closed.value - 1.0);
    if (closed_err > 1e-6) ok = false;
    std::ostringstream d;
    d << "5 fields, worst ordering violation " << worst_gap << "; closed form off by "
      << closed_err << " (" << elapsed(t0) << " s)";
    report(7, "area-sandwich", ok, d.str());
}

// 8. Green identity on boxes, both flux forms
void criterion_green() {
    auto t0 = std::chrono::steady_clock::now();
    auto P = [](std::initializer_list<std::pair<Poly::Exponent, Rational>> terms) {
        Poly p(2);
        for (const auto& [e, c] : terms) p.add_term(e, c);
        return p;
    };
    struct Pair {
        std::vector<Rational> lam;
        Poly u, v;
    };
    std::vector<Pair> pairs;
    pairs.push_back({{Rational(1, 2)}, P({{{1, 1}, Rational(1)}}), P({{{2, 0}, Rational(1)}})});
    pairs.push_back({{Rational(1, 2)}, P({{{0, 1}, Rational(1)}}),
                     P({{{2, 0}, Rational(1)}, {{0, 2}, Rational(1)}})});
    pairs.push_back({{Rational(1)}, P({{{1, 1}, Rational(1)}}),
                     P({{{1, 0}, Rational(1)}, {{0, 2}, Rational(2)}})});
    pairs.push_back({{Rational(3, 4)}, P({{{2, 0}, Rational(1)}}),
                     P({{{0, 3}, Rational(1)}})});
    pairs.push_back({{Rational(2)}, P({{{1, 2}, Rational(1)}}),
                     P({{{3, 0}, Rational(1)}, {{1, 0}, Rational(-1)}})});
    bool ok = true;
    double worst = 0.0;
    for (const auto& pr : pairs) {
        GreenReport g = green_residual(pr.lam, pr.u, pr.v, 1.2, 0.2, 0.9);
        worst = std::max({worst, g.residual_normal, g.residual_dunkl});
        if (g.residual_normal > 1e-4 || g.residual_dunkl > 1e-4) ok = false;
    }
    std::ostringstream d;
    d << "5 polynomial pairs, worst relative residual " << worst << " (" << elapsed(t0)
      << " s)";
    report(8, "green-identity", ok, d.str());
}

// 9. three-way limit / boundedness / finite-area comparison
void criterion_fatou() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::ostringstream d;

    HarmonicField ind = HarmonicField::from_poisson(
        {{0.5}, BoundaryDatum::indicator({-1.0}, {1.0}), 12});
    std::vector<double> grid;
    for (int k = 1; k <= 9; ++k) {
        grid.push_back(0.1 * k);
        grid.push_back(-0.1 * k);
        grid.push_back(1.0 + 0.1 * k);
        grid.push_back(-1.0 - 0.1 * k);
    }
    grid.push_back(1.0);
    grid.push_back(-1.0);
    FatouTable ti = fatou_table(ind, grid, 0.5, 0.5, 1, 1);
    int jump_designed = 0;
    for (const auto& r : ti.rows) {
        bool at_jump = std::abs(std::abs(r.x) - 1.0) < 1e-12;
        if (at_jump) {
            // designed disagreement: bounded through the cone, but no limit
            if (r.bounded && !r.limit_exists) ++jump_designed;
        } else if (!r.agree) {
            ok = false;
        }
    }
    if (jump_designed != 2) ok = false;
    if (ti.counted > 0 && ti.agreement_ratio < 0.95) ok = false;

    HarmonicField blow = HarmonicField::from_function(
        {0.5},
        [](const std::vector<double>& x, double y) { return poisson_kernel({0.5}, x, y); },
        true, "half-space kernel");
    std::vector<double> bgrid{0.0, 0.7, -0.7, 1.0, -1.0, 1.3, -1.3, 1.6, -1.6};
    FatouTable tb = fatou_table(blow, bgrid, 0.5, 0.5, 1, 1);
    bool vertex_blowup = false;
    int blow_agree = 0;
    for (const auto& r : tb.rows) {
        if (r.x == 0.0)
            vertex_blowup = !r.bounded && r.S_verdict == AreaVerdict::Infinite;
        if (r.agree) ++blow_agree;
    }
    if (!vertex_blowup) ok = false;
    if ((double)blow_agree < 0.95 * (double)tb.rows.size()) ok = false;

    d << "indicator field: " << ti.agreements << "/" << ti.counted
      << " counted rows agree, " << jump_designed
      << " designed jump disagreements; kernel field: " << blow_agree << "/"
      << tb.rows.size() << " agree, vertex blow-up " << (vertex_blowup ? "seen" : "missed")
      << " (" << elapsed(t0) << " s)";
    report(9, "fatou-three-way", ok, d.str());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 10. byte-identical verify reports across runs and thread counts
void criterion_determinism() {
    auto t0 = std::chrono::steady_clock::now();
#ifdef DUNKLKIT_CLI_PATH
    const std::string cli = DUNKLKIT_CLI_PATH;
#else
    const std::string cli = "dunklkit";
#endif
    std::vector<std::string> dirs{"/tmp/dunklkit_acc_t1a", "/tmp/dunklkit_acc_t8a",
                                  "/tmp/dunklkit_acc_t1b", "/tmp/dunklkit_acc_t8b"};
    std::vector<std::string> flags{"--threads 1", "--threads 8", "--threads 1",
                                   "--threads 8"};
    bool ok = true;
    for (size_t i = 0; i < dirs.size(); ++i) {
        std::string cmd = cli + " verify all --seed 1 " + flags[i] + " --out " + dirs[i] +
                          " > /dev/null";
        if (std::system(cmd.c_str()) != 0) ok = false;
    }
    std::string ref = slurp(dirs[0] + "/verify_all.json");
    if (ref.empty()) ok = false;
    for (size_t i = 1; i < dirs.size() && ok; ++i)
        if (slurp(dirs[i] + "/verify_all.json") != ref) ok = false;
    std::ostringstream d;
    d << "verify all, twice at 1 and 8 threads, "
      << (ok ? "byte-identical reports" : "reports differ or a run failed") << " ("
      << elapsed(t0) << " s)";
    report(10, "determinism", ok, d.str());
}

}  // namespace

int main() {
    criterion_commutativity();
    criterion_square_identity();
    criterion_mean_value();
    criterion_kernel_mass();
    criterion_translation_routes();
    criterion_kernel_bounds();
    criterion_area_sandwich();
    criterion_green();
    criterion_fatou();
    criterion_determinism();
    if (g_failures == 0) {
        std::printf("all 10 acceptance criteria hold\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
