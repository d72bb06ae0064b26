#include "dunklkit/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

#include "dunklkit/dunkl.hpp"
#include "dunklkit/rootsys.hpp"

namespace dunklkit {

namespace {

// quasi-uniform points in the slice ball B(vertex, a y), seeded rejection
// sampling, deterministic for a fixed (seed, level, count)
std::vector<std::vector<double>> slice_samples(const ConeSpec& cone, double y, int count,
                                               uint64_t seed, int level) {
    size_t d = cone.vertex.size();
    std::mt19937_64 rng(seed * 1000003ull + (uint64_t)level * 7919ull + (uint64_t)count);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<std::vector<double>> out;
    out.reserve(count);
    double r = cone.aperture * y;
    while ((int)out.size() < count) {
        std::vector<double> p(d);
        double n2 = 0.0;
        for (size_t j = 0; j < d; ++j) {
            p[j] = unif(rng);
            n2 += p[j] * p[j];
        }
        if (n2 > 1.0) continue;
        for (size_t j = 0; j < d; ++j) p[j] = cone.vertex[j] + r * p[j];
        out.push_back(std::move(p));
    }
    return out;
}

ConeLevel scan_level(const HarmonicField& u, const ConeSpec& cone, double y,
                     int initial_samples, uint64_t seed, int level) {
    ConeLevel out;
    out.y = y;
    double prev_sup = -1.0;
    for (int count = initial_samples; count <= 1024; count *= 2) {
        auto pts = slice_samples(cone, y, count, seed, level);
        double sup = 0.0, lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
        try {
            for (const auto& p : pts) {
                double v = u.eval(p, y);
                if (!std::isfinite(v)) throw PoisonedIntegral("non-finite field value");
                sup = std::max(sup, std::abs(v));
                lo = std::min(lo, v);
                hi = std::max(hi, v);
                sum += v;
            }
        } catch (const Error&) {
            out.poisoned = true;
            return out;
        }
        out.sup_abs = sup;
        out.min_val = lo;
        out.max_val = hi;
        out.mean_val = sum / count;
        out.samples = count;
        if (prev_sup >= 0.0 && std::abs(sup - prev_sup) <= 0.05 * std::max(sup, 1e-12)) break;
        prev_sup = sup;
    }
    return out;
}

}  // namespace

std::vector<ConeLevel> cone_supremum(const HarmonicField& u, const ConeSpec& cone, int levels,
                                     int initial_samples, uint64_t seed) {
    if (cone.aperture <= 0.0 || cone.height <= 0.0)
        throw DomainError("cone_supremum: aperture and height must be positive");
    std::vector<ConeLevel> out;
    for (int k = 0; k < levels; ++k) {
        double y = cone.height * std::ldexp(1.0, -(k + 1));
        out.push_back(scan_level(u, cone, y, initial_samples, seed, k));
    }
    return out;
}

NTProbeReport nt_limit_probe(const HarmonicField& u, const std::vector<double>& x, double a,
                             double h, uint64_t seed, double tol_nt, int levels) {
    NTProbeReport rep;
    rep.vertex = x;
    rep.aperture = a;
    rep.height = h;
    rep.seed = seed;
    ConeSpec cone{x, a, h};
    rep.levels = cone_supremum(u, cone, levels, 8, seed);

    // unbounded when the slice sup keeps growing geometrically at the end
    const auto& lv = rep.levels;
    size_t m = lv.size();
    bool growing = m >= 4;
    for (size_t k = m - 3; growing && k < m; ++k) {
        if (lv[k].poisoned || lv[k - 1].poisoned ||
            lv[k].sup_abs <= 1.5 * lv[k - 1].sup_abs)
            growing = false;
    }
    double early_sup = lv.front().sup_abs;
    rep.bounded = !(growing && lv.back().sup_abs > 10.0 * (early_sup + 1.0));

    rep.limit_exists = false;
    rep.limit_value = std::numeric_limits<double>::quiet_NaN();
    if (rep.bounded && m >= 3) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        bool ok = true;
        for (size_t k = m - 3; k < m; ++k) {
            if (lv[k].poisoned) ok = false;
            lo = std::min(lo, lv[k].min_val);
            hi = std::max(hi, lv[k].max_val);
        }
        if (ok && hi - lo < tol_nt) {
            rep.limit_exists = true;
            rep.limit_value = lv.back().mean_val;
        }
    }
    return rep;
}

FatouTable fatou_table(const HarmonicField& u, const std::vector<double>& grid, double a,
                       double h, uint64_t seed, int threads) {
    if (u.dim() != 1) throw DomainError("fatou_table: implemented for d = 1");
    if (grid.empty()) throw DomainError("fatou_table: empty grid");
    for (double x : grid) {
        bool mirrored = false;
        for (double g : grid)
            if (std::abs(g + x) <= 1e-12 * std::max(1.0, std::abs(x))) mirrored = true;
        if (!mirrored)
            throw ValidationError("fatou_table: grid is not closed under sign flips");
    }

    FatouTable table;
    table.a = a;
    table.h = h;
    table.seed = seed;
    table.rows.resize(grid.size());

    auto work = [&](size_t begin, size_t stride) {
        for (size_t i = begin; i < grid.size(); i += stride) {
            FatouRow row;
            row.x = grid[i];
            NTProbeReport rep = nt_limit_probe(u, {grid[i]}, a, h, seed);
            row.bounded = rep.bounded;
            row.limit_exists = rep.limit_exists;
            row.limit_value = rep.limit_value;
            AreaResult ar = area_integral(u, {grid[i]}, a, h);
            row.S_value = ar.value;
            row.S_verdict = ar.verdict;
            row.counted = ar.verdict != AreaVerdict::Indeterminate;
            bool s_finite = ar.verdict == AreaVerdict::Finite;
            row.agree = (row.bounded == row.limit_exists) && (row.limit_exists == s_finite);
            table.rows[i] = row;
        }
    };

    int nthreads = std::max(1, threads);
    if (nthreads == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, (size_t)t, (size_t)nthreads);
        for (auto& t : pool) t.join();
    }

    for (const auto& row : table.rows) {
        if (!row.counted) continue;
        ++table.counted;
        if (row.agree) ++table.agreements;
    }
    table.agreement_ratio =
        table.counted > 0 ? (double)table.agreements / (double)table.counted : 0.0;
    return table;
}

GreenReport green_residual(const std::vector<Rational>& lambda, const Poly& u, const Poly& v,
                           double R, double y0, double y1, int n) {
    if (lambda.size() != 1) throw DomainError("green_residual: implemented for d = 1");
    if (!(R > 0.0 && 0.0 < y0 && y0 < y1))
        throw DomainError("green_residual: need R > 0 and 0 < y0 < y1");
    if (u.nvars() != 2 || v.nvars() != 2)
        throw DomainError("green_residual: polynomials must be in (x, y)");
    RootSystemData rs = build_z2(lambda);
    double lam = to_double(lambda[0]);

    Poly lap_u = dunkl_laplacian(rs, u), lap_v = dunkl_laplacian(rs, v);
    Poly vol_poly = v * lap_u - u * lap_v;

    LineRule xrule = weighted_line_rule(lam, {-R, 0.0, R}, n);
    const Rule1D& gl = gauss_legendre(n);

    // volume term
    std::vector<double> vol_terms;
    for (size_t i = 0; i < xrule.nodes.size(); ++i) {
        double mid = 0.5 * (y0 + y1), half = 0.5 * (y1 - y0);
        for (size_t k = 0; k < gl.nodes.size(); ++k) {
            double y = mid + half * gl.nodes[k];
            vol_terms.push_back(xrule.weights[i] * half * gl.weights[k] *
                                vol_poly.eval(std::vector<double>{xrule.nodes[i], y}));
        }
    }
    double volume = pairwise_sum(vol_terms);

    Poly uy = u.derivative(1), vy = v.derivative(1);
    Poly ux = u.derivative(0), vx = v.derivative(0);
    Poly du = dunkl_apply(rs, 1, u), dv = dunkl_apply(rs, 1, v);

    auto horizontal = [&](const Poly& pu, const Poly& pv, double y) {
        std::vector<double> terms(xrule.nodes.size());
        for (size_t i = 0; i < xrule.nodes.size(); ++i)
            terms[i] = xrule.weights[i] * (v.eval(std::vector<double>{xrule.nodes[i], y}) * pu.eval(std::vector<double>{xrule.nodes[i], y}) -
                                           u.eval(std::vector<double>{xrule.nodes[i], y}) * pv.eval(std::vector<double>{xrule.nodes[i], y}));
        return pairwise_sum(terms);
    };
    auto vertical = [&](const Poly& pu, const Poly& pv, double x) {
        double mid = 0.5 * (y0 + y1), half = 0.5 * (y1 - y0);
        double w = std::pow(std::abs(x), 2.0 * lam);
        std::vector<double> terms(gl.nodes.size());
        for (size_t k = 0; k < gl.nodes.size(); ++k) {
            double y = mid + half * gl.nodes[k];
            terms[k] = half * gl.weights[k] * w *
                       (v.eval(std::vector<double>{x, y}) * pu.eval(std::vector<double>{x, y}) - u.eval(std::vector<double>{x, y}) * pv.eval(std::vector<double>{x, y}));
        }
        return pairwise_sum(terms);
    };

    double top = horizontal(uy, vy, y1);
    double bottom = -horizontal(uy, vy, y0);
    double flux_normal = top + bottom + vertical(ux, vx, R) - vertical(ux, vx, -R);
    double flux_dunkl = top + bottom + vertical(du, dv, R) - vertical(du, dv, -R);

    GreenReport rep;
    rep.scale = std::max({1.0, std::abs(volume), std::abs(flux_normal), std::abs(flux_dunkl)});
    rep.residual_normal = std::abs(volume - flux_normal) / rep.scale;
    rep.residual_dunkl = std::abs(volume - flux_dunkl) / rep.scale;
    return rep;
}

double gradient_bound_probe(const HarmonicField& u, double x0, double a, double b, double h,
                            double eta, int grid_n, uint64_t seed) {
    if (!(a < b && h < eta)) throw DomainError("gradient_bound_probe: need a < b and h < eta");
    if (u.dim() != 1) throw DomainError("gradient_bound_probe: implemented for d = 1");
    ConeSpec wide{{x0}, b, eta};
    auto levels = cone_supremum(u, wide, 12, 16, seed);
    double sup = 0.0;
    for (const auto& lv : levels) sup = std::max(sup, lv.sup_abs);
    if (sup > 1.0 + 1e-6)
        throw ValidationError("gradient_bound_probe: field exceeds 1 on the wider cone (sup = " +
                              std::to_string(sup) + ")");

    double best = 0.0;
    for (int k = 0; k <= grid_n; ++k) {
        double y = h * std::ldexp(1.0, -k);
        double r = a * y;
        for (int i = -4; i <= 4; ++i) {
            double t = x0 + r * (double)i / 4.5;
            double hx = std::min(1e-4 * std::max(1.0, std::abs(t)), 0.3 * y);
            double hy = 0.3 * y * 1e-1;
            double dux = (u.eval({t + hx}, y) - u.eval({t - hx}, y)) / (2.0 * hx);
            double duy = (u.eval({t}, y + hy) - u.eval({t}, y - hy)) / (2.0 * hy);
            best = std::max(best, y * std::sqrt(dux * dux + duy * duy));
        }
    }
    return best;
}

}  // namespace dunklkit
