#include "dunklkit/means.hpp"

#include <cmath>

#include "dunklkit/dunkl.hpp"
#include "dunklkit/rootsys.hpp"

namespace dunklkit {

double spherical_mean(const std::vector<double>& lambda, const RealFn& f,
                      const std::vector<double>& x, double r, int n) {
    if (lambda.empty() || lambda.size() != x.size())
        throw DomainError("spherical_mean: lambda and point dimensions must match");
    if (r < 0.0) throw DomainError("spherical_mean: r >= 0 required");
    if (r == 0.0) return f(x);
    SphereRule rule = sphere_rule_powers(lambda, n);
    size_t d = x.size();
    std::vector<double> terms(rule.points.size());
    std::vector<double> t(d);
    for (size_t i = 0; i < rule.points.size(); ++i) {
        for (size_t j = 0; j < d; ++j) t[j] = r * rule.points[i][j];
        terms[i] = rule.weights[i] * translate_point(lambda, x, f, t, n);
    }
    return pairwise_sum(terms) / rule.total_weight;
}

double spherical_mean_halfspace(const std::vector<double>& lambda, const HalfSpaceFn& u,
                                const std::vector<double>& x, double y, double r, int n) {
    if (lambda.empty() || lambda.size() != x.size())
        throw DomainError("spherical_mean_halfspace: lambda and point dimensions must match");
    if (r < 0.0) throw DomainError("spherical_mean_halfspace: r >= 0 required");
    if (r == 0.0) return u(x, y);
    std::vector<double> mu = lambda;
    mu.push_back(0.0);
    SphereRule rule = sphere_rule_powers(mu, n);
    size_t d = x.size();
    std::vector<double> terms(rule.points.size());
    std::vector<double> t(d);
    for (size_t i = 0; i < rule.points.size(); ++i) {
        for (size_t j = 0; j < d; ++j) t[j] = r * rule.points[i][j];
        double ys = y + r * rule.points[i][d];
        auto slice = [&](const std::vector<double>& p) { return u(p, ys); };
        terms[i] = rule.weights[i] * translate_point(lambda, x, slice, t, n);
    }
    return pairwise_sum(terms) / rule.total_weight;
}

double mean_value_residual(const std::vector<double>& lambda, const HalfSpaceFn& u,
                           const std::vector<double>& x, double y, double r, int n) {
    if (r >= y)
        throw DomainError("mean_value_residual: ball of radius r exits the half-space (r < y "
                          "required)");
    double m = spherical_mean_halfspace(lambda, u, x, y, r, n);
    return std::abs(m - u(x, y));
}

double darboux_residual(const std::vector<double>& lambda, const Poly& f,
                        const std::vector<double>& x, double r, int n) {
    if ((int)lambda.size() != f.nvars())
        throw DomainError("darboux_residual: polynomial must be in the d base variables");
    if (r <= 0.0) throw DomainError("darboux_residual: r > 0 required");
    size_t d = lambda.size();
    double total = 0.0;
    std::vector<Rational> lr;
    for (double l : lambda) {
        lr.emplace_back(l);
        total += l;
    }
    RootSystemData rs = build_z2(lr);
    Poly lap = dunkl_laplacian_x(rs, f);
    auto lap_fn = [&](const std::vector<double>& p) { return lap.eval(p); };
    double p = 2.0 * total + (double)d - 1.0;

    auto inner = [&](double s) {
        return integrate_endpoint_singular(0.0, s, p, 0.0, n, [&](double st) {
            return spherical_mean(lambda, lap_fn, x, st, n);
        });
    };
    // s^{-p} * inner(s) extends smoothly through s = 0 (inner ~ s^{p+1})
    double correction = integrate_panels({0.0, 0.5 * r, r}, n, [&](double s) {
        return std::pow(s, -p) * inner(s);
    });

    auto f_fn = [&](const std::vector<double>& pt) { return f.eval(pt); };
    double m = spherical_mean(lambda, f_fn, x, r, n);
    std::vector<double> xd(x.begin(), x.end());
    return std::abs(m - f.eval(xd) - correction);
}

}  // namespace dunklkit
