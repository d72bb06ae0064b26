#include "dunklkit/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace dunklkit {

namespace {

double lambda_total(const std::vector<double>& lambda) {
    double s = 0.0;
    for (double l : lambda) {
        if (l < 0.0) throw DomainError("poisson: lambda >= 0 required");
        s += l;
    }
    return s;
}

// kernel exponent and radial profile
double kernel_exponent(const std::vector<double>& lambda) {
    return lambda_total(lambda) + 0.5 * ((double)lambda.size() + 1.0);
}

double radial_profile(double c, double expo, double y, double rho) {
    return c * y / std::pow(y * y + rho * rho, expo);
}

}  // namespace

double poisson_constant(const std::vector<double>& lambda) {
    double total = lambda_total(lambda);
    double d = (double)lambda.size();
    return std::pow(2.0, total + 0.5 * d) / std::sqrt(M_PI) *
           std::tgamma(total + 0.5 * (d + 1.0));
}

double poisson_measure_constant(const std::vector<double>& lambda) {
    double log_inv = 0.0;
    for (double l : lambda)
        log_inv += (l + 0.5) * std::log(2.0) + std::lgamma(l + 0.5);
    return std::exp(-log_inv);
}

double poisson_kernel(const std::vector<double>& lambda, const std::vector<double>& x,
                      double y) {
    if (lambda.size() != x.size()) throw DomainError("poisson_kernel: dimension mismatch");
    if (y <= 0.0) throw DomainError("poisson_kernel: y > 0 required");
    double r2 = 0.0;
    for (double c : x) r2 += c * c;
    return radial_profile(poisson_constant(lambda), kernel_exponent(lambda), y,
                          std::sqrt(r2));
}

double translated_poisson(const std::vector<double>& lambda, const std::vector<double>& x,
                          double y, const std::vector<double>& t, int n) {
    if (lambda.size() != x.size() || t.size() != x.size())
        throw DomainError("translated_poisson: dimension mismatch");
    if (y <= 0.0) throw DomainError("translated_poisson: y > 0 required");
    double c = poisson_constant(lambda);
    double expo = kernel_exponent(lambda);
    if (lambda.size() == 1) {
        double a = x[0], b = t[0];
        // B(th)^2 = a^2 + b^2 - 2ab th peaks at th = sign(ab)
        double ab = a * b;
        std::vector<PeakHint> hints;
        if (ab != 0.0) {
            double scale = (y * y + (a - b) * (a - b) + 1e-300) / (2.0 * std::abs(ab));
            hints.push_back({ab > 0.0 ? 1.0 : -1.0, std::min(scale, 0.5)});
        }
        return integrate_dm_adaptive(
            lambda[0],
            [&](double th) {
                double s = a * a + b * b - 2.0 * ab * th;
                return radial_profile(c, expo, y, std::sqrt(std::max(s, 0.0)));
            },
            hints, 1e-6, 16);
    }
    double x2 = 0.0, t2 = 0.0;
    for (size_t j = 0; j < x.size(); ++j) x2 += x[j] * x[j], t2 += t[j] * t[j];
    std::vector<Rule1D> rules;
    for (double l : lambda) rules.push_back(jacobi_rule(l, n));
    // tensor walk over theta
    std::vector<size_t> idx(rules.size(), 0);
    std::vector<double> terms;
    while (true) {
        double w = 1.0, ip = 0.0;
        for (size_t j = 0; j < rules.size(); ++j) {
            w *= rules[j].weights[idx[j]];
            ip += x[j] * t[j] * rules[j].nodes[idx[j]];
        }
        double s = x2 + t2 - 2.0 * ip;
        terms.push_back(w * radial_profile(c, expo, y, std::sqrt(std::max(s, 0.0))));
        size_t j = rules.size();
        bool done = false;
        while (true) {
            if (j == 0) {
                done = true;
                break;
            }
            --j;
            if (++idx[j] < rules[j].nodes.size()) break;
            idx[j] = 0;
        }
        if (done) break;
    }
    return pairwise_sum(terms);
}

namespace {

// closed-form inner integral for lambda = 1/2 and piecewise-constant data:
// integral over [a,b] of |t| * C y / ((t-c)^2 + w^2)^{3/2} dt
double peaked_abs_integral(double a, double b, double c, double w2) {
    auto anti = [&](double t, double sgn) {
        double u = t - c;
        double rad = std::sqrt(u * u + w2);
        // integral of (sgn t) dt/(...)^{3/2} = sgn * (c*u/(w^2 rad) - 1/rad)
        return sgn * (c * u / (w2 * rad) - 1.0 / rad);
    };
    double lo = std::min(a, b), hi = std::max(a, b);
    double total = 0.0;
    if (hi <= 0.0) {
        total = anti(hi, -1.0) - anti(lo, -1.0);
    } else if (lo >= 0.0) {
        total = anti(hi, 1.0) - anti(lo, 1.0);
    } else {
        total = (anti(0.0, -1.0) - anti(lo, -1.0)) + (anti(hi, 1.0) - anti(0.0, 1.0));
    }
    return total;
}

}  // namespace

BoundaryDatum BoundaryDatum::indicator(std::vector<double> lo, std::vector<double> hi) {
    BoundaryDatum d;
    d.kind = Kind::IndicatorBox;
    d.lo = std::move(lo);
    d.hi = std::move(hi);
    if (d.lo.size() != d.hi.size() || d.lo.empty())
        throw DomainError("BoundaryDatum: bad box");
    return d;
}

BoundaryDatum BoundaryDatum::polynomial(Poly p, std::vector<double> lo, std::vector<double> hi) {
    BoundaryDatum d;
    d.kind = Kind::PolyBox;
    d.poly = std::move(p);
    d.lo = std::move(lo);
    d.hi = std::move(hi);
    if (d.lo.size() != d.hi.size() || (int)d.lo.size() != d.poly.nvars())
        throw DomainError("BoundaryDatum: box and polynomial dimensions must match");
    return d;
}

BoundaryDatum BoundaryDatum::gaussian(int d, double width) {
    if (d < 1 || width <= 0.0) throw DomainError("BoundaryDatum: bad gaussian spec");
    BoundaryDatum out;
    out.kind = Kind::Gaussian;
    out.gaussian_width = width;
    double R = 8.0 * width;
    out.lo.assign(d, -R);
    out.hi.assign(d, R);
    return out;
}

BoundaryDatum BoundaryDatum::tabulated(std::vector<double> points, std::vector<double> values) {
    if (points.size() < 2 || points.size() != values.size())
        throw DomainError("BoundaryDatum: tabulated data needs matching points and values");
    if (!std::is_sorted(points.begin(), points.end()))
        throw DomainError("BoundaryDatum: tabulated points must be ascending");
    BoundaryDatum out;
    out.kind = Kind::Tabulated;
    out.lo = {points.front()};
    out.hi = {points.back()};
    out.table_points = std::move(points);
    out.table_values = std::move(values);
    return out;
}

double BoundaryDatum::eval(const std::vector<double>& t) const {
    if ((int)t.size() != dim()) throw DomainError("BoundaryDatum::eval: dimension mismatch");
    switch (kind) {
        case Kind::IndicatorBox:
        case Kind::PolyBox:
            for (int j = 0; j < dim(); ++j)
                if (t[j] < lo[j] || t[j] > hi[j]) return 0.0;
            return kind == Kind::IndicatorBox ? 1.0 : poly.eval(t);
        case Kind::Gaussian: {
            double r2 = 0.0;
            for (double c : t) r2 += c * c;
            return std::exp(-r2 / (2.0 * gaussian_width * gaussian_width));
        }
        case Kind::Tabulated: {
            double u = t[0];
            if (u <= table_points.front() || u >= table_points.back()) {
                // the endpoints carry their sample values, outside is zero
                if (u == table_points.front()) return table_values.front();
                if (u == table_points.back()) return table_values.back();
                return 0.0;
            }
            auto it = std::upper_bound(table_points.begin(), table_points.end(), u);
            size_t i = (size_t)(it - table_points.begin());
            double a = table_points[i - 1], b = table_points[i];
            double s = (u - a) / (b - a);
            return (1.0 - s) * table_values[i - 1] + s * table_values[i];
        }
    }
    return 0.0;
}

double BoundaryDatum::support_radius() const {
    double r2 = 0.0;
    for (int j = 0; j < dim(); ++j) {
        double m = std::max(std::abs(lo[j]), std::abs(hi[j]));
        r2 += m * m;
    }
    return std::sqrt(r2);
}

bool BoundaryDatum::even_in_each_coordinate() const {
    for (int j = 0; j < dim(); ++j)
        if (lo[j] != -hi[j]) return false;
    if (kind == Kind::Gaussian || kind == Kind::IndicatorBox) return true;
    if (kind == Kind::PolyBox) {
        for (const auto& [e, coef] : poly.terms())
            for (int v : e)
                if (v % 2 != 0) return false;
        return true;
    }
    return false;
}

namespace {

// d = 1 Poisson integral: outer dm integral in theta, inner t integral with
// the kernel peak at t0 = x theta and width w(theta)
double poisson_integral_1d(double lambda, const BoundaryDatum& f, double x, double y, int n) {
    double A0 = f.lo[0], A1 = f.hi[0];
    double ck = poisson_measure_constant({lambda});
    double c = poisson_constant({lambda});
    double expo = lambda + 1.0;

    bool fast = (lambda == 0.5 && f.kind == BoundaryDatum::Kind::IndicatorBox);

    auto J = [&](double th) {
        double t0 = x * th;
        double w2 = y * y + x * x * std::max(0.0, 1.0 - th * th);
        if (fast) return c * y * peaked_abs_integral(A0, A1, t0, w2);
        std::set<double> pts{A0, A1};
        if (A0 < 0.0 && A1 > 0.0) pts.insert(0.0);
        if (f.kind == BoundaryDatum::Kind::Tabulated)
            for (double p : f.table_points) pts.insert(p);
        refine_toward(pts, A0, A1, t0, 0.3 * std::sqrt(w2));
        LineRule rule =
            weighted_line_rule(lambda, std::vector<double>(pts.begin(), pts.end()), n);
        std::vector<double> terms(rule.nodes.size());
        std::vector<double> tv(1);
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            double t = rule.nodes[i];
            tv[0] = t;
            double rho2 = (t - t0) * (t - t0) + w2 - y * y;
            terms[i] = rule.weights[i] * f.eval(tv) *
                       radial_profile(c, expo, y, std::sqrt(std::max(rho2, 0.0)));
        }
        return pairwise_sum(terms);
    };

    double eres = std::max(1e-12, std::min(1e-3, 0.5 * y * y / (x * x + y * y)));
    return ck * integrate_dm_adaptive(lambda, J, {}, eres, std::max(8, n));
}

// generic d >= 2 path: tensor panels over the support box against the
// translated kernel; intended for moderate y
double poisson_integral_nd(const std::vector<double>& lambda, const BoundaryDatum& f,
                           const std::vector<double>& x, double y, int n) {
    size_t d = lambda.size();
    std::vector<LineRule> rules(d);
    for (size_t j = 0; j < d; ++j) {
        std::set<double> pts{f.lo[j], f.hi[j]};
        if (f.lo[j] < 0.0 && f.hi[j] > 0.0) pts.insert(0.0);
        refine_toward(pts, f.lo[j], f.hi[j], x[j], 0.5 * y);
        refine_toward(pts, f.lo[j], f.hi[j], -x[j], 0.5 * y);
        rules[j] = weighted_line_rule(lambda[j], std::vector<double>(pts.begin(), pts.end()),
                                      std::max(6, n / 2));
    }
    std::vector<size_t> idx(d, 0);
    std::vector<double> t(d), terms;
    while (true) {
        double w = 1.0;
        for (size_t j = 0; j < d; ++j) {
            t[j] = rules[j].nodes[idx[j]];
            w *= rules[j].weights[idx[j]];
        }
        double fv = f.eval(t);
        if (fv != 0.0) terms.push_back(w * fv * translated_poisson(lambda, x, y, t, 24));
        size_t j = d;
        bool done = false;
        while (true) {
            if (j == 0) {
                done = true;
                break;
            }
            --j;
            if (++idx[j] < rules[j].nodes.size()) break;
            idx[j] = 0;
        }
        if (done) break;
    }
    return poisson_measure_constant(lambda) * pairwise_sum(terms);
}

}  // namespace

double poisson_integral(const std::vector<double>& lambda, const BoundaryDatum& f,
                        const std::vector<double>& x, double y, int n) {
    if (lambda.size() != x.size() || (int)lambda.size() != f.dim())
        throw DomainError("poisson_integral: dimension mismatch");
    if (y <= 0.0) throw DomainError("poisson_integral: y > 0 required");
    lambda_total(lambda);
    if (lambda.size() == 1) return poisson_integral_1d(lambda[0], f, x[0], y, n);
    return poisson_integral_nd(lambda, f, x, y, n);
}

double translated_poisson_mass(const std::vector<double>& lambda, const std::vector<double>& x,
                               double y, int n) {
    if (lambda.size() != x.size()) throw DomainError("translated_poisson_mass: bad dims");
    if (y <= 0.0) throw DomainError("translated_poisson_mass: y > 0 required");
    size_t d = lambda.size();
    double total = lambda_total(lambda);
    double xnorm = 0.0;
    for (double c : x) xnorm += c * c;
    xnorm = std::sqrt(xnorm);
    double p = 2.0 * total + (double)d - 1.0;
    double R = 8.0 * (xnorm + y + 1.0);

    SphereRule ang = sphere_rule_powers(lambda, std::max(24, n / 2));
    std::vector<double> terms(ang.points.size());
    std::vector<double> t(d);
    for (size_t i = 0; i < ang.points.size(); ++i) {
        const auto& w_dir = ang.points[i];
        auto K = [&](double rho) {
            for (size_t j = 0; j < d; ++j) t[j] = rho * w_dir[j];
            return translated_poisson(lambda, x, y, t, n);
        };
        // head: rho^p absorbed at 0, geometric refinement at rho = |x|
        std::set<double> pts{0.0, R};
        refine_toward(pts, 0.0, R, xnorm, 0.25 * y);
        // keep panel sizes commensurate with the kernel's scale y near 0
        for (double s = 0.25 * y; s < R; s *= 2.0) pts.insert(s);
        std::vector<double> breaks(pts.begin(), pts.end());
        std::vector<double> parts;
        for (size_t k = 0; k + 1 < breaks.size(); ++k) {
            double lo = breaks[k], hi = breaks[k + 1];
            if (lo == 0.0)
                parts.push_back(integrate_endpoint_singular(lo, hi, p, 0.0, 12, K));
            else
                parts.push_back(integrate_panels({lo, hi}, 12, [&](double rho) {
                    return std::pow(rho, p) * K(rho);
                }));
        }
        // tail via rho = 1/v; the integrand extends smoothly to v = 0
        parts.push_back(integrate_panels({0.0, 1.0 / R}, 16, [&](double v) {
            double rho = 1.0 / v;
            return std::pow(rho, p + 2.0) * K(rho);
        }));
        terms[i] = ang.weights[i] * pairwise_sum(parts);
    }
    return poisson_measure_constant(lambda) * pairwise_sum(terms);
}

double harmonicity_residual(const std::vector<double>& lambda, const HalfSpaceFn& u,
                            const std::vector<double>& x, double y, double step_rel) {
    size_t d = lambda.size();
    if (x.size() != d) throw DomainError("harmonicity_residual: dimension mismatch");
    double h = step_rel * y;
    double u0 = u(x, y);
    double lap = (u(x, y + h) - 2.0 * u0 + u(x, y - h)) / (h * h);
    std::vector<double> q = x;
    for (size_t j = 0; j < d; ++j) {
        q[j] = x[j] + h;
        double up = u(q, y);
        q[j] = x[j] - h;
        double um = u(q, y);
        q[j] = x[j];
        lap += (up - 2.0 * u0 + um) / (h * h);
        if (lambda[j] > 0.0) {
            if (std::abs(x[j]) < 4.0 * h)
                throw DomainError("harmonicity_residual: probe too close to a hyperplane");
            double du = (up - um) / (2.0 * h);
            q[j] = -x[j];
            double us = u(q, y);
            q[j] = x[j];
            lap += 2.0 * lambda[j] * (du / x[j] - (u0 - us) / (2.0 * x[j] * x[j]));
        }
    }
    return std::abs(lap);
}

KernelBoundReport kernel_bound_ratio(double lambda, const std::vector<KernelGridPoint>& grid,
                                     int n) {
    KernelBoundReport rep;
    rep.min_lower = rep.min_upper = std::numeric_limits<double>::infinity();
    rep.max_lower = rep.max_upper = 0.0;
    std::vector<double> lv{lambda};
    for (const auto& g : grid) {
        if (g.x == g.t) throw DomainError("kernel_bound_ratio: grid must avoid x = t");
        double K = translated_poisson(lv, {g.x}, g.y, {g.t}, n);
        double diff = std::abs(g.x - g.t);
        double dxt = std::min(diff, std::abs(g.x + g.t));
        double lower =
            K * ball_measure_lambda(lv, {g.x}, g.y + diff) * (g.y + diff) / g.y;
        double upper = K * ball_measure_lambda(lv, {g.x}, g.y + dxt) *
                       (g.y * g.y + diff * diff) / (g.y * (g.y + dxt));
        if (!std::isfinite(lower) || !std::isfinite(upper))
            throw NumericFailure("kernel_bound_ratio: non-finite ratio", lower, upper);
        rep.min_lower = std::min(rep.min_lower, lower);
        rep.max_lower = std::max(rep.max_lower, lower);
        rep.min_upper = std::min(rep.min_upper, upper);
        rep.max_upper = std::max(rep.max_upper, upper);
        ++rep.count;
    }
    return rep;
}

}  // namespace dunklkit
