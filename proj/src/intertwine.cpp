#include "dunklkit/intertwine.hpp"

#include <algorithm>
#include <cmath>

#include "dunklkit/rootsys.hpp"

namespace dunklkit {

namespace {

void check_dims(const std::vector<double>& lambda, const std::vector<double>& x,
                const char* who) {
    if (lambda.empty() || lambda.size() != x.size())
        throw DomainError(std::string(who) + ": lambda and point dimensions must match");
    for (double l : lambda)
        if (l < 0.0) throw DomainError(std::string(who) + ": lambda >= 0 required");
}

// Visits every node of the tensor product of the per-coordinate dm rules.
template <class Visit>
void tensor_walk(const std::vector<Rule1D>& rules, Visit&& visit) {
    size_t d = rules.size();
    std::vector<size_t> idx(d, 0);
    std::vector<double> theta(d);
    while (true) {
        double w = 1.0;
        for (size_t j = 0; j < d; ++j) {
            theta[j] = rules[j].nodes[idx[j]];
            w *= rules[j].weights[idx[j]];
        }
        visit(theta, w);
        size_t j = d;
        while (true) {
            if (j == 0) return;
            --j;
            if (++idx[j] < rules[j].nodes.size()) break;
            idx[j] = 0;
        }
    }
}

}  // namespace

double intertwine_apply(const std::vector<double>& lambda, const RealFn& f,
                        const std::vector<double>& x, int n) {
    check_dims(lambda, x, "intertwine_apply");
    size_t d = lambda.size();
    std::vector<Rule1D> rules;
    for (size_t j = 0; j < d; ++j) rules.push_back(jacobi_rule(lambda[j], n));
    std::vector<double> terms;
    std::vector<double> pt(d);
    tensor_walk(rules, [&](const std::vector<double>& theta, double w) {
        for (size_t j = 0; j < d; ++j) pt[j] = x[j] * theta[j];
        double v = f(pt);
        if (!std::isfinite(v)) throw PoisonedIntegral("intertwine_apply: non-finite integrand");
        terms.push_back(w * v);
    });
    return pairwise_sum(terms);
}

std::complex<double> dunkl_kernel_eval(const std::vector<double>& lambda,
                                       const std::vector<double>& x,
                                       const std::vector<std::complex<double>>& z, int n) {
    check_dims(lambda, x, "dunkl_kernel_eval");
    if (z.size() != x.size()) throw DomainError("dunkl_kernel_eval: dimension mismatch");
    std::complex<double> out(1.0, 0.0);
    for (size_t j = 0; j < x.size(); ++j) {
        std::complex<double> e = x[j] * z[j];
        if (std::abs(e.real()) > 700.0)
            throw DomainError("dunkl_kernel_eval: exponent too large, rescale the inputs");
        Rule1D rule = jacobi_rule(lambda[j], n);
        std::complex<double> factor(0.0, 0.0);
        for (size_t i = 0; i < rule.nodes.size(); ++i)
            factor += rule.weights[i] * std::exp(rule.nodes[i] * e);
        out *= factor;
    }
    return out;
}

namespace {

// one-dimensional generalized translation applied recursively in coordinate j
double translate_rec(const std::vector<double>& lambda, const std::vector<double>& x,
                     const RealFn& f, std::vector<double>& pt, size_t j, int n) {
    if (j == lambda.size()) return f(pt);
    double a = x[j], b = pt[j];
    if (lambda[j] == 0.0) {
        pt[j] = a + b;
        double v = translate_rec(lambda, x, f, pt, j + 1, n);
        pt[j] = b;
        return v;
    }
    Rule1D rule = jacobi_rule(lambda[j], n);
    std::vector<double> terms(rule.nodes.size());
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        double s = a * a + b * b + 2.0 * a * b * rule.nodes[i];
        double B = std::sqrt(std::max(s, 0.0));
        pt[j] = B;
        double gp = translate_rec(lambda, x, f, pt, j + 1, n);
        pt[j] = -B;
        double gm = translate_rec(lambda, x, f, pt, j + 1, n);
        double even = 0.5 * (gp + gm);
        double odd;
        if (B > 1e-9) {
            odd = (a + b) * (gp - gm) / (2.0 * B);
        } else {
            // slope of the odd part at the origin by a short central difference
            double h = 1e-6 * std::max(1.0, std::abs(a) + std::abs(b));
            pt[j] = h;
            double fp = translate_rec(lambda, x, f, pt, j + 1, n);
            pt[j] = -h;
            double fm = translate_rec(lambda, x, f, pt, j + 1, n);
            odd = (a + b) * (fp - fm) / (2.0 * h);
        }
        terms[i] = rule.weights[i] * (even + odd);
    }
    pt[j] = b;
    double v = pairwise_sum(terms);
    if (!std::isfinite(v)) throw PoisonedIntegral("translate_point: non-finite partial result");
    return v;
}

}  // namespace

double translate_point(const std::vector<double>& lambda, const std::vector<double>& x,
                       const RealFn& f, const std::vector<double>& t, int n) {
    check_dims(lambda, x, "translate_point");
    if (t.size() != x.size()) throw DomainError("translate_point: dimension mismatch");
    std::vector<double> pt = t;
    return translate_rec(lambda, x, f, pt, 0, n);
}

double translate_radial(const std::vector<double>& lambda, const std::vector<double>& x,
                        const RadialFn& f0, const std::vector<double>& t, int n) {
    check_dims(lambda, x, "translate_radial");
    if (t.size() != x.size()) throw DomainError("translate_radial: dimension mismatch");
    size_t d = lambda.size();
    double x2 = 0.0, t2 = 0.0;
    for (size_t j = 0; j < d; ++j) x2 += x[j] * x[j], t2 += t[j] * t[j];
    std::vector<Rule1D> rules;
    for (size_t j = 0; j < d; ++j) rules.push_back(jacobi_rule(lambda[j], n));
    std::vector<double> terms;
    tensor_walk(rules, [&](const std::vector<double>& theta, double w) {
        double ip = 0.0;
        for (size_t j = 0; j < d; ++j) ip += t[j] * x[j] * theta[j];
        double s = x2 + t2 + 2.0 * ip;
        double v = f0(std::sqrt(std::max(s, 0.0)));
        if (!std::isfinite(v)) throw PoisonedIntegral("translate_radial: non-finite integrand");
        terms.push_back(w * v);
    });
    return pairwise_sum(terms);
}

SupportWindow translation_window(const std::vector<double>& x, const std::vector<double>& t) {
    if (x.size() != t.size()) throw DomainError("translation_window: dimension mismatch");
    // over sign flips, |x + sigma(t)|^2 = sum (|x_j| +- |t_j|)^2, extremes attained
    // coordinatewise
    double lo2 = 0.0, hi2 = 0.0;
    for (size_t j = 0; j < x.size(); ++j) {
        double p = std::abs(x[j]) + std::abs(t[j]);
        double m = std::abs(x[j]) - std::abs(t[j]);
        hi2 += p * p;
        lo2 += m * m;
    }
    return {std::sqrt(lo2), std::sqrt(hi2)};
}

double ball_measure_lambda(const std::vector<double>& lambda, const std::vector<double>& x,
                           double r) {
    check_dims(lambda, x, "ball_measure_lambda");
    if (r <= 0.0) throw DomainError("ball_measure_lambda: r > 0 required");
    if (lambda.size() == 1) {
        double l = lambda[0];
        auto F = [&](double t) {
            return (t < 0 ? -1.0 : 1.0) * std::pow(std::abs(t), 2.0 * l + 1.0) / (2.0 * l + 1.0);
        };
        return F(x[0] + r) - F(x[0] - r);
    }
    // the sign-flip weight prod |<alpha,t>|^{2 lambda_j} with normalized roots
    // carries an extra 2^{|lambda|} against prod |t_j|^{2 lambda_j}
    std::vector<Rational> lr;
    double total = 0.0;
    for (double l : lambda) {
        lr.emplace_back(l);
        total += l;
    }
    RootSystemData rs = build_z2(lr);
    return ball_measure(rs, x, r) / std::pow(2.0, total);
}

DensityBoundReport density_bound_probe(const std::vector<double>& lambda,
                                       const std::vector<double>& x, double delta, int n) {
    check_dims(lambda, x, "density_bound_probe");
    if (delta <= 0.0) throw DomainError("density_bound_probe: delta > 0 required");
    size_t d = lambda.size();
    double x2 = 0.0;
    for (double c : x) x2 += c * c;

    double mass;
    if (x2 == 0.0) {
        // mu_0 is the point mass at 0 and 0 > -delta^2 always holds
        mass = 1.0;
    } else {
        // pivot: the largest-magnitude coordinate carries the tail cut
        size_t p = 0;
        for (size_t j = 1; j < d; ++j)
            if (std::abs(x[j]) > std::abs(x[p])) p = j;
        std::vector<Rule1D> outer;
        std::vector<size_t> outer_idx;
        for (size_t j = 0; j < d; ++j) {
            if (j == p || x[j] == 0.0) continue;
            outer.push_back(jacobi_rule(lambda[j], n));
            outer_idx.push_back(j);
        }
        double xp2 = x[p] * x[p];
        std::vector<double> terms;
        tensor_walk(outer, [&](const std::vector<double>& theta, double w) {
            double rest = 0.0;
            for (size_t k = 0; k < outer_idx.size(); ++k) {
                size_t j = outer_idx[k];
                rest += x[j] * x[j] * theta[k];
            }
            double cut = (x2 - delta * delta - rest) / xp2;
            terms.push_back(w * dm_tail_mass(lambda[p], cut));
        });
        mass = pairwise_sum(terms);
    }

    double total = 0.0;
    for (double l : lambda) total += l;
    DensityBoundReport rep;
    rep.set_mass = mass;
    rep.comparator =
        std::pow(delta, 2.0 * total + (double)d) / ball_measure_lambda(lambda, x, delta);
    rep.ratio = rep.set_mass / rep.comparator;
    return rep;
}

}  // namespace dunklkit
