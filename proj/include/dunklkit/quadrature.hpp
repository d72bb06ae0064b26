#pragma once

#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "dunklkit/errors.hpp"

namespace dunklkit {

struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
    int exactness_degree = 0;
    std::string measure_tag;
};

// Deterministic pairwise summation in index order.
double pairwise_sum(const std::vector<double>& v);

// Gauss-Legendre on [-1,1] (weight dx).
const Rule1D& gauss_legendre(int n);

// Gauss-Jacobi on [-1,1] with weight (1-x)^a (1+x)^b, a,b > -1.
Rule1D gauss_jacobi(int n, double a, double b);

// Rule for the probability measure dm_lambda = c_lambda (1+t)(1-t^2)^{lambda-1} dt
// on [-1,1].  lambda == 0 degenerates to the point mass at t = 1.
Rule1D jacobi_rule(double lambda, int n);

// c_lambda = Gamma(lambda+1/2) / (Gamma(lambda) Gamma(1/2))
double dm_normalizer(double lambda);

// integral of dm_lambda over [t0, 1]
double dm_tail_mass(double lambda, double t0, int n = 48);
inline double dm_interval_mass(double lambda, double t0, double t1, int n = 48) {
    return dm_tail_mass(lambda, t0, n) - dm_tail_mass(lambda, t1, n);
}

template <class F>
double integrate(const Rule1D& rule, F&& f) {
    std::vector<double> terms(rule.nodes.size());
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        double v = f(rule.nodes[i]);
        if (!std::isfinite(v))
            throw PoisonedIntegral("non-finite integrand at node " +
                                   std::to_string(rule.nodes[i]));
        terms[i] = rule.weights[i] * v;
    }
    return pairwise_sum(terms);
}

struct IntegrateResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Compares n-node and 2n-node evaluations of the same rule family.
template <class MakeRule, class F>
IntegrateResult integrate_with_estimate(MakeRule&& make_rule, F&& f, int n) {
    double coarse = integrate(make_rule(n), f);
    double fine = integrate(make_rule(2 * n), f);
    return {fine, std::abs(fine - coarse)};
}

// integral over [lo,hi] of g with endpoint behaviour
// (u-lo)^{exp_lo} (hi-u)^{exp_hi} absorbed into the rule; g must include
// those factors' smooth complements only (i.e. pass g with the singular
// powers removed).
template <class F>
double integrate_endpoint_singular(double lo, double hi, double exp_lo, double exp_hi,
                                   int n, F&& g) {
    Rule1D r = gauss_jacobi(n, exp_hi, exp_lo);
    double half = 0.5 * (hi - lo);
    // map x in [-1,1] -> u = lo + half*(1+x); (u-lo) = half*(1+x), (hi-u) = half*(1-x)
    double scale = std::pow(half, exp_lo + exp_hi + 1.0);
    std::vector<double> terms(r.nodes.size());
    for (size_t i = 0; i < r.nodes.size(); ++i) {
        double u = lo + half * (1.0 + r.nodes[i]);
        double v = g(u);
        if (!std::isfinite(v))
            throw PoisonedIntegral("non-finite integrand at node " + std::to_string(u));
        terms[i] = r.weights[i] * v;
    }
    return scale * pairwise_sum(terms);
}

// Plain composite Gauss-Legendre over consecutive breakpoints.
template <class F>
double integrate_panels(const std::vector<double>& breakpoints, int n, F&& f) {
    const Rule1D& r = gauss_legendre(n);
    std::vector<double> parts;
    for (size_t k = 0; k + 1 < breakpoints.size(); ++k) {
        double lo = breakpoints[k], hi = breakpoints[k + 1];
        if (hi <= lo) continue;
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        std::vector<double> terms(r.nodes.size());
        for (size_t i = 0; i < r.nodes.size(); ++i) {
            double v = f(mid + half * r.nodes[i]);
            if (!std::isfinite(v))
                throw PoisonedIntegral("non-finite integrand at node " +
                                       std::to_string(mid + half * r.nodes[i]));
            terms[i] = half * r.weights[i] * v;
        }
        parts.push_back(pairwise_sum(terms));
    }
    return pairwise_sum(parts);
}

// Composite rule for integral of f(u) |u|^{2 lambda} du over the span of the
// breakpoints; the weight factor is folded into the node weights, exactly on
// panels with an endpoint at 0.
struct LineRule {
    std::vector<double> nodes, weights;
};
LineRule weighted_line_rule(double lambda, const std::vector<double>& breaks, int n);

// dyadic breakpoints from both neighbours toward an interior point
void refine_toward(std::set<double>& pts, double a, double b, double target, double resolve);

// A location the integrand varies on a short scale around.
struct PeakHint {
    double point;
    double scale;
};

// integral of g against dm_lambda with geometric panel refinement toward both
// endpoints (down to endpoint_resolve) and toward interior peaks.
double integrate_dm_adaptive(double lambda, const std::function<double(double)>& g,
                             const std::vector<PeakHint>& hints = {},
                             double endpoint_resolve = 1e-6, int n_per_panel = 12);

// Quadrature for integral_{S^{m-1}} f(t) prod_j |t_j|^{2 mu_j} dsigma(t).
struct SphereRule {
    std::vector<std::vector<double>> points;
    std::vector<double> weights;
    double total_weight = 0.0;  // sum of weights = integral of the weight
};

SphereRule sphere_rule_powers(const std::vector<double>& mu, int n);

}  // namespace dunklkit
