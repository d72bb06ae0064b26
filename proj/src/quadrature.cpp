#include "dunklkit/quadrature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace dunklkit {

double pairwise_sum(const std::vector<double>& v) {
    // recursive pairwise reduction in index order
    struct Rec {
        static double sum(const double* p, size_t n) {
            if (n == 0) return 0.0;
            if (n == 1) return p[0];
            if (n == 2) return p[0] + p[1];
            size_t half = n / 2;
            return sum(p, half) + sum(p + half, n - half);
        }
    };
    return Rec::sum(v.data(), v.size());
}

namespace {

Rule1D make_gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: n >= 1 required");
    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    r.exactness_degree = 2 * n - 1;
    r.measure_tag = "legendre[-1,1]";
    for (int i = 1; i <= (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i - 0.25) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one final polish
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pp = n * (x * p1 - p0) / (x * x - 1.0);
                break;
            }
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.nodes[i - 1] = -x;
        r.nodes[n - i] = x;
        r.weights[i - 1] = w;
        r.weights[n - i] = w;
    }
    return r;
}

}  // namespace

const Rule1D& gauss_legendre(int n) {
    // per-thread cache; rules are cheap to build and few distinct sizes occur
    thread_local std::map<int, Rule1D> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gauss_legendre(n)).first;
    return it->second;
}

namespace {

Rule1D make_gauss_jacobi(int n, double a, double b) {
    // Golub-Welsch on the symmetric tridiagonal recurrence matrix.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        double s = 2.0 * k + a + b;
        double diag;
        if (k == 0)
            diag = (b - a) / (a + b + 2.0);
        else
            diag = (b * b - a * a) / (s * (s + 2.0));
        J(k, k) = diag;
        if (k + 1 < n) {
            int m = k + 1;
            double off;
            if (m == 1) {
                // the general formula is 0/0 when a + b = -1
                double s2 = a + b + 2.0;
                off = std::sqrt(4.0 * (a + 1.0) * (b + 1.0) / (s2 * s2 * (s2 + 1.0)));
            } else {
                double t = 2.0 * m + a + b;
                double num = 4.0 * m * (m + a) * (m + b) * (m + a + b);
                double den = t * t * (t + 1.0) * (t - 1.0);
                off = std::sqrt(num / den);
            }
            J(k, k + 1) = off;
            J(k + 1, k) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    double mu0 = std::pow(2.0, a + b + 1.0) *
                 std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
    Rule1D r;
    r.nodes.resize(n);
    r.weights.resize(n);
    r.exactness_degree = 2 * n - 1;
    r.measure_tag = "jacobi(" + std::to_string(a) + "," + std::to_string(b) + ")";
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = es.eigenvalues()(i);
        double v = es.eigenvectors()(0, i);
        r.weights[i] = mu0 * v * v;
    }
    return r;
}

}  // namespace

Rule1D gauss_jacobi(int n, double a, double b) {
    if (n < 1) throw DomainError("gauss_jacobi: n >= 1 required");
    if (a <= -1.0 || b <= -1.0) throw DomainError("gauss_jacobi: exponents must exceed -1");
    thread_local std::map<std::tuple<int, double, double>, Rule1D> cache;
    auto key = std::make_tuple(n, a, b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_gauss_jacobi(n, a, b)).first;
    return it->second;
}

double dm_normalizer(double lambda) {
    if (lambda <= 0.0) throw DomainError("dm_normalizer: lambda > 0 required");
    return std::exp(std::lgamma(lambda + 0.5) - std::lgamma(lambda) - std::lgamma(0.5));
}

Rule1D jacobi_rule(double lambda, int n) {
    if (lambda < 0.0) throw DomainError("jacobi_rule: lambda >= 0 required");
    Rule1D r;
    if (lambda == 0.0) {
        r.nodes = {1.0};
        r.weights = {1.0};
        r.exactness_degree = 1 << 30;  // exact for everything: point mass
        r.measure_tag = "dm_0";
        return r;
    }
    r = gauss_jacobi(n, lambda - 1.0, lambda);
    double c = dm_normalizer(lambda);
    for (auto& w : r.weights) w *= c;
    r.measure_tag = "dm_" + std::to_string(lambda);
    return r;
}

double dm_tail_mass(double lambda, double t0, int n) {
    if (lambda < 0.0) throw DomainError("dm_tail_mass: lambda >= 0 required");
    if (lambda == 0.0) return t0 <= 1.0 ? 1.0 : 0.0;
    if (t0 <= -1.0) return 1.0;
    if (t0 >= 1.0) return 0.0;
    double c = dm_normalizer(lambda);
    if (t0 < 0.0) {
        // 1 - integral_{-1}^{t0}, absorbing (1+u)^lambda at the left endpoint
        double head = integrate_endpoint_singular(
            -1.0, t0, lambda, 0.0, n, [&](double u) { return c * std::pow(1.0 - u, lambda - 1.0); });
        return 1.0 - head;
    }
    return integrate_endpoint_singular(
        t0, 1.0, 0.0, lambda - 1.0, n, [&](double u) { return c * std::pow(1.0 + u, lambda); });
}

namespace {

// geometric breakpoints on [A,B] refined toward both ends
void geometric_breaks(double A, double B, double resolve_a, double resolve_b,
                      std::vector<double>& out) {
    double L = 0.5 * (B - A);
    if (L <= 0.0) return;
    auto depth = [&](double resolve) {
        resolve = std::max(resolve, 1e-14 * std::max(1.0, std::abs(A) + std::abs(B)));
        if (resolve >= L) return 0;
        return (int)std::ceil(std::log2(L / resolve));
    };
    int ma = depth(resolve_a), mb = depth(resolve_b);
    out.push_back(A);
    for (int j = ma; j >= 0; --j) out.push_back(A + L * std::ldexp(1.0, -j));
    for (int j = 1; j <= mb; ++j) out.push_back(B - L * std::ldexp(1.0, -j));
    out.push_back(B);
    std::sort(out.end() - (ma + mb + 3), out.end());
}

}  // namespace

double integrate_dm_adaptive(double lambda, const std::function<double(double)>& g,
                             const std::vector<PeakHint>& hints, double endpoint_resolve,
                             int n_per_panel) {
    if (lambda < 0.0) throw DomainError("integrate_dm_adaptive: lambda >= 0 required");
    if (lambda == 0.0) return g(1.0);
    double c = dm_normalizer(lambda);
    double res_lo = endpoint_resolve, res_hi = endpoint_resolve;

    // anchors: interior peak points; out-of-range peaks tighten an endpoint
    std::vector<PeakHint> interior;
    for (const auto& h : hints) {
        if (h.point <= -1.0 + 1e-13)
            res_lo = std::min(res_lo, h.scale);
        else if (h.point >= 1.0 - 1e-13)
            res_hi = std::min(res_hi, h.scale);
        else
            interior.push_back(h);
    }
    std::sort(interior.begin(), interior.end(),
              [](const PeakHint& a, const PeakHint& b) { return a.point < b.point; });

    std::vector<double> anchors{-1.0};
    std::vector<double> resolves{res_lo};
    for (const auto& h : interior) {
        anchors.push_back(h.point);
        resolves.push_back(std::max(h.scale, 1e-14));
    }
    anchors.push_back(1.0);
    resolves.push_back(res_hi);

    std::vector<double> breaks;
    for (size_t k = 0; k + 1 < anchors.size(); ++k)
        geometric_breaks(anchors[k], anchors[k + 1], resolves[k], resolves[k + 1], breaks);
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    std::vector<double> parts;
    for (size_t k = 0; k + 1 < breaks.size(); ++k) {
        double lo = breaks[k], hi = breaks[k + 1];
        if (hi <= lo) continue;
        bool at_lo = (lo == -1.0), at_hi = (hi == 1.0);
        if (at_lo || at_hi) {
            double exp_lo = at_lo ? lambda : 0.0;
            double exp_hi = at_hi ? lambda - 1.0 : 0.0;
            parts.push_back(integrate_endpoint_singular(
                lo, hi, exp_lo, exp_hi, n_per_panel, [&](double u) {
                    double rest = c * g(u);
                    if (!at_lo) rest *= std::pow(1.0 + u, lambda);
                    if (!at_hi) rest *= std::pow(1.0 - u, lambda - 1.0);
                    return rest;
                }));
        } else {
            parts.push_back(integrate_panels({lo, hi}, n_per_panel, [&](double u) {
                return c * std::pow(1.0 + u, lambda) * std::pow(1.0 - u, lambda - 1.0) * g(u);
            }));
        }
    }
    return pairwise_sum(parts);
}

void refine_toward(std::set<double>& pts, double a, double b, double target, double resolve) {
    if (target <= a || target >= b) return;
    pts.insert(target);
    for (int side = 0; side < 2; ++side) {
        double far = side == 0 ? a : b;
        double len = std::abs(target - far);
        if (len <= resolve) continue;
        int K = (int)std::ceil(std::log2(len / std::max(resolve, 1e-300)));
        K = std::min(K, 60);
        for (int k = 1; k <= K; ++k) pts.insert(target + (far - target) * std::ldexp(1.0, -k));
    }
}

LineRule weighted_line_rule(double lambda, const std::vector<double>& breaks, int n) {
    if (lambda < 0.0) throw DomainError("weighted_line_rule: lambda >= 0 required");
    LineRule out;
    const Rule1D& gl = gauss_legendre(n);
    Rule1D ja;
    if (lambda > 0.0) ja = gauss_jacobi(n, 0.0, 2.0 * lambda);
    for (size_t k = 0; k + 1 < breaks.size(); ++k) {
        double lo = breaks[k], hi = breaks[k + 1];
        if (hi <= lo) continue;
        bool zero_lo = (lo == 0.0), zero_hi = (hi == 0.0);
        double half = 0.5 * (hi - lo);
        if (lambda > 0.0 && (zero_lo || zero_hi)) {
            double scale = std::pow(half, 2.0 * lambda + 1.0);
            for (size_t i = 0; i < ja.nodes.size(); ++i) {
                double s = ja.nodes[i];
                double u = zero_lo ? lo + half * (1.0 + s) : hi - half * (1.0 + s);
                out.nodes.push_back(u);
                out.weights.push_back(scale * ja.weights[i]);
            }
        } else {
            double mid = 0.5 * (lo + hi);
            for (size_t i = 0; i < gl.nodes.size(); ++i) {
                double u = mid + half * gl.nodes[i];
                out.nodes.push_back(u);
                out.weights.push_back(half * gl.weights[i] *
                                      std::pow(std::abs(u), 2.0 * lambda));
            }
        }
    }
    return out;
}

SphereRule sphere_rule_powers(const std::vector<double>& mu, int n) {
    int m = (int)mu.size();
    if (m < 1) throw DomainError("sphere_rule_powers: dimension >= 1 required");
    for (double v : mu)
        if (v < 0.0) throw DomainError("sphere_rule_powers: exponents must be >= 0");
    SphereRule out;
    if (m == 1) {
        out.points = {{1.0}, {-1.0}};
        out.weights = {1.0, 1.0};
        out.total_weight = 2.0;
        return out;
    }
    double mu_rest = 0.0;
    for (int j = 1; j < m; ++j) mu_rest += mu[j];
    double p = mu[0] - 0.5;                    // exponent of s at 0
    double q = 0.5 * (m - 3) + mu_rest;        // exponent of (1-s) at 1
    // integral_{-1}^{1} |u|^{2 mu0} (1-u^2)^q g(u) du
    //   = (1/2) integral_0^1 s^p (1-s)^q (g(sqrt s)+g(-sqrt s)) ds
    Rule1D sr = gauss_jacobi(n, q, p);
    SphereRule sub = sphere_rule_powers(std::vector<double>(mu.begin() + 1, mu.end()), n);
    for (int i = 0; i < n; ++i) {
        double s = 0.5 * (1.0 + sr.nodes[i]);
        double ws = sr.weights[i] * std::pow(0.5, p + q + 1.0) * 0.5;
        double u = std::sqrt(s);
        double rad = std::sqrt(std::max(0.0, 1.0 - s));
        for (int sign = 0; sign < 2; ++sign) {
            double uu = sign ? -u : u;
            for (size_t j = 0; j < sub.points.size(); ++j) {
                std::vector<double> pt(m);
                pt[0] = uu;
                for (int k = 1; k < m; ++k) pt[k] = rad * sub.points[j][k - 1];
                out.points.push_back(std::move(pt));
                out.weights.push_back(ws * sub.weights[j]);
            }
        }
    }
    out.total_weight = pairwise_sum(out.weights);
    return out;
}

}  // namespace dunklkit
