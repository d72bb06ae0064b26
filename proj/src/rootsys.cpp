#include "dunklkit/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

#include "dunklkit/quadrature.hpp"

namespace dunklkit {

namespace {

Rational dot(const RVector& a, const RVector& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool lex_positive(const RVector& v) {
    for (const auto& c : v) {
        if (c > 0) return true;
        if (c < 0) return false;
    }
    return false;
}

// scale to integer entries with gcd 1 and lex-positive sign
RVector primitive_direction(const RVector& v) {
    mpz_class lcm_den(1);
    for (const auto& c : v) {
        mpz_class d = c.get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> num(v.size());
    mpz_class g(0);
    for (size_t i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * Rational(lcm_den);
        num[i] = scaled.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num[i].get_mpz_t());
    }
    if (g == 0) throw ValidationError("zero root vector");
    RVector out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = Rational(num[i] / g);
    if (!lex_positive(out))
        for (auto& c : out) c = -c;
    return out;
}

PositiveRoot make_positive_root(const RVector& direction, const Rational& kappa) {
    PositiveRoot pr;
    pr.beta = primitive_direction(direction);
    Rational bb = dot(pr.beta, pr.beta);
    pr.c2 = Rational(2) / bb;
    pr.kappa = kappa;
    int d = (int)pr.beta.size();
    pr.reflection = rmat_identity(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) pr.reflection[i][j] -= pr.c2 * pr.beta[i] * pr.beta[j];
    double c = std::sqrt(pr.c2.get_d());
    pr.alpha.resize(d);
    for (int i = 0; i < d; ++i) pr.alpha[i] = c * pr.beta[i].get_d();
    return pr;
}

void finalize(RootSystemData& rs) {
    int d = rs.dim;
    // validate: each reflection permutes the root directions
    std::set<RVector> dirset;
    for (const auto& pr : rs.positive) {
        if (!dirset.insert(pr.beta).second)
            throw ValidationError("duplicate or parallel roots (non-reduced system rejected)");
    }
    // every reflection must permute the root directions
    for (const auto& pr : rs.positive) {
        for (const auto& other : rs.positive) {
            RVector img = rmat_apply(pr.reflection, other.beta);
            if (!dirset.count(primitive_direction(img)))
                throw ValidationError("not a root system: the reflection pair (" +
                                      linear_form(pr.beta, d).str() + "; " +
                                      linear_form(other.beta, d).str() +
                                      ") maps a root outside the set");
        }
    }
    rs.group = generate_group(rs.positive, d);
    // orbits of positive roots under the group (up to sign)
    int next_orbit = 0;
    std::vector<int> orbit(rs.positive.size(), -1);
    for (size_t i = 0; i < rs.positive.size(); ++i) {
        if (orbit[i] >= 0) continue;
        orbit[i] = next_orbit;
        for (const auto& g : rs.group) {
            RVector img = primitive_direction(rmat_apply(g, rs.positive[i].beta));
            for (size_t j = 0; j < rs.positive.size(); ++j)
                if (rs.positive[j].beta == img) {
                    if (orbit[j] >= 0 && orbit[j] != orbit[i])
                        throw InternalPanic("orbit bookkeeping inconsistency");
                    orbit[j] = orbit[i];
                }
        }
        ++next_orbit;
    }
    for (size_t i = 0; i < rs.positive.size(); ++i) rs.positive[i].orbit = orbit[i];
    // multiplicity constant on orbits
    for (size_t i = 0; i < rs.positive.size(); ++i)
        for (size_t j = 0; j < rs.positive.size(); ++j)
            if (orbit[i] == orbit[j] && rs.positive[i].kappa != rs.positive[j].kappa)
                throw ValidationError("multiplicity not constant on a root orbit");
    // total multiplicity and the double root list
    rs.total_kappa = 0;
    for (const auto& pr : rs.positive) rs.total_kappa += pr.kappa;
    rs.roots.clear();
    for (const auto& pr : rs.positive) {
        rs.roots.push_back(pr.alpha);
        std::vector<double> neg(pr.alpha.size());
        for (size_t i = 0; i < neg.size(); ++i) neg[i] = -pr.alpha[i];
        rs.roots.push_back(neg);
    }
}

}  // namespace

std::vector<RMatrix> generate_group(const std::vector<PositiveRoot>& positive, int dim,
                                    size_t cap) {
    std::set<RMatrix> seen;
    std::deque<RMatrix> frontier;
    RMatrix id = rmat_identity(dim);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        RMatrix cur = frontier.front();
        frontier.pop_front();
        for (const auto& pr : positive) {
            RMatrix next = rmat_mul(pr.reflection, cur);
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw ValidationError("not a finite reflection system (closure cap exceeded)");
                frontier.push_back(next);
            }
        }
    }
    std::vector<RMatrix> out(seen.begin(), seen.end());
    return out;  // std::set order is the canonical ordering
}

RootSystemData build_z2(const std::vector<Rational>& lambda) {
    int d = (int)lambda.size();
    if (d < 1) throw DomainError("build_z2: d >= 1 required");
    RootSystemData rs;
    rs.dim = d;
    rs.kind = "Z2^d";
    rs.z2_lambda = lambda;
    for (int j = 0; j < d; ++j) {
        if (lambda[j] < 0) throw DomainError("build_z2: multiplicities must be >= 0");
        RVector e(d, Rational(0));
        e[j] = 1;
        rs.positive.push_back(make_positive_root(e, lambda[j]));
    }
    finalize(rs);
    return rs;
}

RootSystemData build_a(int n, const Rational& kappa) {
    if (n < 1) throw DomainError("build_a: n >= 1 required");
    if (kappa < 0) throw DomainError("build_a: multiplicity must be >= 0");
    int d = n + 1;
    RootSystemData rs;
    rs.dim = d;
    rs.kind = "A_" + std::to_string(n);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            RVector v(d, Rational(0));
            v[i] = 1;
            v[j] = -1;
            rs.positive.push_back(make_positive_root(v, kappa));
        }
    finalize(rs);
    return rs;
}

RootSystemData build_b(int d, const Rational& kappa0, const Rational& kappa1) {
    if (d < 2) throw DomainError("build_b: d >= 2 required");
    if (kappa0 < 0 || kappa1 < 0) throw DomainError("build_b: multiplicities must be >= 0");
    RootSystemData rs;
    rs.dim = d;
    rs.kind = "B_" + std::to_string(d);
    for (int j = 0; j < d; ++j) {
        RVector e(d, Rational(0));
        e[j] = 1;
        rs.positive.push_back(make_positive_root(e, kappa0));
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            for (int s = 0; s < 2; ++s) {
                RVector v(d, Rational(0));
                v[i] = 1;
                v[j] = s ? Rational(-1) : Rational(1);
                rs.positive.push_back(make_positive_root(v, kappa1));
            }
        }
    finalize(rs);
    return rs;
}

RootSystemData build_custom(const std::vector<RVector>& roots,
                            const std::vector<Rational>& kappa) {
    if (roots.empty()) throw DomainError("build_custom: empty root list");
    if (roots.size() != kappa.size())
        throw DomainError("build_custom: one multiplicity per root required");
    int d = (int)roots[0].size();
    for (const auto& r : roots)
        if ((int)r.size() != d) throw DomainError("build_custom: mixed dimensions");
    for (const auto& k : kappa)
        if (k < 0) throw DomainError("build_custom: multiplicities must be >= 0");

    // group the inputs by primitive direction; negation closure means each
    // direction must be hit by two inputs (a pair +/-) or the input set is
    // positives only (each direction hit once).
    struct Entry {
        RVector dir;
        Rational norm2;  // of the original vector
        Rational kappa;
        int hits_pos = 0, hits_neg = 0;
    };
    std::vector<Entry> entries;
    for (size_t i = 0; i < roots.size(); ++i) {
        RVector dir = primitive_direction(roots[i]);
        Rational n2 = dot(roots[i], roots[i]);
        bool pos = lex_positive(roots[i]);
        auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const Entry& e) { return e.dir == dir; });
        if (it == entries.end()) {
            entries.push_back({dir, n2, kappa[i], pos ? 1 : 0, pos ? 0 : 1});
        } else {
            if (it->norm2 != n2)
                throw ValidationError("parallel roots of different lengths (non-reduced)");
            if (it->kappa != kappa[i])
                throw ValidationError("conflicting multiplicities on a root pair");
            (pos ? it->hits_pos : it->hits_neg)++;
        }
    }
    bool any_pair = false, any_single = false;
    for (const auto& e : entries) {
        if (e.hits_pos > 1 || e.hits_neg > 1)
            throw ValidationError("duplicate root in input");
        if (e.hits_pos + e.hits_neg == 2)
            any_pair = true;
        else
            any_single = true;
    }
    if (any_pair && any_single)
        throw ValidationError("root set is not closed under negation (offending root: lone vector)");

    RootSystemData rs;
    rs.dim = d;
    rs.kind = "custom";
    for (const auto& e : entries) rs.positive.push_back(make_positive_root(e.dir, e.kappa));
    finalize(rs);
    return rs;
}

double weight_eval(const RootSystemData& rs, const std::vector<double>& x) {
    if ((int)x.size() != rs.dim) throw DomainError("weight_eval: dimension mismatch");
    double w = 1.0;
    for (const auto& pr : rs.positive) {
        double ip = 0.0;
        for (int i = 0; i < rs.dim; ++i) ip += pr.alpha[i] * x[i];
        w *= std::pow(std::abs(ip), 2.0 * pr.kappa.get_d());
    }
    return w;
}

double orbit_distance(const RootSystemData& rs, const std::vector<double>& x,
                      const std::vector<double>& t) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& g : rs.group) {
        double s = 0.0;
        for (int i = 0; i < rs.dim; ++i) {
            double gi = 0.0;
            for (int j = 0; j < rs.dim; ++j) gi += g[i][j].get_d() * t[j];
            s += (x[i] - gi) * (x[i] - gi);
        }
        best = std::min(best, std::sqrt(s));
    }
    return best;
}

namespace {

// direction set on the sphere S^{d-1}: tensor of spherical angles, GL nodes
struct SpherePoint {
    std::vector<double> t;
    double w;
};

std::vector<SpherePoint> sphere_points(int d, int n) {
    std::vector<SpherePoint> out;
    if (d == 2) {
        const Rule1D& gl = gauss_legendre(n);
        for (int i = 0; i < n; ++i) {
            double a = M_PI + M_PI * gl.nodes[i];
            double w = M_PI * gl.weights[i];
            out.push_back({{std::cos(a), std::sin(a)}, w});
        }
        return out;
    }
    // d >= 3: product over angle levels
    std::vector<std::vector<std::pair<double, double>>> levels;  // (angle, weight)
    const Rule1D& gl = gauss_legendre(n);
    for (int k = 0; k < d - 1; ++k) {
        bool last = (k == d - 2);
        double lo = 0.0, hi = last ? 2.0 * M_PI : M_PI;
        std::vector<std::pair<double, double>> lv;
        for (int i = 0; i < n; ++i)
            lv.push_back({0.5 * (lo + hi) + 0.5 * (hi - lo) * gl.nodes[i],
                          0.5 * (hi - lo) * gl.weights[i]});
        levels.push_back(lv);
    }
    std::vector<int> idx(d - 1, 0);
    while (true) {
        std::vector<double> ang(d - 1);
        double w = 1.0;
        for (int k = 0; k < d - 1; ++k) {
            ang[k] = levels[k][idx[k]].first;
            w *= levels[k][idx[k]].second;
        }
        for (int k = 0; k < d - 2; ++k) w *= std::pow(std::sin(ang[k]), d - 2 - k);
        std::vector<double> t(d);
        double sinprod = 1.0;
        for (int k = 0; k < d - 1; ++k) {
            t[k] = sinprod * std::cos(ang[k]);
            sinprod *= std::sin(ang[k]);
        }
        t[d - 1] = sinprod;
        out.push_back({t, w});
        int k = d - 2;
        while (k >= 0 && ++idx[k] == n) idx[k--] = 0;
        if (k < 0) break;
    }
    return out;
}

}  // namespace

double ball_measure(const RootSystemData& rs, const std::vector<double>& x, double r,
                    int budget) {
    if (r <= 0.0) throw DomainError("ball_measure: r > 0 required");
    if ((int)x.size() != rs.dim) throw DomainError("ball_measure: dimension mismatch");
    int d = rs.dim;

    if (d == 1) {
        // W(t) = prod over the at most one positive root of |alpha t|^{2k};
        // exact antiderivative sign(t) |a|^{2k} |t|^{2k+1} / (2k+1).
        double a2k = 1.0, twok = 0.0;
        for (const auto& pr : rs.positive) {
            a2k *= std::pow(std::abs(pr.alpha[0]), 2.0 * pr.kappa.get_d());
            twok += 2.0 * pr.kappa.get_d();
        }
        auto F = [&](double t) {
            double s = t < 0 ? -1.0 : 1.0;
            return s * a2k * std::pow(std::abs(t), twok + 1.0) / (twok + 1.0);
        };
        return F(x[0] + r) - F(x[0] - r);
    }

    // polar decomposition around x with per-direction radial panels split at
    // the reflection-hyperplane crossings; the radial factor is a product of
    // powers of |rho - rho_i| and is absorbed exactly by Jacobi rules
    auto evaluate = [&](int n_sphere, int n_rad) {
        std::vector<SpherePoint> dirs = sphere_points(d, n_sphere);
        std::vector<double> parts(dirs.size());
        for (size_t s = 0; s < dirs.size(); ++s) {
            const auto& tp = dirs[s].t;
            // per-root linear data: <alpha, x + rho t> = b + a rho
            struct RootLin {
                double a, b, twok;
            };
            std::vector<RootLin> lins;
            std::vector<double> crossings;
            for (const auto& pr : rs.positive) {
                double a = 0.0, b = 0.0;
                for (int i = 0; i < d; ++i) {
                    a += pr.alpha[i] * tp[i];
                    b += pr.alpha[i] * x[i];
                }
                lins.push_back({a, b, 2.0 * pr.kappa.get_d()});
                if (std::abs(a) > 1e-14) {
                    double rho0 = -b / a;
                    if (rho0 > 1e-14 && rho0 < r - 1e-14) crossings.push_back(rho0);
                }
            }
            std::vector<double> brk{0.0};
            std::sort(crossings.begin(), crossings.end());
            for (double c : crossings)
                if (brk.empty() || c > brk.back() + 1e-13) brk.push_back(c);
            brk.push_back(r);

            std::vector<double> panel_vals;
            for (size_t k = 0; k + 1 < brk.size(); ++k) {
                double lo = brk[k], hi = brk[k + 1];
                double exp_lo = (k == 0) ? (double)(d - 1) : 0.0;
                double exp_hi = 0.0;
                // collect per-root handling for this panel
                for (const auto& rl : lins) {
                    if (rl.twok == 0.0 || std::abs(rl.a) <= 1e-14) continue;
                    double rho0 = -rl.b / rl.a;
                    if (std::abs(rho0 - lo) < 1e-12)
                        exp_lo += rl.twok;
                    else if (std::abs(rho0 - hi) < 1e-12)
                        exp_hi += rl.twok;
                }
                double v = integrate_endpoint_singular(
                    lo, hi, exp_lo, exp_hi, n_rad, [&](double rho) {
                        double f = 1.0;
                        if (k != 0) f *= std::pow(rho, (double)(d - 1));
                        for (const auto& rl : lins) {
                            if (rl.twok == 0.0) continue;
                            if (std::abs(rl.a) <= 1e-14) {
                                f *= std::pow(std::abs(rl.b), rl.twok);
                                continue;
                            }
                            double rho0 = -rl.b / rl.a;
                            if (std::abs(rho0 - lo) < 1e-12 || std::abs(rho0 - hi) < 1e-12)
                                f *= std::pow(std::abs(rl.a), rl.twok);
                            else
                                f *= std::pow(std::abs(rl.b + rl.a * rho), rl.twok);
                        }
                        return f;
                    });
                panel_vals.push_back(v);
            }
            parts[s] = dirs[s].w * pairwise_sum(panel_vals);
        }
        return pairwise_sum(parts);
    };

    int n_sphere = (d == 2) ? 24 : 12, n_rad = 24;
    int cap = (d == 2) ? 3072 : 96;
    double prev = evaluate(n_sphere, n_rad);
    for (int it = 0; it < budget && 2 * n_sphere <= cap; ++it) {
        n_sphere *= 2;
        double cur = evaluate(n_sphere, n_rad);
        double rel = std::abs(cur - prev) / std::max(1e-300, std::abs(cur));
        if (rel < 1e-9) return cur;
        prev = cur;
    }
    double last = evaluate(std::min(cap, 2 * n_sphere), n_rad);
    double rel = std::abs(last - prev) / std::max(1e-300, std::abs(last));
    if (rel < 1e-7) return last;
    throw NumericFailure("ball_measure did not converge within budget", prev, last);
}

}  // namespace dunklkit
