#include "dunklkit/dunkl.hpp"

#include <cmath>

namespace dunklkit {

namespace {

RMatrix extend_identity(const RMatrix& m, int nvars) {
    int d = (int)m.size();
    if (d == nvars) return m;
    RMatrix out = rmat_identity(nvars);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out[i][j] = m[i][j];
    return out;
}

Rational beta_norm2(const RVector& beta) {
    Rational s(0);
    for (const auto& b : beta) s += b * b;
    return s;
}

}  // namespace

Poly dunkl_apply(const RootSystemData& rs, int j, const Poly& p) {
    if (j < 1 || j > rs.dim) throw DomainError("dunkl_apply: 1 <= j <= d required");
    if (p.nvars() < rs.dim) throw DomainError("dunkl_apply: polynomial has too few variables");
    int jj = j - 1;
    Poly out = p.derivative(jj);
    for (const auto& pr : rs.positive) {
        if (pr.kappa == 0 || pr.beta[jj] == 0) continue;
        RMatrix sigma = extend_identity(pr.reflection, p.nvars());
        // kappa * alpha_j (p - sigma p)/<alpha,x> = kappa * beta_j (p - sigma p)/<beta,x>
        Poly q = divided_reflection_difference(pr.beta, sigma, p);
        out = out + q * (pr.kappa * pr.beta[jj]);
    }
    return out;
}

Poly dunkl_laplacian_x(const RootSystemData& rs, const Poly& p) {
    Poly out(p.nvars());
    for (int j = 1; j <= rs.dim; ++j) out = out + dunkl_apply(rs, j, dunkl_apply(rs, j, p));
    return out;
}

namespace {

// delta_alpha u = <grad_x u, alpha>/<alpha,x> - (u - sigma u)/<alpha,x>^2,
// assembled as one exact quotient by <beta,x>^2.
Poly delta_alpha(const RootSystemData& rs, const PositiveRoot& pr, const Poly& u) {
    int nvars = u.nvars();
    Poly grad_dot(nvars);
    for (int i = 0; i < rs.dim; ++i) {
        if (pr.beta[i] == 0) continue;
        grad_dot = grad_dot + u.derivative(i) * pr.beta[i];
    }
    RMatrix sigma = extend_identity(pr.reflection, nvars);
    Poly refl_diff = u - u.compose_linear(sigma);
    // 1/c^2 = <beta,beta>/2
    Rational inv_c2 = beta_norm2(pr.beta) / 2;
    Poly numerator = grad_dot * linear_form(pr.beta, nvars) - refl_diff * inv_c2;
    Poly q = divide_linear_exact(numerator, pr.beta);
    return divide_linear_exact(q, pr.beta);
}

}  // namespace

Poly dunkl_laplacian(const RootSystemData& rs, const Poly& u) {
    if (u.nvars() != rs.dim + 1)
        throw DomainError("dunkl_laplacian: expected polynomial in (x1..xd, y)");
    int y = rs.dim;

    Poly by_squares = u.derivative(y).derivative(y);
    for (int j = 1; j <= rs.dim; ++j)
        by_squares = by_squares + dunkl_apply(rs, j, dunkl_apply(rs, j, u));

    Poly explicit_form = u.derivative(y).derivative(y);
    for (int i = 0; i < rs.dim; ++i) explicit_form = explicit_form + u.derivative(i).derivative(i);
    for (const auto& pr : rs.positive) {
        if (pr.kappa == 0) continue;
        explicit_form = explicit_form + delta_alpha(rs, pr, u) * (Rational(2) * pr.kappa);
    }

    if (!(by_squares == explicit_form))
        throw InternalPanic("kappa-Laplacian: operator-square and explicit forms disagree");
    return by_squares;
}

namespace {

void enumerate_exponents(int nvars, int total, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == nvars - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = total; k >= 0; --k) {
        cur.push_back(k);
        enumerate_exponents(nvars, total - k, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> homogeneous_exponents(int nvars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate_exponents(nvars, degree, cur, out);
    return out;
}

}  // namespace

std::vector<Poly> harmonic_basis(const RootSystemData& rs, int n) {
    if (n < 0) throw DomainError("harmonic_basis: n >= 0 required");
    int nvars = rs.dim + 1;
    auto cols = homogeneous_exponents(nvars, n);
    if (n < 2) {
        std::vector<Poly> basis;
        for (const auto& e : cols) basis.push_back(Poly::monomial(nvars, e, Rational(1)));
        return basis;
    }
    auto rows = homogeneous_exponents(nvars, n - 2);
    std::map<std::vector<int>, size_t> row_index;
    for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;

    size_t R = rows.size(), C = cols.size();
    std::vector<RVector> A(R, RVector(C, Rational(0)));
    for (size_t c = 0; c < C; ++c) {
        Poly lap = dunkl_laplacian(rs, Poly::monomial(nvars, cols[c], Rational(1)));
        for (const auto& [e, coef] : lap.terms()) {
            auto it = row_index.find(e);
            if (it == row_index.end())
                throw InternalPanic("harmonic_basis: Laplacian is not homogeneous of degree n-2");
            A[it->second][c] = coef;
        }
    }

    // exact Gaussian elimination to row echelon form
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < C && r < R; ++c) {
        size_t sel = r;
        while (sel < R && A[sel][c] == 0) ++sel;
        if (sel == R) continue;
        std::swap(A[sel], A[r]);
        Rational inv = Rational(1) / A[r][c];
        for (size_t k = c; k < C; ++k) A[r][k] *= inv;
        for (size_t i = 0; i < R; ++i) {
            if (i == r || A[i][c] == 0) continue;
            Rational f = A[i][c];
            for (size_t k = c; k < C; ++k) A[i][k] -= f * A[r][k];
        }
        pivot_col.push_back((int)c);
        ++r;
    }

    std::vector<bool> is_pivot(C, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<Poly> basis;
    for (size_t free_c = 0; free_c < C; ++free_c) {
        if (is_pivot[free_c]) continue;
        Poly p(nvars);
        p.add_term(cols[free_c], Rational(1));
        for (size_t i = 0; i < pivot_col.size(); ++i) {
            const Rational& coef = A[i][free_c];
            if (coef != 0) p.add_term(cols[pivot_col[i]], -coef);
        }
        basis.push_back(p);
    }
    return basis;
}

SquareIdentityReport square_identity_check(const RootSystemData& rs, const Poly& u) {
    SquareIdentityReport rep;
    rep.lhs = dunkl_laplacian(rs, u * u);
    int nvars = u.nvars();
    Poly rhs(nvars);
    for (int i = 0; i < nvars; ++i) {
        Poly du = u.derivative(i);
        rhs = rhs + du * du * Rational(2);
    }
    for (const auto& pr : rs.positive) {
        if (pr.kappa == 0) continue;
        RMatrix sigma = extend_identity(pr.reflection, nvars);
        Poly q = divided_reflection_difference(pr.beta, sigma, u);
        // ((u - sigma u)/<alpha,x>)^2 = (<beta,beta>/2) q^2
        rhs = rhs + q * q * (Rational(2) * pr.kappa * beta_norm2(pr.beta) / 2);
    }
    rep.rhs = rhs;
    rep.diff = rep.lhs - rep.rhs;
    rep.exact_zero = rep.diff.is_zero();
    return rep;
}

SubharmonicProbeReport subharmonic_probe(const RootSystemData& rs, const std::vector<Poly>& F,
                                         const std::vector<std::vector<double>>& samples,
                                         double h_fd) {
    if (F.empty()) throw DomainError("subharmonic_probe: empty field list");
    int nvars = F[0].nvars();
    auto magnitude = [&](const std::vector<double>& pt) {
        double s = 0.0;
        for (const auto& f : F) {
            double v = f.eval(pt);
            s += v * v;
        }
        return std::sqrt(s);
    };

    SubharmonicProbeReport rep;
    rep.min_value = std::numeric_limits<double>::infinity();
    for (const auto& pt : samples) {
        if ((int)pt.size() != nvars) throw DomainError("subharmonic_probe: bad sample dimension");
        double g0 = magnitude(pt);
        bool reject = g0 < 1e-10;
        for (const auto& pr : rs.positive) {
            double ip = 0.0;
            for (int i = 0; i < rs.dim; ++i) ip += pr.alpha[i] * pt[i];
            if (std::abs(ip) < 1e-6) reject = true;
        }
        if (reject) {
            ++rep.rejected_points;
            continue;
        }
        double scale = 1.0;
        for (double c : pt) scale = std::max(scale, std::abs(c));
        double h = h_fd * scale;

        double lap = 0.0;
        std::vector<double> q = pt;
        for (int i = 0; i < nvars; ++i) {
            q[i] = pt[i] + h;
            double gp = magnitude(q);
            q[i] = pt[i] - h;
            double gm = magnitude(q);
            q[i] = pt[i];
            lap += (gp - 2.0 * g0 + gm) / (h * h);
        }
        for (const auto& pr : rs.positive) {
            if (pr.kappa == 0) continue;
            double ip = 0.0;
            for (int i = 0; i < rs.dim; ++i) ip += pr.alpha[i] * pt[i];
            double grad_dot = 0.0;
            for (int i = 0; i < rs.dim; ++i) {
                if (pr.alpha[i] == 0.0) continue;
                q[i] = pt[i] + h;
                double gp = magnitude(q);
                q[i] = pt[i] - h;
                double gm = magnitude(q);
                q[i] = pt[i];
                grad_dot += pr.alpha[i] * (gp - gm) / (2.0 * h);
            }
            // reflected point (x-part only)
            std::vector<double> rp = pt;
            for (int i = 0; i < rs.dim; ++i) {
                double s = 0.0;
                for (int j = 0; j < rs.dim; ++j) s += pr.reflection[i][j].get_d() * pt[j];
                rp[i] = s;
            }
            double gs = magnitude(rp);
            lap += 2.0 * pr.kappa.get_d() * (grad_dot / ip - (g0 - gs) / (ip * ip));
        }
        rep.min_value = std::min(rep.min_value, lap);
        ++rep.accepted_points;
    }
    if (rep.accepted_points == 0) rep.min_value = 0.0;
    return rep;
}

}  // namespace dunklkit
