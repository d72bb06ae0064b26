#pragma once

#include <vector>

#include "dunklkit/poly.hpp"
#include "dunklkit/rootsys.hpp"

namespace dunklkit {

// D_j p for p in the first rs.dim variables (extra trailing variables, e.g.
// the half-space coordinate y, pass through the reflections untouched).
Poly dunkl_apply(const RootSystemData& rs, int j, const Poly& p);

// Laplacian sum D_j^2 over the x variables only (no y term).
Poly dunkl_laplacian_x(const RootSystemData& rs, const Poly& p);

// Full kappa-Laplacian on R^{d+1}: dy^2 + sum_j D_j^2, for u in variables
// (x1..xd, y).  Computed by both defining formulas (operator squares and the
// explicit divergence form) and cross-asserted for exact equality.
Poly dunkl_laplacian(const RootSystemData& rs, const Poly& u);

// Basis of homogeneous degree-n polynomials in (x, y) annihilated by the
// kappa-Laplacian, via an exact rational kernel computation.
std::vector<Poly> harmonic_basis(const RootSystemData& rs, int n);

struct SquareIdentityReport {
    Poly lhs;   // Laplacian of u^2
    Poly rhs;   // 2|grad u|^2 + 2 sum kappa ((u - sigma u)/<alpha,x>)^2
    Poly diff;  // lhs - rhs
    bool exact_zero = false;
};

SquareIdentityReport square_identity_check(const RootSystemData& rs, const Poly& u);

struct SubharmonicProbeReport {
    double min_value = 0.0;
    int accepted_points = 0;
    int rejected_points = 0;
};

// Numeric Laplacian of |F| over the samples (finite differences for the
// smooth part, exact reflection differences), for F a list of harmonic
// polynomials in (x, y).
SubharmonicProbeReport subharmonic_probe(const RootSystemData& rs,
                                         const std::vector<Poly>& F,
                                         const std::vector<std::vector<double>>& samples,
                                         double h_fd = 1e-4);

}  // namespace dunklkit
