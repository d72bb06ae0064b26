#pragma once

#include <string>
#include <vector>

#include "dunklkit/poisson.hpp"
#include "dunklkit/rational.hpp"

namespace dunklkit {

// truncated cone with vertex on the boundary
struct ConeSpec {
    std::vector<double> vertex;
    double aperture = 1.0;
    double height = 1.0;
    bool contains(const std::vector<double>& t, double y) const;
};

// smooth radial cutoff: 1 on [0, 1/2], 0 on [1, inf), strictly decreasing
// in between
struct CutoffPsi {
    double eval(double r) const;
};
CutoffPsi make_cutoff();

// A kappa-harmonic function on the half-space, either an exact polynomial or
// the Poisson extension of a boundary datum.
struct HarmonicField {
    std::vector<double> lambda;
    bool poly_backed = false;
    Poly u{1};            // polynomial in (x1..xd, y)
    Poly lap_u2_poly{1};  // exact kappa-Laplacian of u^2 when poly backed
    PoissonField poisson;
    HalfSpaceFn fn;       // generic evaluator, used when set
    bool fn_even = false;
    double fd_step = 1e-4;
    std::string label;

    static HarmonicField from_poly(const std::vector<Rational>& lambda, const Poly& u);
    static HarmonicField from_poisson(PoissonField f);
    // a caller-supplied kappa-harmonic evaluator; even_in_x asserts that the
    // function is invariant under every coordinate sign flip
    static HarmonicField from_function(std::vector<double> lambda, HalfSpaceFn fn,
                                       bool even_in_x, std::string label);

    int dim() const { return (int)lambda.size(); }
    double eval(const std::vector<double>& x, double y) const;
    // (Delta_kappa u^2)(t, y): exact for polynomials, gradient plus
    // reflection-difference squares with finite differences otherwise
    double lap_u2(const std::vector<double>& t, double y) const;
};

enum class AreaVerdict { Finite, Infinite, Indeterminate };

struct AreaResult {
    double value = 0.0;  // S (square root of the accumulated integral)
    AreaVerdict verdict = AreaVerdict::Finite;
    double last_increment = 0.0;  // of S^2
    int refinements = 0;
};

std::string to_string(AreaVerdict v);

// S_{a,h} u(x) with dyadic refinement of the lower cutoff delta
AreaResult area_integral(const HarmonicField& u, const std::vector<double>& x, double a,
                         double h, double delta_floor = 0.0, int n = 12);

// smooth-cutoff variant (d = 1): the indicator of the cone cross-section is
// replaced by the translated cutoff
double area_integral_psi(const HarmonicField& u, const std::vector<double>& x, double a,
                         double h, int n = 12);

struct SandwichTriple {
    double psi_a = 0.0;
    double s = 0.0;
    double psi_2a = 0.0;
};

SandwichTriple sandwich_residual(const HarmonicField& u, const std::vector<double>& x, double a,
                                 double h, int n = 12);

// translated indicator of the ball of radius R, d = 1 (exact via the dm
// distribution function)
double translated_ball_indicator(double lambda, double x, double t, double R);

}  // namespace dunklkit
