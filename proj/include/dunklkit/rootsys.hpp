#pragma once

#include <string>
#include <vector>

#include "dunklkit/poly.hpp"
#include "dunklkit/rational.hpp"

namespace dunklkit {

// One positive root alpha, normalized <alpha,alpha> = 2, stored as a rational
// primitive direction beta with alpha = c beta, c^2 = 2/<beta,beta>.
struct PositiveRoot {
    RVector beta;               // primitive integer direction, lex-positive
    Rational c2;                // c^2 = 2 / <beta,beta>
    Rational kappa;             // multiplicity
    int orbit = 0;              // orbit index under the group
    RMatrix reflection;         // sigma_alpha = I - c2 beta beta^T (exact)
    std::vector<double> alpha;  // normalized root as doubles
};

struct RootSystemData {
    int dim = 0;
    std::string kind;                        // "Z2^d" | "A_n" | "B_d" | "custom"
    std::vector<PositiveRoot> positive;
    std::vector<std::vector<double>> roots;  // all roots (positive and negative)
    std::vector<RMatrix> group;              // full reflection group, canonical order
    Rational total_kappa;                    // |kappa| = sum over R+
    std::vector<Rational> z2_lambda;         // per-coordinate multiplicities for Z2^d

    bool is_z2() const { return kind == "Z2^d"; }
};

RootSystemData build_z2(const std::vector<Rational>& lambda);
RootSystemData build_a(int n, const Rational& kappa);  // A_n lives in R^{n+1}
RootSystemData build_b(int d, const Rational& kappa0, const Rational& kappa1);
// Roots given as rational vectors (both signs or positives only; the set is
// validated for negation closure).  kappa is per given root and must be
// constant on orbits.
RootSystemData build_custom(const std::vector<RVector>& roots,
                            const std::vector<Rational>& kappa);

// Closure of the reflections under composition; throws NumericFailure-style
// error if the closure exceeds cap.
std::vector<RMatrix> generate_group(const std::vector<PositiveRoot>& positive, int dim,
                                    size_t cap = 1000000);

// W_kappa(x) = prod_{alpha in R+} |<alpha,x>|^{2 kappa(alpha)}
double weight_eval(const RootSystemData& rs, const std::vector<double>& x);

// |B(x,r)|_kappa by adaptive quadrature (exact antiderivative when d = 1).
double ball_measure(const RootSystemData& rs, const std::vector<double>& x, double r,
                    int budget = 8);

// min over the group of |x - sigma(t)|
double orbit_distance(const RootSystemData& rs, const std::vector<double>& x,
                      const std::vector<double>& t);

}  // namespace dunklkit
