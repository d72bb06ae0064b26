#pragma once

#include <functional>
#include <vector>

#include "dunklkit/intertwine.hpp"
#include "dunklkit/poly.hpp"

namespace dunklkit {

// Mean of (tau_x f) over the sphere of radius r, weighted by
// prod_j |t'_j|^{2 lambda_j} and normalized to a probability measure.
double spherical_mean(const std::vector<double>& lambda, const RealFn& f,
                      const std::vector<double>& x, double r, int n = 32);

// Same mean taken in R^{d+1} for u(x, y), with multiplicity 0 on the extra
// coordinate: generalized translation in x, classical shift in y.
double spherical_mean_halfspace(const std::vector<double>& lambda, const HalfSpaceFn& u,
                                const std::vector<double>& x, double y, double r, int n = 32);

// |M_u((x,y), r) - u(x, y)|; requires r < y so the ball stays in the
// half-space.
double mean_value_residual(const std::vector<double>& lambda, const HalfSpaceFn& u,
                           const std::vector<double>& x, double y, double r, int n = 32);

// Residual of the iterated-integral identity relating M_f(x,r) - f(x) to the
// spherical means of the kappa-Laplacian of f (polynomial data, d variables).
double darboux_residual(const std::vector<double>& lambda, const Poly& f,
                        const std::vector<double>& x, double r, int n = 32);

}  // namespace dunklkit
