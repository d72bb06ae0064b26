#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "dunklkit/quadrature.hpp"

namespace dunklkit {

using RealFn = std::function<double(const std::vector<double>&)>;
using RadialFn = std::function<double(double)>;
using HalfSpaceFn = std::function<double(const std::vector<double>&, double)>;

// V_lambda f(x) = integral of f(x1 th1, ..., xd thd) over the product of the
// one-dimensional measures dm_{lambda_j}(th_j).
double intertwine_apply(const std::vector<double>& lambda, const RealFn& f,
                        const std::vector<double>& x, int n = 64);

// E_lambda(x, z), evaluated coordinate by coordinate (the kernel factorizes
// over coordinates for the sign-flip group).
std::complex<double> dunkl_kernel_eval(const std::vector<double>& lambda,
                                       const std::vector<double>& x,
                                       const std::vector<std::complex<double>>& z, int n = 64);

// Generalized translation (tau_x f)(t), applied one coordinate at a time with
// the rank-one formula; lambda == 0 coordinates shift classically.
double translate_point(const std::vector<double>& lambda, const std::vector<double>& x,
                       const RealFn& f, const std::vector<double>& t, int n = 64);

// Translation of a radial function f(t) = f0(|t|) through its representing
// product measure (the image of the product of dm_{lambda_j} under
// xi_j = x_j th_j).
double translate_radial(const std::vector<double>& lambda, const std::vector<double>& x,
                        const RadialFn& f0, const std::vector<double>& t, int n = 64);

// [min, max] over all sign flips sigma of |x + sigma(t)|; the translated
// value of a radial profile only sees radii inside this window.
struct SupportWindow {
    double lo = 0.0;
    double hi = 0.0;
};
SupportWindow translation_window(const std::vector<double>& x, const std::vector<double>& t);

// integral of prod_j |t_j|^{2 lambda_j} over the euclidean ball B(x, r)
double ball_measure_lambda(const std::vector<double>& lambda, const std::vector<double>& x,
                           double r);

struct DensityBoundReport {
    double set_mass = 0.0;    // mu_x{ <x,xi> > |x|^2 - delta^2 }
    double comparator = 0.0;  // delta^{2|lambda|+d} / |B(x,delta)|_lambda
    double ratio = 0.0;       // set_mass / comparator
};

DensityBoundReport density_bound_probe(const std::vector<double>& lambda,
                                       const std::vector<double>& x, double delta, int n = 64);

}  // namespace dunklkit
