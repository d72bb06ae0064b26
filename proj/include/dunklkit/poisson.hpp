#pragma once

#include <vector>

#include "dunklkit/intertwine.hpp"
#include "dunklkit/poly.hpp"

namespace dunklkit {

// c_{d,kappa}: the constant in front of the half-space kernel
double poisson_constant(const std::vector<double>& lambda);

// c_kappa = 1 / integral of exp(-|x|^2/2) against prod |x_j|^{2 lambda_j} dx
double poisson_measure_constant(const std::vector<double>& lambda);

// P_y(x) = c_{d,kappa} y / (y^2 + |x|^2)^{|lambda| + (d+1)/2}
double poisson_kernel(const std::vector<double>& lambda, const std::vector<double>& x, double y);

// translated kernel (tau_x P_y)(-t), through the radial representation
double translated_poisson(const std::vector<double>& lambda, const std::vector<double>& x,
                          double y, const std::vector<double>& t, int n = 48);

// c_kappa * integral of (tau_x P_y)(-t) d omega(t) over R^d; equals 1 up to
// quadrature error
double translated_poisson_mass(const std::vector<double>& lambda, const std::vector<double>& x,
                               double y, int n = 48);

// Boundary data with declared support or decay, so integrals can be
// truncated with a controlled tail.
struct BoundaryDatum {
    enum class Kind { PolyBox, IndicatorBox, Gaussian, Tabulated };
    Kind kind = Kind::IndicatorBox;
    Poly poly{1};                      // PolyBox: polynomial inside the box, 0 outside
    std::vector<double> lo{-1.0};      // box corners (PolyBox, IndicatorBox),
    std::vector<double> hi{1.0};       // or declared support (Tabulated)
    double gaussian_width = 1.0;       // Gaussian: exp(-|t|^2 / (2 width^2))
    std::vector<double> table_points;  // Tabulated (d = 1): piecewise linear
    std::vector<double> table_values;

    static BoundaryDatum indicator(std::vector<double> lo, std::vector<double> hi);
    static BoundaryDatum polynomial(Poly p, std::vector<double> lo, std::vector<double> hi);
    static BoundaryDatum gaussian(int d, double width);
    static BoundaryDatum tabulated(std::vector<double> points, std::vector<double> values);

    int dim() const { return (int)lo.size(); }
    double eval(const std::vector<double>& t) const;
    // radius beyond which the datum is zero (or negligible for the Gaussian)
    double support_radius() const;
    bool even_in_each_coordinate() const;
};

// (Pf)(x, y) = c_kappa * integral of f(t) (tau_x P_y)(-t) d omega(t)
double poisson_integral(const std::vector<double>& lambda, const BoundaryDatum& f,
                        const std::vector<double>& x, double y, int n = 12);

struct PoissonField {
    std::vector<double> lambda;
    BoundaryDatum datum;
    int budget = 12;
    double eval(const std::vector<double>& x, double y) const {
        return poisson_integral(lambda, datum, x, y, budget);
    }
};

// finite-difference residual of the explicit kappa-Laplacian of u at (x, y)
double harmonicity_residual(const std::vector<double>& lambda, const HalfSpaceFn& u,
                            const std::vector<double>& x, double y, double step_rel = 1e-3);

struct KernelGridPoint {
    double x, t, y;
};

struct KernelBoundReport {
    double min_lower = 0.0;  // smallest lower-bound ratio seen (the constant c1)
    double max_lower = 0.0;
    double min_upper = 0.0;
    double max_upper = 0.0;  // largest upper-bound ratio seen (the constant c2)
    size_t count = 0;
};

// Two-sided comparison of the translated kernel against the ball-volume
// bounds, on a d = 1 grid.
KernelBoundReport kernel_bound_ratio(double lambda, const std::vector<KernelGridPoint>& grid,
                                     int n = 48);

}  // namespace dunklkit
