#pragma once

#include <cstdint>
#include <vector>

#include "dunklkit/area.hpp"

namespace dunklkit {

struct ConeLevel {
    double y = 0.0;
    double sup_abs = 0.0;
    double min_val = 0.0;
    double max_val = 0.0;
    double mean_val = 0.0;
    int samples = 0;
    bool poisoned = false;
};

// sup (and range) of u over quasi-uniform samples of the cone slice at each
// dyadic level y_k = h 2^{-k}; the sample count doubles until the sup moves
// by less than 5%
std::vector<ConeLevel> cone_supremum(const HarmonicField& u, const ConeSpec& cone,
                                     int levels = 14, int initial_samples = 8,
                                     uint64_t seed = 1);

struct NTProbeReport {
    std::vector<double> vertex;
    double aperture = 1.0;
    double height = 1.0;
    std::vector<ConeLevel> levels;
    bool bounded = false;
    bool limit_exists = false;
    double limit_value = 0.0;  // NaN when no limit
    uint64_t seed = 0;
};

NTProbeReport nt_limit_probe(const HarmonicField& u, const std::vector<double>& x, double a,
                             double h, uint64_t seed = 1, double tol_nt = 1e-3,
                             int levels = 14);

struct FatouRow {
    double x = 0.0;
    bool bounded = false;
    bool limit_exists = false;
    double limit_value = 0.0;
    double S_value = 0.0;
    AreaVerdict S_verdict = AreaVerdict::Indeterminate;
    bool agree = false;
    bool counted = false;  // indeterminate S excludes the row from the statistic
};

struct FatouTable {
    std::vector<FatouRow> rows;
    double a = 1.0, h = 1.0;
    uint64_t seed = 0;
    int agreements = 0;
    int counted = 0;
    double agreement_ratio = 0.0;
};

// three-way limit / boundedness / finite-area comparison over a sign-flip
// closed grid on the boundary line (d = 1)
FatouTable fatou_table(const HarmonicField& u, const std::vector<double>& grid, double a,
                       double h, uint64_t seed = 1, int threads = 1);

struct GreenReport {
    double residual_normal = 0.0;  // partial-derivative flux form
    double residual_dunkl = 0.0;   // Dunkl-derivative flux form
    double scale = 1.0;
};

// Green identity on the box [-R, R] x [y0, y1], d = 1 polynomials in (x, y)
GreenReport green_residual(const std::vector<Rational>& lambda, const Poly& u, const Poly& v,
                           double R, double y0, double y1, int n = 24);

// max of y |grad u| over a grid in the inner cone; the field must first be
// verified bounded by 1 on the wider cone
double gradient_bound_probe(const HarmonicField& u, double x0, double a, double b, double h,
                            double eta, int grid_n = 12, uint64_t seed = 1);

}  // namespace dunklkit
