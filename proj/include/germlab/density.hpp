#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "germlab/brieskorn.hpp"
#include "germlab/complex_point.hpp"
#include "germlab/fit.hpp"

namespace germlab {

// The beta-horn (x^2+y^2)^q = z^{2p}, z >= 0, a surface of revolution with
// profile rho(z) = z^beta, beta = p/q >= 1. Topologically a cone; metrically
// conical only for beta = 1.
struct HornParams {
    int p = 1;
    int q = 1;
    HornParams(int p_, int q_);
    double beta() const { return static_cast<double>(p) / q; }
};

// 2-dimensional area of the horn inside the eps-ball:
//   integral of 2 pi z^beta sqrt(1 + beta^2 z^{2 beta - 2}) dz
// from 0 to the exact ball intersection (z^2 + z^{2 beta} = eps^2, solved by
// bisection). Adaptive quadrature to 1e-9 relative.
double horn_area(const HornParams& horn, double eps);

// (eps, volume, stderr) records for density and growth-number fits.
struct GrowthEntry {
    double eps = 0.0;
    double volume = 0.0;
    double stderr_ = 0.0;
};

struct GrowthSeries {
    std::vector<GrowthEntry> entries;  // eps strictly decreasing
    int dimension_hint = 0;
};

GrowthSeries make_series(std::vector<GrowthEntry> entries, int dimension_hint);

// Implicit differentiation of the branched cover x^a = z^b - y^b:
//   x_y = -b y^{b-1} / (a x^{a-1}),  x_z = b z^{b-1} / (a x^{a-1}).
// Throws OnBranchLocus at x = 0.
std::pair<cplx, cplx> implicit_graph_gradients(const BrieskornPair& ab, cplx y, cplx z, cplx x);

struct McVolume {
    double volume = 0.0;
    double stderr_ = 0.0;
    std::vector<double> sheet_volumes;  // per-sheet subtotals
};

// Monte Carlo 4-volume of V(a,b,b) within B_eps: (y,z) uniform in the 4-ball
// of radius eps, one term per sheet x with |p| <= eps, weighted by the
// holomorphic-graph area density 1 + |x_y|^2 + |x_z|^2. Batched compensated
// sums in fixed order; stderr from the batch variance.
McVolume brieskorn_volume(const BrieskornPair& ab, double eps, int n, std::uint64_t seed,
                          int threads = 1, int n_batches = 64);

// Control: the smooth germ x = 0 through the same estimator (weight 1,
// single sheet); converges to the exact 4-ball volume pi^2 eps^4 / 2.
McVolume plane_volume_mc(double eps, int n, std::uint64_t seed, int threads = 1,
                         int n_batches = 64);

double ball4_volume(double eps);

struct RDensity {
    double estimate = 0.0;  // prefactor when the fitted slope matches r
    bool vanishing = false;
    bool diverging = false;
    double slope = 0.0;
};

// Fits volume = c * eps^s over the series. Returns c when |s - r| <= slope_tol,
// vanishing when s > r + slope_tol, diverging (estimate = +inf) when
// s < r - slope_tol.
RDensity r_density(const GrowthSeries& series, double r, double slope_tol = 0.1);

// Log-log slope of the series (the growth number mu for power-law germs)
// with its fit quality. Requires >= 4 entries spanning >= 1 decade.
PowerLawFit volume_growth_number(const GrowthSeries& series);

}  // namespace germlab
