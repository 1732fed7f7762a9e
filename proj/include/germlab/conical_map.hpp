#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "germlab/brieskorn.hpp"
#include "germlab/complex_point.hpp"

namespace germlab {

// Coordinates adapted to the branch-tube component around y = z:
//   u = (z - y)/2,  v = (z + y)/2,  inverse  y = v - u,  z = v + u.
// In these coordinates the tube component is
//   { x^a = (v+u)^b - (v-u)^b, |u| <= delta |v| },
// and the model surface drops the cubic-in-u remainder:
//   { x^a = 2b u v^{b-1},      |u| <= delta |v| }.
struct UVPoint {
    cplx x{};
    cplx u{};
    cplx v{};
};

std::pair<cplx, cplx> to_uv(cplx y, cplx z);    // (u, v)
std::pair<cplx, cplx> from_uv(cplx u, cplx v);  // (y, z)

// The conical homeomorphism candidate: (x,u,v) -> (v, e^{i arg x} sqrt(|x|^2 + |u|^2)).
// Throws UndefinedArgument when x = 0 with u != 0; maps (0, 0, v) to (v, 0).
std::pair<cplx, cplx> map_F(const UVPoint& p);

// All a solutions of x^a = 2b u v^{b-1}, sorted by principal argument.
std::vector<cplx> model_surface_solve(cplx u, cplx v, const BrieskornPair& ab);

// (v+u)^b - (v-u)^b - 2b u v^{b-1}, computed from the odd binomial tail
//   2 * sum_{odd j >= 3} C(b,j) u^j v^{b-j}
// so tests can compare it against the directly expanded difference.
cplx residual_term(cplx u, cplx v, int b);

// Fiberwise model map on the graph S_D = {u = D x^a}:
//   f(x) = e^{i arg x} sqrt(|x|^2 + |D|^2 |x|^{2a}),  f(0) = 0.
cplx map_f_on_SD(cplx x, cplx D, int a);

// Metric coefficients in polar coordinates (r_x, theta_x): dr^2 and dtheta^2.
struct PolarMetricCoeffs {
    double g_rr = 0.0;
    double g_tt = 0.0;
};

// Induced metric of the graph S_D: (1 + a^2 |D|^2 r^{2a-2}) * (dr^2 + r^2 dtheta^2).
PolarMetricCoeffs metric_coeffs_graph(double r_x, double absD, int a);

// Metric pulled back through f: with t = |D|^2 r^{2a-2},
//   g_rr = (1 + a t)^2 / (1 + t),   g_tt = r^2 (1 + t).
PolarMetricCoeffs metric_coeffs_pullback(double r_x, double absD, int a);

// Ratios of graph to pullback coefficients as functions of t = |D|^2 r^{2a-2}:
//   rho_tt = (1 + a^2 t) / (1 + t)            : 1 -> a^2, nondecreasing
//   rho_rr = (1 + a^2 t)(1 + t) / (1 + a t)^2 : peaks at (a+1)^2/(4a) at t = 1/a
struct DistortionRatios {
    double rho_rr = 1.0;
    double rho_tt = 1.0;
};

DistortionRatios distortion_ratios(double t, int a);

// The uniform fiberwise bound: ds^2/|df|^2 stays within [1/a^2, a^2].
double sd_bilip_bound(int a);

// Tangent-plane ratio between the full model surface and its fiberwise
// product at a point of C:
//   sqrt(A + B + C) / sqrt(A + B),
//   A = |a x^{a-1}|^2, B = |2b v^{b-1}|^2, C = |2b(b-1) u v^{b-2}|^2.
// Throws OffSurface if x^a != 2b u v^{b-1} within surface_tol (relative).
double tangent_ratio_ick(const UVPoint& p, const BrieskornPair& ab, double surface_tol = 1e-8);

struct ModelDistortionReport {
    double max_ratio = 1.0;   // maximal sampled local distortion, symmetrized
    double bound = 1.0;       // 1 + delta^2 * G(delta)
    int n_samples = 0;
    double delta = 0.0;
};

// Polynomial tail bound G(delta) = sum_{odd j>=3} 2 C(b,j) delta^{j-3}, the
// normalized maximum of |g| on |u| <= delta |v| (g from x^a = 2buv^{b-1} + u^3 g).
double residual_poly_bound(int b, double delta);

// Samples the full tube surface C'_1 at |v| ~ 1, projects each sample in the
// x-direction onto the model surface C (nearest a-th root), and estimates the
// local distortion of that projection from symmetric difference quotients over
// pairs at separation ~1e-4 |v|. Reports the max ratio next to 1 + delta^2 G(delta).
ModelDistortionReport model_vs_full_distortion(const BrieskornPair& ab, double delta, int n,
                                               std::uint64_t seed);

}  // namespace germlab
