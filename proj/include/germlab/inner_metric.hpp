#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "germlab/complex_point.hpp"
#include "germlab/fit.hpp"
#include "germlab/sampling.hpp"

namespace germlab {

// Weighted neighbor graph approximating the inner (length) metric of a
// sampled variety. An edge (i,j) is admitted when |p_i - p_j| <= h and the
// segment midpoint Newton-projects back onto V with displacement at most
// shortcut_tol; the displacement gate is what separates inner from outer
// distances (ambient chords that tunnel between sheets are rejected).
struct NeighborGraph {
    std::vector<std::array<double, 6>> pts;
    std::vector<int> offsets;                   // CSR
    std::vector<std::pair<int, double>> edges;  // (neighbor, weight)
    double h = 0.0;
    double shortcut_tol = 0.0;
    int n_components = 0;
    std::vector<int> component;

    int degree(int i) const { return offsets[static_cast<size_t>(i) + 1] - offsets[static_cast<size_t>(i)]; }
};

NeighborGraph build_graph(const SampleCloud& cloud, double h, double shortcut_tol,
                          int threads = 1);

// Median nearest-neighbor distance over up to `probes` evenly spread points;
// the connection radius default is a multiple of this.
double estimate_nn_spacing(const std::vector<ComplexPoint3>& pts, int probes = 200);

// Dijkstra distances from a source set; unreachable vertices get +inf.
std::vector<double> distances_from(const NeighborGraph& g, const std::vector<int>& sources);

// Shortest-path length between vertices; throws Unreachable.
double inner_distance(const NeighborGraph& g, int i, int j);

// min over the locus of inner_distance(g, i, .) via one multi-source sweep.
double distance_to_locus(const NeighborGraph& g, int i, const std::vector<int>& locus);

// Least-squares slope of log(value) against log(eps).
inline PowerLawFit scaling_exponent(const std::vector<std::pair<double, double>>& series) {
    return fit_loglog(series);
}

struct ConicalCheckOptions {
    int n = 6000;              // cloud size per scale
    std::uint64_t seed = 1;
    double h_factor = 6.0;     // connection radius = h_factor * nn spacing
    double shortcut_frac = 0.05;  // shortcut_tol = shortcut_frac * h
    double annulus_lo = 0.35;  // annulus window relative to the pair radius
    double annulus_hi = 1.30;
    int threads = 1;
};

struct ConicalCheckResult {
    std::vector<double> scales;
    std::vector<double> distances;   // graph inner distance at each scale
    std::vector<double> deviations;  // |d_s / ((s/s0) d_0) - 1|
    double max_deviation = 0.0;
};

// In a metric cone, d(eps*p, eps*q) = eps * d(p, q). For each scale the pair
// is rescaled, Newton-projected back onto V, and measured through a fresh
// annulus graph (independent per-scale seeds); the first scale is the
// reference. Clouds at different scales share relative density, so the
// systematic graph detour cancels in the reported ratios.
ConicalCheckResult conical_scaling_check(const HypersurfaceGerm& germ, const ComplexPoint3& p,
                                         const ComplexPoint3& q,
                                         const std::vector<double>& scales,
                                         const ConicalCheckOptions& opts = {});

struct HornSliceOptions {
    int n = 8000;
    std::uint64_t seed = 1;
    double h_factor = 5.0;
    double shortcut_frac = 0.15;  // ring curvature sag needs a wider gate
    double z_window = 0.2;        // sampled band: |z - z0| <= z_window * z0
    int threads = 1;
};

// Same scaling diagnostic for the real beta-horn (x^2+y^2)^q = z^{2p}, z >= 0,
// measured between the antipodal points of the ring at height z0. The ring
// circumference shrinks like eps^beta while a cone would shrink linearly, so
// for beta > 1 the deviation blows up across a decade of scales.
ConicalCheckResult horn_conical_deviation(int p, int q, double z0,
                                          const std::vector<double>& scales,
                                          const HornSliceOptions& opts = {});

}  // namespace germlab
