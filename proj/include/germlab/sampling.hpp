#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "germlab/complex_point.hpp"
#include "germlab/germ.hpp"

namespace germlab {

// Seeded point sample on V near 0, together with its residual diagnostics.
// Points live in the radius annulus [r_min, r_max] ([eps, eps] for a link).
struct SampleCloud {
    std::shared_ptr<const HypersurfaceGerm> germ;
    std::vector<ComplexPoint3> points;
    std::vector<double> residual_f;       // |f(p)|
    std::vector<double> residual_sphere;  // | |p| - target radius |
    double r_min = 0.0;
    double r_max = 0.0;
    std::uint64_t seed = 0;

    size_t size() const { return points.size(); }
};

struct SamplingOptions {
    int threads = 1;
    int batch_size = 256;
    // reject a direction after this many project/rescale rounds
    int max_rounds = 25;
    // SamplingStalled when the accept rate over a trailing window drops below this
    double stall_floor = 0.02;
    int stall_window = 400;
};

// n points on the link of V at radius eps: |f(p)| <= eps*1e-10 and
// ||p|-eps| <= eps*1e-6. Directions are drawn uniformly on the unit sphere,
// Newton-projected onto V, then radially rescaled with re-projection until
// both residual bounds hold. Deterministic for a fixed seed: batch b draws
// from the stream (seed, b) and batches are concatenated in order.
SampleCloud sample_link(const HypersurfaceGerm& f, double eps, int n, std::uint64_t seed,
                        const SamplingOptions& opts = {});

// Same mechanism with per-point target radius drawn uniformly from
// [r_lo, r_hi]; used to cover annuli for the neighbor-graph experiments.
SampleCloud sample_annulus(const HypersurfaceGerm& f, double r_lo, double r_hi, int n,
                           std::uint64_t seed, const SamplingOptions& opts = {});

// CSV with header re_x,im_x,re_y,im_y,re_z,im_z,residual_f,residual_sphere.
std::string cloud_to_csv(const SampleCloud& cloud);

}  // namespace germlab
