#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germlab/complex_point.hpp"
#include "germlab/fit.hpp"
#include "germlab/germ.hpp"
#include "germlab/inner_metric.hpp"

namespace germlab {

// Polynomial map C -> C^3; coeffs[c][k] multiplies s^k in component c.
struct ParamCurve {
    std::array<std::vector<cplx>, 3> coeffs;

    ComplexPoint3 eval(cplx s) const;
    ComplexPoint3 deriv(cplx s) const;

    // text format: one `comp re im k` line per term, comp in {x,y,z}
    static ParamCurve parse(const std::string& text);
    static ParamCurve axis_line(int component);  // s * e_component
};

struct CurveDistanceOptions {
    int phase_starts = 8;
    std::vector<double> radius_factors = {0.25, 0.5, 1.0, 2.0, 4.0};
    int max_iter = 40;
    double step_tol = 1e-13;
};

struct CurveDistanceResult {
    double distance = 0.0;
    cplx s{};               // minimizing parameter
    ComplexPoint3 foot{};   // gamma(s)
};

// min_s |p - gamma(s)| by damped Gauss-Newton from a multi-start grid of
// |s| and phases around scale_hint. Throws NoConvergence if no start settles.
CurveDistanceResult curve_distance(const ComplexPoint3& p, const ParamCurve& curve,
                                   double scale_hint, const CurveDistanceOptions& opts = {});

// The A_k germ z^{k+1} = x y with the axis curves L1 = {x=z=0} (the y-axis)
// and L2 = {y=z=0} (the x-axis). The swap sigma(x,y,z) = (y,x,z) is an ambient
// isometry of V exchanging L1 and L2; the conflict set Y = {d(.,L1) = d(.,L2)}
// therefore splits V into two isometric halves.
struct AkParams {
    int k = 2;
    explicit AkParams(int k_);

    HypersurfaceGerm germ() const { return HypersurfaceGerm::ak(k); }
    ParamCurve l1() const { return ParamCurve::axis_line(1); }
    ParamCurve l2() const { return ParamCurve::axis_line(0); }

    // exact ambient distances to the axes (closed form; the generic
    // minimizer is validated against these in the tests)
    static double d1_exact(const ComplexPoint3& p);  // to the y-axis
    static double d2_exact(const ComplexPoint3& p);  // to the x-axis
};

enum class MetricMode { Inner, Outer };

inline const char* to_string(MetricMode m) { return m == MetricMode::Inner ? "inner" : "outer"; }

// Inner-mode inputs: a graph covering the annulus of the query point plus
// vertex sets marking the sampled loci.
struct InnerResources {
    const NeighborGraph* graph = nullptr;
    const SampleCloud* cloud = nullptr;
    std::vector<int> locus1;
    std::vector<int> locus2;
};

struct InnerResourcesData {
    SampleCloud cloud;
    NeighborGraph graph;
    std::vector<int> locus1;
    std::vector<int> locus2;

    InnerResources view() const { return {&graph, &cloud, locus1, locus2}; }
};

// Builds an annulus cloud on V(A_k) with both axes sampled as locus vertices.
InnerResourcesData build_ak_inner_resources(const AkParams& ak, double r_lo, double r_hi, int n,
                                            int locus_n, std::uint64_t seed, double h_factor = 6.0,
                                            int threads = 1);

// (d(p,L1), d(p,L2)); outer mode minimizes along the parametrized curves,
// inner mode runs multi-source sweeps from the locus vertices to the vertex
// nearest p.
std::pair<double, double> ak_axis_distances(const AkParams& ak, const ComplexPoint3& p,
                                            MetricMode mode,
                                            const InnerResources* inner = nullptr);

struct ConflictSample {
    ComplexPoint3 point{};
    double d1 = 0.0;
    double d2 = 0.0;
    MetricMode mode = MetricMode::Outer;
    double residual = 0.0;  // |d1 - d2|
};

struct LocateOptions {
    // stop when |d1-d2| <= tol * max(d1,d2)
    double tol = 1e-6;
    int max_bisections = 80;
    MetricMode mode = MetricMode::Outer;
    const InnerResources* inner = nullptr;
};

// Walks the straight segment from p to sigma(p), Newton-projecting each trial
// back onto V, and bisects the sign of d1 - d2 (the endpoints have opposite
// signs because sigma swaps the distances). Throws NoSignChange if the
// endpoint signs agree.
ConflictSample locate_conflict_point(const AkParams& ak, const ComplexPoint3& start,
                                     const LocateOptions& opts = {});

// r_sym = ||x|-|y|| / max(|x|,|y|),  r_power = ||x|^2 - |z|^{k+1}| / |z|^{k+1}.
std::pair<double, double> conflict_invariant_residuals(const ConflictSample& sample, int k);

// Angle between p/|p| and the z-axis plane in the ambient R^6; the max over
// the samples estimates the aperture of Y at their radius.
double tangent_cone_angle(const std::vector<ComplexPoint3>& samples);
std::vector<std::pair<double, double>> tangent_angle_series(const std::vector<ComplexPoint3>& samples);

struct PatchGridOptions {
    int n_alpha = 12;  // grid in arg x
    int n_phi = 12;    // grid in arg z
    int n_h = 12;      // levels in |z|
    std::uint64_t seed = 0;  // jitters the angular grid offsets
    int threads = 1;
};

// 3-volume of a parametric surface patch (alpha, phi) in T^2, h in (0, h_max]:
// the grid cells are split into six simplices each (plus an apex cone below
// the first level) and Gram-determinant volumes are summed.
double patch_volume(const std::function<std::array<double, 6>(double, double, double)>& node,
                    double h_max, const PatchGridOptions& opts);

struct DensitySlopeResult {
    std::vector<std::pair<double, double>> volumes;  // (eps, vol3)
    double slope = 0.0;
    double r2 = 0.0;
};

// Volume growth of the conflict set Y of A_k. Y is a graph over
// (arg x, arg z, |z|) — x = m h^{(k+1)/2} e^{i alpha}, z = h e^{i phi},
// y = z^{k+1}/x — and each grid node is located by bisecting d1 - d2 in the
// fiber coordinate m. Slope > 3 certifies vanishing 3-density numerically.
DensitySlopeResult conflict_density_slope(const AkParams& ak, const std::vector<double>& eps_list,
                                          const PatchGridOptions& opts = {});

// Controls for the same estimator: an exact metric cone patch with volume
// proportional to eps^3, and a horn-like patch with volume ~ eps^3.5.
DensitySlopeResult synthetic_cone_slope(const std::vector<double>& eps_list, double s,
                                        const PatchGridOptions& opts = {});
DensitySlopeResult synthetic_power_slope(const std::vector<double>& eps_list, double s,
                                         double radius_exponent,
                                         const PatchGridOptions& opts = {});

struct HalfDensityResult {
    GrowthSeries series;                  // total 4-volume per eps
    std::vector<double> share1_per_eps;   // side with d1 < d2
    std::vector<double> share_stderr;     // batch stderr of share1
    double share1 = 0.0;                  // mean over eps
    double share2 = 0.0;
    PowerLawFit growth;
};

// Monte Carlo 4-volume of V(A_k) in B_eps, split by the sign of d1 - d2.
// Sampling is importance-weighted in the radii |x|, |y| (density r^{gamma-1},
// gamma = 2/(k+1)) so the graph-density singularities along the axes keep
// finite variance; shares approach 1/2 by the swap symmetry.
HalfDensityResult half_density_check(const AkParams& ak, const std::vector<double>& eps_list,
                                     int n, std::uint64_t seed, int threads = 1);

#include "germlab/density.hpp"

}  // namespace germlab
