#pragma once

#include <cstdint>
#include <vector>

#include "germlab/complex_point.hpp"
#include "germlab/germ.hpp"

namespace germlab {

// Parameters (a,b) of the surface x^a + y^b - z^b = 0 with a < b. The degree-a
// projection to the (y,z)-plane is a cyclic branched cover, branched along the
// b lines z = omega*y with omega^b = 1; most of the geometry below quantifies
// how that cover distorts lengths and how thin the branch tubes are.
struct BrieskornPair {
    int a = 2;
    int b = 3;

    BrieskornPair(int a_, int b_);
    HypersurfaceGerm germ() const { return HypersurfaceGerm::brieskorn(a, b); }
};

enum class Zone { Zone0, Zone1, Boundary };

// Membership result of a two-sided inequality test. margin = LHS - RHS; the
// label is Boundary when |margin| <= 1e-12 * (1 + |LHS| + |RHS|), so the
// classification is scale-free.
struct RegionLabel {
    Zone tag = Zone::Boundary;
    double margin = 0.0;
};

RegionLabel classify_margin(double lhs, double rhs);

// Zone0 iff |x|^{2a-2} >= |y|^{2b-2} + |z|^{2b-2} (the thick zone of the cover).
RegionLabel v_region(const ComplexPoint3& p, const BrieskornPair& ab);

// Image version: Zone0 iff |y^b - z^b|^{2-2/a} >= |y|^{2b-2} + |z|^{2b-2}.
// Agrees with v_region for points on V, where |x^a| = |y^b - z^b|.
RegionLabel w_region(cplx y, cplx z, const BrieskornPair& ab);

// Euclidean distance in C^2 from (y,z) to the nearest branch line z = omega*y,
// omega^b = 1; equals min_omega |z - omega*y| / sqrt(2).
double branch_distance(cplx y, cplx z, int b);

// Conical split: Zone0 (= C0/D0) iff d((y,z),B) >= delta * |(y,z)|.
RegionLabel c_region(const ComplexPoint3& p, const BrieskornPair& ab, double delta);

// Transverse radius law of the branch tube: c * r^{(b-1)/(a-1)} with
// c = sqrt(2) / (2^{(a-2)/(2a-2)} * b).
double disk_radius(double r, const BrieskornPair& ab);
double tube_theory_prefactor(const BrieskornPair& ab);
double tube_theory_exponent(const BrieskornPair& ab);

// Uniform distortion bound sqrt(1 + b^2/a^2) for the cover restricted to V0.
double v0_distortion_bound(const BrieskornPair& ab);

// Pointwise distortion of the projection to the (y,z)-plane:
//   sqrt(a^2 |x^{a-1}|^2 + b^2 (|y^{b-1}|^2 + |z^{b-1}|^2)) / (a |x^{a-1}|).
// Throws OnBranchLocus when |x| < x_tol.
double projection_distortion_at(const ComplexPoint3& p, const BrieskornPair& ab,
                                double x_tol = 1e-300);

struct TubeSample {
    double r = 0.0;        // section parameter along the branch line
    double radius = 0.0;   // measured transverse tube radius
    int n_valid = 0;       // phases for which the boundary crossing was bracketed
};

struct TubeFit {
    std::vector<TubeSample> samples;
    double exponent = 0.0;
    double prefactor = 0.0;
    double r2 = 0.0;
    double theory_exponent = 0.0;
    double theory_prefactor = 0.0;
};

// Empirical tube-radius law around the branch line y = z. For each r in
// `radii` (the section parameter: the transverse 3-sphere y = v = r of the
// proof's coordinates), draws n random phases of the transverse parameter xi,
// solves the boundary equality of the thin zone in |xi| by bisection, and
// records the maximal sqrt(2)*|v*xi| as the tube radius. Then fits
// log(radius) against log(r).
//
// Deterministic: radius index i draws from the stream (seed, i); parallel
// over radii.
TubeFit measure_tube_exponent(const BrieskornPair& ab, const std::vector<double>& radii, int n,
                              std::uint64_t seed, int threads = 1);

}  // namespace germlab
