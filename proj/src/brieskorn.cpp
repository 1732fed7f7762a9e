#include "germlab/brieskorn.hpp"

#include <algorithm>
#include <cmath>

#include "germlab/errors.hpp"
#include "germlab/fit.hpp"
#include "germlab/parallel.hpp"
#include "germlab/rng.hpp"

namespace germlab {

BrieskornPair::BrieskornPair(int a_, int b_) : a(a_), b(b_) {
    if (a < 2) throw ValidationError("brieskorn: a >= 2 required");
    if (b <= a) throw ValidationError("brieskorn: a < b required");
}

RegionLabel classify_margin(double lhs, double rhs) {
    const double margin = lhs - rhs;
    const double tol = 1e-12 * (1.0 + std::abs(lhs) + std::abs(rhs));
    if (std::abs(margin) <= tol) return {Zone::Boundary, margin};
    return {margin > 0.0 ? Zone::Zone0 : Zone::Zone1, margin};
}

RegionLabel v_region(const ComplexPoint3& p, const BrieskornPair& ab) {
    const double lhs = pow_int(std::norm(p.x), ab.a - 1);
    const double rhs = pow_int(std::norm(p.y), ab.b - 1) + pow_int(std::norm(p.z), ab.b - 1);
    return classify_margin(lhs, rhs);
}

RegionLabel w_region(cplx y, cplx z, const BrieskornPair& ab) {
    const cplx diff = pow_int(y, ab.b) - pow_int(z, ab.b);
    const double lhs = std::pow(std::abs(diff), 2.0 - 2.0 / ab.a);
    const double rhs = pow_int(std::norm(y), ab.b - 1) + pow_int(std::norm(z), ab.b - 1);
    return classify_margin(lhs, rhs);
}

double branch_distance(cplx y, cplx z, int b) {
    if (b < 1) throw ValidationError("branch_distance: b >= 1 required");
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < b; ++j) {
        const double t = 2.0 * M_PI * j / b;
        const cplx omega{std::cos(t), std::sin(t)};
        best = std::min(best, std::abs(z - omega * y));
    }
    return best / std::sqrt(2.0);
}

RegionLabel c_region(const ComplexPoint3& p, const BrieskornPair& ab, double delta) {
    if (delta <= 0.0) throw ValidationError("c_region: delta must be positive");
    const double lhs = branch_distance(p.y, p.z, ab.b);
    const double rhs = delta * std::sqrt(std::norm(p.y) + std::norm(p.z));
    return classify_margin(lhs, rhs);
}

double tube_theory_exponent(const BrieskornPair& ab) {
    return static_cast<double>(ab.b - 1) / (ab.a - 1);
}

double tube_theory_prefactor(const BrieskornPair& ab) {
    return std::sqrt(2.0) / (std::pow(2.0, (ab.a - 2.0) / (2.0 * ab.a - 2.0)) * ab.b);
}

double disk_radius(double r, const BrieskornPair& ab) {
    if (r <= 0.0) throw ValidationError("disk_radius: r must be positive");
    return tube_theory_prefactor(ab) * std::pow(r, tube_theory_exponent(ab));
}

double v0_distortion_bound(const BrieskornPair& ab) {
    const double q = static_cast<double>(ab.b) / ab.a;
    return std::sqrt(1.0 + q * q);
}

double projection_distortion_at(const ComplexPoint3& p, const BrieskornPair& ab, double x_tol) {
    if (std::abs(p.x) < x_tol) throw OnBranchLocus("projection_distortion_at: x = 0");
    const double ax = ab.a * std::abs(pow_int(p.x, ab.a - 1));
    if (ax == 0.0) throw OnBranchLocus("projection_distortion_at: x^{a-1} underflow");
    const double num2 = ax * ax + ab.b * ab.b * (pow_int(std::norm(p.y), ab.b - 1) +
                                                 pow_int(std::norm(p.z), ab.b - 1));
    return std::sqrt(num2) / ax;
}

namespace {

// LHS - RHS of the thin-zone boundary equality along the transverse section
// (v(1-xi), v(1+xi)) of the line y = z, with xi = s*e^{i phi} and v = r real.
// Negative inside the tube (W1 side), positive outside.
double tube_boundary_gap(const BrieskornPair& ab, double r, double s, cplx phase) {
    const cplx xi = s * phase;
    const cplx one{1.0, 0.0};
    const cplx diff = pow_int(one - xi, ab.b) - pow_int(one + xi, ab.b);
    const double lhs = std::pow(std::abs(pow_int(cplx{r, 0.0}, ab.b) * diff), 2.0 - 2.0 / ab.a);
    const double rhs = pow_int(r * r * std::norm(one - xi), ab.b - 1) +
                       pow_int(r * r * std::norm(one + xi), ab.b - 1);
    return lhs - rhs;
}

}  // namespace

TubeFit measure_tube_exponent(const BrieskornPair& ab, const std::vector<double>& radii, int n,
                              std::uint64_t seed, int threads) {
    if (radii.size() < 4) throw ValidationError("measure_tube_exponent: need >= 4 radii");
    for (size_t i = 0; i + 1 < radii.size(); ++i)
        if (radii[i] <= radii[i + 1])
            throw ValidationError("measure_tube_exponent: radii must be strictly decreasing");
    if (n <= 0) throw ValidationError("measure_tube_exponent: n must be positive");

    TubeFit fit;
    fit.samples.resize(radii.size());
    fit.theory_exponent = tube_theory_exponent(ab);
    fit.theory_prefactor = tube_theory_prefactor(ab);

    run_batches(static_cast<int>(radii.size()), threads, [&](int idx) {
        RngStream rng(seed, static_cast<std::uint64_t>(idx));
        const double r = radii[static_cast<size_t>(idx)];
        double best = 0.0;
        int valid = 0;
        for (int i = 0; i < n; ++i) {
            const cplx phase = rng.unit_phase();
            // bracket the boundary crossing in s, expanding from inside the tube
            double s_lo = 1e-9, s_hi = 0.0;
            for (double s = 1e-9; s < 0.9; s *= 2.0) {
                if (tube_boundary_gap(ab, r, s, phase) > 0.0) {
                    s_hi = s;
                    break;
                }
                s_lo = s;
            }
            if (s_hi == 0.0) continue;  // crossing not bracketed before leaving the chart
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (s_lo + s_hi);
                if (tube_boundary_gap(ab, r, mid, phase) > 0.0)
                    s_hi = mid;
                else
                    s_lo = mid;
            }
            const double s_star = 0.5 * (s_lo + s_hi);
            best = std::max(best, std::sqrt(2.0) * r * s_star);
            ++valid;
        }
        fit.samples[static_cast<size_t>(idx)] = {r, best, valid};
    });

    std::vector<std::pair<double, double>> series;
    for (const auto& s : fit.samples)
        if (s.n_valid > 0 && s.radius > 0.0) series.emplace_back(s.r, s.radius);
    if (series.size() < 3) throw DegenerateFit("measure_tube_exponent: fewer than 3 valid radii");
    const PowerLawFit pl = fit_loglog(series);
    fit.exponent = pl.slope;
    fit.prefactor = pl.prefactor;
    fit.r2 = pl.r2;
    return fit;
}

}  // namespace germlab
