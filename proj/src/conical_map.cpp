#include "germlab/conical_map.hpp"

#include <algorithm>
#include <cmath>

#include "germlab/errors.hpp"
#include "germlab/rng.hpp"

namespace germlab {

std::pair<cplx, cplx> to_uv(cplx y, cplx z) { return {0.5 * (z - y), 0.5 * (z + y)}; }

std::pair<cplx, cplx> from_uv(cplx u, cplx v) { return {v - u, v + u}; }

std::pair<cplx, cplx> map_F(const UVPoint& p) {
    const double rx = std::abs(p.x);
    const double ru = std::abs(p.u);
    if (rx == 0.0) {
        if (ru != 0.0)
            throw UndefinedArgument("map_F: arg x undefined at x = 0 with u != 0");
        return {p.v, cplx{0.0, 0.0}};
    }
    const cplx phase = p.x / rx;
    return {p.v, phase * std::sqrt(rx * rx + ru * ru)};
}

std::vector<cplx> model_surface_solve(cplx u, cplx v, const BrieskornPair& ab) {
    const cplx w = 2.0 * static_cast<double>(ab.b) * u * pow_int(v, ab.b - 1);
    std::vector<cplx> roots(static_cast<size_t>(ab.a));
    const double r = std::pow(std::abs(w), 1.0 / ab.a);
    if (r == 0.0) {
        std::fill(roots.begin(), roots.end(), cplx{0.0, 0.0});
        return roots;
    }
    const double base_arg = std::arg(w) / ab.a;
    for (int k = 0; k < ab.a; ++k) {
        const double t = base_arg + 2.0 * M_PI * k / ab.a;
        roots[static_cast<size_t>(k)] = r * cplx{std::cos(t), std::sin(t)};
    }
    std::sort(roots.begin(), roots.end(),
              [](const cplx& l, const cplx& rr) { return std::arg(l) < std::arg(rr); });
    return roots;
}

namespace {

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

cplx nearest_root(const std::vector<cplx>& roots, cplx to) {
    cplx best = roots.front();
    double bd = std::abs(best - to);
    for (const cplx& r : roots) {
        const double d = std::abs(r - to);
        if (d < bd || (d == bd && std::arg(r) < std::arg(best))) {
            bd = d;
            best = r;
        }
    }
    return best;
}

std::vector<cplx> full_surface_solve(cplx u, cplx v, const BrieskornPair& ab) {
    const cplx w = pow_int(v + u, ab.b) - pow_int(v - u, ab.b);
    std::vector<cplx> roots(static_cast<size_t>(ab.a));
    const double r = std::pow(std::abs(w), 1.0 / ab.a);
    if (r == 0.0) {
        std::fill(roots.begin(), roots.end(), cplx{0.0, 0.0});
        return roots;
    }
    const double base_arg = std::arg(w) / ab.a;
    for (int k = 0; k < ab.a; ++k) {
        const double t = base_arg + 2.0 * M_PI * k / ab.a;
        roots[static_cast<size_t>(k)] = r * cplx{std::cos(t), std::sin(t)};
    }
    return roots;
}

}  // namespace

cplx residual_term(cplx u, cplx v, int b) {
    if (b < 2) throw ValidationError("residual_term: b >= 2 required");
    cplx acc{0.0, 0.0};
    for (int j = 3; j <= b; j += 2) {
        acc += 2.0 * binomial(b, j) * pow_int(u, j) * pow_int(v, b - j);
    }
    return acc;
}

cplx map_f_on_SD(cplx x, cplx D, int a) {
    const double rx = std::abs(x);
    if (rx == 0.0) return {0.0, 0.0};
    const cplx phase = x / rx;
    const double ru = std::abs(D) * pow_int(rx, a);
    return phase * std::sqrt(rx * rx + ru * ru);
}

PolarMetricCoeffs metric_coeffs_graph(double r_x, double absD, int a) {
    if (r_x <= 0.0) throw ValidationError("metric_coeffs_graph: r_x > 0 required");
    const double t = absD * absD * pow_int(r_x, 2 * a - 2);
    const double factor = 1.0 + a * a * t;
    return {factor, r_x * r_x * factor};
}

PolarMetricCoeffs metric_coeffs_pullback(double r_x, double absD, int a) {
    if (r_x <= 0.0) throw ValidationError("metric_coeffs_pullback: r_x > 0 required");
    const double t = absD * absD * pow_int(r_x, 2 * a - 2);
    const double g_rr = (1.0 + a * t) * (1.0 + a * t) / (1.0 + t);
    const double g_tt = r_x * r_x * (1.0 + t);
    return {g_rr, g_tt};
}

DistortionRatios distortion_ratios(double t, int a) {
    if (t < 0.0 || a < 1) throw ValidationError("distortion_ratios: t >= 0, a >= 1 required");
    const double a2 = static_cast<double>(a) * a;
    DistortionRatios r;
    r.rho_tt = (1.0 + a2 * t) / (1.0 + t);
    const double d = 1.0 + a * t;
    r.rho_rr = (1.0 + a2 * t) * (1.0 + t) / (d * d);
    return r;
}

double sd_bilip_bound(int a) {
    if (a < 1) throw ValidationError("sd_bilip_bound: a >= 1 required");
    return static_cast<double>(a);
}

double tangent_ratio_ick(const UVPoint& p, const BrieskornPair& ab, double surface_tol) {
    const cplx lhs = pow_int(p.x, ab.a);
    const cplx rhs = 2.0 * static_cast<double>(ab.b) * p.u * pow_int(p.v, ab.b - 1);
    const double scale = std::abs(lhs) + std::abs(rhs);
    if (std::abs(lhs - rhs) > surface_tol * scale && scale > 0.0)
        throw OffSurface("tangent_ratio_ick: point not on the model surface");
    const double A = std::norm(static_cast<double>(ab.a) * pow_int(p.x, ab.a - 1));
    const double B = std::norm(2.0 * static_cast<double>(ab.b) * pow_int(p.v, ab.b - 1));
    const double C =
        std::norm(2.0 * static_cast<double>(ab.b) * (ab.b - 1.0) * p.u * pow_int(p.v, ab.b - 2));
    if (A + B == 0.0) return 1.0;
    return std::sqrt((A + B + C) / (A + B));
}

double residual_poly_bound(int b, double delta) {
    double acc = 0.0;
    for (int j = 3; j <= b; j += 2) acc += 2.0 * binomial(b, j) * std::pow(delta, j - 3);
    return acc;
}

ModelDistortionReport model_vs_full_distortion(const BrieskornPair& ab, double delta, int n,
                                               std::uint64_t seed) {
    if (delta <= 0.0 || delta >= 1.0)
        throw ValidationError("model_vs_full_distortion: delta in (0,1) required");
    if (n <= 0) throw ValidationError("model_vs_full_distortion: n must be positive");

    ModelDistortionReport rep;
    rep.delta = delta;
    rep.bound = 1.0 + delta * delta * residual_poly_bound(ab.b, delta);
    rep.n_samples = n;

    RngStream rng(seed, 0);
    double max_ratio = 1.0;
    for (int i = 0; i < n; ++i) {
        const cplx v = rng.uniform(0.5, 1.0) * rng.unit_phase();
        // keep |u| away from 0 so the chord pairs probe the tube, not its core
        const double frac = delta * (1e-3 + (1.0 - 1e-3) * rng.uniform01());
        const cplx u = frac * std::abs(v) * rng.unit_phase();

        const auto full_roots = full_surface_solve(u, v, ab);
        const cplx x = full_roots[static_cast<size_t>(
            rng.raw() % static_cast<std::uint64_t>(full_roots.size()))];
        const cplx xc = nearest_root(model_surface_solve(u, v, ab), x);

        // symmetric chord at separation ~1e-4 |v| in a random (du,dv) direction
        const double eta = 1e-4 * std::abs(v);
        const cplx du = eta * rng.uniform01() * rng.unit_phase();
        const cplx dv = eta * rng.uniform01() * rng.unit_phase();
        const cplx u2 = u + du, v2 = v + dv;
        if (std::abs(u2) > delta * std::abs(v2)) continue;  // partner left the region

        const cplx x2 = nearest_root(full_surface_solve(u2, v2, ab), x);
        const cplx xc2 = nearest_root(model_surface_solve(u2, v2, ab), xc);

        const double base = std::norm(du) + std::norm(dv);
        const double d_full = std::sqrt(std::norm(x2 - x) + base);
        const double d_model = std::sqrt(std::norm(xc2 - xc) + base);
        if (d_model == 0.0 || d_full == 0.0) continue;
        const double ratio = d_full / d_model;
        max_ratio = std::max({max_ratio, ratio, 1.0 / ratio});
    }
    rep.max_ratio = max_ratio;
    return rep;
}

}  // namespace germlab
