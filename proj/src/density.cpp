#include "germlab/density.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "germlab/errors.hpp"
#include "germlab/parallel.hpp"
#include "germlab/rng.hpp"

namespace germlab {

HornParams::HornParams(int p_, int q_) : p(p_), q(q_) {
    if (p < 1 || q < 1) throw ValidationError("horn: p, q must be positive");
    if (p < q) throw ValidationError("horn: beta = p/q >= 1 required");
}

double horn_area(const HornParams& horn, double eps) {
    if (eps <= 0.0) throw ValidationError("horn_area: eps must be positive");
    const double beta = horn.beta();

    // exact ball cut: z^2 + z^{2 beta} = eps^2
    double lo = 0.0, hi = eps;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid * mid + std::pow(mid, 2.0 * beta) > eps * eps)
            hi = mid;
        else
            lo = mid;
    }
    const double z_max = 0.5 * (lo + hi);

    const auto integrand = [beta](double z) {
        return 2.0 * M_PI * std::pow(z, beta) *
               std::sqrt(1.0 + beta * beta * std::pow(z, 2.0 * beta - 2.0));
    };
    double error = 0.0;
    const double area = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, 0.0, z_max, 10, 1e-9, &error);
    return area;
}

GrowthSeries make_series(std::vector<GrowthEntry> entries, int dimension_hint) {
    for (size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i].eps <= entries[i + 1].eps)
            throw ValidationError("growth series: eps must be strictly decreasing");
    for (const auto& e : entries)
        if (e.volume < 0.0) throw ValidationError("growth series: negative volume");
    return {std::move(entries), dimension_hint};
}

std::pair<cplx, cplx> implicit_graph_gradients(const BrieskornPair& ab, cplx y, cplx z, cplx x) {
    if (std::abs(x) == 0.0) throw OnBranchLocus("implicit_graph_gradients: x = 0");
    const cplx denom = static_cast<double>(ab.a) * pow_int(x, ab.a - 1);
    const cplx xy = -static_cast<double>(ab.b) * pow_int(y, ab.b - 1) / denom;
    const cplx xz = static_cast<double>(ab.b) * pow_int(z, ab.b - 1) / denom;
    return {xy, xz};
}

double ball4_volume(double eps) { return 0.5 * M_PI * M_PI * eps * eps * eps * eps; }

namespace {

struct BatchAccum {
    double weight_sum = 0.0;
    std::vector<double> sheet_sums;
    int n = 0;
};

// Shared MC driver: samples (y,z) uniform in the 4-ball, asks the callback
// for per-sheet weights at that point, and reduces batches in fixed order.
template <typename SheetFn>
McVolume mc_volume(int sheets, double eps, int n, std::uint64_t seed, int threads, int n_batches,
                   SheetFn&& sheet_weights) {
    if (eps <= 0.0) throw ValidationError("mc volume: eps must be positive");
    if (n <= 0) throw ValidationError("mc volume: n must be positive");
    n_batches = std::min(std::max(1, n_batches), n);

    std::vector<BatchAccum> acc(static_cast<size_t>(n_batches));
    run_batches(n_batches, threads, [&](int b) {
        RngStream rng(seed, static_cast<std::uint64_t>(b));
        auto& slot = acc[static_cast<size_t>(b)];
        slot.sheet_sums.assign(static_cast<size_t>(sheets), 0.0);
        const int lo = static_cast<int>(static_cast<long long>(n) * b / n_batches);
        const int hi = static_cast<int>(static_cast<long long>(n) * (b + 1) / n_batches);
        slot.n = hi - lo;
        // Kahan compensation per batch keeps the fixed-order reduction exact
        double comp = 0.0;
        for (int i = lo; i < hi; ++i) {
            const auto dir = rng.unit_direction4();
            const double r = eps * std::pow(rng.uniform01(), 0.25);
            const cplx y = r * dir[0];
            const cplx z = r * dir[1];
            for (int s = 0; s < sheets; ++s) {
                const double w = sheet_weights(y, z, s, eps);
                slot.sheet_sums[static_cast<size_t>(s)] += w;
                const double t = slot.weight_sum + (w - comp);
                comp = (t - slot.weight_sum) - (w - comp);
                slot.weight_sum = t;
            }
        }
    });

    const double v4 = ball4_volume(eps);
    McVolume out;
    out.sheet_volumes.assign(static_cast<size_t>(sheets), 0.0);
    double total = 0.0;
    std::vector<double> means;
    means.reserve(static_cast<size_t>(n_batches));
    for (const auto& slot : acc) {
        total += slot.weight_sum;
        means.push_back(slot.n > 0 ? slot.weight_sum / slot.n : 0.0);
        for (int s = 0; s < sheets; ++s)
            out.sheet_volumes[static_cast<size_t>(s)] += slot.sheet_sums[static_cast<size_t>(s)];
    }
    out.volume = v4 * total / n;
    for (auto& sv : out.sheet_volumes) sv = v4 * sv / n;

    double mean = 0.0;
    for (double m : means) mean += m;
    mean /= means.size();
    double var = 0.0;
    for (double m : means) var += (m - mean) * (m - mean);
    var /= (means.size() > 1 ? means.size() - 1 : 1);
    out.stderr_ = v4 * std::sqrt(var / means.size());
    return out;
}

}  // namespace

McVolume brieskorn_volume(const BrieskornPair& ab, double eps, int n, std::uint64_t seed,
                          int threads, int n_batches) {
    const int a = ab.a, b = ab.b;
    return mc_volume(a, eps, n, seed, threads, n_batches,
                     [a, b](cplx y, cplx z, int sheet, double eps_) -> double {
                         const cplx w = pow_int(z, b) - pow_int(y, b);  // x^a = w
                         const double aw = std::abs(w);
                         if (aw == 0.0) return 0.0;  // branch locus: measure zero
                         const double rx = std::pow(aw, 1.0 / a);
                         const double base = std::arg(w) / a + 2.0 * M_PI * sheet / a;
                         const cplx x = rx * cplx{std::cos(base), std::sin(base)};
                         if (std::norm(x) + std::norm(y) + std::norm(z) > eps_ * eps_) return 0.0;
                         const auto [xy, xz] = implicit_graph_gradients({a, b}, y, z, x);
                         return 1.0 + std::norm(xy) + std::norm(xz);
                     });
}

McVolume plane_volume_mc(double eps, int n, std::uint64_t seed, int threads, int n_batches) {
    return mc_volume(1, eps, n, seed, threads, n_batches,
                     [](cplx, cplx, int, double) -> double { return 1.0; });
}

RDensity r_density(const GrowthSeries& series, double r, double slope_tol) {
    if (series.entries.empty()) throw ValidationError("r_density: empty series");
    std::vector<std::pair<double, double>> xy;
    for (const auto& e : series.entries) xy.emplace_back(e.eps, e.volume);
    const PowerLawFit fit = fit_loglog(xy);

    RDensity out;
    out.slope = fit.slope;
    if (std::abs(fit.slope - r) <= slope_tol) {
        out.estimate = fit.prefactor;
    } else if (fit.slope > r + slope_tol) {
        out.vanishing = true;
        out.estimate = 0.0;
    } else {
        out.diverging = true;
        out.estimate = std::numeric_limits<double>::infinity();
    }
    return out;
}

PowerLawFit volume_growth_number(const GrowthSeries& series) {
    if (series.entries.size() < 4)
        throw ValidationError("volume_growth_number: need >= 4 entries");
    const double hi = series.entries.front().eps;
    const double lo = series.entries.back().eps;
    if (hi / lo < 10.0)
        throw ValidationError("volume_growth_number: series must span >= 1 decade");
    std::vector<std::pair<double, double>> xy;
    for (const auto& e : series.entries) xy.emplace_back(e.eps, e.volume);
    return fit_loglog(xy);
}

}  // namespace germlab
