#include "germlab/sampling.hpp"

#include <atomic>
#include <cmath>
#include <sstream>

#include "germlab/errors.hpp"
#include "germlab/io.hpp"
#include "germlab/newton.hpp"
#include "germlab/parallel.hpp"
#include "germlab/rng.hpp"

namespace germlab {

namespace {

struct Accepted {
    ComplexPoint3 p;
    double rf;
    double rs;
};

// Alternates Newton projection onto V with radial rescaling to |p| = radius
// until both residuals hold. The two constraint sets are transverse at the
// scales we work at, so the alternation contracts quickly.
bool settle_on_link(const HypersurfaceGerm& f, ComplexPoint3 start, double radius, double f_tol,
                    double sphere_tol, int max_rounds, Accepted& out) {
    ComplexPoint3 p = start;
    for (int round = 0; round < max_rounds; ++round) {
        NewtonResult nr;
        try {
            nr = newton_project(f, p, f_tol);
        } catch (const Error&) {
            return false;
        }
        p = nr.point;
        const double r = p.norm();
        if (r < radius * 1e-6) return false;  // collapsed toward the singular point
        const double rf = std::abs(f.eval(p));
        const double rs = std::abs(r - radius);
        if (rf <= f_tol && rs <= sphere_tol) {
            out = {p, rf, rs};
            return true;
        }
        p = (radius / r) * p;
    }
    return false;
}

SampleCloud sample_radii(const HypersurfaceGerm& f, double r_lo, double r_hi, int n,
                         std::uint64_t seed, const SamplingOptions& opts) {
    if (r_lo <= 0.0 || r_hi < r_lo) throw ValidationError("sampling: bad radius window");
    if (n < 0) throw ValidationError("sampling: n must be >= 0");

    SampleCloud cloud;
    cloud.germ = std::make_shared<HypersurfaceGerm>(f);
    cloud.r_min = r_lo;
    cloud.r_max = r_hi;
    cloud.seed = seed;
    if (n == 0) return cloud;

    const int bs = std::max(1, opts.batch_size);
    const int n_batches = (n + bs - 1) / bs;
    std::vector<std::vector<Accepted>> slots(static_cast<size_t>(n_batches));
    std::atomic<bool> stalled{false};

    run_batches(n_batches, opts.threads, [&](int b) {
        RngStream rng(seed, static_cast<std::uint64_t>(b));
        const int want = std::min(bs, n - b * bs);
        auto& slot = slots[static_cast<size_t>(b)];
        slot.reserve(static_cast<size_t>(want));
        int attempts = 0, accepts = 0;
        while (static_cast<int>(slot.size()) < want) {
            ++attempts;
            const double radius = (r_lo == r_hi) ? r_lo : rng.uniform(r_lo, r_hi);
            const ComplexPoint3 dir = rng.unit_direction6();
            Accepted acc;
            if (settle_on_link(f, radius * dir, radius, radius * 1e-10, radius * 1e-6,
                               opts.max_rounds, acc)) {
                ++accepts;
                slot.push_back(acc);
            }
            if (attempts >= opts.stall_window) {
                if (static_cast<double>(accepts) < opts.stall_floor * attempts) {
                    stalled.store(true);
                    return;
                }
                attempts = 0;
                accepts = 0;
            }
        }
    });

    if (stalled.load()) throw SamplingStalled("sample_link: accept rate below floor");

    for (const auto& slot : slots) {
        for (const auto& a : slot) {
            cloud.points.push_back(a.p);
            cloud.residual_f.push_back(a.rf);
            cloud.residual_sphere.push_back(a.rs);
        }
    }
    return cloud;
}

}  // namespace

SampleCloud sample_link(const HypersurfaceGerm& f, double eps, int n, std::uint64_t seed,
                        const SamplingOptions& opts) {
    if (eps <= 0.0) throw ValidationError("sample_link: eps must be positive");
    return sample_radii(f, eps, eps, n, seed, opts);
}

SampleCloud sample_annulus(const HypersurfaceGerm& f, double r_lo, double r_hi, int n,
                           std::uint64_t seed, const SamplingOptions& opts) {
    return sample_radii(f, r_lo, r_hi, n, seed, opts);
}

std::string cloud_to_csv(const SampleCloud& cloud) {
    std::ostringstream out;
    out << "re_x,im_x,re_y,im_y,re_z,im_z,residual_f,residual_sphere\n";
    for (size_t i = 0; i < cloud.points.size(); ++i) {
        const auto& p = cloud.points[i];
        out << fmt_double(p.x.real()) << ',' << fmt_double(p.x.imag()) << ','
            << fmt_double(p.y.real()) << ',' << fmt_double(p.y.imag()) << ','
            << fmt_double(p.z.real()) << ',' << fmt_double(p.z.imag()) << ','
            << fmt_double(cloud.residual_f[i]) << ',' << fmt_double(cloud.residual_sphere[i])
            << '\n';
    }
    return out.str();
}

}  // namespace germlab
