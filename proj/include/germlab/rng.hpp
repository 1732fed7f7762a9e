#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "germlab/complex_point.hpp"

namespace germlab {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seeded random stream with hand-rolled variate generation. The standard
// distributions are implementation-defined, so everything downstream of the
// raw engine is generated here to keep outputs byte-stable.
//
// Parallel use: stream (seed, b) for batch b; reductions concatenate in batch
// order, so results are independent of the worker count.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t s = seed ^ (0x6a09e667f3bcc909ULL + stream * 0x3c6ef372fe94f82bULL);
        // decorrelate nearby (seed, stream) pairs
        std::uint64_t seq[4];
        for (auto& v : seq) v = splitmix64(s);
        std::seed_seq sseq{seq[0], seq[1], seq[2], seq[3]};
        eng_.seed(sseq);
    }

    // uniform in [0,1) with 53 random bits
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // standard normal via Marsaglia polar; the spare is cached
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    cplx unit_phase() {
        const double t = 2.0 * M_PI * uniform01();
        return {std::cos(t), std::sin(t)};
    }

    // uniform direction on the unit sphere of R^6 = C^3
    ComplexPoint3 unit_direction6() {
        for (;;) {
            std::array<double, 6> g;
            for (auto& v : g) v = normal();
            double n2 = 0.0;
            for (double v : g) n2 += v * v;
            if (n2 > 1e-12) {
                const double inv = 1.0 / std::sqrt(n2);
                return {cplx{g[0] * inv, g[1] * inv}, cplx{g[2] * inv, g[3] * inv},
                        cplx{g[4] * inv, g[5] * inv}};
            }
        }
    }

    // uniform direction on the unit sphere of R^4 = C^2
    std::array<cplx, 2> unit_direction4() {
        for (;;) {
            std::array<double, 4> g;
            for (auto& v : g) v = normal();
            double n2 = 0.0;
            for (double v : g) n2 += v * v;
            if (n2 > 1e-12) {
                const double inv = 1.0 / std::sqrt(n2);
                return {cplx{g[0] * inv, g[1] * inv}, cplx{g[2] * inv, g[3] * inv}};
            }
        }
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace germlab
