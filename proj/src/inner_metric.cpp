#include "germlab/inner_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <unordered_map>

#include "germlab/errors.hpp"
#include "germlab/newton.hpp"
#include "germlab/parallel.hpp"
#include "germlab/rng.hpp"

namespace germlab {

namespace {

inline double dist6(const std::array<double, 6>& a, const std::array<double, 6>& b) {
    double s = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// Spatial hash on the first four coordinates (the (x,y) chart); for the
// surfaces sampled here z is pinned to finitely many sheets over (x,y), so
// four coordinates prune candidate pairs effectively.
struct HashGrid {
    double cell;
    std::unordered_map<std::uint64_t, std::vector<int>> bins;

    static std::uint64_t key(int a, int b, int c, int d) {
        auto u = [](int v) { return static_cast<std::uint64_t>(static_cast<std::uint32_t>(v) & 0xffff); };
        return u(a) | (u(b) << 16) | (u(c) << 32) | (u(d) << 48);
    }

    explicit HashGrid(const std::vector<std::array<double, 6>>& pts, double cell_size)
        : cell(cell_size) {
        for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
            const auto& p = pts[static_cast<size_t>(i)];
            bins[key(static_cast<int>(std::floor(p[0] / cell)),
                     static_cast<int>(std::floor(p[1] / cell)),
                     static_cast<int>(std::floor(p[2] / cell)),
                     static_cast<int>(std::floor(p[3] / cell)))]
                .push_back(i);
        }
    }

    template <typename Fn>
    void for_candidates(const std::array<double, 6>& p, Fn&& fn) const {
        const int ca = static_cast<int>(std::floor(p[0] / cell));
        const int cb = static_cast<int>(std::floor(p[1] / cell));
        const int cc = static_cast<int>(std::floor(p[2] / cell));
        const int cd = static_cast<int>(std::floor(p[3] / cell));
        for (int da = -1; da <= 1; ++da)
            for (int db = -1; db <= 1; ++db)
                for (int dc = -1; dc <= 1; ++dc)
                    for (int dd = -1; dd <= 1; ++dd) {
                        const auto it = bins.find(key(ca + da, cb + db, cc + dc, cd + dd));
                        if (it == bins.end()) continue;
                        for (int j : it->second) fn(j);
                    }
    }
};

}  // namespace

double estimate_nn_spacing(const std::vector<ComplexPoint3>& pts, int probes) {
    const int n = static_cast<int>(pts.size());
    if (n < 2) throw ValidationError("estimate_nn_spacing: need at least 2 points");
    probes = std::min(probes, n);
    std::vector<double> nn;
    nn.reserve(static_cast<size_t>(probes));
    const int stride = std::max(1, n / probes);
    for (int i = 0; i < n; i += stride) {
        double best = std::numeric_limits<double>::infinity();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            best = std::min(best, distance(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)]));
        }
        nn.push_back(best);
    }
    std::sort(nn.begin(), nn.end());
    return nn[nn.size() / 2];
}

NeighborGraph build_graph(const SampleCloud& cloud, double h, double shortcut_tol, int threads) {
    if (h <= 0.0) throw ValidationError("build_graph: h must be positive");
    const int n = static_cast<int>(cloud.points.size());
    NeighborGraph g;
    g.h = h;
    g.shortcut_tol = shortcut_tol;
    g.pts.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) g.pts[static_cast<size_t>(i)] = cloud.points[static_cast<size_t>(i)].as_real6();

    const HashGrid grid(g.pts, h);
    const HypersurfaceGerm& f = *cloud.germ;

    // per-vertex adjacency built independently (j > i), then merged in order
    std::vector<std::vector<std::pair<int, double>>> adj(static_cast<size_t>(n));
    const int n_batches = std::max(1, std::min(n, 64));
    run_batches(n_batches, threads, [&](int batch) {
        for (int i = batch; i < n; i += n_batches) {
            const auto& pi = g.pts[static_cast<size_t>(i)];
            auto& out = adj[static_cast<size_t>(i)];
            grid.for_candidates(pi, [&](int j) {
                if (j <= i) return;
                const double d = dist6(pi, g.pts[static_cast<size_t>(j)]);
                if (d > h || d == 0.0) return;
                const ComplexPoint3 mid = 0.5 * (cloud.points[static_cast<size_t>(i)] +
                                                 cloud.points[static_cast<size_t>(j)]);
                const double f_tol = 1e-10 * std::max(f.term_scale(mid), 1e-300);
                if (!newton_project_within(f, mid, f_tol, shortcut_tol)) return;
                out.emplace_back(j, d);
            });
            std::sort(out.begin(), out.end());
        }
    });

    // symmetrize into CSR
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (const auto& [j, w] : adj[static_cast<size_t>(i)]) {
            ++deg[static_cast<size_t>(i)];
            ++deg[static_cast<size_t>(j)];
        }
    g.offsets.assign(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) g.offsets[static_cast<size_t>(i) + 1] = g.offsets[static_cast<size_t>(i)] + deg[static_cast<size_t>(i)];
    g.edges.resize(static_cast<size_t>(g.offsets.back()));
    std::vector<int> cursor(g.offsets.begin(), g.offsets.end() - 1);
    for (int i = 0; i < n; ++i)
        for (const auto& [j, w] : adj[static_cast<size_t>(i)]) {
            g.edges[static_cast<size_t>(cursor[static_cast<size_t>(i)]++)] = {j, w};
            g.edges[static_cast<size_t>(cursor[static_cast<size_t>(j)]++)] = {i, w};
        }

    // connected components (BFS)
    g.component.assign(static_cast<size_t>(n), -1);
    int comp = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (g.component[static_cast<size_t>(s)] >= 0) continue;
        stack.push_back(s);
        g.component[static_cast<size_t>(s)] = comp;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int e = g.offsets[static_cast<size_t>(v)]; e < g.offsets[static_cast<size_t>(v) + 1]; ++e) {
                const int u = g.edges[static_cast<size_t>(e)].first;
                if (g.component[static_cast<size_t>(u)] < 0) {
                    g.component[static_cast<size_t>(u)] = comp;
                    stack.push_back(u);
                }
            }
        }
        ++comp;
    }
    g.n_components = comp;
    return g;
}

std::vector<double> distances_from(const NeighborGraph& g, const std::vector<int>& sources) {
    const int n = static_cast<int>(g.pts.size());
    std::vector<double> dist(static_cast<size_t>(n), std::numeric_limits<double>::infinity());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (int s : sources) {
        if (s < 0 || s >= n) throw ValidationError("distances_from: source out of range");
        dist[static_cast<size_t>(s)] = 0.0;
        heap.emplace(0.0, s);
    }
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[static_cast<size_t>(v)]) continue;
        for (int e = g.offsets[static_cast<size_t>(v)]; e < g.offsets[static_cast<size_t>(v) + 1]; ++e) {
            const auto& [u, w] = g.edges[static_cast<size_t>(e)];
            const double nd = d + w;
            if (nd < dist[static_cast<size_t>(u)]) {
                dist[static_cast<size_t>(u)] = nd;
                heap.emplace(nd, u);
            }
        }
    }
    return dist;
}

double inner_distance(const NeighborGraph& g, int i, int j) {
    const auto d = distances_from(g, {i});
    const double v = d[static_cast<size_t>(j)];
    if (!std::isfinite(v)) throw Unreachable("inner_distance: vertices not connected");
    return v;
}

double distance_to_locus(const NeighborGraph& g, int i, const std::vector<int>& locus) {
    if (locus.empty()) throw ValidationError("distance_to_locus: empty locus");
    const auto d = distances_from(g, locus);
    const double v = d[static_cast<size_t>(i)];
    if (!std::isfinite(v)) throw Unreachable("distance_to_locus: locus not reachable");
    return v;
}

ConicalCheckResult conical_scaling_check(const HypersurfaceGerm& germ, const ComplexPoint3& p,
                                         const ComplexPoint3& q,
                                         const std::vector<double>& scales,
                                         const ConicalCheckOptions& opts) {
    if (scales.empty()) throw ValidationError("conical_scaling_check: empty scale list");
    ConicalCheckResult res;
    res.scales = scales;

    const double rp = p.norm(), rq = q.norm();
    if (rp == 0.0 || rq == 0.0)
        throw ValidationError("conical_scaling_check: pair must be away from the origin");

    for (size_t s = 0; s < scales.size(); ++s) {
        const double eps = scales[s];
        if (eps <= 0.0) throw ValidationError("conical_scaling_check: scales must be positive");
        const double r_lo = opts.annulus_lo * eps * std::min(rp, rq);
        const double r_hi = opts.annulus_hi * eps * std::max(rp, rq);
        SamplingOptions sopt;
        sopt.threads = opts.threads;
        SampleCloud cloud = sample_annulus(germ, r_lo, r_hi, opts.n,
                                           opts.seed + 1000003ULL * s, sopt);

        auto project_scaled = [&](const ComplexPoint3& base) {
            const ComplexPoint3 target = eps * base;
            const double f_tol = 1e-12 * std::max(germ.term_scale(target), 1e-300);
            return newton_project(germ, target, f_tol).point;
        };
        const ComplexPoint3 ps = project_scaled(p);
        const ComplexPoint3 qs = project_scaled(q);
        cloud.points.push_back(ps);
        cloud.residual_f.push_back(std::abs(germ.eval(ps)));
        cloud.residual_sphere.push_back(0.0);
        cloud.points.push_back(qs);
        cloud.residual_f.push_back(std::abs(germ.eval(qs)));
        cloud.residual_sphere.push_back(0.0);

        const double spacing = estimate_nn_spacing(cloud.points);
        const double h = opts.h_factor * spacing;
        const NeighborGraph g = build_graph(cloud, h, opts.shortcut_frac * h, opts.threads);
        const int ip = static_cast<int>(cloud.points.size()) - 2;
        const int iq = ip + 1;
        if (g.component[static_cast<size_t>(ip)] != g.component[static_cast<size_t>(iq)])
            throw DisconnectedGraph("conical_scaling_check: pair in different components");
        res.distances.push_back(inner_distance(g, ip, iq));
    }

    const double ref_scale = scales[0];
    const double ref_d = res.distances[0];
    for (size_t s = 0; s < scales.size(); ++s) {
        const double expect = (scales[s] / ref_scale) * ref_d;
        res.deviations.push_back(std::abs(res.distances[s] / expect - 1.0));
        res.max_deviation = std::max(res.max_deviation, res.deviations.back());
    }
    return res;
}

ConicalCheckResult horn_conical_deviation(int p, int q, double z0,
                                          const std::vector<double>& scales,
                                          const HornSliceOptions& opts) {
    if (z0 <= 0.0) throw ValidationError("horn_conical_deviation: z0 must be positive");
    if (scales.empty()) throw ValidationError("horn_conical_deviation: empty scale list");
    const double beta = static_cast<double>(p) / q;
    const auto germ = std::make_shared<HypersurfaceGerm>(HypersurfaceGerm::horn(p, q));

    ConicalCheckResult res;
    res.scales = scales;

    for (size_t s = 0; s < scales.size(); ++s) {
        const double eps = scales[s];
        const double zc = eps * z0;

        // parametric band sample around the ring at height zc
        SampleCloud cloud;
        cloud.germ = germ;
        cloud.r_min = zc * (1.0 - opts.z_window);
        cloud.r_max = zc * (1.0 + opts.z_window);
        cloud.seed = opts.seed + 1000003ULL * s;
        RngStream rng(cloud.seed, 0);
        for (int i = 0; i < opts.n; ++i) {
            const double z = rng.uniform(cloud.r_min, cloud.r_max);
            const double theta = rng.uniform(0.0, 2.0 * M_PI);
            const double rho = std::pow(z, beta);
            const ComplexPoint3 pt{cplx{rho * std::cos(theta), 0.0},
                                   cplx{rho * std::sin(theta), 0.0}, cplx{z, 0.0}};
            cloud.points.push_back(pt);
            cloud.residual_f.push_back(std::abs(germ->eval(pt)));
            cloud.residual_sphere.push_back(0.0);
        }
        const double rho0 = std::pow(zc, beta);
        cloud.points.push_back({cplx{rho0, 0.0}, cplx{0.0, 0.0}, cplx{zc, 0.0}});
        cloud.points.push_back({cplx{-rho0, 0.0}, cplx{0.0, 0.0}, cplx{zc, 0.0}});
        for (int i = 0; i < 2; ++i) {
            cloud.residual_f.push_back(0.0);
            cloud.residual_sphere.push_back(0.0);
        }

        const double spacing = estimate_nn_spacing(cloud.points);
        const double h = opts.h_factor * spacing;
        const NeighborGraph g = build_graph(cloud, h, opts.shortcut_frac * h, opts.threads);
        const int ip = static_cast<int>(cloud.points.size()) - 2;
        const int iq = ip + 1;
        if (g.component[static_cast<size_t>(ip)] != g.component[static_cast<size_t>(iq)])
            throw DisconnectedGraph("horn_conical_deviation: ring pair disconnected");
        res.distances.push_back(inner_distance(g, ip, iq));
    }

    const double ref_scale = scales[0];
    const double ref_d = res.distances[0];
    for (size_t s = 0; s < scales.size(); ++s) {
        const double expect = (scales[s] / ref_scale) * ref_d;
        res.deviations.push_back(std::abs(res.distances[s] / expect - 1.0));
        res.max_deviation = std::max(res.max_deviation, res.deviations.back());
    }
    return res;
}

}  // namespace germlab
