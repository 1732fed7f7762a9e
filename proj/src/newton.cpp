#include "germlab/newton.hpp"

#include <cmath>

#include "germlab/errors.hpp"

namespace germlab {

namespace {

ComplexPoint3 newton_step(const HypersurfaceGerm& f, const ComplexPoint3& p, cplx fp,
                          double grad_tol) {
    const ComplexPoint3 g = f.gradient(p);
    const double g2 = g.norm_sq();
    if (std::sqrt(g2) < grad_tol) throw ZeroGradient("newton_project: near-singular iterate");
    const cplx s = -fp / g2;
    return {s * std::conj(g.x), s * std::conj(g.y), s * std::conj(g.z)};
}

}  // namespace

NewtonResult newton_project(const HypersurfaceGerm& f, const ComplexPoint3& p0, double tol,
                            const NewtonOptions& opts) {
    if (tol <= 0.0) throw ValidationError("newton_project: tol must be positive");
    NewtonResult r{p0, 0, 0.0};
    cplx fp = f.eval(r.point);
    for (; r.iterations < opts.max_iter; ++r.iterations) {
        double af = std::abs(fp);
        if (af <= tol) return r;
        ComplexPoint3 step = newton_step(f, r.point, fp, opts.grad_tol);
        double lambda = 1.0;
        ComplexPoint3 trial = r.point + step;
        cplx ft = f.eval(trial);
        int halvings = 0;
        while (std::abs(ft) >= af && halvings < opts.max_halvings) {
            lambda *= 0.5;
            trial = r.point + lambda * step;
            ft = f.eval(trial);
            ++halvings;
        }
        if (std::abs(ft) >= af)
            throw NoConvergence("newton_project: damping failed to reduce |f|");
        r.path_length += lambda * step.norm();
        r.point = trial;
        fp = ft;
    }
    if (std::abs(fp) <= tol) return r;
    throw NoConvergence("newton_project: max iterations exceeded");
}

bool newton_project_within(const HypersurfaceGerm& f, const ComplexPoint3& p0, double tol,
                           double max_displacement, ComplexPoint3* out) {
    ComplexPoint3 p = p0;
    double moved = 0.0;
    cplx fp = f.eval(p);
    for (int it = 0; it < 40; ++it) {
        const double af = std::abs(fp);
        if (af <= tol) {
            if (out) *out = p;
            return true;
        }
        ComplexPoint3 step;
        try {
            step = newton_step(f, p, fp, 1e-300);
        } catch (const ZeroGradient&) {
            return false;
        }
        double lambda = 1.0;
        ComplexPoint3 trial = p + step;
        cplx ft = f.eval(trial);
        int halvings = 0;
        while (std::abs(ft) >= af && halvings < 50) {
            lambda *= 0.5;
            trial = p + lambda * step;
            ft = f.eval(trial);
            ++halvings;
        }
        if (std::abs(ft) >= af) return false;
        moved += lambda * step.norm();
        if (moved > max_displacement) return false;
        p = trial;
        fp = ft;
    }
    return false;
}

}  // namespace germlab
