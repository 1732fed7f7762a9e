#pragma once

#include "germlab/complex_point.hpp"
#include "germlab/germ.hpp"

namespace germlab {

struct NewtonResult {
    ComplexPoint3 point{};
    int iterations = 0;
    double path_length = 0.0;  // sum of step lengths, bounds |p - p0|
};

struct NewtonOptions {
    int max_iter = 60;
    double grad_tol = 1e-14;
    // give up on a damping cascade after this many halvings
    int max_halvings = 50;
};

// Projects p0 toward V = f^{-1}(0) by damped Newton steps
//   p <- p - f(p) * conj(grad f(p)) / |grad f(p)|^2
// (steepest descent for |f|^2 restricted to one complex step); the step is
// halved until |f| decreases. Stops at |f(p)| <= tol.
// Throws NoConvergence / ZeroGradient.
NewtonResult newton_project(const HypersurfaceGerm& f, const ComplexPoint3& p0, double tol,
                            const NewtonOptions& opts = {});

// Variant used by edge admission in graph building: runs the same iteration
// but aborts early (returns false) once the accumulated displacement exceeds
// max_displacement. Returns true iff |f| <= tol was reached within budget.
bool newton_project_within(const HypersurfaceGerm& f, const ComplexPoint3& p0, double tol,
                           double max_displacement, ComplexPoint3* out = nullptr);

}  // namespace germlab
