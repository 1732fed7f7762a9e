#pragma once

#include <array>
#include <string>
#include <vector>

#include "germlab/complex_point.hpp"

namespace germlab {

// One monomial c * x^ex * y^ey * z^ez.
struct GermTerm {
    cplx coeff{};
    std::array<int, 3> exp{};
};

// Sparse complex polynomial in (x,y,z) representing a hypersurface germ (V,0).
// Invariants: f(0)=0 (no constant term), no duplicate exponent triples, at
// least one term. Terms are evaluated in stored order so runs reproduce
// bit-for-bit.
class HypersurfaceGerm {
public:
    explicit HypersurfaceGerm(std::vector<GermTerm> terms);

    const std::vector<GermTerm>& terms() const { return terms_; }

    cplx eval(const ComplexPoint3& p) const;
    ComplexPoint3 gradient(const ComplexPoint3& p) const;

    // Sum of |c_i * monomial_i(p)|: the natural scale for relative residuals.
    double term_scale(const ComplexPoint3& p) const;

    // Parse the plain-text format: one `re im ex ey ez` line per term,
    // `#` comments and blank lines allowed.
    static HypersurfaceGerm parse(const std::string& text);
    std::string to_text() const;

    // Named families used throughout the experiments.
    static HypersurfaceGerm brieskorn(int a, int b);         // x^a + y^b - z^b
    static HypersurfaceGerm ak(int k);                       // z^{k+1} - x*y
    static HypersurfaceGerm briancon_speder(cplx t);         // z^15 + z*y^7 + x^5 + t*x*y^6
    static HypersurfaceGerm horn(int p, int q);              // (x^2+y^2)^q - z^{2p}
    static HypersurfaceGerm coordinate_plane();              // x
    static HypersurfaceGerm quadric_cone();                  // x^2 + y^2 + z^2

private:
    std::vector<GermTerm> terms_;
};

struct WeightedHomogeneousData {
    std::array<double, 3> weights{};
    double degree = 0.0;
};

// Exact exponent check: every monomial satisfies sum(e_i * w_i) = degree
// within 1e-9 (weights are small rationals stored as doubles).
bool is_weighted_homogeneous(const HypersurfaceGerm& f, const WeightedHomogeneousData& wh);

// |f(lambda^w p) - lambda^d f(p)| relative to the term scale at the weighted
// point; exercises the quasi-homogeneity identity numerically.
double quasi_homogeneity_residual(const HypersurfaceGerm& f, const WeightedHomogeneousData& wh,
                                  const ComplexPoint3& p, cplx lambda);

// conj(grad f)/|grad f|; throws ZeroGradient below tolerance.
ComplexPoint3 unit_conormal(const HypersurfaceGerm& f, const ComplexPoint3& p,
                            double grad_tol = 1e-14);

// Bi-Lipschitz constant 1/|<u1,u2>| of the orthogonal projection between the
// planes hermitian-orthogonal to unit vectors u1 and u2.
// Throws OrthogonalPlanes when |<u1,u2>| < ortho_tol.
double plane_projection_distortion(const ComplexPoint3& u1, const ComplexPoint3& u2,
                                   double ortho_tol = 1e-12);

// Distortion of the tangent-plane projection at a smooth point of V against a
// fixed axis plane: plane_projection_distortion(unit_conormal(f,p), axis).
double tangent_projection_distortion_at(const HypersurfaceGerm& f, const ComplexPoint3& p,
                                        const ComplexPoint3& axis_plane);

}  // namespace germlab
