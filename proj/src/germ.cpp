#include "germlab/germ.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "germlab/errors.hpp"

namespace germlab {

HypersurfaceGerm::HypersurfaceGerm(std::vector<GermTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw ValidationError("germ: at least one term required");
    std::set<std::array<int, 3>> seen;
    for (const auto& t : terms_) {
        if (t.exp[0] < 0 || t.exp[1] < 0 || t.exp[2] < 0)
            throw ValidationError("germ: negative exponent");
        if (t.exp[0] == 0 && t.exp[1] == 0 && t.exp[2] == 0)
            throw ValidationError("germ: constant term not allowed (f(0) must be 0)");
        if (!seen.insert(t.exp).second) throw ValidationError("germ: duplicate exponent triple");
        if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag()))
            throw ValidationError("germ: non-finite coefficient");
    }
}

cplx HypersurfaceGerm::eval(const ComplexPoint3& p) const {
    cplx acc{0.0, 0.0};
    for (const auto& t : terms_) {
        acc += t.coeff * pow_int(p.x, t.exp[0]) * pow_int(p.y, t.exp[1]) * pow_int(p.z, t.exp[2]);
    }
    return acc;
}

double HypersurfaceGerm::term_scale(const ComplexPoint3& p) const {
    double acc = 0.0;
    for (const auto& t : terms_) {
        acc += std::abs(t.coeff * pow_int(p.x, t.exp[0]) * pow_int(p.y, t.exp[1]) *
                        pow_int(p.z, t.exp[2]));
    }
    return acc;
}

ComplexPoint3 HypersurfaceGerm::gradient(const ComplexPoint3& p) const {
    ComplexPoint3 g{};
    for (const auto& t : terms_) {
        const auto& [ex, ey, ez] = t.exp;
        if (ex > 0)
            g.x += t.coeff * static_cast<double>(ex) * pow_int(p.x, ex - 1) * pow_int(p.y, ey) *
                   pow_int(p.z, ez);
        if (ey > 0)
            g.y += t.coeff * static_cast<double>(ey) * pow_int(p.x, ex) * pow_int(p.y, ey - 1) *
                   pow_int(p.z, ez);
        if (ez > 0)
            g.z += t.coeff * static_cast<double>(ez) * pow_int(p.x, ex) * pow_int(p.y, ey) *
                   pow_int(p.z, ez - 1);
    }
    return g;
}

HypersurfaceGerm HypersurfaceGerm::parse(const std::string& text) {
    std::vector<GermTerm> terms;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double re, im;
        int ex, ey, ez;
        if (!(ls >> re)) continue;  // blank / comment-only line
        if (!(ls >> im >> ex >> ey >> ez))
            throw ValidationError("germ parse: malformed term on line " + std::to_string(lineno));
        std::string trailing;
        if (ls >> trailing)
            throw ValidationError("germ parse: trailing tokens on line " + std::to_string(lineno));
        terms.push_back({cplx{re, im}, {ex, ey, ez}});
    }
    return HypersurfaceGerm(std::move(terms));
}

std::string HypersurfaceGerm::to_text() const {
    std::ostringstream out;
    out.precision(17);
    for (const auto& t : terms_) {
        out << t.coeff.real() << ' ' << t.coeff.imag() << ' ' << t.exp[0] << ' ' << t.exp[1] << ' '
            << t.exp[2] << '\n';
    }
    return out.str();
}

HypersurfaceGerm HypersurfaceGerm::brieskorn(int a, int b) {
    if (a < 2 || b <= a) throw ValidationError("brieskorn: require 2 <= a < b");
    return HypersurfaceGerm({{cplx{1, 0}, {a, 0, 0}}, {cplx{1, 0}, {0, b, 0}}, {cplx{-1, 0}, {0, 0, b}}});
}

HypersurfaceGerm HypersurfaceGerm::ak(int k) {
    if (k < 1) throw ValidationError("ak: require k >= 1");
    return HypersurfaceGerm({{cplx{1, 0}, {0, 0, k + 1}}, {cplx{-1, 0}, {1, 1, 0}}});
}

HypersurfaceGerm HypersurfaceGerm::briancon_speder(cplx t) {
    std::vector<GermTerm> terms = {
        {cplx{1, 0}, {0, 0, 15}}, {cplx{1, 0}, {0, 7, 1}}, {cplx{1, 0}, {5, 0, 0}}};
    if (t != cplx{0, 0}) terms.push_back({t, {1, 6, 0}});
    return HypersurfaceGerm(std::move(terms));
}

HypersurfaceGerm HypersurfaceGerm::horn(int p, int q) {
    if (p < 1 || q < 1 || p < q) throw ValidationError("horn: require p >= q >= 1 (beta >= 1)");
    // binomial expansion of (x^2+y^2)^q
    std::vector<GermTerm> terms;
    double binom = 1.0;
    for (int j = 0; j <= q; ++j) {
        terms.push_back({cplx{binom, 0}, {2 * (q - j), 2 * j, 0}});
        binom = binom * (q - j) / (j + 1);
    }
    terms.push_back({cplx{-1, 0}, {0, 0, 2 * p}});
    return HypersurfaceGerm(std::move(terms));
}

HypersurfaceGerm HypersurfaceGerm::coordinate_plane() {
    return HypersurfaceGerm({{cplx{1, 0}, {1, 0, 0}}});
}

HypersurfaceGerm HypersurfaceGerm::quadric_cone() {
    return HypersurfaceGerm(
        {{cplx{1, 0}, {2, 0, 0}}, {cplx{1, 0}, {0, 2, 0}}, {cplx{1, 0}, {0, 0, 2}}});
}

bool is_weighted_homogeneous(const HypersurfaceGerm& f, const WeightedHomogeneousData& wh) {
    for (const auto& t : f.terms()) {
        const double d = t.exp[0] * wh.weights[0] + t.exp[1] * wh.weights[1] + t.exp[2] * wh.weights[2];
        if (std::abs(d - wh.degree) > 1e-9) return false;
    }
    return true;
}

double quasi_homogeneity_residual(const HypersurfaceGerm& f, const WeightedHomogeneousData& wh,
                                  const ComplexPoint3& p, cplx lambda) {
    const ComplexPoint3 scaled{std::pow(lambda, wh.weights[0]) * p.x,
                               std::pow(lambda, wh.weights[1]) * p.y,
                               std::pow(lambda, wh.weights[2]) * p.z};
    const cplx lhs = f.eval(scaled);
    const cplx rhs = std::pow(lambda, wh.degree) * f.eval(p);
    const double scale = f.term_scale(scaled);
    if (scale == 0.0) return std::abs(lhs - rhs);
    return std::abs(lhs - rhs) / scale;
}

ComplexPoint3 unit_conormal(const HypersurfaceGerm& f, const ComplexPoint3& p, double grad_tol) {
    const ComplexPoint3 g = f.gradient(p);
    const double n = g.norm();
    if (n < grad_tol) throw ZeroGradient("unit_conormal: |grad f| below tolerance");
    const double inv = 1.0 / n;
    return {std::conj(g.x) * inv, std::conj(g.y) * inv, std::conj(g.z) * inv};
}

double plane_projection_distortion(const ComplexPoint3& u1, const ComplexPoint3& u2,
                                   double ortho_tol) {
    if (std::abs(u1.norm() - 1.0) > 1e-12 || std::abs(u2.norm() - 1.0) > 1e-12)
        throw ValidationError("plane_projection_distortion: inputs must be unit vectors");
    const double ip = std::abs(hermitian(u1, u2));
    if (ip < ortho_tol)
        throw OrthogonalPlanes("plane_projection_distortion: planes nearly orthogonal");
    return 1.0 / ip;
}

double tangent_projection_distortion_at(const HypersurfaceGerm& f, const ComplexPoint3& p,
                                        const ComplexPoint3& axis_plane) {
    return plane_projection_distortion(unit_conormal(f, p), axis_plane);
}

}  // namespace germlab
