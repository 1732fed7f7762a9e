#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace germlab {

using cplx = std::complex<double>;

// A point of C^3, the ambient space for every germ in this project.
struct ComplexPoint3 {
    cplx x{};
    cplx y{};
    cplx z{};

    double norm_sq() const { return std::norm(x) + std::norm(y) + std::norm(z); }
    double norm() const { return std::sqrt(norm_sq()); }

    bool finite() const {
        return std::isfinite(x.real()) && std::isfinite(x.imag()) &&
               std::isfinite(y.real()) && std::isfinite(y.imag()) &&
               std::isfinite(z.real()) && std::isfinite(z.imag());
    }

    // Flat view as a point of R^6, used by spatial hashing and simplex volumes.
    std::array<double, 6> as_real6() const {
        return {x.real(), x.imag(), y.real(), y.imag(), z.real(), z.imag()};
    }
};

inline ComplexPoint3 operator+(const ComplexPoint3& a, const ComplexPoint3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline ComplexPoint3 operator-(const ComplexPoint3& a, const ComplexPoint3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

inline ComplexPoint3 operator*(double s, const ComplexPoint3& p) {
    return {s * p.x, s * p.y, s * p.z};
}

inline ComplexPoint3 operator*(cplx s, const ComplexPoint3& p) {
    return {s * p.x, s * p.y, s * p.z};
}

inline double distance(const ComplexPoint3& a, const ComplexPoint3& b) {
    return (a - b).norm();
}

// Hermitian inner product <a,b> = sum_i a_i * conj(b_i).
inline cplx hermitian(const ComplexPoint3& a, const ComplexPoint3& b) {
    return a.x * std::conj(b.x) + a.y * std::conj(b.y) + a.z * std::conj(b.z);
}

// z^n for integer n >= 0 by repeated multiplication; evaluation order is fixed
// so results are bit-for-bit reproducible across runs.
inline cplx pow_int(cplx base, int n) {
    cplx r{1.0, 0.0};
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

inline double pow_int(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

}  // namespace germlab
