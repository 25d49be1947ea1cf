#pragma once

#include <complex>

#include "sphtrop/matrixkit.hpp"

namespace sphtrop::quat {

/// Quaternion z + j w with z, w complex and the rule j z = conj(z) j.
struct Quaternion {
    Complex z;
    Complex w;

    friend Quaternion operator*(const Quaternion& a, const Quaternion& b)
    {
        return {a.z * b.z - std::conj(a.w) * b.w, std::conj(a.z) * b.w + a.w * b.z};
    }
    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) { return {a.z + b.z, a.w + b.w}; }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) { return {a.z - b.z, a.w - b.w}; }

    Quaternion conjugate() const { return {std::conj(z), -w}; }
    double norm_sq() const { return std::norm(z) + std::norm(w); }
    Quaternion inverse() const;
};

/// Point z + j r of upper half-space, r > 0. The base point j is (0, 1).
struct HPoint {
    Complex z{0.0, 0.0};
    double r = 1.0;
};

inline HPoint base_j() { return {}; }

/// Right action P^g = (dP - b)(a - cP)^{-1} for g = [[a, b], [c, d]] in SL2(C).
HPoint act(const HPoint& p, const ComplexMatrix& g);

/// cosh d(j, j^g) = (|a|^2 + |b|^2 + |c|^2 + |d|^2) / 2
double cosh_dist_j(const ComplexMatrix& g);

/// cosh d(j^A, j^B) = cosh_dist_j(B A^{-1})
double cosh_dist_pair(const ComplexMatrix& a, const ComplexMatrix& b);

/// cosh of the hyperbolic distance between two interior points.
double cosh_dist_points(const HPoint& p, const HPoint& q);

}  // namespace sphtrop::quat
