#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sphtrop/series.hpp"

namespace sphtrop {

using Vec = std::vector<double>;
using IntVec = std::vector<long>;

/// Polyhedral cone in R^s, kept both as nonnegative span of integer rays and
/// as the intersection of integer halfspaces  <n, q> <= 0.
///
/// The two descriptions are cross-checked when the cone is built: every ray
/// satisfies every halfspace, and membership agrees on a fixed pseudo-random
/// sample of the unit box.
class PolyCone {
public:
    PolyCone(std::size_t dim, std::vector<IntVec> rays, std::vector<IntVec> normals,
             std::string note = {});

    /// R^s as a cone (rays +-e_i, no halfspaces).
    static PolyCone whole_space(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const std::vector<IntVec>& rays() const { return rays_; }
    const std::vector<IntVec>& normals() const { return normals_; }
    /// Free-form remark on the coordinate convention (e.g. a sign flag).
    const std::string& note() const { return note_; }

    /// Halfspace test with slack: every <n, q> <= tol.
    bool contains(const Vec& q, double tol = 1e-12) const;
    /// Exact halfspace test on rational coordinates.
    bool contains_exact(const std::vector<Rational>& q) const;

    /// Nearest point of the cone, by enumerating every linearly independent
    /// subset of rays (|S| <= s), projecting onto span(S) and keeping the
    /// projections with nonnegative coefficients.
    Vec project(const Vec& q) const;

private:
    void check_consistency() const;

    std::size_t dim_;
    std::vector<IntVec> rays_;
    std::vector<IntVec> normals_;
    std::string note_;
};

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
double max_norm(const Vec& a);

}  // namespace sphtrop
