#pragma once

#include <string>
#include <vector>

#include "sphtrop/slog.hpp"

namespace sphtrop {

/// Euclidean distance from q to the cone; exactly 0 when q meets every halfspace within 1e-12.
double dist_point_to_cone(const Vec& q, const PolyCone& cone);

/// max over cloud points with max-norm <= R of dist_point_to_cone.
/// Throws InvalidArgument when no point lies in the window.
double directed_discrepancy(const std::vector<Vec>& cloud, const PolyCone& cone, double window);
double directed_discrepancy(const AmoebaCloud& cloud, const PolyCone& cone, double window);

/// Grid points k*h inside cone and [-R, R]^s.
std::vector<Vec> cone_grid(const PolyCone& cone, double window, double grid_step);

/// max over cone_grid of the distance to the nearest cloud point.
double coverage_gap(const PolyCone& cone, const std::vector<Vec>& cloud, double window, double grid_step);

struct ConvergenceRow {
    double t;
    double discrepancy;
    double coverage_gap;
    std::size_t n_in_window;
    std::size_t n_samples;
};

struct ConvergenceReport {
    FamilyId family;
    double window;
    double grid_step;
    bool stratified;
    std::uint64_t seed;
    std::vector<ConvergenceRow> rows;
    bool discrepancy_decreasing;          ///< strictly, along the given t order
    bool coverage_gap_nonincreasing;

    std::string to_json() const;
};

struct ConvergenceOptions {
    std::size_t n_samples = 2000;
    double window = 3.0;
    double grid_step = 0.25;
    std::uint64_t seed = 0;
    bool stratified = false;
};

/// One amoeba per t (same seed for every t), both metrics per row.
ConvergenceReport convergence_report(const SphericalFamily& family, const std::vector<double>& t_list,
                                     const ConvergenceOptions& options);

}  // namespace sphtrop
