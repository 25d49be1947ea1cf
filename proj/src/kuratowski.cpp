#include "sphtrop/kuratowski.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"

namespace sphtrop {

double dist_point_to_cone(const Vec& q, const PolyCone& cone)
{
    if (cone.contains(q, 1e-12)) return 0.0;
    const Vec p = cone.project(q);
    Vec d(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) d[i] = q[i] - p[i];
    return norm2(d);
}

double directed_discrepancy(const std::vector<Vec>& cloud, const PolyCone& cone, double window)
{
    double worst = 0.0;
    std::size_t used = 0;
    for (const auto& q : cloud) {
        if (max_norm(q) > window) continue;
        ++used;
        worst = std::max(worst, dist_point_to_cone(q, cone));
    }
    if (used == 0) throw InvalidArgument("no cloud point inside the window; increase samples or R");
    return worst;
}

double directed_discrepancy(const AmoebaCloud& cloud, const PolyCone& cone, double window)
{
    return directed_discrepancy(cloud.points, cone, window);
}

std::vector<Vec> cone_grid(const PolyCone& cone, double window, double grid_step)
{
    if (!(grid_step > 0.0) || !(window >= 0.0)) throw InvalidArgument("grid step and window must be positive");
    const long k = static_cast<long>(std::floor(window / grid_step + 1e-9));
    const std::size_t s = cone.dim();
    std::vector<Vec> out;
    std::vector<long> idx(s, -k);
    for (;;) {
        Vec q(s);
        for (std::size_t i = 0; i < s; ++i) q[i] = static_cast<double>(idx[i]) * grid_step;
        if (cone.contains(q, 1e-12)) out.push_back(std::move(q));
        std::size_t d = 0;
        while (d < s && ++idx[d] > k) idx[d++] = -k;
        if (d == s) break;
    }
    return out;
}

double coverage_gap(const PolyCone& cone, const std::vector<Vec>& cloud, double window, double grid_step)
{
    const auto grid = cone_grid(cone, window, grid_step);
    if (grid.empty()) throw InvalidArgument("empty cone grid");
    if (cloud.empty()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (const auto& g : grid) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : cloud) {
            double d2 = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) d2 += (g[i] - q[i]) * (g[i] - q[i]);
            best = std::min(best, d2);
        }
        worst = std::max(worst, std::sqrt(best));
    }
    return worst;
}

ConvergenceReport convergence_report(const SphericalFamily& family, const std::vector<double>& t_list,
                                     const ConvergenceOptions& options)
{
    if (t_list.empty()) throw InvalidArgument("t list is empty");
    ConvergenceReport rep{family.id(), options.window, options.grid_step, options.stratified, options.seed,
                          {}, true, true};
    for (double t : t_list) {
        AmoebaOptions ao;
        ao.n_samples = options.n_samples;
        ao.seed = options.seed;
        ao.window = options.window;
        ao.stratified = options.stratified;
        const auto cloud = amoeba(family, t, ao);
        rep.rows.push_back({t, directed_discrepancy(cloud, family.cone(), options.window),
                            coverage_gap(family.cone(), cloud.points, options.window, options.grid_step),
                            cloud.points.size(), options.n_samples});
    }
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        if (!(rep.rows[i].discrepancy < rep.rows[i - 1].discrepancy)) rep.discrepancy_decreasing = false;
        if (rep.rows[i].coverage_gap > rep.rows[i - 1].coverage_gap) rep.coverage_gap_nonincreasing = false;
    }
    return rep;
}

std::string ConvergenceReport::to_json() const
{
    nlohmann::ordered_json j;
    j["family"] = family_name(family);
    j["window"] = window;
    j["grid_step"] = grid_step;
    j["stratified"] = stratified;
    j["seed"] = seed;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows)
        j["rows"].push_back({{"t", r.t},
                             {"discrepancy", r.discrepancy},
                             {"coverage_gap", r.coverage_gap},
                             {"n_in_window", r.n_in_window},
                             {"n_samples", r.n_samples}});
    j["discrepancy_decreasing"] = discrepancy_decreasing;
    j["coverage_gap_nonincreasing"] = coverage_gap_nonincreasing;
    return j.dump(2);
}

}  // namespace sphtrop
