#include "doctest.h"

#include <cmath>

#include "sphtrop/kuratowski.hpp"

using namespace sphtrop;

TEST_CASE("dist_point_to_cone examples")
{
    const PolyCone half(2, {{1, -1}, {-1, 1}, {-1, -1}}, {{1, 1}});
    CHECK(dist_point_to_cone({-1.0, -0.5}, half) == 0.0);
    CHECK(dist_point_to_cone({1.0, 1.0}, half) == doctest::Approx(std::sqrt(2.0)));
    const auto tf = SphericalFamily::from_name("triangles");
    const auto& tri = tf.cone();
    CHECK(dist_point_to_cone({0.0, 0.0, -1.0}, tri) > 0.1);
    // nearest point is (-1/3, -1/3, -2/3) on the face spanned by (-1, 0, -1) and (0, -1, -1)
    CHECK(dist_point_to_cone({0.0, 0.0, -1.0}, tri) == doctest::Approx(1.0 / std::sqrt(3.0)));
}

TEST_CASE("distance vanishes exactly on the halfspace description")
{
    Rng rng(51);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (const auto id : shipped_families()) {
        const SphericalFamily f(id);
        for (int i = 0; i < 10000 / 8; ++i) {
            Vec q(f.rank());
            for (auto& v : q) v = u(rng);
            CHECK((dist_point_to_cone(q, f.cone()) == 0.0) == f.cone().contains(q, 1e-12));
        }
    }
}

TEST_CASE("distance is 1-Lipschitz and positively homogeneous")
{
    Rng rng(52);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::uniform_real_distribution<double> c(0.1, 5.0);
    for (const auto id : shipped_families()) {
        const SphericalFamily f(id);
        for (int i = 0; i < 300; ++i) {
            Vec p(f.rank());
            Vec q(f.rank());
            for (auto& v : p) v = u(rng);
            for (auto& v : q) v = u(rng);
            Vec diff(p.size());
            for (std::size_t k = 0; k < p.size(); ++k) diff[k] = p[k] - q[k];
            const double dp = dist_point_to_cone(p, f.cone());
            CHECK(std::abs(dp - dist_point_to_cone(q, f.cone())) <= norm2(diff) + 1e-12);
            const double s = c(rng);
            Vec sp = p;
            for (auto& v : sp) v *= s;
            CHECK(dist_point_to_cone(sp, f.cone()) == doctest::Approx(s * dp).epsilon(1e-12));
        }
    }
}

TEST_CASE("directed discrepancy and coverage gap")
{
    const auto pf = SphericalFamily::from_name("pointed3");
    const auto& cone = pf.cone();
    const auto grid = cone_grid(cone, 3.0, 0.25);
    CHECK_FALSE(grid.empty());
    for (const auto& g : grid) CHECK(cone.contains(g));
    CHECK(directed_discrepancy(grid, cone, 3.0) == 0.0);
    CHECK(coverage_gap(cone, grid, 3.0, 0.25) == 0.0);
    CHECK_THROWS_AS(directed_discrepancy(std::vector<Vec>{{10.0, 10.0}}, cone, 3.0), InvalidArgument);
    // 25^2 grid points, (25^2 + 25) / 2 on or below the antidiagonal
    CHECK(grid.size() == 325);
}

TEST_CASE("pointed pairs: image equals the cone at every t")
{
    const auto f = SphericalFamily::from_name("pointed3");
    ConvergenceOptions o;
    o.n_samples = 4000;
    o.seed = 3;
    o.window = 3.0;
    o.grid_step = 0.25;
    o.stratified = true;
    const auto rep = convergence_report(f, {0.5, 0.1}, o);
    for (const auto& r : rep.rows) {
        CHECK(r.discrepancy <= 1e-9);
        CHECK(r.coverage_gap < 0.25);
        CHECK(r.n_in_window == 4000);
    }
}

TEST_CASE("group3: coverage improves as t shrinks, discrepancy stays at zero")
{
    const auto f = SphericalFamily::from_name("group3");
    ConvergenceOptions o;
    o.n_samples = 5000;
    o.seed = 1;
    o.window = 5.0;
    o.grid_step = 0.25;
    o.stratified = true;
    const auto rep = convergence_report(f, {0.5, 0.05}, o);
    CHECK(rep.rows[1].discrepancy <= rep.rows[0].discrepancy);
    CHECK(rep.rows[1].coverage_gap < rep.rows[0].coverage_gap);
    for (const auto& r : rep.rows) CHECK(r.discrepancy == 0.0);
}

TEST_CASE("basic affine: zero discrepancy, coverage below 2h")
{
    const auto f = SphericalFamily::from_name("affineU3");
    ConvergenceOptions o;
    o.n_samples = 4000;
    o.window = 3.0;
    o.grid_step = 0.25;
    o.stratified = true;
    const auto rep = convergence_report(f, {0.1}, o);
    CHECK(rep.rows[0].discrepancy == 0.0);
    CHECK(rep.rows[0].coverage_gap < 0.5);
}

TEST_CASE("triangles: discrepancy decreases")
{
    const auto f = SphericalFamily::from_name("triangles");
    ConvergenceOptions o;
    o.n_samples = 4000;
    o.window = 4.0;
    o.seed = 2;
    const auto rep = convergence_report(f, {0.5, 0.1, 0.02}, o);
    CHECK(rep.discrepancy_decreasing);
    for (const auto& r : rep.rows) CHECK(r.discrepancy >= 0.0);
}

TEST_CASE("report JSON")
{
    const auto f = SphericalFamily::from_name("sl2t");
    ConvergenceOptions o;
    o.n_samples = 100;
    const auto json = convergence_report(f, {0.5}, o).to_json();
    CHECK(json.find("\"family\": \"sl2t\"") != std::string::npos);
    CHECK(json.find("\"rows\"") != std::string::npos);
    CHECK(json.find("\"n_in_window\"") != std::string::npos);
}
