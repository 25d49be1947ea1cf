#include "sphtrop/selftest.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "sphtrop/kuratowski.hpp"
#include "sphtrop/quatgeom.hpp"
#include "sphtrop/slog.hpp"
#include "sphtrop/tropical.hpp"

namespace sphtrop {

namespace {

using Check = std::function<std::string(Rng&)>;  // empty string = pass

std::string normalization(Rng&)
{
    for (const auto id : shipped_families()) {
        const SphericalFamily f(id);
        for (double v : phi_all(f, base_point(f)))
            if (std::abs(v - 1.0) > 1e-12) return f.name() + ": phi(base) = " + std::to_string(v);
    }
    return {};
}

std::string k_invariance(Rng& rng)
{
    for (const auto id : shipped_families()) {
        const SphericalFamily f(id);
        for (int i = 0; i < 50; ++i) {
            const auto p = sample_point(f, rng);
            const auto k = sample_compact(f, rng);
            const auto a = phi_all(f, p);
            const auto b = phi_all(f, act_compact(f, k, p));
            for (std::size_t j = 0; j < a.size(); ++j)
                if (std::abs(a[j] - b[j]) > 1e-9 * std::abs(a[j])) return f.name() + ": phi moved under K";
        }
    }
    return {};
}

std::string series_inverse(Rng& rng)
{
    std::normal_distribution<double> g;
    for (int i = 0; i < 20; ++i) {
        std::map<std::int64_t, Complex> terms;
        terms[-2] = 1.0;
        for (std::int64_t k = -1; k < 4; ++k) terms[k] = {0.2 * g(rng), 0.2 * g(rng)};
        const PuiseuxSeries s(2, terms);
        const auto prod = s * invert(s);
        for (const auto& [k, c] : prod.terms()) {
            const Complex want = k == 0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(c - want) > 1e-8) return "s * invert(s) != 1";
        }
    }
    return {};
}

std::string unitary_det(Rng& rng)
{
    for (std::size_t n = 2; n <= 4; ++n)
        for (int i = 0; i < 20; ++i) {
            const auto u = random_special_unitary(n, rng);
            if (std::abs(det(u) - 1.0) > 1e-12) return "det U != 1";
            const auto sv = singular_values(u);
            for (double s : sv)
                if (std::abs(s - 1.0) > 1e-10) return "unitary singular value != 1";
        }
    return {};
}

std::string hyperbolic_distance(Rng& rng)
{
    for (int i = 0; i < 100; ++i) {
        const auto g = random_special_linear(2, rng);
        const double a = quat::cosh_dist_j(g);
        const double b = quat::cosh_dist_points(quat::base_j(), quat::act(quat::base_j(), g));
        if (std::abs(a - b) > 1e-9 * a) return "cosh distance formulas disagree";
    }
    return {};
}

std::string cone_distance(Rng& rng)
{
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (const auto id : shipped_families()) {
        const SphericalFamily f(id);
        for (int i = 0; i < 200; ++i) {
            Vec q(f.rank());
            for (auto& v : q) v = u(rng);
            const bool inside = f.cone().contains(q);
            const double d = dist_point_to_cone(q, f.cone());
            if (inside != (d == 0.0)) return f.name() + ": distance and halfspaces disagree";
        }
    }
    return {};
}

std::string pointed_image(Rng& rng)
{
    const SphericalFamily f({FamilyKind::PointedPairs, 3});
    AmoebaOptions o;
    o.n_samples = 2000;
    o.seed = rng();
    for (double t : {0.5, 0.1}) {
        for (const auto& q : amoeba(f, t, o).points)
            if (q[0] + q[1] > 1e-9) return "pointed3 sLog point outside q1 + q2 <= 0";
    }
    return {};
}

std::string plane_tropicalization(Rng& rng)
{
    Curve c{CurveAmbient::plane(),
            {PuiseuxSeries(1, {{2, 1.0}, {3, 1.0}}), PuiseuxSeries::monomial(1.0, std::int64_t{5})}};
    const auto v = strop(c, rng);
    if (v[0] != Rational(2)) return "v(y) != 2 on (t^2 + t^3, t^5)";
    return {};
}

std::string limit_battery(Rng& rng)
{
    for (const auto& nc : shipped_curves()) {
        const SphericalFamily f(*nc.curve.ambient.family);
        for (std::size_t i = 0; i < f.rank(); ++i) {
            const auto rows = limit_check(nc.curve, i, {1e-4}, rng);
            if (std::abs(rows[0].deviation()) >= 0.05) {
                std::ostringstream os;
                os << nc.name << " generator " << i + 1 << ": deviation " << rows[0].deviation();
                return os.str();
            }
        }
    }
    return {};
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed)
{
    const std::vector<std::pair<std::string, Check>> suites = {
        {"normalization", normalization},
        {"k-invariance", k_invariance},
        {"series-inverse", series_inverse},
        {"unitary-det", unitary_det},
        {"hyperbolic-distance", hyperbolic_distance},
        {"cone-distance", cone_distance},
        {"pointed-image", pointed_image},
        {"plane-tropicalization", plane_tropicalization},
        {"limit-battery", limit_battery},
    };
    std::vector<SuiteResult> out;
    std::uint64_t index = 0;
    for (const auto& [name, check] : suites) {
        Rng rng(substream_seed(seed, index++));
        std::string detail;
        try {
            detail = check(rng);
        } catch (const std::exception& e) {
            detail = std::string("threw: ") + e.what();
        }
        out.push_back({name, detail.empty(), detail});
    }
    return out;
}

}  // namespace sphtrop
