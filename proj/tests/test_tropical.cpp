#include "doctest.h"

#include <cmath>

#include "sphtrop/tropical.hpp"

using namespace sphtrop;

namespace {

using R = Rational;

PuiseuxSeries mono(double c, R e) { return PuiseuxSeries::monomial(c, e); }

Curve plane_curve(PuiseuxSeries x, PuiseuxSeries y) { return {CurveAmbient::plane(), {std::move(x), std::move(y)}}; }

PuiseuxSeries random_laurent(Rng& rng, bool allow_zero)
{
    std::uniform_int_distribution<int> count(allow_zero ? 0 : 1, 4);
    std::uniform_int_distribution<std::int64_t> k(-6, 6);
    std::uniform_int_distribution<std::int64_t> ram(1, 3);
    std::normal_distribution<double> g;
    const auto n = ram(rng);
    std::map<std::int64_t, Complex> terms;
    for (int i = count(rng); i > 0; --i) terms[k(rng)] = {std::round(8 * g(rng)) / 8 + 2.0, g(rng)};
    return {n, terms};
}

}  // namespace

TEST_CASE("curve_order examples")
{
    const auto c = plane_curve(mono(1.0, R(2)), mono(1.0, R(5)));
    CHECK(curve_order(Polynomial::variable(2, 1), c) == R(5));

    for (const auto& nc : shipped_curves()) {
        if (!nc.curve.ambient.family) continue;
        const auto id = *nc.curve.ambient.family;
        const std::size_t nv = nc.curve.ambient.n_coords();
        if (id.kind == FamilyKind::PointedPairs) {
            Polynomial pairing(nv);
            for (std::size_t i = 0; i < id.n; ++i)
                pairing = pairing + Polynomial::variable(nv, i) * Polynomial::variable(nv, id.n + i);
            CHECK(curve_order(pairing, nc.curve) == R(0));
        }
        if (id.kind == FamilyKind::Group) {
            std::vector<std::vector<std::size_t>> vars(id.n, std::vector<std::size_t>(id.n));
            for (std::size_t r = 0; r < id.n; ++r)
                for (std::size_t col = 0; col < id.n; ++col) vars[r][col] = r * id.n + col;
            CHECK(curve_order(Polynomial::determinant(nv, vars), nc.curve) == R(0));
        }
    }
}

TEST_CASE("polynomial algebra")
{
    const auto x = Polynomial::variable(2, 0);
    const auto y = Polynomial::variable(2, 1);
    const auto p = (x + y) * (x - y);
    CHECK(p.terms().size() == 2);
    CHECK(p.evaluate({3.0, 2.0}) == Complex(5.0));
    const auto d = Polynomial::determinant(4, {{0, 1}, {2, 3}});
    CHECK(d.evaluate({1.0, 2.0, 3.0, 4.0}) == Complex(-2.0));
    CHECK_THROWS_AS(x + Polynomial::variable(3, 0), InvalidArgument);
    CHECK((x - x).is_zero());
}

TEST_CASE("plane examples")
{
    Rng rng(41);
    const auto y = Polynomial::variable(2, 1);
    const auto c1 = plane_curve(PuiseuxSeries(1, {{2, 1.0}, {3, 1.0}}), mono(1.0, R(5)));
    CHECK(generic_valuation(y, c1, rng) == R(2));
    const auto c2 = plane_curve(mono(1.0, R(-1)), PuiseuxSeries::constant(1.0));
    CHECK(generic_valuation(y, c2, rng) == R(-1));
    CHECK(strop(c1, rng) == std::vector<R>{R(2)});
    CHECK_THROWS_AS(validate_curve(plane_curve(PuiseuxSeries(), PuiseuxSeries())), InvalidArgument);
}

TEST_CASE("random plane curves: v(y) = min of coordinate orders")
{
    Rng rng(42);
    const auto y = Polynomial::variable(2, 1);
    for (int i = 0; i < 50; ++i) {
        auto a = random_laurent(rng, true);
        auto b = random_laurent(rng, a.empty() ? false : true);
        const auto c = plane_curve(a, b);
        R want;
        if (a.empty())
            want = b.order();
        else if (b.empty())
            want = a.order();
        else
            want = std::min(a.order(), b.order());
        CHECK(generic_valuation(y, c, rng) == want);
    }
}

TEST_CASE("group3 diagonal curves match subset sums")
{
    Rng rng(43);
    std::uniform_int_distribution<int> e(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    for (int i = 0; i < 30; ++i) {
        const R a1(e(rng), den(rng));
        const R a2(e(rng), den(rng));
        const std::vector<R> a{a1, a2, -a1 - a2};
        const auto v = strop(group_diagonal_curve(a), rng);
        const R m1 = std::min({a[0], a[1], a[2]});
        const R m2 = std::min({a[0] + a[1], a[0] + a[2], a[1] + a[2]});
        CHECK(v == std::vector<R>{m1, m2});
    }
    CHECK(strop(group_diagonal_curve({R(1), R(0), R(-1)}), rng) == std::vector<R>{R(-1), R(-1)});
}

TEST_CASE("strop examples")
{
    Rng rng(44);
    for (const auto& nc : shipped_curves()) {
        const auto v = strop(nc.curve, rng);
        if (nc.name.find("constant") != std::string::npos)
            for (const auto& x : v) CHECK(x == R(0));
        if (nc.name == "pointed3 preimage (-2,0)") CHECK(v == std::vector<R>{R(-1), R(0)});
        if (nc.name == "pointed3 preimage (-2,1)") CHECK(v == std::vector<R>{R(-1), R(1, 2)});
        if (nc.name == "triangles (I, B, I)") CHECK(v == std::vector<R>{R(-1), R(0), R(-1)});
    }
}

TEST_CASE("generic valuation is additive and translation invariant")
{
    Rng rng(45);
    const Curve gamma = shipped_curves()[0].curve;  // group3 D.M
    const std::size_t nv = gamma.ambient.n_coords();
    std::uniform_int_distribution<std::size_t> var(0, nv - 1);
    for (int i = 0; i < 10; ++i) {
        const auto f = Polynomial::variable(nv, var(rng)) * Polynomial::variable(nv, var(rng));
        const auto g = Polynomial::variable(nv, var(rng));
        CHECK(generic_valuation(f * g, gamma, rng) == generic_valuation(f, gamma, rng) + generic_valuation(g, gamma, rng));
        const auto h = random_translate(gamma.ambient, rng);
        CHECK(generic_valuation(f, translate(gamma, h), rng) == generic_valuation(f, gamma, rng));
    }
}

TEST_CASE("strop lands in the valuation cone")
{
    Rng rng(46);
    for (const auto& nc : shipped_curves()) {
        const auto v = strop(nc.curve, rng);
        CHECK(SphericalFamily(*nc.curve.ambient.family).cone().contains_exact(v));
    }
}

TEST_CASE("curve validation")
{
    CHECK_NOTHROW(validate_curve(group_diagonal_curve({R(0), R(0), R(0)})));
    auto bad = group_diagonal_curve({R(1), R(0), R(-1)});
    bad.coords[0] = mono(2.0, R(1));
    CHECK_THROWS_AS(validate_curve(bad), InvalidArgument);
    bad.coords.pop_back();
    CHECK_THROWS_AS(validate_curve(bad), InvalidArgument);
    CHECK_THROWS_AS(group_diagonal_curve({R(1), R(1), R(0)}), InvalidArgument);
    CHECK_THROWS_AS(CurveAmbient::parse("sl2t").n_coords(), Unsupported);
    CHECK(CurveAmbient::parse("sl2plane").n_coords() == 2);
    CHECK(CurveAmbient::parse("triangles").n_coords() == 12);
    CHECK(CurveAmbient::parse("pointed4").n_coords() == 8);
}

TEST_CASE("all-truncated trials are inconclusive")
{
    Rng rng(47);
    // y vanishes identically inside the truncation window
    const Curve c = plane_curve(PuiseuxSeries(1, {}, 3), PuiseuxSeries(1, {}, 3));
    CHECK_THROWS_AS(generic_valuation(Polynomial::variable(2, 1), c, rng), InconclusiveValuation);
}

TEST_CASE("limit_check")
{
    Rng rng(48);
    // diagonal (1, 0, -1): the constant 1/3 in phi_1 decays like ln 3 / |ln t|
    const auto diag = group_diagonal_curve({R(1), R(0), R(-1)});
    const auto rows = limit_check(diag, 0, {1e-2, 1e-4, 1e-8, 1e-12}, rng);
    for (const auto& r : rows) {
        CHECK(r.target == doctest::Approx(-2.0));
        const double oracle = std::log((r.t * r.t + 1.0 + 1.0 / (r.t * r.t)) / 3.0) / std::log(r.t) + 2.0;
        CHECK(r.deviation() == doctest::Approx(oracle).epsilon(1e-9));
    }
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::abs(rows[i].deviation()) < std::abs(rows[i - 1].deviation()));
    CHECK(std::abs(rows.back().deviation()) < 0.05);

    // the pointed-pairs preimage is exact at every t
    for (const auto& nc : shipped_curves()) {
        if (nc.name != "pointed3 preimage (-2,1)") continue;
        for (const auto& r : limit_check(nc.curve, 0, {0.5, 0.1, 1e-4}, rng)) {
            CHECK(std::abs(r.value + 2.0) < 1e-12);
            CHECK(r.target == -2.0);
        }
    }

    for (const auto& r : limit_check(group_diagonal_curve({R(0), R(0), R(0)}), 1, {0.5, 1e-3}, rng)) {
        CHECK(r.value == 0.0);
        CHECK(r.target == 0.0);
    }

    CHECK_THROWS_AS(limit_check(group_diagonal_curve({R(400), R(0), R(-400)}), 0, {1e-4}, rng), NumericError);
    CHECK_THROWS_AS(limit_check(plane_curve(mono(1.0, R(1)), mono(1.0, R(0))), 0, {0.1}, rng), Unsupported);
}

TEST_CASE("shipped battery converges at t = 1e-4")
{
    Rng rng(49);
    const auto battery = shipped_curves();
    CHECK(battery.size() >= 10);
    for (const auto& nc : battery) {
        const SphericalFamily f(*nc.curve.ambient.family);
        for (std::size_t i = 0; i < f.rank(); ++i) {
            const auto rows = limit_check(nc.curve, i, {1e-2, 1e-4}, rng);
            INFO(nc.name << " generator " << i + 1);
            CHECK(std::abs(rows[1].deviation()) < 0.05);
            CHECK(std::abs(rows[1].deviation()) <= std::abs(rows[0].deviation()) + 1e-12);
        }
    }
}
