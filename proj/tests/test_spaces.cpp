#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "sphtrop/quatgeom.hpp"
#include "sphtrop/spaces.hpp"

using namespace sphtrop;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

LinePairPoint lines(Complex z0, Complex z1, Complex w0, Complex w1) { return {{z0, z1}, {w0, w1}}; }

}  // namespace

TEST_CASE("family registry")
{
    CHECK(shipped_families().size() == 8);
    for (const auto id : shipped_families()) CHECK(parse_family(family_name(id)) == id);
    CHECK_THROWS_AS(parse_family("group7x"), InvalidArgument);
    CHECK(SphericalFamily::from_name("group3").rank() == 2);
    CHECK(SphericalFamily::from_name("group4").rank() == 3);
    CHECK(SphericalFamily::from_name("affineU3").rank() == 2);
    CHECK(SphericalFamily::from_name("pointed4").rank() == 2);
    CHECK(SphericalFamily::from_name("triangles").rank() == 3);
    CHECK(SphericalFamily::from_name("sl2t").rank() == 1);
}

TEST_CASE("valuation cones")
{
    const auto g3 = SphericalFamily::from_name("group3").cone();
    CHECK(g3.rays() == std::vector<IntVec>{{-2, -1}, {-1, -2}});
    const auto g4 = SphericalFamily::from_name("group4").cone();
    CHECK(g4.rays() == std::vector<IntVec>{{-3, -2, -1}, {-1, -2, -1}, {-1, -2, -3}});
    const auto tri = SphericalFamily::from_name("triangles").cone();
    CHECK(tri.rays() == std::vector<IntVec>{{-1, -1, 0}, {-1, 0, -1}, {0, -1, -1}});
    const auto pp = SphericalFamily::from_name("pointed3").cone();
    CHECK(pp.contains({-1.0, 1.0}));
    CHECK_FALSE(pp.contains({0.5, 0.0}));
    const auto aff = SphericalFamily::from_name("affineU3").cone();
    CHECK(aff.contains({7.0, -9.0}));
    const auto t = SphericalFamily::from_name("sl2t").cone();
    CHECK(t.contains({-1.0}));
    CHECK_FALSE(t.contains({1.0}));
    CHECK_FALSE(t.note().empty());
}

TEST_CASE("normalization at the base point")
{
    for (const auto id : shipped_families()) {
        const SphericalFamily f(id);
        for (double v : phi_all(f, base_point(f))) CHECK(std::abs(v - 1.0) < 1e-12);
    }
}

TEST_CASE("K-invariance")
{
    Rng rng(21);
    for (const auto id : shipped_families()) {
        const SphericalFamily f(id);
        for (int i = 0; i < 1000; ++i) {
            const auto p = sample_point(f, rng);
            const auto k = sample_compact(f, rng);
            const auto a = phi_all(f, p);
            const auto b = phi_all(f, act_compact(f, k, p));
            for (std::size_t j = 0; j < a.size(); ++j) CHECK(rel(b[j], a[j]) < 1e-9);
        }
    }
}

TEST_CASE("group phi is the normalized symmetric function of squared singular values")
{
    Rng rng(22);
    for (std::size_t n : {3u, 4u}) {
        const SphericalFamily f({FamilyKind::Group, n});
        for (int i = 0; i < 200; ++i) {
            const auto a = random_special_linear(n, rng);
            auto sv = singular_values(a);
            for (auto& s : sv) s *= s;
            for (std::size_t k = 1; k < n; ++k) {
                double e = 0.0;
                for (const auto& idx : subsets(n, k)) {
                    double p = 1.0;
                    for (auto j : idx) p *= sv[j];
                    e += p;
                }
                e /= static_cast<double>(binomial(n, k));
                CHECK(rel(phi(f, k - 1, GroupPoint{a}), e) < 1e-9);
            }
        }
    }
}

TEST_CASE("group3 boundary values at x = 2")
{
    const SphericalFamily f({FamilyKind::Group, 3});
    const double r = std::sqrt(2.0);
    const Complex d[3] = {r, r, 0.5};
    const GroupPoint p{ComplexMatrix::diagonal(d)};
    CHECK(phi(f, 0, p) == doctest::Approx(17.0 / 12.0).epsilon(1e-14));
    CHECK(phi(f, 1, p) == doctest::Approx(10.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("invalid points are rejected")
{
    const SphericalFamily g(FamilyId{FamilyKind::Group, 3});
    const Complex d[3] = {2.0, 1.0, 1.0};
    CHECK_THROWS_AS(phi(g, 0, GroupPoint{ComplexMatrix::diagonal(d)}), InvalidArgument);
    CHECK_THROWS_AS(phi(g, 0, PairPoint{}), InvalidArgument);
    const SphericalFamily pp(FamilyId{FamilyKind::PointedPairs, 3});
    CHECK_THROWS_AS(phi(pp, 0, PairPoint{{1.0, 0.0, 0.0}, {2.0, 0.0, 0.0}}), InvalidArgument);
    const SphericalFamily t(FamilyId{FamilyKind::Sl2ModT, 2});
    CHECK_THROWS_AS(phi(t, 0, lines(1.0, 0.0, 2.0, 0.0)), InvalidArgument);
}

TEST_CASE("triangle functions are cosh of hyperbolic distances")
{
    Rng rng(23);
    const SphericalFamily f(FamilyId{FamilyKind::Triangles, 2});
    for (int i = 0; i < 1000; ++i) {
        const auto p = std::get<TrianglePoint>(sample_point(f, rng));
        const auto v = phi_all(f, p);
        CHECK(rel(v[0], quat::cosh_dist_pair(p.m[0], p.m[1])) < 1e-9);
        CHECK(rel(v[1], quat::cosh_dist_pair(p.m[0], p.m[2])) < 1e-9);
        CHECK(rel(v[2], quat::cosh_dist_pair(p.m[1], p.m[2])) < 1e-9);
    }
}

TEST_CASE("horospherical multiplicativity on SL2/U")
{
    Rng rng(24);
    const SphericalFamily f(FamilyId{FamilyKind::BasicAffine, 2});
    for (int i = 0; i < 1000; ++i) {
        const auto p = sample_point(f, rng);
        const auto& a = std::get<AffinePoint>(p).a;
        const double base = std::norm(a(0, 0)) + std::norm(a(1, 0));
        for (long k = 1; k <= 4; ++k) {
            CHECK(rel(phi_weight(f, {k}, p), std::pow(base, static_cast<double>(k))) < 1e-9);
            for (long l = 1; l <= 4; ++l) {
                const double lhs = phi_weight(f, {k}, p) * phi_weight(f, {l}, p);
                CHECK(rel(lhs, phi_weight(f, {k + l}, p)) < 1e-9);
            }
        }
    }
}

TEST_CASE("pointed pairs: extended function, tail inequality, non-proportionality")
{
    Rng rng(25);
    for (std::size_t n : {3u, 4u}) {
        const SphericalFamily f(FamilyId{FamilyKind::PointedPairs, n});
        CHECK(std::abs(phi_weight(f, {1, 1}, base_point(f)) - 1.0) < 1e-12);
        REQUIRE(f.tail_triples().size() == 1);
        const auto tail = f.tail_triples()[0];
        CHECK(tail.c == doctest::Approx(static_cast<double>(n - 1) / static_cast<double>(n)));
        double lo = 1e300;
        double hi = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const auto p = sample_point(f, rng);
            const double p1 = phi(f, 0, p);
            const double p2 = phi(f, 1, p);
            const double ext = phi_weight(f, tail.gamma, p);
            const double nn = static_cast<double>(n);
            CHECK(rel(ext, (p1 * p2 - 1.0 / nn) * nn / (nn - 1.0)) < 1e-12);
            CHECK(phi_weight(f, tail.lambda, p) * phi_weight(f, tail.mu, p) >= tail.c * ext - 1e-12);
            lo = std::min(lo, p1 * p2 / ext);
            hi = std::max(hi, p1 * p2 / ext);
        }
        CHECK(hi - lo > 1e-3);
    }
}

TEST_CASE("affineU2 tail triples are equalities")
{
    Rng rng(26);
    const SphericalFamily f(FamilyId{FamilyKind::BasicAffine, 2});
    CHECK_FALSE(f.tail_triples().empty());
    for (int i = 0; i < 100; ++i) {
        const auto p = sample_point(f, rng);
        for (const auto& t : f.tail_triples())
            CHECK(rel(phi_weight(f, t.lambda, p) * phi_weight(f, t.mu, p), t.c * phi_weight(f, t.gamma, p)) < 1e-9);
    }
}

TEST_CASE("unsupported weights raise")
{
    const SphericalFamily f(FamilyId{FamilyKind::Group, 3});
    CHECK_THROWS_AS(phi_weight(f, {1, 1}, base_point(f)), Unsupported);
    CHECK_THROWS_AS(phi_weight(f, {1}, base_point(f)), InvalidArgument);
}

TEST_CASE("SL2/T closed forms")
{
    CHECK(rho_sl2t(lines(1.0, 0.0, 0.0, 1.0)) == doctest::Approx(1.0));
    CHECK(rho_sl2t(lines(1.0, 1.0, -1.0, 1.0)) == doctest::Approx(1.0));
    for (double eps : {1.0, 0.1, 3.0}) CHECK(rho_sl2t(lines(1.0, 0.0, 1.0, eps)) == doctest::Approx(eps * eps / (1.0 + eps * eps)));

    CHECK(std::abs(phi2_sl2t_closed_form(lines(1.0, 1.0, -1.0, 1.0)) - 0.5) < 1e-12);
    const SphericalFamily f(FamilyId{FamilyKind::Sl2ModT, 2});
    CHECK(std::abs(phi(f, 0, lines(1.0, 0.0, 0.0, 1.0)) - 1.0) < 1e-12);
    CHECK(std::abs(phi(f, 0, lines(1.0, 1.0, -1.0, 1.0)) - 1.0) < 1e-12);

    CHECK(std::abs(kirwan_sl2t(lines(1.0, 0.0, 1.0, 0.0)) - 0.5) < 1e-12);
    CHECK(std::abs(kirwan_sl2t(lines(1.0, 0.0, 0.0, 1.0))) < 1e-12);

    const auto p = lines(Complex(1.0, 2.0), 0.5, Complex(0.0, -1.0), 3.0);
    const auto q = involution_sl2t(p);
    CHECK(q.z == p.w);
    CHECK(q.w == p.z);
}

TEST_CASE("SL2/T functions: ranges, scale invariance, swap invariance, Kirwan oracle")
{
    Rng rng(27);
    const SphericalFamily f(FamilyId{FamilyKind::Sl2ModT, 2});
    for (int i = 0; i < 1000; ++i) {
        const auto p = std::get<LinePairPoint>(sample_point(f, rng));
        const double v = phi2_sl2t_closed_form(p);
        const double r = rho_sl2t(p);
        const double k = kirwan_sl2t(p);
        CHECK(v >= 0.5 - 1e-12);
        CHECK(r > 0.0);
        CHECK(r <= 1.0 + 1e-12);
        CHECK(k >= -1e-12);
        CHECK(k <= 0.5 + 1e-12);
        CHECK(std::abs(k - 0.5 * std::sqrt(1.0 - r)) < 1e-9);
        const auto s = involution_sl2t(p);
        CHECK(std::abs(phi2_sl2t_closed_form(s) - v) < 1e-12 * v);
        CHECK(std::abs(rho_sl2t(s) - r) < 1e-12);
        CHECK(std::abs(kirwan_sl2t(s) - k) < 1e-12);
        const Complex c(0.3, -1.7);
        const Complex d(-2.0, 0.4);
        const LinePairPoint scaled{{c * p.z[0], c * p.z[1]}, {d * p.w[0], d * p.w[1]}};
        CHECK(rel(phi2_sl2t_closed_form(scaled), v) < 1e-12);
    }
}

TEST_CASE("samplers are reproducible and valid")
{
    for (const auto id : shipped_families()) {
        const SphericalFamily f(id);
        Rng a(5);
        Rng b(5);
        for (int i = 0; i < 20; ++i) {
            const auto p = sample_point(f, a);
            const auto q = sample_point(f, b);
            CHECK(phi_all(f, p) == phi_all(f, q));
            CHECK_NOTHROW(validate(f, p));
        }
    }
}
