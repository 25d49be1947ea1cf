#include "doctest.h"

#include <random>

#include "sphtrop/series.hpp"

using namespace sphtrop;

namespace {

PuiseuxSeries poly(std::map<std::int64_t, Complex> terms, std::int64_t n = 1) { return {n, std::move(terms)}; }

PuiseuxSeries random_laurent(std::mt19937_64& rng, std::int64_t n)
{
    std::uniform_int_distribution<std::int64_t> k(-4, 6);
    std::uniform_int_distribution<int> count(1, 4);
    std::normal_distribution<double> g;
    std::map<std::int64_t, Complex> terms;
    for (int i = count(rng); i > 0; --i) terms[k(rng)] = {1.0 + std::abs(g(rng)), g(rng)};
    return {n, terms};
}

}  // namespace

TEST_CASE("order picks the smallest stored exponent")
{
    CHECK(poly({{2, 1.0}, {5, 3.0}}).order() == Rational(2));
    CHECK(poly({{1, 1.0}, {2, -1.0}}, 2).order() == Rational(1, 2));
    const PuiseuxSeries empty(1, {}, 10);
    CHECK_THROWS_AS(empty.order(), IndeterminateOrder);
    CHECK_THROWS_AS(PuiseuxSeries().order(), IndeterminateOrder);
}

TEST_CASE("ring operations")
{
    const auto one_plus = poly({{0, 1.0}, {1, 1.0}});
    const auto one_minus = poly({{0, 1.0}, {1, -1.0}});
    const auto prod = one_plus * one_minus;
    CHECK(prod.terms().size() == 2);
    CHECK(prod.coefficient(Rational(0)) == Complex(1.0));
    CHECK(prod.coefficient(Rational(2)) == Complex(-1.0));

    const PuiseuxSeries t(1, {{1, 1.0}}, 10);
    const auto cancel = add(t, negate(t));
    CHECK(cancel.empty());
    REQUIRE(cancel.truncation());
    CHECK(*cancel.truncation() == 10);

    const auto unit = mul(PuiseuxSeries::monomial(1.0, std::int64_t{-1}), PuiseuxSeries::monomial(1.0, std::int64_t{1}));
    CHECK(unit.order() == Rational(0));
    CHECK(unit.leading_coefficient() == Complex(1.0));
    CHECK(unit.terms().size() == 1);

    const auto scaled = scale(one_plus, {0.0, 2.0});
    CHECK(scaled.coefficient(Rational(1)) == Complex(0.0, 2.0));
}

TEST_CASE("invert")
{
    const auto inv = invert(poly({{0, 1.0}, {1, -1.0}}));
    REQUIRE(inv.truncation());
    CHECK(*inv.truncation() == kDefaultWindow);
    for (std::int64_t k = 0; k < kDefaultWindow; ++k) CHECK(inv.coefficient(Rational(k)).real() == doctest::Approx(1.0));

    const auto inv_t2 = invert(PuiseuxSeries::monomial(1.0, std::int64_t{2}));
    CHECK(inv_t2.is_exact());
    CHECK(inv_t2.order() == Rational(-2));
    CHECK(inv_t2.terms().size() == 1);

    const auto half = invert(PuiseuxSeries::constant(2.0));
    CHECK(half.leading_coefficient().real() == doctest::Approx(0.5));
    CHECK(half.terms().size() == 1);

    CHECK_THROWS_AS(invert(PuiseuxSeries()), IndeterminateOrder);
}

TEST_CASE("evaluate")
{
    CHECK(evaluate(PuiseuxSeries::monomial(1.0, std::int64_t{2}), 0.1).real() == doctest::Approx(0.01));
    CHECK(evaluate(poly({{0, 1.0}, {1, 1.0}}), 0.5).real() == doctest::Approx(1.5));
    CHECK(evaluate(PuiseuxSeries::monomial(1.0, Rational(1, 2)), 0.25).real() == doctest::Approx(0.5));
}

TEST_CASE("power with rational exponent")
{
    // (1 - t)^{1/2} squared is 1 - t up to truncation
    const auto root = power(poly({{0, 1.0}, {1, -1.0}}), Rational(1, 2));
    const auto sq = root * root;
    CHECK(std::abs(sq.coefficient(Rational(0)) - 1.0) < 1e-12);
    CHECK(std::abs(sq.coefficient(Rational(1)) + 1.0) < 1e-12);
    for (std::int64_t k = 2; k < 20; ++k) CHECK(std::abs(sq.coefficient(Rational(k))) < 1e-10);

    const auto m = power(PuiseuxSeries::monomial(4.0, std::int64_t{3}), Rational(1, 2));
    CHECK(m.order() == Rational(3, 2));
    CHECK(m.leading_coefficient().real() == doctest::Approx(2.0));
}

TEST_CASE("order is additive and add respects the minimum")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_laurent(rng, 1 + i % 3);
        const auto b = random_laurent(rng, 1 + (i / 3) % 2);
        CHECK((a * b).order() == a.order() + b.order());
        const auto s = a + b;
        if (a.order() != b.order()) {
            CHECK(s.order() == std::min(a.order(), b.order()));
        } else if (!s.empty()) {
            CHECK(s.order() >= a.order());
        }
    }
}

TEST_CASE("evaluate is multiplicative on exact series")
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_laurent(rng, 2);
        const auto b = random_laurent(rng, 3);
        for (double t0 : {0.3, 0.7}) {
            const Complex lhs = (a * b).evaluate(t0);
            const Complex rhs = a.evaluate(t0) * b.evaluate(t0);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(rhs));
        }
    }
}

TEST_CASE("invert then multiply gives one up to truncation")
{
    std::mt19937_64 rng(13);
    std::normal_distribution<double> g;
    for (int i = 0; i < 100; ++i) {
        std::map<std::int64_t, Complex> terms{{-3, {1.0, 0.5}}};
        for (std::int64_t k = -2; k < 3; ++k) terms[k] = {0.3 * g(rng), 0.3 * g(rng)};
        const PuiseuxSeries a(2, terms);
        const auto p = a * invert(a);
        for (const auto& [k, c] : p.terms()) {
            const Complex want = k == 0 ? Complex{1.0} : Complex{0.0};
            CHECK(std::abs(c - want) < 1e-10);
        }
    }
}

TEST_CASE("ramification is reduced and refined consistently")
{
    const PuiseuxSeries s(4, {{2, 1.0}, {4, 2.0}});
    CHECK(s.ramification() == 2);
    CHECK(s.order() == Rational(1, 2));
    const auto r = s.refined(3);
    CHECK(r.ramification() == 6);
    CHECK(r.coefficient(Rational(1)) == Complex(2.0));
}

TEST_CASE("near-threshold pruning is flagged")
{
    const PuiseuxSeries a(1, {{0, 1.0}, {1, 1.0 + 5e-13}});
    const PuiseuxSeries b(1, {{0, 1.0}, {1, 1.0}});
    const auto d = a - b;
    CHECK(d.near_threshold_pruned());
    CHECK_FALSE(b.near_threshold_pruned());
}
