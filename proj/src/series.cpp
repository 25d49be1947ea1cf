#include "sphtrop/series.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace sphtrop {

namespace {

// Pruned coefficients at or above this modulus raise the near-threshold flag.
constexpr double kNearThresholdFloor = 1e-15;

using Bound = std::optional<std::int64_t>;  // nullopt = +infinity

Bound add_bound(Bound a, Bound b)
{
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

Bound min_bound(Bound a, Bound b)
{
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

Bound scale_bound(Bound a, std::int64_t f)
{
    if (!a) return std::nullopt;
    return *a * f;
}

// Lower bound on the order numerator: leading key, else the truncation.
Bound order_bound(const PuiseuxSeries& s)
{
    if (!s.empty()) return s.terms().begin()->first;
    return s.truncation();
}

}  // namespace

PuiseuxSeries::PuiseuxSeries(std::int64_t ramification, std::map<std::int64_t, Complex> terms,
                             std::optional<std::int64_t> truncation)
{
    if (ramification < 1) throw InvalidArgument("ramification must be >= 1");
    *this = make_normalized(ramification, std::move(terms), truncation, false);
}

PuiseuxSeries PuiseuxSeries::make_normalized(std::int64_t ramification,
                                             std::map<std::int64_t, Complex> terms,
                                             std::optional<std::int64_t> truncation,
                                             bool flagged)
{
    PuiseuxSeries s;
    for (auto it = terms.begin(); it != terms.end();) {
        const double mod = std::abs(it->second);
        if (!std::isfinite(mod)) throw NumericError("non-finite series coefficient");
        if ((truncation && it->first >= *truncation) || mod < kZeroThreshold) {
            if (mod >= kNearThresholdFloor && mod < kZeroThreshold &&
                !(truncation && it->first >= *truncation))
                flagged = true;
            it = terms.erase(it);
        } else {
            ++it;
        }
    }

    std::int64_t g = ramification;
    for (const auto& [k, c] : terms) g = std::gcd(g, k);
    if (truncation) g = std::gcd(g, *truncation);
    if (g == 0) g = 1;

    s.ramification_ = ramification / g;
    if (truncation) s.truncation_ = *truncation / g;
    for (const auto& [k, c] : terms) s.terms_.emplace(k / g, c);
    s.near_threshold_pruned_ = flagged;
    return s;
}

PuiseuxSeries PuiseuxSeries::constant(Complex c)
{
    return PuiseuxSeries(1, {{0, c}});
}

PuiseuxSeries PuiseuxSeries::monomial(Complex c, std::int64_t k, std::int64_t ramification)
{
    return PuiseuxSeries(ramification, {{k, c}});
}

PuiseuxSeries PuiseuxSeries::monomial(Complex c, Rational e)
{
    return PuiseuxSeries(e.denominator(), {{e.numerator(), c}});
}

Rational PuiseuxSeries::order() const
{
    if (terms_.empty()) {
        if (truncation_)
            throw IndeterminateOrder("no nonzero term below t^" +
                                     std::to_string(*truncation_) + "/" +
                                     std::to_string(ramification_));
        throw IndeterminateOrder("order of the zero series");
    }
    return Rational(terms_.begin()->first, ramification_);
}

Complex PuiseuxSeries::leading_coefficient() const
{
    (void)order();
    return terms_.begin()->second;
}

std::optional<Rational> PuiseuxSeries::truncation_exponent() const
{
    if (!truncation_) return std::nullopt;
    return Rational(*truncation_, ramification_);
}

Complex PuiseuxSeries::evaluate(double t0) const
{
    Complex sum{0.0, 0.0};
    for (const auto& [k, c] : terms_)
        sum += c * std::pow(t0, static_cast<double>(k) / static_cast<double>(ramification_));
    return sum;
}

Complex PuiseuxSeries::coefficient(Rational e) const
{
    if ((ramification_ * e.numerator()) % e.denominator() != 0) return {0.0, 0.0};
    const auto k = ramification_ * e.numerator() / e.denominator();
    auto it = terms_.find(k);
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

PuiseuxSeries PuiseuxSeries::refined(std::int64_t factor) const
{
    // Bypass normalization so the finer ramification is kept.
    PuiseuxSeries s;
    s.ramification_ = ramification_ * factor;
    s.truncation_ = scale_bound(truncation_, factor);
    for (const auto& [k, c] : terms_) s.terms_.emplace(k * factor, c);
    s.near_threshold_pruned_ = near_threshold_pruned_;
    return s;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b)
{
    const auto n = std::lcm(a.ramification_, b.ramification_);
    const auto ra = a.refined(n / a.ramification_);
    const auto rb = b.refined(n / b.ramification_);
    auto terms = ra.terms_;
    for (const auto& [k, c] : rb.terms_) terms[k] += c;
    return PuiseuxSeries::make_normalized(n, std::move(terms),
                                          min_bound(ra.truncation_, rb.truncation_),
                                          a.near_threshold_pruned_ || b.near_threshold_pruned_);
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b)
{
    return a + (-b);
}

PuiseuxSeries PuiseuxSeries::operator-() const
{
    PuiseuxSeries s = *this;
    for (auto& [k, c] : s.terms_) c = -c;
    return s;
}

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b)
{
    const auto n = std::lcm(a.ramification_, b.ramification_);
    const auto ra = a.refined(n / a.ramification_);
    const auto rb = b.refined(n / b.ramification_);
    const Bound trunc = min_bound(add_bound(ra.truncation_, order_bound(rb)),
                                  add_bound(rb.truncation_, order_bound(ra)));
    std::map<std::int64_t, Complex> terms;
    for (const auto& [ka, ca] : ra.terms_) {
        for (const auto& [kb, cb] : rb.terms_) {
            const auto k = ka + kb;
            if (trunc && k >= *trunc) break;
            terms[k] += ca * cb;
        }
    }
    return PuiseuxSeries::make_normalized(n, std::move(terms), trunc,
                                          a.near_threshold_pruned_ || b.near_threshold_pruned_);
}

PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + b; }
PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a * b; }
PuiseuxSeries negate(const PuiseuxSeries& a) { return -a; }

PuiseuxSeries scale(const PuiseuxSeries& a, Complex c)
{
    std::map<std::int64_t, Complex> terms;
    for (const auto& [k, v] : a.terms()) terms.emplace(k, v * c);
    return PuiseuxSeries(a.ramification(), std::move(terms), a.truncation());
}

namespace {

// Splits a = c0 t^{k0/N} (1 + u) and returns the binomial-type sum
// sum_j coeff(j) u^j truncated to the relative window of a.
template <class CoeffFn>
PuiseuxSeries unit_series_sum(const PuiseuxSeries& a, CoeffFn coeff)
{
    const auto n = a.ramification();
    const auto k0 = a.terms().begin()->first;
    const Complex c0 = a.terms().begin()->second;

    std::map<std::int64_t, Complex> tail;
    for (const auto& [k, c] : a.terms())
        if (k != k0) tail.emplace(k - k0, c / c0);

    const bool exact_unit = tail.empty() && a.is_exact();
    if (exact_unit) return PuiseuxSeries::constant(coeff(0));

    const std::int64_t window = a.truncation() ? *a.truncation() - k0 : kDefaultWindow;
    const PuiseuxSeries u(n, std::move(tail), window);

    PuiseuxSeries sum(n, {{0, coeff(0)}}, window);
    PuiseuxSeries power_of_u(n, {{0, Complex{1.0, 0.0}}}, window);
    for (std::size_t j = 1; j <= static_cast<std::size_t>(window) + 1; ++j) {
        power_of_u = power_of_u * u;
        if (power_of_u.empty()) break;
        sum = sum + scale(power_of_u, coeff(j));
    }
    return sum;
}

}  // namespace

PuiseuxSeries invert(const PuiseuxSeries& a)
{
    const Rational e0 = a.order();
    const Complex c0 = a.leading_coefficient();
    const auto unit = unit_series_sum(a, [](std::size_t j) {
        return Complex{(j % 2 == 0) ? 1.0 : -1.0, 0.0};
    });
    return unit * PuiseuxSeries::monomial(1.0 / c0, -e0);
}

PuiseuxSeries power(const PuiseuxSeries& a, Rational p)
{
    if (p == Rational(0)) return PuiseuxSeries::constant(1.0);
    const Rational e0 = a.order();
    const Complex c0 = a.leading_coefficient();
    const double pd = boost::rational_cast<double>(p);
    const auto unit = unit_series_sum(a, [pd](std::size_t j) {
        double b = 1.0;
        for (std::size_t i = 0; i < j; ++i)
            b *= (pd - static_cast<double>(i)) / static_cast<double>(i + 1);
        return Complex{b, 0.0};
    });
    return unit * PuiseuxSeries::monomial(std::pow(c0, pd), e0 * p);
}

}  // namespace sphtrop
