#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>

#include <boost/rational.hpp>

#include "sphtrop/errors.hpp"

namespace sphtrop {

using Rational = boost::rational<std::int64_t>;
using Complex = std::complex<double>;

/// Coefficients with modulus below this are treated as zero.
inline constexpr double kZeroThreshold = 1e-12;
/// Number of exponent slots kept past the leading term when no window is given.
inline constexpr std::int64_t kDefaultWindow = 24;

/// Truncated Puiseux series  sum_k c_k t^{k/N}  with all k < K.
///
/// Exponents are exact: each term is keyed by its integer numerator over the
/// shared ramification N. A missing truncation means the series is exact
/// (a Laurent polynomial in t^{1/N}). Values are immutable once built; all
/// arithmetic returns fresh series.
class PuiseuxSeries {
public:
    /// The exact zero series.
    PuiseuxSeries() = default;

    /// Builds a series from numerator -> coefficient pairs. Terms at or above
    /// the truncation are dropped, tiny coefficients pruned.
    PuiseuxSeries(std::int64_t ramification, std::map<std::int64_t, Complex> terms,
                  std::optional<std::int64_t> truncation = std::nullopt);

    static PuiseuxSeries constant(Complex c);
    /// c * t^{k/N}
    static PuiseuxSeries monomial(Complex c, std::int64_t k, std::int64_t ramification = 1);
    /// c * t^{e}, e rational
    static PuiseuxSeries monomial(Complex c, Rational e);

    std::int64_t ramification() const { return ramification_; }
    const std::map<std::int64_t, Complex>& terms() const { return terms_; }
    std::optional<std::int64_t> truncation() const { return truncation_; }
    bool is_exact() const { return !truncation_.has_value(); }
    /// True when no nonzero term is stored (the series may still be nonzero
    /// beyond a finite truncation).
    bool empty() const { return terms_.empty(); }

    /// Set when some arithmetic step pruned a coefficient just below the zero
    /// threshold, i.e. a genuinely small coefficient may have been lost.
    bool near_threshold_pruned() const { return near_threshold_pruned_; }

    /// Smallest exponent with a nonzero coefficient.
    /// Throws IndeterminateOrder when the window holds no nonzero term.
    Rational order() const;
    /// Coefficient of the leading term; throws like order().
    Complex leading_coefficient() const;
    /// Truncation bound as a rational exponent (nullopt when exact).
    std::optional<Rational> truncation_exponent() const;

    /// sum c_k t0^{k/N} with the positive real root for fractional powers.
    Complex evaluate(double t0) const;

    /// Coefficient attached to the rational exponent e (zero when absent).
    Complex coefficient(Rational e) const;

    /// Same series expressed over ramification N * factor.
    PuiseuxSeries refined(std::int64_t factor) const;

    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
    PuiseuxSeries operator-() const;

private:
    static PuiseuxSeries make_normalized(std::int64_t ramification,
                                         std::map<std::int64_t, Complex> terms,
                                         std::optional<std::int64_t> truncation,
                                         bool flagged);

    std::int64_t ramification_ = 1;
    std::map<std::int64_t, Complex> terms_;
    std::optional<std::int64_t> truncation_;
    bool near_threshold_pruned_ = false;
};

PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries negate(const PuiseuxSeries& a);
PuiseuxSeries scale(const PuiseuxSeries& a, Complex c);

/// Multiplicative inverse via the geometric series of the normalized tail.
/// Exact inputs are inverted to kDefaultWindow slots past the leading term.
PuiseuxSeries invert(const PuiseuxSeries& a);

/// a^p for rational p through the binomial series of the normalized tail.
/// The leading coefficient uses the principal branch of c^p.
PuiseuxSeries power(const PuiseuxSeries& a, Rational p);

inline Rational order(const PuiseuxSeries& s) { return s.order(); }
inline Complex evaluate(const PuiseuxSeries& s, double t0) { return s.evaluate(t0); }

}  // namespace sphtrop
