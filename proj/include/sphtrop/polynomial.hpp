#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "sphtrop/series.hpp"

namespace sphtrop {

/// Sparse polynomial in the ambient coordinates of a curve:
/// exponent vector -> complex coefficient.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;

    explicit Polynomial(std::size_t n_vars = 0) : n_vars_(n_vars) {}

    static Polynomial constant(std::size_t n_vars, Complex c);
    /// The i-th coordinate function.
    static Polynomial variable(std::size_t n_vars, std::size_t i);
    /// c * prod x_i^{e_i}
    static Polynomial monomial(Complex c, Exponents e);
    /// Determinant of the square matrix whose (r, c) entry is the coordinate vars[r][c].
    static Polynomial determinant(std::size_t n_vars, const std::vector<std::vector<std::size_t>>& vars);

    std::size_t n_vars() const { return n_vars_; }
    const std::map<Exponents, Complex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// f(coords) as a series; throws InvalidArgument when the arity differs.
    PuiseuxSeries compose(const std::vector<PuiseuxSeries>& coords) const;
    /// f(values) at a numeric point.
    Complex evaluate(const std::vector<Complex>& values) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Complex c, const Polynomial& a);

private:
    void add_term(const Exponents& e, Complex c);

    std::size_t n_vars_;
    std::map<Exponents, Complex> terms_;
};

}  // namespace sphtrop
