#include "sphtrop/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace sphtrop {

namespace {

int permutation_sign(const std::vector<std::size_t>& p)
{
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

PuiseuxSeries series_power(const PuiseuxSeries& s, unsigned e)
{
    PuiseuxSeries out = PuiseuxSeries::constant(1.0);
    PuiseuxSeries base = s;
    while (e > 0) {
        if (e & 1u) out = out * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return out;
}

}  // namespace

void Polynomial::add_term(const Exponents& e, Complex c)
{
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (it->second == Complex{0.0, 0.0}) terms_.erase(it);
}

Polynomial Polynomial::constant(std::size_t n_vars, Complex c)
{
    Polynomial p(n_vars);
    if (c != Complex{0.0, 0.0}) p.terms_[Exponents(n_vars, 0)] = c;
    return p;
}

Polynomial Polynomial::variable(std::size_t n_vars, std::size_t i)
{
    if (i >= n_vars) throw InvalidArgument("variable index out of range");
    Exponents e(n_vars, 0);
    e[i] = 1;
    return monomial(1.0, std::move(e));
}

Polynomial Polynomial::monomial(Complex c, Exponents e)
{
    Polynomial p(e.size());
    if (c != Complex{0.0, 0.0}) p.terms_[std::move(e)] = c;
    return p;
}

Polynomial Polynomial::determinant(std::size_t n_vars, const std::vector<std::vector<std::size_t>>& vars)
{
    const std::size_t k = vars.size();
    for (const auto& row : vars)
        if (row.size() != k) throw InvalidArgument("determinant needs a square variable table");
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Polynomial out(n_vars);
    do {
        Exponents e(n_vars, 0);
        for (std::size_t r = 0; r < k; ++r) {
            if (vars[r][perm[r]] >= n_vars) throw InvalidArgument("variable index out of range");
            ++e[vars[r][perm[r]]];
        }
        out.add_term(e, static_cast<double>(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

PuiseuxSeries Polynomial::compose(const std::vector<PuiseuxSeries>& coords) const
{
    if (coords.size() != n_vars_) throw InvalidArgument("polynomial arity does not match the curve");
    PuiseuxSeries sum;
    for (const auto& [e, c] : terms_) {
        PuiseuxSeries term = PuiseuxSeries::constant(c);
        for (std::size_t i = 0; i < n_vars_; ++i)
            if (e[i] > 0) term = term * series_power(coords[i], e[i]);
        sum = sum + term;
    }
    return sum;
}

Complex Polynomial::evaluate(const std::vector<Complex>& values) const
{
    if (values.size() != n_vars_) throw InvalidArgument("polynomial arity does not match the point");
    Complex sum{0.0, 0.0};
    for (const auto& [e, c] : terms_) {
        Complex term = c;
        for (std::size_t i = 0; i < n_vars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= values[i];
        sum += term;
    }
    return sum;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    if (a.n_vars_ != b.n_vars_) throw InvalidArgument("polynomial arity mismatch");
    Polynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Complex{-1.0, 0.0} * b; }

Polynomial operator*(Complex c, const Polynomial& a)
{
    Polynomial out(a.n_vars_);
    for (const auto& [e, v] : a.terms_) out.add_term(e, c * v);
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.n_vars_ != b.n_vars_) throw InvalidArgument("polynomial arity mismatch");
    Polynomial out(a.n_vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Polynomial::Exponents e(a.n_vars_);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

}  // namespace sphtrop
