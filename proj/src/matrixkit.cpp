#include "sphtrop/matrixkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sphtrop {

namespace {

constexpr double kJacobiRelTol = 1e-14;
constexpr int kJacobiSweepCap = 64;
constexpr int kSampleRetries = 64;

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), a_(n * n, Complex{0.0, 0.0})
{
    if (n == 0) throw InvalidArgument("matrix dimension must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size())
{
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw InvalidArgument("matrix must be square");
        std::size_t j = 0;
        for (const auto& v : row) (*this)(i, j++) = v;
        ++i;
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d)
{
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const
{
    ComplexMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const
{
    ComplexMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const
{
    ComplexMatrix m = *this;
    for (auto& v : m.a_) v = std::conj(v);
    return m;
}

ComplexMatrix ComplexMatrix::inverse() const
{
    ComplexMatrix lhs = *this;
    ComplexMatrix rhs = identity(n_);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n_; ++r)
            if (std::abs(lhs(r, col)) > std::abs(lhs(piv, col))) piv = r;
        if (std::abs(lhs(piv, col)) == 0.0) throw NumericError("singular matrix");
        if (piv != col) {
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(lhs(piv, j), lhs(col, j));
                std::swap(rhs(piv, j), rhs(col, j));
            }
        }
        const Complex inv = 1.0 / lhs(col, col);
        for (std::size_t j = 0; j < n_; ++j) {
            lhs(col, j) *= inv;
            rhs(col, j) *= inv;
        }
        for (std::size_t r = 0; r < n_; ++r) {
            if (r == col) continue;
            const Complex f = lhs(r, col);
            if (f == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                lhs(r, j) -= f * lhs(col, j);
                rhs(r, j) -= f * rhs(col, j);
            }
        }
    }
    return rhs;
}

double ComplexMatrix::max_abs() const
{
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::frobenius_sq() const
{
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return s;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.n_ != b.n_) throw InvalidArgument("dimension mismatch in product");
    ComplexMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t k = 0; k < a.n_; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a)
{
    ComplexMatrix c = a;
    for (auto& v : c.a_) v *= s;
    return c;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.n_ != b.n_) throw InvalidArgument("dimension mismatch in sum");
    ComplexMatrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return a + Complex{-1.0, 0.0} * b;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const
{
    if (v.size() != n_) throw InvalidArgument("dimension mismatch in apply");
    std::vector<Complex> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

std::vector<IndexSet> subsets(std::size_t n, std::size_t k)
{
    std::vector<IndexSet> out;
    if (k > n) return out;
    IndexSet s(k);
    std::iota(s.begin(), s.end(), std::size_t{0});
    while (true) {
        out.push_back(s);
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
    return out;
}

std::uint64_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Complex det(const ComplexMatrix& a)
{
    const auto n = a.size();
    if (n == 1) return a(0, 0);
    if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (n == 3) {
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
               a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    }
    ComplexMatrix lu = a;
    Complex d{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(lu(r, col)) > std::abs(lu(piv, col))) piv = r;
        if (std::abs(lu(piv, col)) == 0.0) return {0.0, 0.0};
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu(piv, j), lu(col, j));
            d = -d;
        }
        d *= lu(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex f = lu(r, col) / lu(col, col);
            for (std::size_t j = col; j < n; ++j) lu(r, j) -= f * lu(col, j);
        }
    }
    return d;
}

Complex minor(const ComplexMatrix& a, std::span<const std::size_t> rows,
              std::span<const std::size_t> cols)
{
    if (rows.size() != cols.size()) throw InvalidArgument("minor: |J| != |K|");
    if (rows.empty()) return {1.0, 0.0};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= a.size() || cols[i] >= a.size())
            throw InvalidArgument("minor: index out of range");
        if (i > 0 && (rows[i] <= rows[i - 1] || cols[i] <= cols[i - 1]))
            throw InvalidArgument("minor: index sets must be strictly increasing");
    }
    ComplexMatrix sub(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = a(rows[i], cols[j]);
    return det(sub);
}

Complex flag_minor(const ComplexMatrix& a, std::span<const std::size_t> rows)
{
    IndexSet cols(rows.size());
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    return minor(a, rows, cols);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h_in)
{
    ComplexMatrix h = h_in;
    const auto n = h.size();
    const double scale = std::sqrt(h.frobenius_sq());
    auto off_mass = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(h(i, j));
        return std::sqrt(s);
    };

    int sweep = 0;
    while (off_mass() > kJacobiRelTol * scale) {
        if (++sweep > kJacobiSweepCap) throw NumericError("Jacobi sweep cap exceeded");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex hpq = h(p, q);
                const double g = std::abs(hpq);
                if (g == 0.0) continue;
                const Complex phase = hpq / g;
                const double tau = (h(q, q).real() - h(p, p).real()) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // J = D R with D = diag(1, conj(phase)) on (p, q) and R the real rotation.
                const Complex jpp = c, jpq = s;
                const Complex jqp = -s * std::conj(phase), jqq = c * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex hkp = h(k, p), hkq = h(k, q);
                    h(k, p) = hkp * jpp + hkq * jqp;
                    h(k, q) = hkp * jpq + hkq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex hpk = h(p, k), hqk = h(q, k);
                    h(p, k) = std::conj(jpp) * hpk + std::conj(jqp) * hqk;
                    h(q, k) = std::conj(jpq) * hpk + std::conj(jqq) * hqk;
                }
                h(p, q) = h(q, p) = 0.0;
                h(p, p) = h(p, p).real();
                h(q, q) = h(q, q).real();
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = h(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::vector<double> singular_values(const ComplexMatrix& a)
{
    auto ev = hermitian_eigenvalues(a.adjoint() * a);
    std::vector<double> sv;
    sv.reserve(ev.size());
    for (auto it = ev.rbegin(); it != ev.rend(); ++it) sv.push_back(std::sqrt(std::max(*it, 0.0)));
    return sv;
}

Complex standard_complex_normal(Rng& rng)
{
    std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
    const double re = nd(rng);
    const double im = nd(rng);
    return {re, im};
}

ComplexMatrix random_special_linear(std::size_t n, Rng& rng)
{
    for (int attempt = 0; attempt < kSampleRetries; ++attempt) {
        ComplexMatrix a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = standard_complex_normal(rng);
        const Complex d = det(a);
        if (std::abs(d) < 1e-8) continue;
        const Complex root = std::exp(std::log(d) / static_cast<double>(n));
        ComplexMatrix s = (1.0 / root) * a;
        if (std::abs(det(s) - 1.0) < 1e-12) return s;
    }
    throw NumericError("random_special_linear: retry budget exhausted");
}

ComplexMatrix random_special_unitary(std::size_t n, Rng& rng)
{
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = standard_complex_normal(rng);

    // Householder QR; Q's columns are then rescaled by the phases of diag(R).
    ComplexMatrix r = g;
    ComplexMatrix q = ComplexMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        double norm_x = 0.0;
        for (std::size_t i = k; i < n; ++i) norm_x += std::norm(r(i, k));
        norm_x = std::sqrt(norm_x);
        if (norm_x == 0.0) continue;
        const Complex x0 = r(k, k);
        const Complex ph = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex{1.0, 0.0};
        std::vector<Complex> v(n, 0.0);
        v[k] = x0 + ph * norm_x;
        for (std::size_t i = k + 1; i < n; ++i) v[i] = r(i, k);
        double vn = 0.0;
        for (std::size_t i = k; i < n; ++i) vn += std::norm(v[i]);
        if (vn == 0.0) continue;
        // H = I - 2 v v^* / (v^* v); apply R <- H R, Q <- Q H.
        for (std::size_t j = 0; j < n; ++j) {
            Complex dot = 0.0;
            for (std::size_t i = k; i < n; ++i) dot += std::conj(v[i]) * r(i, j);
            dot *= 2.0 / vn;
            for (std::size_t i = k; i < n; ++i) r(i, j) -= v[i] * dot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            Complex dot = 0.0;
            for (std::size_t l = k; l < n; ++l) dot += q(i, l) * v[l];
            dot *= 2.0 / vn;
            for (std::size_t l = k; l < n; ++l) q(i, l) -= dot * std::conj(v[l]);
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Complex rjj = r(j, j);
        const Complex ph = std::abs(rjj) > 0.0 ? rjj / std::abs(rjj) : Complex{1.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) q(i, j) *= ph;
    }
    const Complex d = det(q);
    const Complex fix = std::conj(d / std::abs(d));
    for (std::size_t i = 0; i < n; ++i) q(i, 0) *= fix;
    return q;
}

}  // namespace sphtrop
