#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "sphtrop/errors.hpp"

namespace sphtrop {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

/// Dense n x n complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> d);

    std::size_t size() const { return n_; }
    Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    std::span<const Complex> data() const { return a_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    /// Inverse by Gauss-Jordan with partial pivoting; throws NumericError if singular.
    ComplexMatrix inverse() const;

    double max_abs() const;
    double frobenius_sq() const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

    std::vector<Complex> apply(std::span<const Complex> v) const;

private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

/// Sorted 0-based index subset.
using IndexSet = std::vector<std::size_t>;

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> subsets(std::size_t n, std::size_t k);
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Cofactor expansion for n <= 3, LU with partial pivoting otherwise.
Complex det(const ComplexMatrix& a);

/// Determinant of the submatrix on rows J, columns K (0-based, sorted).
Complex minor(const ComplexMatrix& a, std::span<const std::size_t> rows,
              std::span<const std::size_t> cols);

/// minor(A, I, {0..|I|-1})
Complex flag_minor(const ComplexMatrix& a, std::span<const std::size_t> rows);

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Singular values, descending, as square roots of the eigenvalues of A*A.
std::vector<double> singular_values(const ComplexMatrix& a);

Complex standard_complex_normal(Rng& rng);

/// Gaussian matrix scaled by the principal n-th root of its determinant.
ComplexMatrix random_special_linear(std::size_t n, Rng& rng);

/// Haar-distributed element of SU(n).
ComplexMatrix random_special_unitary(std::size_t n, Rng& rng);

}  // namespace sphtrop
