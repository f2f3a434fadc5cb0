#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace rigidity {

using Complex = std::complex<double>;

/// Dense square matrix over complex doubles, row-major. The carrier for all
/// operators in the library. Entries are required to be finite; constructors
/// and mutating entry points validate this.
class ComplexMatrix {
public:
    /// Zero matrix of the given dimension (dim >= 1).
    explicit ComplexMatrix(std::size_t dim);

    static ComplexMatrix identity(std::size_t dim);

    /// Builds from row-major entries; throws std::invalid_argument on size
    /// mismatch or non-finite entries.
    static ComplexMatrix from_entries(std::size_t dim, std::vector<Complex> entries);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return entries_.size(); }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }
    Complex* data() { return entries_.data(); }
    const Complex* data() const { return entries_.data(); }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    ComplexMatrix adjoint() const;
    Complex trace() const;
    bool all_finite() const;

    /// Number of exactly-zero entries' complement (count of nonzeros).
    std::size_t nonzero_count() const;

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, const ComplexMatrix& a);

/// Kronecker product; result dimension a.dim * b.dim. Throws when the result
/// would exceed max_ambient_dim().
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// sqrt of the sum of squared entry magnitudes.
double frobenius_norm(const ComplexMatrix& a);

/// Max entrywise absolute difference; dims must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace rigidity
