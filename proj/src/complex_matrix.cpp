#include "rigidity/complex_matrix.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "rigidity/config.hpp"

namespace rigidity {

std::size_t max_ambient_dim() {
    static const std::size_t value = [] {
        if (const char* env = std::getenv("RIGIDITY_MAX_DIM")) {
            char* end = nullptr;
            unsigned long long parsed = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && parsed >= 1) return static_cast<std::size_t>(parsed);
        }
        return kDefaultMaxAmbientDim;
    }();
    return value;
}

namespace {

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch " +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}

using EigenMap = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using EigenMapMut = Eigen::Map<Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {
    if (dim == 0) throw std::invalid_argument("ComplexMatrix: dimension must be positive");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
}

ComplexMatrix ComplexMatrix::from_entries(std::size_t dim, std::vector<Complex> entries) {
    if (dim == 0) throw std::invalid_argument("ComplexMatrix: dimension must be positive");
    if (entries.size() != dim * dim) {
        throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(dim * dim) +
                                    " entries, got " + std::to_string(entries.size()));
    }
    ComplexMatrix m(dim);
    m.entries_ = std::move(entries);
    if (!m.all_finite()) throw std::invalid_argument("ComplexMatrix: non-finite entry");
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    check_same_dim(*this, other, "operator+=");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    check_same_dim(*this, other, "operator-=");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    }
    return true;
}

std::size_t ComplexMatrix::nonzero_count() const {
    std::size_t count = 0;
    for (const auto& e : entries_) {
        if (e.real() != 0.0 || e.imag() != 0.0) ++count;
    }
    return count;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out = a;
    out += b;
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out = a;
    out -= b;
    return out;
}

ComplexMatrix operator*(Complex scalar, const ComplexMatrix& a) {
    ComplexMatrix out = a;
    out *= scalar;
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "operator*");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);

    // Embedded bond operators and permutation words are mostly zeros;
    // walking the nonzeros of the sparser factor turns an O(n^3) product
    // into O(nnz * n), which is what makes large-n filtrations tractable.
    const std::size_t nnz_a = a.nonzero_count();
    const std::size_t nnz_b = b.nonzero_count();
    const std::size_t dense_cost = n * n * n;
    if (nnz_a * n * 4 < dense_cost || nnz_b * n * 4 < dense_cost) {
        if (nnz_a <= nnz_b) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex v = a(i, k);
                    if (v.real() == 0.0 && v.imag() == 0.0) continue;
                    const Complex* brow = b.data() + k * n;
                    Complex* orow = out.data() + i * n;
                    for (std::size_t j = 0; j < n; ++j) orow[j] += v * brow[j];
                }
            }
        } else {
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex v = b(k, j);
                    if (v.real() == 0.0 && v.imag() == 0.0) continue;
                    for (std::size_t i = 0; i < n; ++i) out(i, j) += a(i, k) * v;
                }
            }
        }
        return out;
    }

    EigenMap ma(a.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    EigenMap mb(b.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    EigenMapMut mo(out.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    mo.noalias() = ma * mb;
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    if (na > max_ambient_dim() / nb) {
        throw std::invalid_argument("kron: result dimension " + std::to_string(na) + "*" +
                                    std::to_string(nb) + " exceeds the ceiling " +
                                    std::to_string(max_ambient_dim()));
    }
    const std::size_t n = na * nb;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const Complex v = a(i, j);
            if (v.real() == 0.0 && v.imag() == 0.0) continue;
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    out(i * nb + k, j * nb + l) = v * b(k, l);
                }
            }
        }
    }
    return out;
}

double frobenius_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (const auto& e : a.entries()) sum += std::norm(e);
    return std::sqrt(sum);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

}  // namespace rigidity
