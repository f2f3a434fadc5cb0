#include "rigidity/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rigidity {

namespace {

using Mat = Eigen::MatrixXcd;

// Columns of the result are the flattened inputs (cells x count), so that a
// Householder QR yields the triangular factor whose singular values equal
// those of the stack.
Mat flatten_to_columns(const std::vector<ComplexMatrix>& mats) {
    const std::size_t cells = mats.front().size();
    Mat stack(static_cast<Eigen::Index>(cells), static_cast<Eigen::Index>(mats.size()));
    for (std::size_t c = 0; c < mats.size(); ++c) {
        const auto& entries = mats[c].entries();
        for (std::size_t r = 0; r < cells; ++r) stack(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entries[r];
    }
    return stack;
}

}  // namespace

std::vector<double> stack_singular_values(const std::vector<ComplexMatrix>& mats) {
    if (mats.empty()) return {};
    const std::size_t dim = mats.front().dim();
    for (const auto& m : mats) {
        if (m.dim() != dim) throw std::invalid_argument("stack_singular_values: mixed dimensions");
    }
    Mat stack = flatten_to_columns(mats);
    const Eigen::Index count = stack.cols();
    Mat triangular;
    if (stack.rows() > count) {
        Eigen::HouseholderQR<Mat> qr(stack);
        triangular = qr.matrixQR().topRows(count).triangularView<Eigen::Upper>();
    } else {
        triangular = stack;
    }
    Eigen::JacobiSVD<Mat> svd(triangular);
    std::vector<double> out(svd.singularValues().data(), svd.singularValues().data() + svd.singularValues().size());
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

std::size_t span_rank(const std::vector<ComplexMatrix>& mats, double tol_rank) {
    if (mats.empty()) return 0;
    const std::vector<double> sv = stack_singular_values(mats);
    if (sv.empty() || sv.front() == 0.0) return 0;
    const double cutoff = tol_rank * sv.front();
    std::size_t rank = 0;
    for (double s : sv) {
        if (s > cutoff) ++rank;
    }
    return rank;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, double tol_herm) {
    const double scale = frobenius_norm(a);
    const double asymmetry = frobenius_norm(a - a.adjoint());
    if (asymmetry > tol_herm * scale) {
        throw std::domain_error("hermitian_eigenvalues: input is not Hermitian, ||a - a^H||_F = " +
                                std::to_string(asymmetry) + " against scale " + std::to_string(scale));
    }
    const std::size_t n = a.dim();
    Mat m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                0.5 * (a(i, j) + std::conj(a(j, i)));
    Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigenvalues: eigensolver failed to converge");
    }
    return {solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size()};
}

bool is_invertible(const ComplexMatrix& a, double tol_rank) {
    const std::size_t n = a.dim();
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
        a.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    Eigen::JacobiSVD<Mat> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return false;
    return sv(sv.size() - 1) > tol_rank * sv(0);
}

}  // namespace rigidity
