#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigidity/complex_matrix.hpp"
#include "rigidity/config.hpp"
#include "rigidity/linalg.hpp"

namespace rigidity {

enum class RKind { constant, spectral };

/// A two-site operator: either one constant matrix or a spectral family
/// u -> R(u) sampled at sample_params. Outputs always have dim local_dim^2.
struct RMatrixSpec {
    RKind kind = RKind::constant;
    std::size_t local_dim = 2;
    ComplexMatrix matrix{1};
    std::function<ComplexMatrix(Complex)> family;
    std::vector<Complex> sample_params;

    static RMatrixSpec constant(ComplexMatrix m);
    static RMatrixSpec spectral(std::size_t local_dim,
                                std::function<ComplexMatrix(Complex)> family,
                                std::vector<Complex> sample_params);

    /// Constant kind ignores u; spectral kind evaluates the family and
    /// validates the output dimension.
    ComplexMatrix at(Complex u) const;
};

struct YbeSample {
    std::optional<Complex> u;  // absent for the constant kind
    std::optional<Complex> v;
    double defect_rel = 0.0;  // ||Delta||_F / ||R12 R13 R23||_F
    double defect_abs = 0.0;  // ||Delta||_F
};

/// Outcome of a Yang-Baxter defect scan. Defect norms are reported relative
/// to the Frobenius norm of the left triple assembly, which is the scale the
/// pass tolerance refers to. boundary_free combines the defect verdict with
/// the caller-asserted pairwise-generation hypothesis; both inputs are
/// recorded separately.
struct YbeReport {
    std::string kind;
    std::vector<YbeSample> samples;
    double max_defect = 0.0;
    double tolerance = 0.0;
    bool passes = false;
    std::size_t checked_samples = 0;
    bool pairwise_generation_asserted = false;
    bool boundary_free = false;
};

/// R12 R13 R23 - R23 R13 R12 on V^(x)3 for a constant R, with
/// R13 = P23 R12 P23. Throws std::domain_error when R is singular.
ComplexMatrix yb_defect_constant(const RMatrixSpec& r,
                                 double tol_rank = Tolerances{}.tol_rank);

/// Difference-form spectral defect
///   R12(u-v) R13(u) R23(v) - R23(v) R13(u) R12(u-v).
ComplexMatrix yb_defect_spectral(const RMatrixSpec& r, Complex u, Complex v);

/// Default (u, v) grid for spectral checks: all ordered pairs drawn from
/// {-1, -1/2, 1/2, 1}. Pairs with u == v are kept only when the family is
/// invertible at 0 (they degenerate to the constant check at R(0)).
std::vector<std::pair<Complex, Complex>> default_spectral_grid(const RMatrixSpec& r);

/// Evaluates the defect at the constant matrix or over (u, v) pairs
/// (sample_params ordered pairs when given, otherwise the default grid) and
/// reports pass/fail against the tolerance. The boundary-free verdict holds
/// exactly when the defect test passes and the caller asserts pairwise
/// generation at depth 2.
YbeReport check_boundary_free(const RMatrixSpec& r, double tolerance,
                              bool pairwise_generation_asserted = true);

/// Span of all words of length <= max_word_len in {R12, R13, R23} inside
/// End(V^(x)3), empty word included: the truncated realization of the
/// three-body algebra generated by the pairwise copies of R.
OperatorSpan pairwise_generation_rank(const RMatrixSpec& r, std::size_t max_word_len,
                                      double tol_rank = Tolerances{}.tol_rank);

}  // namespace rigidity
