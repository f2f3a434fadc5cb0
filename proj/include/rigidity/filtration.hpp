#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/complex_matrix.hpp"
#include "rigidity/config.hpp"
#include "rigidity/yang_baxter.hpp"

namespace rigidity {

/// Two proxies for the interaction-depth filtration. Product mode takes
/// P_k = span of all words of length <= k in the generators (the empty word
/// is the identity when include_identity is set). Commutator mode starts
/// from P_0 = span(generators plus identity when flagged) and closes each
/// level under commutators of the previous basis. Reports always name the
/// mode used.
enum class FiltrationMode { product, commutator };

std::string to_string(FiltrationMode mode);

struct GeneratorSet {
    std::size_t ambient_dim = 0;
    std::vector<ComplexMatrix> generators;
    FiltrationMode mode = FiltrationMode::product;
    bool include_identity = true;

    /// Throws std::invalid_argument when generators are empty, dims differ,
    /// or a generator is numerically zero.
    void validate() const;
};

/// Dimension profile d_0 <= d_1 <= ... of the depth filtration.
/// termination_depth is the least k with d_k == d_{k+1}, set only after the
/// equality is confirmed stable for one extra level; dims is reported
/// through level termination_depth + 1. saturated means the full matrix
/// algebra (ambient_dim^2) was reached. In finite ambient dimension every
/// filtration terminates eventually, so the interesting signal is
/// constrained-versus-saturating growth rather than termination itself.
struct FiltrationReport {
    FiltrationMode mode = FiltrationMode::product;
    std::size_t ambient_dim = 0;
    std::vector<std::size_t> dims;
    std::optional<std::size_t> termination_depth;
    std::vector<std::size_t> new_counts;
    bool saturated = false;
    std::size_t max_depth_searched = 0;
};

/// Computes the filtration dimension sequence up to max_depth levels.
/// Word enumeration is breadth-first with span-based pruning: a candidate is
/// kept only when it increases the span rank. Reaching max_depth without a
/// confirmed stabilization is not an error; the report simply carries no
/// termination_depth.
FiltrationReport filtration_dims(const GeneratorSet& gens, std::size_t max_depth,
                                 double tol_rank = Tolerances{}.tol_rank);

struct BoundaryScan {
    std::vector<std::size_t> n_values;
    std::vector<FiltrationReport> reports;
    /// "constrained" when no report saturates its full matrix algebra,
    /// "saturating" otherwise.
    std::string verdict;
};

/// For each n in [n_min, n_max] builds the bond generators
/// {R_{i,i+1} : 1 <= i <= n-1} of a constant R on (C^d)^(x)n and runs
/// filtration_dims, so termination depth and saturation can be compared
/// against ambient growth.
BoundaryScan boundary_scan(const RMatrixSpec& r, std::size_t n_min, std::size_t n_max,
                           std::size_t max_depth, double tol_rank = Tolerances{}.tol_rank,
                           FiltrationMode mode = FiltrationMode::product);

struct PresentationWitness {
    bool finitely_presented = false;
    FiltrationReport witness;
};

/// Desk-scale stand-in for finite presentation: true iff the filtration
/// stabilizes at depth <= depth_cap in this faithful matrix realization.
/// The witness report distinguishes constrained from saturated termination.
PresentationWitness finite_presentation_proxy(const GeneratorSet& gens, std::size_t depth_cap,
                                              double tol_rank = Tolerances{}.tol_rank);

}  // namespace rigidity
