#include "rigidity/filtration.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "rigidity/leg_embedding.hpp"
#include "rigidity/linalg.hpp"

namespace rigidity {

std::string to_string(FiltrationMode mode) {
    return mode == FiltrationMode::product ? "product" : "commutator";
}

void GeneratorSet::validate() const {
    if (generators.empty()) throw std::invalid_argument("GeneratorSet: generators must be nonempty");
    if (ambient_dim == 0) throw std::invalid_argument("GeneratorSet: ambient_dim must be positive");
    for (const auto& g : generators) {
        if (g.dim() != ambient_dim) {
            throw std::invalid_argument("GeneratorSet: generator dimension " + std::to_string(g.dim()) +
                                        " does not match ambient_dim " + std::to_string(ambient_dim));
        }
        if (frobenius_norm(g) <= 1e-14) {
            throw std::invalid_argument("GeneratorSet: zero generator");
        }
    }
}

namespace {

using Vec = Eigen::VectorXcd;

// Incremental span tracker: kept operators plus an orthonormal basis of
// their flattened vectors. Candidates are admitted through modified
// Gram-Schmidt with one re-orthogonalization pass; a candidate whose
// residual falls below tol_rank times its own norm is span-dependent and
// dropped. Reported level dimensions are recomputed from the kept stack by
// singular values (span_rank) while the stack stays small enough; for very
// large ambient spaces the SVD recomputation is done once on the final
// basis and must agree with the incremental count.
class SpanTracker {
public:
    SpanTracker(std::size_t ambient_dim, double tol_rank)
        : cells_(ambient_dim * ambient_dim), tol_(tol_rank) {}

    bool try_add(ComplexMatrix candidate) {
        Vec v(static_cast<Eigen::Index>(cells_));
        for (std::size_t k = 0; k < cells_; ++k) v(static_cast<Eigen::Index>(k)) = candidate.entries()[k];
        const double norm0 = v.norm();
        if (norm0 <= tol_abs_floor_) return false;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : ortho_) v -= q.dot(v) * q;
        }
        if (v.norm() <= tol_ * norm0) return false;
        v.normalize();
        ortho_.push_back(std::move(v));
        kept_.push_back(std::move(candidate));
        return true;
    }

    const std::vector<ComplexMatrix>& kept() const { return kept_; }
    std::size_t count() const { return kept_.size(); }

    std::size_t official_rank() const { return span_rank(kept_, tol_); }

    bool svd_per_level() const { return cells_ <= 262144; }

private:
    std::size_t cells_;
    double tol_;
    double tol_abs_floor_ = 1e-300;
    std::vector<Vec> ortho_;
    std::vector<ComplexMatrix> kept_;
};

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

}  // namespace

FiltrationReport filtration_dims(const GeneratorSet& gens, std::size_t max_depth, double tol_rank) {
    gens.validate();
    if (max_depth < 1) throw std::invalid_argument("filtration_dims: max_depth must be >= 1");

    const std::size_t m = gens.ambient_dim;
    const std::size_t full = m * m;

    FiltrationReport report;
    report.mode = gens.mode;
    report.ambient_dim = m;

    SpanTracker tracker(m, tol_rank);
    std::vector<ComplexMatrix> frontier;  // elements first kept at the current level

    auto level_rank = [&]() -> std::size_t {
        return tracker.svd_per_level() ? tracker.official_rank() : tracker.count();
    };

    // Level 0.
    if (gens.mode == FiltrationMode::product) {
        if (gens.include_identity) {
            ComplexMatrix id = ComplexMatrix::identity(m);
            if (tracker.try_add(id)) frontier.push_back(std::move(id));
        }
    } else {
        for (const auto& g : gens.generators) {
            if (tracker.try_add(g)) frontier.push_back(g);
        }
        if (gens.include_identity) {
            ComplexMatrix id = ComplexMatrix::identity(m);
            if (tracker.try_add(id)) frontier.push_back(std::move(id));
        }
    }
    std::vector<std::size_t> dims{level_rank()};

    auto expand_level = [&]() -> std::size_t {
        std::vector<ComplexMatrix> next;
        if (dims.back() == full) {
            // Full matrix algebra: the span cannot move again.
            frontier.clear();
            return dims.back();
        }
        if (gens.mode == FiltrationMode::product) {
            // P_{k+1} = P_k + sum_g g * P_k; products with previously kept
            // elements were already candidates at earlier levels, so only
            // the current frontier feeds new words.
            for (const auto& g : gens.generators) {
                for (const auto& w : frontier) {
                    ComplexMatrix c = g * w;
                    if (tracker.try_add(c)) next.push_back(std::move(c));
                }
            }
            if (!gens.include_identity && dims.back() == 0) {
                // Without the empty word level 1 starts from the generators.
                for (const auto& g : gens.generators) {
                    ComplexMatrix c = g;
                    if (tracker.try_add(c)) next.push_back(std::move(c));
                }
            }
        } else {
            // Commutators are bilinear, so basis pairs span the level; pairs
            // of previously kept elements were candidates before, leaving
            // pairs with at least one frontier member. Snapshot the basis:
            // try_add extends it while we iterate.
            const std::vector<ComplexMatrix> snapshot = tracker.kept();
            const std::size_t old_count = snapshot.size() - frontier.size();
            for (std::size_t a = 0; a < snapshot.size(); ++a) {
                for (std::size_t b = a + 1; b < snapshot.size(); ++b) {
                    if (a < old_count && b < old_count) continue;
                    ComplexMatrix c = commutator(snapshot[a], snapshot[b]);
                    if (tracker.try_add(c)) next.push_back(std::move(c));
                }
            }
        }
        frontier = std::move(next);
        return level_rank();
    };

    std::size_t depth = 0;
    while (depth < max_depth) {
        const std::size_t next_rank = expand_level();
        ++depth;
        dims.push_back(next_rank);
        const std::size_t k = dims.size() - 2;
        if (dims[k] == dims[k + 1]) {
            // Confirm stability with one extra level before declaring
            // termination; the confirmation level is not part of dims.
            const std::size_t confirm = expand_level();
            if (confirm == dims[k + 1]) {
                report.termination_depth = k;
                break;
            }
            if (depth >= max_depth) break;
            ++depth;
            dims.push_back(confirm);
        }
    }

    if (!tracker.svd_per_level()) {
        // Large-ambient runs track rank incrementally; validate the final
        // count against the singular-value rank of the kept stack.
        const std::size_t official = tracker.official_rank();
        if (official != tracker.count()) {
            dims.back() = official;
        }
    }

    report.dims = dims;
    report.max_depth_searched = dims.size() - 1;
    report.new_counts.clear();
    for (std::size_t k = 1; k < dims.size(); ++k) report.new_counts.push_back(dims[k] - dims[k - 1]);
    report.saturated = !dims.empty() && dims.back() == full;
    return report;
}

BoundaryScan boundary_scan(const RMatrixSpec& r, std::size_t n_min, std::size_t n_max,
                           std::size_t max_depth, double tol_rank, FiltrationMode mode) {
    if (r.kind != RKind::constant) {
        throw std::invalid_argument("boundary_scan: expected a constant R-matrix");
    }
    if (n_min < 2 || n_min > n_max) {
        throw std::invalid_argument("boundary_scan: need 2 <= n_min <= n_max");
    }
    const std::size_t d = r.local_dim;

    BoundaryScan scan;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        std::size_t ambient = 1;
        for (std::size_t k = 0; k < n; ++k) {
            if (ambient > max_ambient_dim() / d) {
                throw std::invalid_argument("boundary_scan: ambient dimension for n = " + std::to_string(n) +
                                            " exceeds the ceiling " + std::to_string(max_ambient_dim()));
            }
            ambient *= d;
        }
        GeneratorSet gens;
        gens.ambient_dim = ambient;
        gens.mode = mode;
        gens.include_identity = true;
        for (std::size_t i = 1; i + 1 <= n; ++i) {
            gens.generators.push_back(embed_adjacent(r.matrix, i, n, d));
        }
        scan.n_values.push_back(n);
        scan.reports.push_back(filtration_dims(gens, max_depth, tol_rank));
    }
    const bool any_saturated =
        std::any_of(scan.reports.begin(), scan.reports.end(), [](const FiltrationReport& rep) { return rep.saturated; });
    scan.verdict = any_saturated ? "saturating" : "constrained";
    return scan;
}

PresentationWitness finite_presentation_proxy(const GeneratorSet& gens, std::size_t depth_cap, double tol_rank) {
    if (depth_cap < 1) throw std::invalid_argument("finite_presentation_proxy: depth_cap must be >= 1");
    PresentationWitness out;
    out.witness = filtration_dims(gens, depth_cap, tol_rank);
    out.finitely_presented = out.witness.termination_depth.has_value();
    return out;
}

}  // namespace rigidity
