#include "rigidity/yang_baxter.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "rigidity/leg_embedding.hpp"

namespace rigidity {

RMatrixSpec RMatrixSpec::constant(ComplexMatrix m) {
    RMatrixSpec spec;
    spec.kind = RKind::constant;
    std::size_t d = 1;
    while (d * d < m.dim()) ++d;
    if (d * d != m.dim()) {
        throw std::invalid_argument("RMatrixSpec: a two-site operator needs a square local dimension, got dim " +
                                    std::to_string(m.dim()));
    }
    spec.local_dim = d;
    spec.matrix = std::move(m);
    return spec;
}

RMatrixSpec RMatrixSpec::spectral(std::size_t local_dim, std::function<ComplexMatrix(Complex)> family,
                                  std::vector<Complex> sample_params) {
    RMatrixSpec spec;
    spec.kind = RKind::spectral;
    spec.local_dim = local_dim;
    spec.matrix = ComplexMatrix(local_dim * local_dim);
    spec.family = std::move(family);
    spec.sample_params = std::move(sample_params);
    return spec;
}

ComplexMatrix RMatrixSpec::at(Complex u) const {
    if (kind == RKind::constant) return matrix;
    if (!family) throw std::invalid_argument("RMatrixSpec: spectral kind without a family");
    ComplexMatrix out = family(u);
    if (out.dim() != local_dim * local_dim) {
        throw std::invalid_argument("RMatrixSpec: family output dimension " + std::to_string(out.dim()) +
                                    " does not match local_dim^2 = " + std::to_string(local_dim * local_dim));
    }
    if (!out.all_finite()) {
        throw std::domain_error("RMatrixSpec: family evaluation produced non-finite entries");
    }
    return out;
}

namespace {

struct ThreeBodyLegs {
    ComplexMatrix r12;
    ComplexMatrix r13;
    ComplexMatrix r23;
};

ThreeBodyLegs legs_for(const ComplexMatrix& r12_gate, const ComplexMatrix& r13_gate,
                       const ComplexMatrix& r23_gate, std::size_t d) {
    return ThreeBodyLegs{
        embed_adjacent(r12_gate, 1, 3, d),
        embed_pair(r13_gate, SitePair{1, 3, 3, d}),
        embed_adjacent(r23_gate, 2, 3, d),
    };
}

ComplexMatrix defect_from_legs(const ThreeBodyLegs& legs, double* left_norm = nullptr) {
    const ComplexMatrix left = legs.r12 * legs.r13 * legs.r23;
    const ComplexMatrix right = legs.r23 * legs.r13 * legs.r12;
    if (left_norm) *left_norm = frobenius_norm(left);
    return left - right;
}

}  // namespace

ComplexMatrix yb_defect_constant(const RMatrixSpec& r, double tol_rank) {
    if (r.kind != RKind::constant) {
        throw std::invalid_argument("yb_defect_constant: expected a constant R-matrix");
    }
    if (!is_invertible(r.matrix, tol_rank)) {
        throw std::domain_error("yb_defect_constant: R is singular at tolerance " + std::to_string(tol_rank));
    }
    const auto legs = legs_for(r.matrix, r.matrix, r.matrix, r.local_dim);
    return defect_from_legs(legs);
}

ComplexMatrix yb_defect_spectral(const RMatrixSpec& r, Complex u, Complex v) {
    if (r.kind != RKind::spectral) {
        throw std::invalid_argument("yb_defect_spectral: expected a spectral R-matrix family");
    }
    const auto legs = legs_for(r.at(u - v), r.at(u), r.at(v), r.local_dim);
    return defect_from_legs(legs);
}

std::vector<std::pair<Complex, Complex>> default_spectral_grid(const RMatrixSpec& r) {
    static const double points[] = {-1.0, -0.5, 0.5, 1.0};
    bool keep_diagonal = false;
    if (r.kind == RKind::spectral) {
        try {
            keep_diagonal = is_invertible(r.at(Complex{0.0, 0.0}), Tolerances{}.tol_rank);
        } catch (const std::exception&) {
            keep_diagonal = false;
        }
    }
    std::vector<std::pair<Complex, Complex>> grid;
    for (double u : points) {
        for (double v : points) {
            if (u == v && !keep_diagonal) continue;
            grid.emplace_back(Complex{u, 0.0}, Complex{v, 0.0});
        }
    }
    return grid;
}

YbeReport check_boundary_free(const RMatrixSpec& r, double tolerance, bool pairwise_generation_asserted) {
    YbeReport report;
    report.tolerance = tolerance;
    report.pairwise_generation_asserted = pairwise_generation_asserted;

    if (r.kind == RKind::constant) {
        report.kind = "constant";
        double left_norm = 0.0;
        const auto legs = legs_for(r.matrix, r.matrix, r.matrix, r.local_dim);
        const ComplexMatrix defect = defect_from_legs(legs, &left_norm);
        const double abs_norm = frobenius_norm(defect);
        YbeSample sample;
        sample.defect_abs = abs_norm;
        sample.defect_rel = left_norm > 0.0 ? abs_norm / left_norm : abs_norm;
        report.samples.push_back(sample);
    } else {
        report.kind = "spectral";
        std::vector<std::pair<Complex, Complex>> pairs;
        if (!r.sample_params.empty()) {
            for (Complex u : r.sample_params)
                for (Complex v : r.sample_params) pairs.emplace_back(u, v);
        } else {
            pairs = default_spectral_grid(r);
        }
        if (pairs.empty()) {
            throw std::invalid_argument("check_boundary_free: spectral kind needs sample parameters");
        }
        for (const auto& [u, v] : pairs) {
            double left_norm = 0.0;
            const auto legs = legs_for(r.at(u - v), r.at(u), r.at(v), r.local_dim);
            const ComplexMatrix defect = defect_from_legs(legs, &left_norm);
            const double abs_norm = frobenius_norm(defect);
            YbeSample sample;
            sample.u = u;
            sample.v = v;
            sample.defect_abs = abs_norm;
            sample.defect_rel = left_norm > 0.0 ? abs_norm / left_norm : abs_norm;
            report.samples.push_back(sample);
        }
    }

    report.checked_samples = report.samples.size();
    report.max_defect = 0.0;
    for (const auto& s : report.samples) report.max_defect = std::max(report.max_defect, s.defect_rel);
    report.passes = report.max_defect <= tolerance;
    report.boundary_free = report.passes && pairwise_generation_asserted;
    return report;
}

OperatorSpan pairwise_generation_rank(const RMatrixSpec& r, std::size_t max_word_len, double tol_rank) {
    if (r.kind != RKind::constant) {
        throw std::invalid_argument("pairwise_generation_rank: expected a constant R-matrix");
    }
    if (max_word_len < 1) throw std::invalid_argument("pairwise_generation_rank: max_word_len must be >= 1");
    const std::size_t d = r.local_dim;
    const auto legs = legs_for(r.matrix, r.matrix, r.matrix, d);
    const std::vector<ComplexMatrix> generators{legs.r12, legs.r13, legs.r23};
    const std::size_t ambient = d * d * d;

    OperatorSpan span;
    span.ambient_dim = ambient;
    std::vector<ComplexMatrix> frontier;

    auto keep_if_independent = [&](const ComplexMatrix& candidate) {
        std::vector<ComplexMatrix> trial = span.basis;
        trial.push_back(candidate);
        if (span_rank(trial, tol_rank) > span.basis.size()) {
            span.basis.push_back(candidate);
            return true;
        }
        return false;
    };

    const ComplexMatrix id = ComplexMatrix::identity(ambient);
    keep_if_independent(id);
    frontier.push_back(id);

    for (std::size_t len = 1; len <= max_word_len && !frontier.empty(); ++len) {
        std::vector<ComplexMatrix> next;
        for (const auto& g : generators) {
            for (const auto& w : frontier) {
                ComplexMatrix candidate = g * w;
                if (keep_if_independent(candidate)) next.push_back(std::move(candidate));
            }
        }
        frontier = std::move(next);
        if (span.basis.size() == ambient * ambient) break;
    }
    span.rank = span_rank(span.basis, tol_rank);
    return span;
}

}  // namespace rigidity
