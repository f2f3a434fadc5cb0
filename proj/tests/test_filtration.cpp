#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rigidity/filtration.hpp"
#include "rigidity/leg_embedding.hpp"
#include "rigidity/models.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace rigidity;

namespace {

GeneratorSet bond_generators(const ComplexMatrix& gate, std::size_t n, FiltrationMode mode,
                             bool include_identity = true) {
    GeneratorSet gens;
    gens.ambient_dim = std::size_t{1} << n;
    gens.mode = mode;
    gens.include_identity = include_identity;
    for (std::size_t i = 1; i + 1 <= n; ++i) gens.generators.push_back(embed_adjacent(gate, i, n, 2));
    return gens;
}

std::vector<std::vector<std::size_t>> adjacent_transpositions(std::size_t n) {
    std::vector<std::vector<std::size_t>> gens;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<std::size_t> sigma(n);
        for (std::size_t s = 0; s < n; ++s) sigma[s] = s;
        std::swap(sigma[i], sigma[i + 1]);
        gens.push_back(std::move(sigma));
    }
    return gens;
}

}  // namespace

TEST_CASE("identity generators terminate immediately") {
    GeneratorSet gens;
    gens.ambient_dim = 2;
    gens.mode = FiltrationMode::product;
    gens.include_identity = true;
    gens.generators = {ComplexMatrix::identity(2)};
    const auto report = filtration_dims(gens, 6);
    CHECK(report.dims == std::vector<std::size_t>{1, 1});
    REQUIRE(report.termination_depth.has_value());
    CHECK(*report.termination_depth == 0);
    CHECK(report.new_counts == std::vector<std::size_t>{0});
    CHECK_FALSE(report.saturated);
}

TEST_CASE("nilpotent generator with identity gives the hand-checked profile") {
    ComplexMatrix e12(2);
    e12(0, 1) = 1.0;
    GeneratorSet gens;
    gens.ambient_dim = 2;
    gens.mode = FiltrationMode::product;
    gens.include_identity = true;
    gens.generators = {e12};
    const auto witness = finite_presentation_proxy(gens, 4);
    CHECK(witness.finitely_presented);
    CHECK(witness.witness.dims == std::vector<std::size_t>{1, 2, 2});
    CHECK(*witness.witness.termination_depth == 1);

    gens.include_identity = false;
    const auto bare = filtration_dims(gens, 4);
    CHECK(bare.dims == std::vector<std::size_t>{0, 1, 1});
}

TEST_CASE("swap bonds on three sites match the word-enumeration oracle") {
    const ComplexMatrix p = build_r(parse_model("swap")).matrix;
    const auto report = filtration_dims(bond_generators(p, 3, FiltrationMode::product), 8);
    CHECK(report.dims == std::vector<std::size_t>{1, 3, 5, 5});
    CHECK(*report.termination_depth == 2);
    CHECK_FALSE(report.saturated);

    const auto oracle = oracles::word_span_dims_permutation(adjacent_transpositions(3), 3, 2, 6);
    for (std::size_t k = 0; k < report.dims.size(); ++k) CHECK(report.dims[k] == oracle[k]);

    std::vector<ComplexMatrix> dense_gens{embed_adjacent(p, 1, 3, 2), embed_adjacent(p, 2, 3, 2)};
    const auto dense = oracles::word_span_dims_dense(dense_gens, 6);
    for (std::size_t k = 0; k < report.dims.size(); ++k) CHECK(report.dims[k] == dense[k]);
}

TEST_CASE("commutator mode on swap bonds") {
    const ComplexMatrix p = build_r(parse_model("swap")).matrix;
    const auto report = filtration_dims(bond_generators(p, 3, FiltrationMode::commutator), 8);
    CHECK(report.dims == std::vector<std::size_t>{3, 4, 5, 5});
    CHECK(*report.termination_depth == 2);
}

TEST_CASE("boundary scan of the swap is constrained with Catalan stable ranks") {
    const auto scan = boundary_scan(build_r(parse_model("swap")), 2, 5, 8);
    CHECK(scan.verdict == "constrained");
    REQUIRE(scan.reports.size() == 4);
    const std::size_t expected_stable[] = {2, 5, 14, 42};
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK_FALSE(scan.reports[k].saturated);
        CHECK(scan.reports[k].dims.back() == expected_stable[k]);
        REQUIRE(scan.reports[k].termination_depth.has_value());
        CHECK(*scan.reports[k].termination_depth <= 6);
        const std::size_t n = scan.n_values[k];
        const auto oracle =
            oracles::word_span_dims_permutation(adjacent_transpositions(n), n, 2, scan.reports[k].dims.size() - 1);
        for (std::size_t i = 0; i < scan.reports[k].dims.size(); ++i) {
            CHECK(scan.reports[k].dims[i] == oracle[i]);
        }
    }
}

TEST_CASE("random gates saturate the full algebra on three sites") {
    for (std::uint64_t seed : {7ull, 42ull, 123ull}) {
        const auto scan = boundary_scan(build_r(parse_model("random_gate:" + std::to_string(seed))), 3, 3, 8);
        CHECK(scan.verdict == "saturating");
        const auto& rep = scan.reports.front();
        CHECK(rep.saturated);
        CHECK(rep.dims.back() == 64);
        REQUIRE(rep.termination_depth.has_value());
        CHECK(*rep.termination_depth <= 8);
    }
}

TEST_CASE("random-gate scan over a site range saturates from three sites up") {
    const auto scan = boundary_scan(build_r(parse_model("random_gate:42")), 2, 4, 10);
    CHECK(scan.verdict == "saturating");
    // A single bond generates a commutative algebra (polynomials in one
    // gate), so the two-site report cannot saturate the 16-dimensional
    // matrix algebra; saturation starts at three sites.
    CHECK_FALSE(scan.reports[0].saturated);
    CHECK(scan.reports[0].dims.back() <= 5);
    CHECK(scan.reports[1].saturated);
    CHECK(scan.reports[2].saturated);
}

TEST_CASE("no stabilization within the horizon leaves termination empty") {
    const auto spec = build_r(parse_model("random_gate:42"));
    GeneratorSet gens = bond_generators(spec.matrix, 3, FiltrationMode::product);
    const auto report = filtration_dims(gens, 2);
    CHECK_FALSE(report.termination_depth.has_value());
    CHECK(report.dims.size() == 3);  // levels 0..2
    CHECK(report.max_depth_searched == 2);
}

TEST_CASE("finite presentation proxy distinguishes constrained from saturated") {
    const ComplexMatrix p = build_r(parse_model("swap")).matrix;
    const auto constrained = finite_presentation_proxy(bond_generators(p, 3, FiltrationMode::product), 8);
    CHECK(constrained.finitely_presented);
    CHECK_FALSE(constrained.witness.saturated);

    const auto gate = build_r(parse_model("random_gate:7")).matrix;
    const auto saturated = finite_presentation_proxy(bond_generators(gate, 3, FiltrationMode::product), 8);
    CHECK(saturated.finitely_presented);
    CHECK(saturated.witness.saturated);
}

TEST_CASE("generator validation") {
    GeneratorSet empty;
    empty.ambient_dim = 2;
    CHECK_THROWS_AS((void)filtration_dims(empty, 3), std::invalid_argument);

    GeneratorSet mixed;
    mixed.ambient_dim = 2;
    mixed.generators = {ComplexMatrix::identity(2), ComplexMatrix::identity(3)};
    CHECK_THROWS_AS((void)filtration_dims(mixed, 3), std::invalid_argument);

    GeneratorSet zero;
    zero.ambient_dim = 2;
    zero.generators = {ComplexMatrix(2)};
    CHECK_THROWS_AS((void)filtration_dims(zero, 3), std::invalid_argument);

    GeneratorSet ok;
    ok.ambient_dim = 2;
    ok.generators = {ComplexMatrix::identity(2)};
    CHECK_THROWS_AS((void)filtration_dims(ok, 0), std::invalid_argument);

    CHECK_THROWS_AS((void)boundary_scan(build_r(parse_model("xxx")), 2, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)boundary_scan(build_r(parse_model("swap")), 3, 2, 4), std::invalid_argument);
}

TEST_CASE("filtration invariant suite") {
    for (const auto& result :
         {properties::dims_monotone_bounded_idempotent(), properties::filtration_basis_independence(),
          properties::product_dominates_commutator(), properties::identity_scan_constrained()}) {
        INFO(result.name, ": ", result.detail);
        CHECK(result.ok);
    }
}
