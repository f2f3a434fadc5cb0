#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rigidity/complex_matrix.hpp"
#include "rigidity/linalg.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"
#include "support/test_rng.hpp"

using namespace rigidity;

namespace {

ComplexMatrix swap_2site() {
    ComplexMatrix p(4);
    p(0, 0) = 1.0;
    p(1, 2) = 1.0;
    p(2, 1) = 1.0;
    p(3, 3) = 1.0;
    return p;
}

ComplexMatrix pauli(char axis) {
    ComplexMatrix m(2);
    switch (axis) {
        case 'x': m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 'y': m(0, 1) = Complex{0.0, -1.0}; m(1, 0) = Complex{0.0, 1.0}; break;
        case 'z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
        default: m = ComplexMatrix::identity(2);
    }
    return m;
}

}  // namespace

TEST_CASE("kron identity and diagonal cases") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

    ComplexMatrix diag(2);
    diag(0, 0) = 1.0;
    diag(1, 1) = 2.0;
    const ComplexMatrix out = kron(diag, i2);
    ComplexMatrix expected(4);
    expected(0, 0) = 1.0;
    expected(1, 1) = 1.0;
    expected(2, 2) = 2.0;
    expected(3, 3) = 2.0;
    CHECK(max_abs_diff(out, expected) == 0.0);
}

TEST_CASE("kron of two swaps against the index-formula oracle") {
    const ComplexMatrix p = swap_2site();
    const ComplexMatrix lhs = kron(p, p);
    const ComplexMatrix rhs = oracles::naive_kron(p, p);
    REQUIRE(lhs.dim() == 16);
    CHECK(max_abs_diff(lhs, rhs) == 0.0);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j)
            CHECK(lhs(i, j) == p(i / 4, j / 4) * p(i % 4, j % 4));
}

TEST_CASE("kron respects the ambient ceiling") {
    const ComplexMatrix big = ComplexMatrix::identity(max_ambient_dim() / 2 + 1);
    CHECK_THROWS_AS((void)kron(big, ComplexMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("frobenius norms") {
    CHECK(frobenius_norm(ComplexMatrix(4)) == 0.0);
    CHECK(frobenius_norm(ComplexMatrix::identity(4)) == doctest::Approx(2.0).epsilon(1e-15));
    const ComplexMatrix p = swap_2site();
    CHECK(frobenius_norm(p - ComplexMatrix::identity(4)) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("span_rank on dependent, independent, and empty input") {
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(span_rank({i2, Complex{2.0, 0.0} * i2}, 1e-9) == 1);
    CHECK(span_rank({}, 1e-9) == 0);

    const std::vector<ComplexMatrix> paulis{ComplexMatrix::identity(2), pauli('x'), pauli('y'), pauli('z')};
    CHECK(span_rank(paulis, 1e-9) == 4);
    CHECK(oracles::gram_rank(paulis) == 4);

    ComplexMatrix wrong(3);
    CHECK_THROWS_AS((void)span_rank({i2, wrong}, 1e-9), std::invalid_argument);
}

TEST_CASE("hermitian eigenvalues on known spectra") {
    ComplexMatrix d(3);
    d(0, 0) = 3.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const auto eig = hermitian_eigenvalues(d, 1e-9);
    REQUIRE(eig.size() == 3);
    CHECK(eig[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(eig[2] == doctest::Approx(3.0).epsilon(1e-12));

    const auto sx = hermitian_eigenvalues(pauli('x'), 1e-9);
    CHECK(sx[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sx[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two-site chain bond has the singlet at -2") {
    const ComplexMatrix h = swap_2site() - ComplexMatrix::identity(4);
    const auto eig = hermitian_eigenvalues(h, 1e-9);
    REQUIRE(eig.size() == 4);
    CHECK(eig[0] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(std::abs(eig[1]) < 1e-12);
    CHECK(std::abs(eig[2]) < 1e-12);
    CHECK(std::abs(eig[3]) < 1e-12);
}

TEST_CASE("non-Hermitian input is rejected with the measured asymmetry") {
    ComplexMatrix m(2);
    m(0, 1) = 5.0;
    CHECK_THROWS_AS((void)hermitian_eigenvalues(m, 1e-9), std::domain_error);
    try {
        (void)hermitian_eigenvalues(m, 1e-9);
    } catch (const std::domain_error& err) {
        CHECK(std::string(err.what()).find("not Hermitian") != std::string::npos);
    }
}

TEST_CASE("matrix validation") {
    CHECK_THROWS_AS(ComplexMatrix(0), std::invalid_argument);
    CHECK_THROWS_AS((void)ComplexMatrix::from_entries(2, {Complex{1.0, 0.0}}), std::invalid_argument);
    std::vector<Complex> bad(4, Complex{0.0, 0.0});
    bad[2] = Complex{std::nan(""), 0.0};
    CHECK_THROWS_AS((void)ComplexMatrix::from_entries(2, bad), std::invalid_argument);
}

TEST_CASE("multiplication fast paths agree with the dense oracle") {
    testrng::Rng rng(5);
    const ComplexMatrix dense_a = testrng::random_matrix(rng, 16);
    const ComplexMatrix dense_b = testrng::random_matrix(rng, 16);
    CHECK(frobenius_norm(dense_a * dense_b - oracles::naive_mult(dense_a, dense_b)) < 1e-12);

    ComplexMatrix sparse(16);
    for (std::size_t k = 0; k < 16; ++k) sparse(k, (k * 7 + 3) % 16) = Complex{1.0, -0.5};
    CHECK(frobenius_norm(sparse * dense_b - oracles::naive_mult(sparse, dense_b)) < 1e-12);
    CHECK(frobenius_norm(dense_a * sparse - oracles::naive_mult(dense_a, sparse)) < 1e-12);
}

TEST_CASE("linalg invariant suite") {
    for (const auto& result : {properties::kron_associative(), properties::kron_multiplicative(),
                               properties::span_rank_recombination_invariant(),
                               properties::eigenvalue_trace_and_shift()}) {
        INFO(result.name, ": ", result.detail);
        CHECK(result.ok);
    }
}
