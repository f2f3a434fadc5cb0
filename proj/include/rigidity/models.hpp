#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rigidity/complex_matrix.hpp"
#include "rigidity/yang_baxter.hpp"

namespace rigidity {

// Model catalog conventions (local dimension 2 throughout):
//   identity         R = I4
//   swap             R = P,  P(e_a (x) e_b) = e_b (x) e_a
//   xxx_rational     R(u) = u*I4 + P
//   xxz_trig         six-vertex R(u) with weights a = sin(u+eta),
//                    b = sin(u), c = sin(eta) on the 2-magnon-conserving
//                    pattern [[a,0,0,0],[0,b,c,0],[0,c,b,0],[0,0,0,a]];
//                    anisotropy Delta = cos(eta)
//   perturbed_swap   R = P + eps * E11 (x) E22  (breaks Yang-Baxter at first
//                    order, invertible for |eps| < 1)
//   random_gate      Haar-like random unitary 4x4 from a recorded seed
enum class ModelKind {
    identity,
    swap_gate,
    xxx_rational,
    xxz_trig,
    perturbed_swap,
    random_gate,
    constant_file,
};

struct ModelId {
    ModelKind kind = ModelKind::identity;
    std::size_t local_dim = 2;
    double epsilon = 0.0;       // perturbed_swap
    double eta = 0.7853981633974483;  // xxz_trig anisotropy parameter (pi/4)
    std::uint64_t seed = 0;     // random_gate
    std::string path;           // constant_file

    std::string name() const;
};

/// Parses a CLI model token: "identity", "swap", "xxx", "xxz",
/// "xxz:<eta>", "perturbed_swap:<eps>", "random_gate:<seed>", or
/// "file:<path>" for a constant R loaded from a matrix JSON file.
/// Long aliases "xxx_rational" / "xxz_trig" are accepted.
/// Throws std::invalid_argument naming the bad token.
ModelId parse_model(const std::string& token);

RMatrixSpec build_r(const ModelId& model);

/// Spectral family u -> u*I + R for a constant model; spectral models are
/// returned unchanged. This is the rational extension used for transfer
/// matrix checks of constant gates.
RMatrixSpec rational_extension(const ModelId& model);

/// H = sum of two-site bond terms over bonds (1,2)..(n-1,n), plus (n,1) when
/// periodic. XXX bond h = P - I (each singlet bond contributes -2);
/// XXZ bond h = (sx sx + sy sy + Delta (sz sz - I)) / 2 with Delta =
/// cos(eta), which reduces to P - I at Delta = 1. For n = 2 periodic the
/// (1,2) bond is counted twice: H = 2 (P - I).
/// Only xxx_rational and xxz_trig support Hamiltonians.
ComplexMatrix build_hamiltonian(const ModelId& model, std::size_t n, bool periodic);

/// The six shipped models with the documented default parameters
/// (eps = 0.1, seed = 42).
std::vector<ModelId> default_catalog();

}  // namespace rigidity
