#pragma once

#include <string>

#include "rigidity/complex_matrix.hpp"

namespace rigidity {

/// Matrix file format shared by all CLI commands:
///   {"dim": n, "entries": [[re, im], ...]}   (row-major, n^2 pairs)
/// Serialization uses shortest round-trip float formatting, so finite
/// doubles survive a write/read cycle bit-exactly.
std::string matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const std::string& text);

void save_matrix(const ComplexMatrix& m, const std::string& path);
ComplexMatrix load_matrix(const std::string& path);

}  // namespace rigidity
