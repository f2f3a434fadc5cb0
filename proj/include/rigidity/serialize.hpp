#pragma once

#include <string>

#include "rigidity/filtration.hpp"
#include "rigidity/transfer_bethe.hpp"
#include "rigidity/yang_baxter.hpp"

namespace rigidity {

// JSON renderings of the report types. Field order is fixed and all floats
// use shortest round-trip formatting, so output is byte-deterministic for
// identical inputs.

std::string to_json(const YbeReport& report, int indent = 2);
std::string to_json(const FiltrationReport& report, int indent = 2);
std::string to_json(const BoundaryScan& scan, int indent = 2);
std::string to_json(const BetheSolution& solution, int indent = 2);
std::string to_json(const std::vector<BetheSolution>& solutions, int indent = 2);
std::string to_json(const SpectrumComparison& comparison, int indent = 2);

std::string to_csv(const YbeReport& report);
std::string to_csv(const BoundaryScan& scan);
std::string to_csv(const std::vector<BetheSolution>& solutions);
std::string to_csv(const SpectrumComparison& comparison);

}  // namespace rigidity
