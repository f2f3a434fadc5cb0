#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rigidity/config.hpp"
#include "rigidity/filtration.hpp"
#include "rigidity/models.hpp"
#include "rigidity/transfer_bethe.hpp"
#include "rigidity/yang_baxter.hpp"

namespace rigidity {

/// One row of the dichotomy table: every witness the library can evaluate
/// for one catalog model. Spectrum data is only present for models with a
/// Bethe solver (XXX).
struct ModelReportRow {
    std::string model;
    YbeReport ybe;
    BoundaryScan filtration;
    std::optional<double> transfer_commutator_rel;  // max over the grid
    std::optional<bool> transfer_commutes;
    std::optional<SpectrumComparison> spectrum;
};

struct DichotomyReport {
    std::vector<ModelReportRow> rows;
    Tolerances tolerances;
};

struct ReportOptions {
    std::size_t filtration_n_min = 2;
    std::size_t filtration_n_max = 3;
    std::size_t filtration_max_depth = 10;
    /// Chain length for the transfer-commutation probe. Four sites is the
    /// shortest periodic chain on which magnetization-conserving families
    /// can show non-commuting transfer matrices (every magnetization sector
    /// of a three-site ring is a circulant block).
    std::size_t transfer_sites = 4;
    std::size_t spectrum_sites = 6;
    std::size_t spectrum_magnons = 1;
    Tolerances tolerances{};
};

/// Runs the full witness battery for the given models (default catalog when
/// empty list semantics are wanted, pass default_catalog()).
DichotomyReport run_dichotomy_report(const std::vector<ModelId>& models,
                                     const ReportOptions& options = {});

std::string to_json(const DichotomyReport& report, int indent = 2);
std::string to_csv(const DichotomyReport& report);

}  // namespace rigidity
