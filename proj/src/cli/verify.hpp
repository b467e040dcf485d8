#pragma once

#include <string>
#include <vector>

#include "cli/run_config.hpp"
#include "nu_spectra/oracle.hpp"

namespace nuspec::cli {

struct VerifyRow {
    Family family = Family::coulomb;
    QuantumState state;
    std::optional<double> closed_form;
    std::optional<double> oracle;
    double deviation = 0.0;
    bool pass = false;
    std::string status;
    oracle::OracleConfig grid;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    double worst_deviation = 0.0;
    bool pass = true;
    std::vector<std::string> errors;
};

/// Closed form against the oracle over family x flux x l x n. Families and
/// fluxes are narrowed by --family and --flux when given.
VerifyReport run_verification(const RunConfig& config);

}  // namespace nuspec::cli
