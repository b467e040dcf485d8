#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cli/run_config.hpp"

namespace nuspec::cli {

int cmd_spectrum(const RunConfig& config, std::ostream& out);
int cmd_wavefunction(const RunConfig& config, std::ostream& out);
int cmd_flux_sweep(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);

/// Parse, dispatch and map errors to exit codes: 0 ok, 1 domain or
/// verification failure, 2 usage.
int run(const std::vector<std::string>& args);

}  // namespace nuspec::cli
