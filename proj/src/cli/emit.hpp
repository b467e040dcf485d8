#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cli/run_config.hpp"
#include "cli/verify.hpp"
#include "nu_spectra/potentials.hpp"

namespace nuspec::cli {

/// Shortest form that still carries 17 significant digits, so parsing it back
/// reproduces the same double.
std::string format_real(double value);

void write_spectrum(std::ostream& out, const SpectrumTable& table, Format format);

void write_samples(std::ostream& out, const std::vector<double>& r, const std::vector<double>& radial,
                   Format format);

void write_verification(std::ostream& out, const VerifyReport& report, Format format);

}  // namespace nuspec::cli
