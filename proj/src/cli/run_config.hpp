#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nu_spectra/oracle.hpp"
#include "nu_spectra/potentials.hpp"

namespace nuspec::cli {

enum class Command { spectrum, wavefunction, flux_sweep, verify };
enum class Format { csv, json };

struct Sweep {
    double start = 0.0;
    double stop = 1.0;
    int steps = 2;

    std::vector<double> values() const;
};

struct OracleOverrides {
    std::optional<double> r_min;
    std::optional<double> r_max;
    std::optional<int> points;
    std::optional<int> levels;
    oracle::Mesh mesh = oracle::Mesh::mapped;
};

struct RunConfig {
    Command command = Command::spectrum;
    std::optional<Family> family;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> c;
    PhysicalScale scale;
    int n = 0;
    int l = 0;
    std::optional<int> n_max;
    std::optional<int> l_max;
    std::optional<double> flux;
    std::optional<Sweep> sweep;
    Format format = Format::csv;
    std::optional<std::string> out;
    OracleOverrides oracle;
    int samples = 2001;
    double abs_tol = 1e-4;
    double rel_tol = 0.0;
};

/// Thrown for inputs that parse but do not make a usable run (exit 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Coefficients for `family`, filling anything not given from the family defaults.
PotentialSpec build_potential(Family family, const RunConfig& config);

struct ParseOutcome {
    std::optional<RunConfig> config;
    int exit_code = 0;
};

/// Parses argv (without the program name). `defaults_path` names an optional
/// `key = value` file whose entries apply to flags absent from argv.
ParseOutcome parse_run_config(const std::vector<std::string>& args,
                              const std::optional<std::string>& defaults_path);

/// Reads a `key = value` defaults file; '#' starts a comment.
std::vector<std::pair<std::string, std::string>> read_defaults_file(const std::string& path);

}  // namespace nuspec::cli
