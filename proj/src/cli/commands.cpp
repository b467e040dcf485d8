#include "cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cli/emit.hpp"
#include "cli/verify.hpp"
#include "nu_spectra/error.hpp"
#include "nu_spectra/oracle.hpp"

namespace nuspec::cli {

namespace {

bool all_skipped(const SpectrumTable& table)
{
    for (const SpectrumRow& row : table.rows) {
        if (row.energy) {
            return false;
        }
    }
    return true;
}

int report_all_skipped(const SpectrumTable& table)
{
    if (!table.rows.empty() && all_skipped(table)) {
        std::cerr << "error: no row satisfies the bound-state preconditions (" << table.rows.front().status << ")\n";
        return 1;
    }
    return 0;
}

}  // namespace

int cmd_spectrum(const RunConfig& config, std::ostream& out)
{
    const PotentialSpec spec = build_potential(*config.family, config);
    const SpectrumTable table =
        spectrum(spec, config.n_max.value_or(0), config.l_max.value_or(0), Flux::from_value(config.flux.value_or(0.0)),
                 config.scale);
    write_spectrum(out, table, config.format);
    return report_all_skipped(table);
}

int cmd_wavefunction(const RunConfig& config, std::ostream& out)
{
    const PotentialSpec spec = build_potential(*config.family, config);
    const QuantumState state{config.n, config.l, Flux::from_value(config.flux.value_or(0.0))};
    const RadialWavefunction raw = closed_form_wavefunction(spec, state, config.scale);
    const double r_max = config.oracle.r_max.value_or(
        oracle::default_config(spec, state.l, state.flux, config.scale, state.n).r_max);
    const RadialWavefunction wf = normalize(raw, r_max, config.samples);

    const double step = r_max / (config.samples - 1);
    // R is finite at the origin unless J0 < 1/2
    const int first = wf.origin_exponent() < 0.0 ? 1 : 0;
    std::vector<double> r;
    std::vector<double> radial;
    for (int i = first; i < config.samples; ++i) {
        const double x = i == config.samples - 1 ? r_max : step * i;
        r.push_back(x);
        radial.push_back(wf.radial(x));
    }
    write_samples(out, r, radial, config.format);
    return 0;
}

int cmd_flux_sweep(const RunConfig& config, std::ostream& out)
{
    const PotentialSpec spec = build_potential(*config.family, config);
    SpectrumTable table;
    for (double flux : config.sweep->values()) {
        SpectrumRow row;
        row.state = QuantumState{config.n, config.l, Flux::from_value(flux)};
        try {
            row.energy = closed_form_energy(spec, row.state, config.scale).energy;
        } catch (const Error& e) {
            if (e.code() == Errc::regularity_bound) {
                row.status = "skipped:J0<=0";
            } else if (e.code() == Errc::unbound) {
                row.status = "skipped:unbound";
            } else {
                throw;
            }
        }
        table.rows.push_back(row);
    }
    write_spectrum(out, table, config.format);
    return report_all_skipped(table);
}

int cmd_verify(const RunConfig& config, std::ostream& out)
{
    const VerifyReport report = run_verification(config);
    write_verification(out, report, config.format);
    for (const std::string& e : report.errors) {
        std::cerr << "error: " << e << "\n";
    }
    for (const VerifyRow& row : report.rows) {
        if (!row.pass && row.oracle) {
            std::cerr << "FAIL " << family_name(row.family) << " n=" << row.state.n << " l=" << row.state.l
                      << " flux=" << format_real(row.state.flux.value()) << " deviation=" << format_real(row.deviation)
                      << " grid=[" << format_real(row.grid.r_min) << ", " << format_real(row.grid.r_max) << "] x "
                      << row.grid.points << "\n";
        }
    }
    std::cerr << "verify: " << report.rows.size() << " levels, worst deviation " << format_real(report.worst_deviation)
              << (report.pass ? ", all pass" : ", FAILED") << "\n";
    return report.pass ? 0 : 1;
}

int run(const std::vector<std::string>& args)
{
    std::optional<std::string> defaults;
    if (const char* env = std::getenv("NU_SPECTRA_CONFIG"); env != nullptr && *env != '\0') {
        defaults = env;
    }
    const ParseOutcome parsed = parse_run_config(args, defaults);
    if (!parsed.config) {
        return parsed.exit_code;
    }
    const RunConfig& config = *parsed.config;

    std::ofstream file;
    if (config.out) {
        file.open(*config.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            std::cerr << "error: cannot open " << *config.out << " for writing\n";
            return 1;
        }
    }
    std::ostream& out = config.out ? static_cast<std::ostream&>(file) : std::cout;

    try {
        switch (config.command) {
            case Command::spectrum: return cmd_spectrum(config, out);
            case Command::wavefunction: return cmd_wavefunction(config, out);
            case Command::flux_sweep: return cmd_flux_sweep(config, out);
            case Command::verify: return cmd_verify(config, out);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace nuspec::cli
