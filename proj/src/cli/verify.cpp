#include "cli/verify.hpp"

#include <algorithm>
#include <future>
#include <tuple>

#include "nu_spectra/error.hpp"

namespace nuspec::cli {

namespace {

struct Slice {
    Family family;
    PotentialSpec spec;
    int l;
    Flux flux;
};

struct SliceResult {
    std::vector<VerifyRow> rows;
    std::vector<std::string> errors;
};

oracle::OracleConfig slice_grid(const Slice& slice, const RunConfig& config, int n_max)
{
    oracle::OracleConfig grid =
        oracle::default_config(slice.spec, slice.l, slice.flux, config.scale, n_max, config.oracle.mesh);
    if (config.oracle.points) {
        grid.points = *config.oracle.points;
        if (grid.mesh == oracle::Mesh::uniform && !config.oracle.r_min) {
            grid.r_min = grid.r_max / grid.points;
        }
    }
    if (config.oracle.r_max) {
        grid.r_max = *config.oracle.r_max;
        if (grid.mesh == oracle::Mesh::uniform && !config.oracle.r_min) {
            grid.r_min = grid.r_max / grid.points;
        }
    }
    if (config.oracle.r_min) {
        grid.r_min = *config.oracle.r_min;
    }
    if (config.oracle.levels) {
        grid.levels_requested = *config.oracle.levels;
    }
    return grid;
}

std::string slice_label(const Slice& slice)
{
    return std::string(family_name(slice.family)) + " l=" + std::to_string(slice.l) +
           " flux=" + std::to_string(slice.flux.value());
}

SliceResult run_slice(const Slice& slice, const RunConfig& config, int n_max)
{
    SliceResult out;
    SpectrumTable table;
    for (int n = 0; n <= n_max; ++n) {
        SpectrumRow row;
        row.state = QuantumState{n, slice.l, slice.flux};
        try {
            row.energy = closed_form_energy(slice.spec, row.state, config.scale).energy;
        } catch (const Error& e) {
            row.status = e.code() == Errc::regularity_bound ? "skipped:J0<=0" : "skipped:unbound";
        }
        table.rows.push_back(row);
    }

    auto skipped_rows = [&](const std::string& status) {
        for (const SpectrumRow& row : table.rows) {
            VerifyRow v;
            v.family = slice.family;
            v.state = row.state;
            v.closed_form = row.energy;
            v.pass = true;
            v.status = row.status.empty() ? status : row.status;
            out.rows.push_back(v);
        }
    };
    if (std::none_of(table.rows.begin(), table.rows.end(), [](const SpectrumRow& r) { return r.energy.has_value(); })) {
        skipped_rows("skipped");
        return out;
    }

    try {
        const oracle::OracleConfig grid = slice_grid(slice, config, n_max);
        const oracle::OracleResult numeric = oracle::solve_radial(slice.spec, slice.l, slice.flux, config.scale, grid);
        const oracle::ComparisonReport report = oracle::compare_levels(table, numeric, config.abs_tol, config.rel_tol);
        for (const oracle::LevelCheck& check : report.levels) {
            VerifyRow v;
            v.family = slice.family;
            v.state = check.state;
            v.closed_form = check.closed_form;
            v.oracle = check.numeric;
            v.deviation = check.deviation;
            v.pass = check.pass;
            v.status = check.pass ? "pass" : "fail";
            v.grid = grid;
            out.rows.push_back(v);
        }
    } catch (const Error& e) {
        out.errors.push_back(slice_label(slice) + ": " + e.what());
        out.rows.clear();
        for (const SpectrumRow& row : table.rows) {
            VerifyRow v;
            v.family = slice.family;
            v.state = row.state;
            v.closed_form = row.energy;
            v.pass = false;
            v.status = "error";
            out.rows.push_back(v);
        }
    }
    return out;
}

}  // namespace

VerifyReport run_verification(const RunConfig& config)
{
    const int n_max = config.n_max.value_or(2);
    const int l_max = config.l_max.value_or(2);
    std::vector<Family> families{Family::coulomb, Family::oscillator, Family::kratzer, Family::mie};
    if (config.family) {
        families = {*config.family};
    }
    std::vector<double> fluxes{0.0, 0.3};
    if (config.flux) {
        fluxes = {*config.flux};
    }

    std::vector<Slice> slices;
    for (Family family : families) {
        const PotentialSpec spec = build_potential(family, config);
        for (double flux : fluxes) {
            for (int l = 0; l <= l_max; ++l) {
                slices.push_back(Slice{family, spec, l, Flux::from_value(flux)});
            }
        }
    }

    std::vector<std::future<SliceResult>> pending;
    pending.reserve(slices.size());
    for (const Slice& slice : slices) {
        pending.push_back(std::async(std::launch::async, run_slice, slice, std::cref(config), n_max));
    }

    VerifyReport report;
    for (auto& f : pending) {
        SliceResult r = f.get();
        for (VerifyRow& row : r.rows) {
            report.rows.push_back(std::move(row));
        }
        for (std::string& e : r.errors) {
            report.errors.push_back(std::move(e));
        }
    }
    // family, l, n, then flux
    std::stable_sort(report.rows.begin(), report.rows.end(), [](const VerifyRow& x, const VerifyRow& y) {
        return std::make_tuple(static_cast<int>(x.family), x.state.l, x.state.n, x.state.flux.value()) <
               std::make_tuple(static_cast<int>(y.family), y.state.l, y.state.n, y.state.flux.value());
    });
    for (const VerifyRow& row : report.rows) {
        report.worst_deviation = std::max(report.worst_deviation, row.deviation);
        report.pass = report.pass && row.pass;
    }
    report.pass = report.pass && report.errors.empty();
    return report;
}

}  // namespace nuspec::cli
