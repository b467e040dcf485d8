#include "cli/run_config.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

namespace nuspec::cli {

namespace {

struct FamilyDefaults {
    double a;
    double b;
    double c;
};

FamilyDefaults defaults_for(Family family)
{
    switch (family) {
        case Family::coulomb: return {0.0, 1.0, 0.0};
        case Family::oscillator: return {0.0, 0.5, 0.0};
        case Family::kratzer: return {0.0, 1.0, 1.0};
        case Family::mie: return {1.0, 1.0, 1.0};
    }
    return {0.0, 1.0, 0.0};
}

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

const std::map<std::string, Family> family_map{
    {"coulomb", Family::coulomb},
    {"oscillator", Family::oscillator},
    {"kratzer", Family::kratzer},
    {"mie", Family::mie},
};

const std::map<std::string, Format> format_map{{"csv", Format::csv}, {"json", Format::json}};

const std::map<std::string, oracle::Mesh> mesh_map{{"mapped", oracle::Mesh::mapped},
                                                   {"uniform", oracle::Mesh::uniform}};

struct Bindings {
    std::string family;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double flux = 0.0;
    double flux_start = 0.0;
    double flux_stop = 0.0;
    int flux_steps = 0;
    int n_max = 0;
    int l_max = 0;
    double r_min = 0.0;
    double r_max = 0.0;
    int points = 0;
    int levels = 0;
    std::string out;
};

void add_shared_options(CLI::App* sub, RunConfig& cfg, Bindings& raw)
{
    sub->add_option("--potential,--family", raw.family, "potential family")
        ->check(CLI::IsMember({"coulomb", "oscillator", "kratzer", "mie"}));
    sub->add_option("--a", raw.a, "constant offset");
    sub->add_option("--b", raw.b, "Coulomb strength or oscillator stiffness");
    sub->add_option("--c", raw.c, "inverse-square strength")->check(CLI::NonNegativeNumber);
    sub->add_option("--n", cfg.n, "radial quantum number")->check(CLI::NonNegativeNumber);
    sub->add_option("--l", cfg.l, "orbital quantum number")->check(CLI::NonNegativeNumber);
    sub->add_option("--nmax", raw.n_max, "largest n in the table")->check(CLI::NonNegativeNumber);
    sub->add_option("--lmax", raw.l_max, "largest l in the table")->check(CLI::NonNegativeNumber);
    sub->add_option("--flux", raw.flux, "flux in units of the flux quantum");
    auto* start = sub->add_option("--flux-start", raw.flux_start, "first flux of a sweep");
    auto* stop = sub->add_option("--flux-stop", raw.flux_stop, "last flux of a sweep");
    auto* steps = sub->add_option("--flux-steps", raw.flux_steps, "number of sweep points")
                      ->check(CLI::Range(2, 1000000));
    start->needs(stop)->needs(steps);
    stop->needs(start);
    steps->needs(start);
    sub->add_option("--hbar", cfg.scale.hbar, "reduced Planck constant")->check(CLI::PositiveNumber);
    sub->add_option("--mass", cfg.scale.mass, "particle mass")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
    sub->add_option("--out", raw.out, "output path (default stdout)");
    sub->add_option("--rmin", raw.r_min, "oracle inner wall")->check(CLI::PositiveNumber);
    sub->add_option("--rmax", raw.r_max, "outer radius")->check(CLI::PositiveNumber);
    sub->add_option("--points", raw.points, "oracle grid points")->check(CLI::Range(100, 100000000));
    sub->add_option("--levels", raw.levels, "oracle levels per slice")->check(CLI::PositiveNumber);
    sub->add_option("--mesh", cfg.oracle.mesh, "oracle mesh")
        ->transform(CLI::CheckedTransformer(mesh_map, CLI::ignore_case));
    sub->add_option("--samples", cfg.samples, "wavefunction samples")->check(CLI::Range(1001, 100000000));
    sub->add_option("--abs-tol", cfg.abs_tol, "absolute verify tolerance")->check(CLI::NonNegativeNumber);
    sub->add_option("--rel-tol", cfg.rel_tol, "relative verify tolerance")->check(CLI::NonNegativeNumber);
}

bool mentions_flag(const std::vector<std::string>& args, const std::string& flag)
{
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
        return a == flag || a.rfind(flag + "=", 0) == 0;
    });
}

}  // namespace

std::vector<double> Sweep::values() const
{
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        out[static_cast<std::size_t>(i)] =
            i == steps - 1 ? stop : start + (stop - start) * static_cast<double>(i) / (steps - 1);
    }
    return out;
}

PotentialSpec build_potential(Family family, const RunConfig& config)
{
    const FamilyDefaults d = defaults_for(family);
    if (family == Family::kratzer && config.a && *config.a != 0.0) {
        throw UsageError("kratzer has no constant offset; use --potential mie for a != 0");
    }
    if ((family == Family::coulomb || family == Family::oscillator) && config.c && *config.c != 0.0) {
        throw UsageError(std::string(family_name(family)) + " has no inverse-square term; --c must be 0");
    }
    return make_potential(family, config.a.value_or(d.a), config.b.value_or(d.b), config.c.value_or(d.c));
}

std::vector<std::pair<std::string, std::string>> read_defaults_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read defaults file " + path);
    }
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(path + ":" + std::to_string(number) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        while (!key.empty() && key.front() == '-') {
            key.erase(0, 1);
        }
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw UsageError(path + ":" + std::to_string(number) + ": expected key = value");
        }
        entries.emplace_back(key, value);
    }
    return entries;
}

ParseOutcome parse_run_config(const std::vector<std::string>& args,
                              const std::optional<std::string>& defaults_path)
{
    RunConfig cfg;
    Bindings raw;

    CLI::App app{"Closed-form bound states under Aharonov-Bohm flux, with a finite-difference cross-check",
                 "nu-spectra"};
    app.require_subcommand(1);
    struct Entry {
        const char* name;
        const char* help;
        Command command;
    };
    const Entry entries[] = {
        {"spectrum", "tabulate closed-form energies", Command::spectrum},
        {"wavefunction", "sample a normalized radial function", Command::wavefunction},
        {"flux-sweep", "energy of one state across a flux range", Command::flux_sweep},
        {"verify", "compare closed forms against the finite-difference oracle", Command::verify},
    };
    std::vector<CLI::App*> subs;
    for (const Entry& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        add_shared_options(sub, cfg, raw);
        subs.push_back(sub);
    }

    std::vector<std::string> argv = args;
    if (defaults_path) {
        try {
            for (auto [key, value] : read_defaults_file(*defaults_path)) {
                if (key == "family") {
                    key = "potential";
                }
                const bool on_command_line = mentions_flag(args, "--" + key) ||
                                             (key == "potential" && mentions_flag(args, "--family"));
                if (!on_command_line) {
                    argv.push_back("--" + key);
                    argv.push_back(value);
                }
            }
        } catch (const UsageError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return {std::nullopt, 2};
        }
    }

    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return {std::nullopt, code == 0 ? 0 : 2};
    }

    CLI::App* chosen = nullptr;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]->parsed()) {
            chosen = subs[i];
            cfg.command = entries[i].command;
        }
    }
    auto given = [&](const char* flag) { return chosen->count(flag) > 0; };

    if (given("--potential")) {
        cfg.family = family_map.at(raw.family);
    }
    if (given("--a")) cfg.a = raw.a;
    if (given("--b")) cfg.b = raw.b;
    if (given("--c")) cfg.c = raw.c;
    if (given("--nmax")) cfg.n_max = raw.n_max;
    if (given("--lmax")) cfg.l_max = raw.l_max;
    if (given("--flux")) cfg.flux = raw.flux;
    if (given("--flux-start")) cfg.sweep = Sweep{raw.flux_start, raw.flux_stop, raw.flux_steps};
    if (given("--out")) cfg.out = raw.out;
    if (given("--rmin")) cfg.oracle.r_min = raw.r_min;
    if (given("--rmax")) cfg.oracle.r_max = raw.r_max;
    if (given("--points")) cfg.oracle.points = raw.points;
    if (given("--levels")) cfg.oracle.levels = raw.levels;

    auto usage = [](const std::string& message) {
        std::cerr << "error: " << message << "\n";
        return ParseOutcome{std::nullopt, 2};
    };
    if (cfg.command != Command::verify && !cfg.family) {
        return usage("--potential is required");
    }
    if (cfg.command == Command::flux_sweep && !cfg.sweep) {
        return usage("flux-sweep needs --flux-start, --flux-stop and --flux-steps");
    }
    if (cfg.command != Command::flux_sweep && cfg.sweep) {
        return usage("--flux-start/--flux-stop/--flux-steps only apply to flux-sweep");
    }
    if (cfg.sweep && cfg.flux) {
        return usage("give either --flux or a sweep range, not both");
    }
    if (cfg.command == Command::verify && !cfg.family && (cfg.a || cfg.b || cfg.c)) {
        return usage("--a/--b/--c need --family in verify");
    }
    try {
        if (cfg.family) {
            build_potential(*cfg.family, cfg);
        }
    } catch (const UsageError& e) {
        return usage(e.what());
    }
    return {cfg, 0};
}

}  // namespace nuspec::cli
