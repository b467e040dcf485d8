#include "nu_spectra/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nu_spectra/error.hpp"
#include "nu_spectra/tridiagonal.hpp"

namespace nuspec::oracle {

namespace {

/// Target size of u^2 at the inner wall of the mapped mesh.
constexpr double inner_wall_suppression = 1e-10;
constexpr double smallest_inner_wall = 1e-100;

double softplus(double x)
{
    return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x)));
}

/// Inverse of softplus: ln(e^y - 1).
double softplus_inverse(double y)
{
    return y > 30.0 ? y + std::log1p(-std::exp(-y)) : std::log(std::expm1(y));
}

double logistic(double x)
{
    return 1.0 / (1.0 + std::exp(-x));
}

struct Discretization {
    std::vector<double> diag;
    std::vector<double> offdiag;
    std::vector<double> weight;
    std::vector<double> radii;
    std::vector<double> dr_weights;
    /// u_i = vector_factor_i * eigenvector_i.
    std::vector<double> vector_factor;
};

/// k V_eff(r) = (2M/hbar^2) V(r) + lambda0 / r^2.
double scaled_effective_potential(const PotentialSpec& spec, double k, double lambda0, double r)
{
    return k * potential_value(spec, r) + lambda0 / (r * r);
}

Discretization uniform_mesh(const PotentialSpec& spec, double k, double lambda0, const OracleConfig& cfg)
{
    const auto n = static_cast<std::size_t>(cfg.points);
    const double h = (cfg.r_max - cfg.r_min) / (cfg.points - 1);
    Discretization d;
    d.radii.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.radii[i] = cfg.r_min + h * static_cast<double>(i);
    }
    d.diag.resize(n);
    d.weight.resize(n);
    d.offdiag.assign(n - 1, -1.0 / h);
    d.dr_weights.resize(n);
    d.vector_factor.assign(n, std::sqrt(k));
    for (std::size_t i = 0; i < n; ++i) {
        const double left = (i == 0) ? cfg.r_min : h;
        const double cell = 0.5 * (left + h);
        d.diag[i] = 1.0 / left + 1.0 / h + cell * scaled_effective_potential(spec, k, lambda0, d.radii[i]);
        d.weight[i] = k * cell;
        d.dr_weights[i] = cell;
    }
    return d;
}

Discretization mapped_mesh(const PotentialSpec& spec, double k, double lambda0, const OracleConfig& cfg)
{
    const auto n = static_cast<std::size_t>(cfg.points);
    const double c = cfg.map_scale;
    const double x_lo = softplus_inverse(cfg.r_min / c);
    const double x_hi = softplus_inverse(cfg.r_max / c);
    const double h = (x_hi - x_lo) / (cfg.points - 1);
    Discretization d;
    d.radii.resize(n);
    d.diag.resize(n);
    d.weight.resize(n);
    d.offdiag.assign(n - 1, -1.0 / h);
    d.dr_weights.resize(n);
    d.vector_factor.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = x_lo + h * static_cast<double>(i);
        const double r = c * softplus(x);
        const double up = logistic(x);
        const double down = logistic(-x);
        const double jac = c * up;  // dr/dx
        const double jac_over_r = up / softplus(x);
        // Half the Schwarzian derivative of r(x).
        const double schwarz = 0.5 * (down * (1.0 - 2.0 * up) - 1.5 * down * down);
        const double q = jac * jac * k * potential_value(spec, r) + lambda0 * jac_over_r * jac_over_r - schwarz;
        d.radii[i] = r;
        d.diag[i] = 2.0 / h + h * q;
        d.weight[i] = h * k * jac * jac;
        d.dr_weights[i] = h * jac;
        d.vector_factor[i] = std::sqrt(k * jac);
    }
    return d;
}

}  // namespace

void OracleConfig::validate() const
{
    if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max)) {
        throw Error(Errc::invalid_argument, "oracle grid needs 0 < r_min < r_max");
    }
    if (points < 100) {
        throw Error(Errc::invalid_argument, "oracle grid needs at least 100 points");
    }
    if (levels_requested < 1 || levels_requested > points) {
        throw Error(Errc::invalid_argument, "levels_requested must be in [1, points]");
    }
    if (mesh == Mesh::mapped && !(map_scale > 0.0)) {
        throw Error(Errc::invalid_argument, "mapped mesh needs a positive crossover length");
    }
}

OracleConfig default_config(const PotentialSpec& spec, int l, Flux flux, const PhysicalScale& scale,
                            int n_max, Mesh mesh)
{
    scale.validate();
    if (n_max < 0) {
        throw Error(Errc::invalid_argument, "n_max must be non-negative");
    }
    const QuantumState probe{0, l, flux};
    const double j0 = probe.j0();
    if (!(j0 > 0.0)) {
        throw Error(Errc::regularity_bound, "J0 = " + std::to_string(j0) + " <= 0");
    }
    const double k = scale.kinetic_factor();

    OracleConfig cfg;
    cfg.points = 8000;
    cfg.levels_requested = n_max + 1;
    cfg.mesh = mesh;
    if (const auto* osc = std::get_if<ModifiedOscillator>(&spec)) {
        if (!(osc->b > 0.0)) {
            throw Error(Errc::unbound, "oscillator needs b > 0");
        }
        const double length = 1.0 / std::sqrt(std::sqrt(k * osc->b));
        cfg.r_max = length * std::max(8.0, 2.5 * std::sqrt(4.0 * n_max + 2.0 * j0 + 2.0));
        cfg.map_scale = 0.1 * length;
    } else {
        double b = 0.0;
        double c = 0.0;
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (!std::is_same_v<T, ModifiedOscillator>) {
                    b = p.b;
                }
                if constexpr (std::is_same_v<T, KratzerFues> || std::is_same_v<T, MieType>) {
                    c = p.c;
                }
            },
            spec);
        if (!(b > 0.0)) {
            throw Error(Errc::unbound, "Coulomb-like potential needs b > 0");
        }
        const double bohr = 2.0 / (k * b);
        const double effective_n = n_max + 0.5 + std::sqrt(std::max(0.0, k * c) + j0 * j0);
        cfg.r_max = 40.0 * effective_n * effective_n * bohr;
        cfg.map_scale = 10.0 * bohr;
    }
    if (mesh == Mesh::mapped) {
        const double relative = std::pow(inner_wall_suppression, 1.0 / (2.0 * j0));
        cfg.r_min = cfg.map_scale * std::clamp(relative, smallest_inner_wall, 1e-3);
    } else {
        cfg.r_min = cfg.r_max / cfg.points;
    }
    return cfg;
}

OracleResult solve_radial(const PotentialSpec& spec, int l, Flux flux, const PhysicalScale& scale,
                          const OracleConfig& config)
{
    scale.validate();
    config.validate();
    if (l < 0) {
        throw Error(Errc::invalid_argument, "l must be non-negative");
    }
    const QuantumState probe{0, l, flux};
    const double j0 = probe.j0();
    if (!(j0 > 0.0)) {
        throw Error(Errc::regularity_bound, "J0 = " + std::to_string(j0) + " <= 0");
    }
    const double lambda0 = probe.l0() * (probe.l0() + 1.0);
    const double k = scale.kinetic_factor();

    const Discretization d = config.mesh == Mesh::uniform ? uniform_mesh(spec, k, lambda0, config)
                                                          : mapped_mesh(spec, k, lambda0, config);
    const auto pairs = linalg::eigen_pencil(d.diag, d.offdiag, d.weight, config.levels_requested);

    const double threshold = potential_value(spec, config.r_max);
    OracleResult result;
    result.config = config;
    result.radii = d.radii;
    result.weights = d.dr_weights;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (!(pairs[j].value < threshold)) {
            throw Error(Errc::unbound, "level " + std::to_string(j) + " at E = " +
                                           std::to_string(pairs[j].value) +
                                           " reaches V(r_max) = " + std::to_string(threshold));
        }
        std::vector<double> u(pairs[j].vector.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            u[i] = d.vector_factor[i] * pairs[j].vector[i];
        }
        result.eigenvalues.push_back(pairs[j].value);
        result.eigenvectors.push_back(std::move(u));
    }
    return result;
}

ComparisonReport compare_levels(const SpectrumTable& closed, const OracleResult& numeric,
                                double abs_tol, double rel_tol)
{
    ComparisonReport report;
    report.grid = numeric.config;
    for (const SpectrumRow& row : closed.rows) {
        if (!row.energy) {
            continue;
        }
        const auto index = static_cast<std::size_t>(row.state.n);
        if (index >= numeric.eigenvalues.size()) {
            throw Error(Errc::level_count_mismatch,
                        "table needs level n = " + std::to_string(row.state.n) + " but the oracle returned " +
                            std::to_string(numeric.eigenvalues.size()));
        }
        LevelCheck check;
        check.state = row.state;
        check.closed_form = *row.energy;
        check.numeric = numeric.eigenvalues[index];
        check.deviation = std::abs(check.closed_form - check.numeric);
        check.pass = check.deviation <= abs_tol + rel_tol * std::abs(check.closed_form);
        report.worst_deviation = std::max(report.worst_deviation, check.deviation);
        report.pass = report.pass && check.pass;
        report.levels.push_back(check);
    }
    if (report.levels.empty()) {
        report.warning = "empty comparison: no closed-form levels to check";
    }
    return report;
}

}  // namespace nuspec::oracle
