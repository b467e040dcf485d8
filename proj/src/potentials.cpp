#include "nu_spectra/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "nu_spectra/error.hpp"
#include "nu_spectra/special_functions.hpp"

namespace nuspec {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double require_j0(const QuantumState& state)
{
    if (state.n < 0 || state.l < 0) {
        throw Error(Errc::invalid_argument, "quantum numbers n and l must be non-negative");
    }
    const double j0 = state.j0();
    if (!(j0 > 0.0)) {
        throw Error(Errc::regularity_bound, "J0 = " + std::to_string(j0) + " <= 0");
    }
    return j0;
}

void require_attractive(double b, const char* family)
{
    if (!(b > 0.0)) {
        throw Error(Errc::unbound, std::string(family) + " needs b > 0 for bound states");
    }
}

void require_repulsive_core(double c)
{
    if (!(c >= 0.0)) {
        throw Error(Errc::invalid_argument, "inverse-square coefficient c must be >= 0");
    }
}

/// -M b^2 / (2 hbar^2 d^2): the Coulomb-like binding energy for denominator d.
double coulomb_binding(double b, double denominator, const PhysicalScale& scale)
{
    return -scale.mass * b * b / (2.0 * scale.hbar * scale.hbar * denominator * denominator);
}

double sigma_squared(double c, double j0, const PhysicalScale& scale)
{
    return scale.kinetic_factor() * c + j0 * j0;
}

/// Same potential with its constant offset removed.
PotentialSpec without_offset(const PotentialSpec& spec)
{
    return std::visit(overloaded{
                          [](ModifiedCoulomb p) -> PotentialSpec { return ModifiedCoulomb{0.0, p.b}; },
                          [](ModifiedOscillator p) -> PotentialSpec { return ModifiedOscillator{0.0, p.b}; },
                          [](KratzerFues p) -> PotentialSpec { return p; },
                          [](MieType p) -> PotentialSpec { return MieType{0.0, p.b, p.c}; },
                      },
                      spec);
}

}  // namespace

void PhysicalScale::validate() const
{
    if (!(hbar > 0.0) || !(mass > 0.0) || !std::isfinite(hbar) || !std::isfinite(mass)) {
        throw Error(Errc::invalid_argument, "hbar and mass must be positive and finite");
    }
}

Family family_of(const PotentialSpec& spec) noexcept
{
    return static_cast<Family>(spec.index());
}

std::string_view family_name(Family family) noexcept
{
    switch (family) {
        case Family::coulomb: return "coulomb";
        case Family::oscillator: return "oscillator";
        case Family::kratzer: return "kratzer";
        case Family::mie: return "mie";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept
{
    for (Family f : {Family::coulomb, Family::oscillator, Family::kratzer, Family::mie}) {
        if (family_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

PotentialSpec make_potential(Family family, double a, double b, double c)
{
    switch (family) {
        case Family::coulomb: return ModifiedCoulomb{a, b};
        case Family::oscillator: return ModifiedOscillator{a, b};
        case Family::kratzer: return KratzerFues{b, c};
        case Family::mie: return MieType{a, b, c};
    }
    throw Error(Errc::invalid_argument, "unknown potential family");
}

double potential_value(const PotentialSpec& spec, double r)
{
    return std::visit(overloaded{
                          [r](const ModifiedCoulomb& p) { return p.a - p.b / r; },
                          [r](const ModifiedOscillator& p) { return p.a + p.b * r * r; },
                          [r](const KratzerFues& p) { return -p.b / r + p.c / (r * r); },
                          [r](const MieType& p) { return p.a - p.b / r + p.c / (r * r); },
                      },
                      spec);
}

double potential_offset(const PotentialSpec& spec) noexcept
{
    return std::visit(overloaded{
                          [](const ModifiedCoulomb& p) { return p.a; },
                          [](const ModifiedOscillator& p) { return p.a; },
                          [](const KratzerFues&) { return 0.0; },
                          [](const MieType& p) { return p.a; },
                      },
                      spec);
}

Flux Flux::from_value(double value)
{
    if (!std::isfinite(value)) {
        throw Error(Errc::invalid_argument, "flux must be finite");
    }
    const double whole = std::floor(value);
    return Flux(static_cast<int>(whole), value - whole);
}

std::string_view source_name(Source source) noexcept
{
    switch (source) {
        case Source::closed_form: return "closed_form";
        case Source::nu_root: return "nu_root";
        case Source::oracle: return "oracle";
    }
    return "unknown";
}

nu::Input effective_radial_coefficients(const PotentialSpec& spec, const QuantumState& state,
                                        const PhysicalScale& scale, double energy)
{
    scale.validate();
    const double j0 = require_j0(state);
    const double k = scale.kinetic_factor();
    nu::Input in;
    in.alpha1 = 1.0;
    std::visit(overloaded{
                   [&](const ModifiedCoulomb& p) {
                       in.xi1 = -k * (energy - p.a);
                       in.xi2 = k * p.b;
                       in.xi3 = j0 * j0;
                   },
                   [&](const ModifiedOscillator& p) {
                       require_attractive(p.b, "oscillator");
                       const double omega = std::sqrt(k * p.b);
                       in.xi1 = 0.25;
                       in.xi2 = k * (energy - p.a) / (4.0 * omega);
                       in.xi3 = 0.25 * j0 * j0;
                   },
                   [&](const KratzerFues& p) {
                       require_repulsive_core(p.c);
                       in.xi1 = -k * energy;
                       in.xi2 = k * p.b;
                       in.xi3 = sigma_squared(p.c, j0, scale);
                   },
                   [&](const MieType& p) {
                       require_repulsive_core(p.c);
                       in.xi1 = -k * (energy - p.a);
                       in.xi2 = k * p.b;
                       in.xi3 = sigma_squared(p.c, j0, scale);
                   },
               },
               spec);
    return in;
}

EnergyLevel closed_form_energy(const PotentialSpec& spec, const QuantumState& state,
                               const PhysicalScale& scale)
{
    scale.validate();
    const double j0 = require_j0(state);
    const double n = static_cast<double>(state.n);
    const double energy =
        std::visit(overloaded{
                       [&](const ModifiedCoulomb& p) {
                           require_attractive(p.b, "coulomb");
                           return p.a + coulomb_binding(p.b, n + 1.0 + state.l0(), scale);
                       },
                       [&](const ModifiedOscillator& p) {
                           require_attractive(p.b, "oscillator");
                           const double quantum = scale.hbar * std::sqrt(2.0 * p.b / scale.mass);
                           return p.a + quantum * (2.0 * n + 1.5 + state.l0());
                       },
                       [&](const KratzerFues& p) {
                           require_attractive(p.b, "kratzer");
                           require_repulsive_core(p.c);
                           const double sigma = std::sqrt(sigma_squared(p.c, j0, scale));
                           return coulomb_binding(p.b, n + 0.5 + sigma, scale);
                       },
                       [&](const MieType& p) {
                           require_attractive(p.b, "mie");
                           require_repulsive_core(p.c);
                           const double sigma = std::sqrt(sigma_squared(p.c, j0, scale));
                           return p.a + coulomb_binding(p.b, n + 0.5 + sigma, scale);
                       },
                   },
                   spec);
    return EnergyLevel{state, energy, Source::closed_form};
}

double RadialWavefunction::nu_variable(double r) const
{
    return variable == Variable::r ? variable_factor * r : variable_factor * r * r;
}

double RadialWavefunction::origin_exponent() const
{
    return variable == Variable::r ? form.power - 0.5 : 2.0 * form.power - 0.5;
}

double RadialWavefunction::flux_form(double r) const
{
    return norm_constant.value_or(1.0) * form.evaluate(nu_variable(r));
}

double RadialWavefunction::radial(double r) const
{
    // s^power / sqrt(r) folded into a single power of r so that r = 0 is finite
    // whenever the true limit is.
    const double coef = std::pow(variable_factor, form.power);
    return norm_constant.value_or(1.0) * coef * std::pow(r, origin_exponent()) *
           form.evaluate_regular(nu_variable(r));
}

double RadialWavefunction::reduced(double r) const
{
    const double coef = std::pow(variable_factor, form.power);
    return norm_constant.value_or(1.0) * coef * std::pow(r, origin_exponent() + 1.0) *
           form.evaluate_regular(nu_variable(r));
}

RadialWavefunction closed_form_wavefunction(const PotentialSpec& spec, const QuantumState& state,
                                            const PhysicalScale& scale)
{
    const EnergyLevel level = closed_form_energy(spec, state, scale);
    // The NU coefficients depend on E - a only; mapping the offset-free problem
    // means the form does not pick up rounding from adding and removing a.
    const PotentialSpec bare = without_offset(spec);
    const EnergyLevel bare_level = closed_form_energy(bare, state, scale);
    const nu::Input input = effective_radial_coefficients(bare, state, scale, bare_level.energy);

    RadialWavefunction wf;
    wf.family = spec;
    wf.state = state;
    wf.scale = scale;
    wf.energy = level.energy;
    wf.form = nu::wavefunction_form(nu::derive_parameters(input), state.n);
    if (const auto* osc = std::get_if<ModifiedOscillator>(&spec)) {
        wf.variable = Variable::s_equals_omega_r_squared;
        wf.variable_factor = std::sqrt(scale.kinetic_factor() * osc->b);
    }
    return wf;
}

RadialWavefunction normalize(const RadialWavefunction& wf, double r_max, int samples)
{
    if (!(r_max > 0.0)) {
        throw Error(Errc::invalid_argument, "r_max must be positive");
    }
    if (samples < 1001) {
        throw Error(Errc::invalid_argument, "normalization needs at least 1001 samples");
    }
    RadialWavefunction raw = wf;
    raw.norm_constant.reset();

    // Uniform in t = sqrt(r): u^2 ~ r^(2 J0 + 1) is not smooth at the origin when
    // J0 < 1/2, while u(t^2)^2 2t is.
    const double t_max = std::sqrt(r_max);
    const double step = t_max / (samples - 1);
    std::vector<double> density(static_cast<std::size_t>(samples));
    double peak = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = step * i;
        const double r = t * t;
        const double u = raw.reduced(r);
        density[static_cast<std::size_t>(i)] = 2.0 * t * u * u;
        if (i > 0) {
            peak = std::max(peak, std::abs(raw.radial(r)));
        }
    }
    const double tail = std::abs(raw.radial(r_max));
    if (!(tail < 1e-10 * peak)) {
        char detail[128];
        std::snprintf(detail, sizeof detail, "|R(r_max)| / max|R| = %.3e at r_max = %g; increase r_max",
                      tail / peak, r_max);
        throw Error(Errc::tail_not_converged, detail);
    }
    const double integral = special::integrate_samples(density, step);
    raw.norm_constant = 1.0 / std::sqrt(integral);
    return raw;
}

SpectrumTable spectrum(const PotentialSpec& spec, int n_max, int l_max, Flux flux,
                       const PhysicalScale& scale)
{
    if (n_max < 0 || l_max < 0) {
        throw Error(Errc::invalid_argument, "n_max and l_max must be non-negative");
    }
    scale.validate();
    SpectrumTable table;
    table.rows.reserve(static_cast<std::size_t>((n_max + 1) * (l_max + 1)));
    for (int l = 0; l <= l_max; ++l) {
        for (int n = 0; n <= n_max; ++n) {
            SpectrumRow row;
            row.state = QuantumState{n, l, flux};
            try {
                row.energy = closed_form_energy(spec, row.state, scale).energy;
            } catch (const Error& e) {
                if (e.code() == Errc::regularity_bound) {
                    row.status = "skipped:J0<=0";
                } else if (e.code() == Errc::unbound) {
                    row.status = "skipped:unbound";
                } else {
                    throw;
                }
            }
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

}  // namespace nuspec
