#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nu_spectra/nu_core.hpp"

namespace nuspec {

/// Units: reduced Planck constant and particle mass. Natural units by default.
struct PhysicalScale {
    double hbar = 1.0;
    double mass = 1.0;

    /// 2M / hbar^2.
    double kinetic_factor() const { return 2.0 * mass / (hbar * hbar); }
    /// Throws Errc::invalid_argument unless both constants are strictly positive.
    void validate() const;
};

/// V(r) = a - b/r
struct ModifiedCoulomb {
    double a = 0.0;
    double b = 1.0;
};

/// V(r) = a + b r^2
struct ModifiedOscillator {
    double a = 0.0;
    double b = 0.5;
};

/// V(r) = -b/r + c/r^2
struct KratzerFues {
    double b = 1.0;
    double c = 1.0;
};

/// V(r) = a - b/r + c/r^2
struct MieType {
    double a = 0.0;
    double b = 1.0;
    double c = 1.0;
};

using PotentialSpec = std::variant<ModifiedCoulomb, ModifiedOscillator, KratzerFues, MieType>;

enum class Family { coulomb, oscillator, kratzer, mie };

Family family_of(const PotentialSpec& spec) noexcept;
std::string_view family_name(Family family) noexcept;
/// Accepts "coulomb", "oscillator", "kratzer" and "mie".
std::optional<Family> parse_family(std::string_view name) noexcept;

/// Builds a spec for `family` from the coefficient triple; unused coefficients are ignored.
PotentialSpec make_potential(Family family, double a, double b, double c);

double potential_value(const PotentialSpec& spec, double r);
/// Constant offset a (zero for Kratzer-Fues).
double potential_offset(const PotentialSpec& spec) noexcept;

/// Aharonov-Bohm flux in units of the flux quantum, split into an integer
/// winding and a fractional remainder.
///
/// Shifting by whole flux quanta only touches the integer part, so
/// l - flux is evaluated along the same floating-point path for (l, flux + k)
/// and (l - k, flux).
class Flux {
public:
    constexpr Flux() = default;
    constexpr Flux(int whole, double fraction) : whole_(whole), fraction_(fraction) {}

    /// Splits a real flux value as whole = floor(value), fraction = value - whole.
    static Flux from_value(double value);

    int whole() const noexcept { return whole_; }
    double fraction() const noexcept { return fraction_; }
    double value() const noexcept { return static_cast<double>(whole_) + fraction_; }

    Flux shifted(int quanta) const noexcept { return Flux(whole_ + quanta, fraction_); }

    /// l0 = l - flux.
    double shift_angular(int l) const noexcept
    {
        return static_cast<double>(l - whole_) - fraction_;
    }

private:
    int whole_ = 0;
    double fraction_ = 0.0;
};

struct QuantumState {
    int n = 0;
    int l = 0;
    Flux flux;
    /// Magnetic quantum number; carried along, never validated against l.
    int m = 0;

    double l0() const noexcept { return flux.shift_angular(l); }
    double j0() const noexcept { return l0() + 0.5; }
};

enum class Source { closed_form, nu_root, oracle };
std::string_view source_name(Source source) noexcept;

struct EnergyLevel {
    QuantumState state;
    double energy = 0.0;
    Source source = Source::closed_form;
};

/// NU coefficients of the flux-shifted radial equation at trial energy E.
///
/// Coulomb, Kratzer and Mie use s = r; the oscillator uses s = omega r^2 with
/// omega = sqrt(2 M b) / hbar. Throws Errc::regularity_bound when J0 <= 0.
nu::Input effective_radial_coefficients(const PotentialSpec& spec, const QuantumState& state,
                                        const PhysicalScale& scale, double energy);

EnergyLevel closed_form_energy(const PotentialSpec& spec, const QuantumState& state,
                               const PhysicalScale& scale);

enum class Variable { r, s_equals_omega_r_squared };

/// Closed-form radial eigenfunction.
///
/// Three related functions are exposed: U(r) solves the J0-form radial
/// equation, R(r) = U / sqrt(r) is the physical radial function and
/// u(r) = r R(r) the reduced one. All carry norm_constant when set.
struct RadialWavefunction {
    PotentialSpec family;
    QuantumState state;
    PhysicalScale scale;
    double energy = 0.0;
    Variable variable = Variable::r;
    /// s = variable_factor * r (Variable::r) or s = variable_factor * r^2.
    double variable_factor = 1.0;
    nu::WavefunctionForm form;
    std::optional<double> norm_constant;

    double nu_variable(double r) const;
    /// Exponent p of the leading r^p behavior of R at the origin (J0 - 1/2).
    double origin_exponent() const;
    double flux_form(double r) const;
    double radial(double r) const;
    double reduced(double r) const;
};

RadialWavefunction closed_form_wavefunction(const PotentialSpec& spec, const QuantumState& state,
                                            const PhysicalScale& scale);

/// Sets norm_constant so that the integral of R^2 r^2 over [0, r_max] is 1.
///
/// Samples r_max uniformly with `samples` points (at least 1001). Throws
/// Errc::tail_not_converged when |R(r_max)| >= 1e-10 max |R|.
RadialWavefunction normalize(const RadialWavefunction& wf, double r_max, int samples);

struct SpectrumRow {
    QuantumState state;
    std::optional<double> energy;
    Source source = Source::closed_form;
    /// Empty on success, otherwise "skipped:J0<=0" or "skipped:unbound".
    std::string status;
};

struct SpectrumTable {
    std::vector<SpectrumRow> rows;
};

/// Closed-form energies for n <= n_max, l <= l_max, sorted by (l, n).
/// Cells outside the bound-state domain are kept as skipped rows.
SpectrumTable spectrum(const PotentialSpec& spec, int n_max, int l_max, Flux flux,
                       const PhysicalScale& scale);

}  // namespace nuspec
