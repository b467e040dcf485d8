#include <cmath>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "nu_spectra/error.hpp"
#include "nu_spectra/potentials.hpp"
#include "nu_spectra/special_functions.hpp"
#include "support/checks.hpp"

using namespace nuspec;

namespace {

const PhysicalScale natural{};

std::vector<PotentialSpec> reference_potentials()
{
    return {ModifiedCoulomb{0.0, 1.0}, ModifiedOscillator{0.0, 0.5}, KratzerFues{1.0, 1.0}, MieType{1.0, 1.0, 1.0}};
}

QuantumState state(int n, int l, double flux)
{
    return QuantumState{n, l, Flux::from_value(flux)};
}

double energy(const PotentialSpec& spec, int n, int l, double flux)
{
    return closed_form_energy(spec, state(n, l, flux), natural).energy;
}

nu::Bracket family_bracket(const PotentialSpec& spec)
{
    const double a = potential_offset(spec);
    if (std::holds_alternative<ModifiedOscillator>(spec)) {
        return {a + 1e-9, a + 100.0};
    }
    return {a - 10.0, a - 1e-9};
}

/// Integral of u^2 over [0, r_max], substituting r = t^4 to smooth the r^(2 J0 + 1) origin.
double integral_r2(const RadialWavefunction& wf, double r_max, int samples)
{
    const double t_max = std::pow(r_max, 0.25);
    const double step = t_max / (samples - 1);
    std::vector<double> f(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double t = step * i;
        const double u = wf.reduced(t * t * t * t);
        f[static_cast<std::size_t>(i)] = u * u * 4.0 * t * t * t;
    }
    return special::integrate_samples(f, step);
}

}  // namespace

TEST(EffectiveCoefficients, CoulombGround)
{
    const nu::Input in = effective_radial_coefficients(ModifiedCoulomb{0.0, 1.0}, state(0, 0, 0.0), natural, -0.5);
    EXPECT_EQ(in.alpha1, 1.0);
    EXPECT_EQ(in.alpha2, 0.0);
    EXPECT_EQ(in.alpha3, 0.0);
    EXPECT_DOUBLE_EQ(in.xi1, 1.0);
    EXPECT_DOUBLE_EQ(in.xi2, 2.0);
    EXPECT_DOUBLE_EQ(in.xi3, 0.25);
}

TEST(EffectiveCoefficients, KratzerSigmaSquared)
{
    for (double e : {-1.0, -0.2, -0.01}) {
        const nu::Input in = effective_radial_coefficients(KratzerFues{1.0, 1.0}, state(0, 0, 0.0), natural, e);
        EXPECT_DOUBLE_EQ(in.xi3, 2.25);
    }
}

TEST(EffectiveCoefficients, RegularityBound)
{
    for (const auto& spec : reference_potentials()) {
        try {
            effective_radial_coefficients(spec, state(0, 0, 0.75), natural, -0.1);
            FAIL() << "expected regularity error";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::regularity_bound);
            EXPECT_NE(std::string(e.what()).find("flux exceeds regularity bound"), std::string::npos);
        }
    }
}

TEST(EffectiveCoefficients, NegativeInverseSquareRejected)
{
    EXPECT_THROW(effective_radial_coefficients(KratzerFues{1.0, -1.0}, state(0, 0, 0.0), natural, -0.1), Error);
    EXPECT_THROW(closed_form_energy(MieType{0.0, 1.0, -0.5}, state(0, 0, 0.0), natural), Error);
}

TEST(ClosedFormEnergy, Examples)
{
    EXPECT_NEAR(energy(ModifiedCoulomb{0.0, 1.0}, 0, 0, 0.0), -0.5, 1e-15);
    EXPECT_NEAR(energy(ModifiedCoulomb{0.0, 1.0}, 1, 0, 0.0), -0.125, 1e-15);
    EXPECT_NEAR(energy(ModifiedOscillator{0.0, 0.5}, 1, 2, 0.0), 5.5, 1e-14);
    EXPECT_NEAR(energy(KratzerFues{1.0, 1.0}, 1, 1, 0.0), -0.0394176, 1e-6);
    EXPECT_NEAR(energy(ModifiedCoulomb{0.0, 1.0}, 0, 1, 0.5), -2.0 / 9.0, 1e-15);
}

TEST(ClosedFormEnergy, KratzerMatchesHandFormula)
{
    const double sigma = std::sqrt(4.25);
    EXPECT_NEAR(energy(KratzerFues{1.0, 1.0}, 1, 1, 0.0), -1.0 / (2.0 * (1.5 + sigma) * (1.5 + sigma)), 1e-15);
}

TEST(ClosedFormEnergy, BindingSide)
{
    for (const auto& spec : reference_potentials()) {
        for (int n = 0; n <= 3; ++n) {
            for (int l = 0; l <= 2; ++l) {
                const double e = energy(spec, n, l, 0.3);
                if (std::holds_alternative<ModifiedOscillator>(spec)) {
                    EXPECT_GT(e, potential_offset(spec));
                } else {
                    EXPECT_LT(e, potential_offset(spec));
                }
            }
        }
    }
}

TEST(ClosedFormEnergy, NonAttractiveIsUnbound)
{
    try {
        closed_form_energy(ModifiedCoulomb{0.0, -1.0}, state(0, 0, 0.0), natural);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::unbound);
    }
}

TEST(ClosedFormEnergy, UnitsEnterThroughKineticFactor)
{
    const PhysicalScale scale{2.0, 3.0};
    const auto level = closed_form_energy(ModifiedCoulomb{0.0, 1.0}, state(0, 0, 0.0), scale);
    EXPECT_NEAR(level.energy, -3.0 / (2.0 * 4.0), 1e-15);
    const auto osc = closed_form_energy(ModifiedOscillator{0.0, 0.5}, state(0, 0, 0.0), scale);
    EXPECT_NEAR(osc.energy, 2.0 * std::sqrt(1.0 / 3.0) * 1.5, 1e-14);
}

TEST(Invariants, ConstantOffsetShiftIsExact)
{
    for (double a : {-2.5, 0.75, 3.0}) {
        for (int n = 0; n <= 3; ++n) {
            for (int l = 0; l <= 2; ++l) {
                for (double flux : {0.0, 0.3}) {
                    EXPECT_EQ(energy(ModifiedCoulomb{a, 1.0}, n, l, flux), energy(ModifiedCoulomb{0.0, 1.0}, n, l, flux) + a);
                    EXPECT_EQ(energy(ModifiedOscillator{a, 0.5}, n, l, flux),
                              energy(ModifiedOscillator{0.0, 0.5}, n, l, flux) + a);
                    EXPECT_EQ(energy(MieType{a, 1.0, 1.0}, n, l, flux), energy(KratzerFues{1.0, 1.0}, n, l, flux) + a);
                }
            }
        }
    }
}

TEST(Invariants, OffsetLeavesWavefunctionUntouched)
{
    const auto shifted = closed_form_wavefunction(MieType{2.0, 1.0, 1.0}, state(2, 1, 0.3), natural);
    const auto bare = closed_form_wavefunction(KratzerFues{1.0, 1.0}, state(2, 1, 0.3), natural);
    EXPECT_EQ(shifted.form.power, bare.form.power);
    EXPECT_EQ(shifted.form.rate, bare.form.rate);
    EXPECT_EQ(shifted.form.order, bare.form.order);
    EXPECT_EQ(shifted.form.scale, bare.form.scale);
    EXPECT_EQ(shifted.form.degree, bare.form.degree);
    EXPECT_EQ(shifted.variable, bare.variable);
    EXPECT_EQ(shifted.variable_factor, bare.variable_factor);
    EXPECT_EQ(shifted.energy, bare.energy + 2.0);

    const auto c1 = closed_form_wavefunction(ModifiedCoulomb{-1.0, 1.0}, state(1, 0, 0.0), natural);
    const auto c0 = closed_form_wavefunction(ModifiedCoulomb{0.0, 1.0}, state(1, 0, 0.0), natural);
    for (double r : {0.1, 1.0, 4.0, 9.0}) {
        EXPECT_EQ(c1.radial(r), c0.radial(r));
    }
    const auto o1 = closed_form_wavefunction(ModifiedOscillator{5.0, 0.5}, state(1, 1, 0.3), natural);
    const auto o0 = closed_form_wavefunction(ModifiedOscillator{0.0, 0.5}, state(1, 1, 0.3), natural);
    for (double r : {0.1, 1.0, 2.0}) {
        EXPECT_EQ(o1.radial(r), o0.radial(r));
    }
}

TEST(Invariants, LimitReductionsAreExact)
{
    for (int n = 0; n <= 3; ++n) {
        for (int l = 0; l <= 2; ++l) {
            for (double flux : {0.0, 0.3}) {
                const double kratzer = energy(KratzerFues{1.0, 1.0}, n, l, flux);
                EXPECT_EQ(energy(MieType{0.0, 1.0, 1.0}, n, l, flux), kratzer);
                const double coulomb = energy(ModifiedCoulomb{0.0, 1.0}, n, l, flux);
                EXPECT_NEAR(energy(KratzerFues{1.0, 0.0}, n, l, flux), coulomb, 1e-14 * std::abs(coulomb));
                EXPECT_NEAR(energy(MieType{0.0, 1.0, 0.0}, n, l, flux), coulomb, 1e-14 * std::abs(coulomb));
            }
        }
    }
}

TEST(Invariants, InverseSquareLimitIsFirstOrder)
{
    for (int n = 0; n <= 2; ++n) {
        for (int l = 0; l <= 2; ++l) {
            const double base = energy(ModifiedCoulomb{0.0, 1.0}, n, l, 0.3);
            const double d4 = energy(KratzerFues{1.0, 1e-4}, n, l, 0.3) - base;
            const double d8 = energy(KratzerFues{1.0, 1e-8}, n, l, 0.3) - base;
            EXPECT_NEAR(d4 / d8, 1e4, 1e4 * 1e-2) << "n=" << n << " l=" << l;
        }
    }
}

TEST(Invariants, FluxPeriodicityIsExact)
{
    for (const auto& spec : reference_potentials()) {
        for (int theta : {1, 2}) {
            for (double flux : {0.0, 0.3}) {
                for (int n = 0; n <= 3; ++n) {
                    for (int l = theta; l <= theta + 2; ++l) {
                        const Flux base = Flux::from_value(flux);
                        const double lhs = closed_form_energy(spec, QuantumState{n, l, base.shifted(theta)}, natural).energy;
                        const double rhs = closed_form_energy(spec, QuantumState{n, l - theta, base}, natural).energy;
                        EXPECT_EQ(lhs, rhs);
                    }
                }
            }
        }
    }
}

TEST(Invariants, FluxFromValueIsPeriodicToo)
{
    // 1.3 decomposes as 1 + 0.30000000000000004, so compare within rounding only.
    const double lhs = energy(ModifiedCoulomb{0.0, 1.0}, 0, 1, 1.3);
    const double rhs = energy(ModifiedCoulomb{0.0, 1.0}, 0, 0, 0.3);
    EXPECT_NEAR(lhs, rhs, 1e-14);
}

TEST(Invariants, NuRootAgreement)
{
    for (const auto& spec : reference_potentials()) {
        for (int n = 0; n <= 3; ++n) {
            for (int l = 0; l <= 2; ++l) {
                for (double flux : {0.0, 0.3}) {
                    const QuantumState s = state(n, l, flux);
                    const double closed = closed_form_energy(spec, s, natural).energy;
                    const double root = nu::solve_energy(
                        [&](double e) { return effective_radial_coefficients(spec, s, natural, e); }, n,
                        family_bracket(spec));
                    EXPECT_NEAR(root, closed, 1e-10) << family_name(family_of(spec)) << " n=" << n << " l=" << l;
                    const double residual =
                        nu::energy_residual_reduced(effective_radial_coefficients(spec, s, natural, closed), n);
                    EXPECT_LT(std::abs(residual), 1e-12);
                }
            }
        }
    }
}

TEST(Invariants, Degeneracies)
{
    std::map<int, std::vector<double>> coulomb;
    std::map<int, std::vector<double>> oscillator;
    for (int n = 0; n <= 3; ++n) {
        for (int l = 0; l <= 3; ++l) {
            coulomb[n + l].push_back(energy(ModifiedCoulomb{0.0, 1.0}, n, l, 0.0));
            oscillator[2 * n + l].push_back(energy(ModifiedOscillator{0.0, 0.5}, n, l, 0.0));
        }
    }
    for (const auto* shells : {&coulomb, &oscillator}) {
        for (const auto& [key, values] : *shells) {
            for (double v : values) {
                EXPECT_NEAR(v, values.front(), 1e-14) << "shell " << key;
            }
        }
    }
}

TEST(Wavefunction, CoulombGroundIsExponential)
{
    const auto wf = closed_form_wavefunction(ModifiedCoulomb{0.0, 1.0}, state(0, 0, 0.0), natural);
    EXPECT_EQ(wf.variable, Variable::r);
    EXPECT_NEAR(wf.form.power, 0.5, 1e-15);
    EXPECT_NEAR(wf.form.rate, -1.0, 1e-15);
    EXPECT_NEAR(wf.form.order, 1.0, 1e-15);
    EXPECT_NEAR(wf.form.scale, 2.0, 1e-15);
    for (double r : {0.0, 0.5, 2.0, 7.0}) {
        EXPECT_NEAR(wf.radial(r), std::exp(-r), 1e-15);
    }
}

TEST(Wavefunction, OscillatorGroundIsGaussian)
{
    const auto wf = closed_form_wavefunction(ModifiedOscillator{0.0, 0.5}, state(0, 0, 0.0), natural);
    EXPECT_EQ(wf.variable, Variable::s_equals_omega_r_squared);
    EXPECT_NEAR(wf.form.power, 0.25, 1e-15);
    EXPECT_NEAR(wf.form.rate, -0.5, 1e-15);
    EXPECT_NEAR(wf.form.order, 0.5, 1e-15);
    const double ratio = wf.radial(1.0) / std::exp(-0.5);
    for (double r : {0.0, 0.3, 1.7, 3.0}) {
        EXPECT_NEAR(wf.radial(r), ratio * std::exp(-0.5 * r * r), 1e-15);
    }
}

TEST(Wavefunction, RegularityBound)
{
    for (const auto& spec : reference_potentials()) {
        EXPECT_THROW(closed_form_wavefunction(spec, state(0, 1, 1.6), natural), Error);
    }
}

TEST(Wavefunction, VanishesAtOriginAndDecays)
{
    for (const auto& spec : reference_potentials()) {
        for (int l = 0; l <= 2; ++l) {
            const auto wf = closed_form_wavefunction(spec, state(1, l, 0.3), natural);
            EXPECT_LT(std::abs(wf.reduced(1e-8)), 1e-3);
            double peak = 0.0;
            for (int i = 1; i <= 200; ++i) {
                peak = std::max(peak, std::abs(wf.radial(0.1 * i)));
            }
            EXPECT_LT(std::abs(wf.radial(400.0)), 1e-10 * peak);
            EXPECT_LE(std::abs(wf.radial(400.0)), std::abs(wf.radial(200.0)));
        }
    }
}

TEST(Normalize, CoulombGround)
{
    const auto wf = normalize(closed_form_wavefunction(ModifiedCoulomb{0.0, 1.0}, state(0, 0, 0.0), natural), 40.0, 4001);
    ASSERT_TRUE(wf.norm_constant.has_value());
    EXPECT_NEAR(*wf.norm_constant, 2.0, 1e-6);
    EXPECT_NEAR(integral_r2(wf, 40.0, 200001), 1.0, 1e-10);
}

TEST(Normalize, OscillatorGround)
{
    const auto wf = normalize(closed_form_wavefunction(ModifiedOscillator{0.0, 0.5}, state(0, 0, 0.0), natural), 10.0, 2001);
    EXPECT_NEAR(integral_r2(wf, 10.0, 200001), 1.0, 1e-8);
    // Analytic: R = (4/sqrt(pi))^(1/2) e^(-r^2/2)
    EXPECT_NEAR(wf.radial(0.0), std::sqrt(4.0 / std::sqrt(M_PI)), 1e-6);
}

TEST(Normalize, ShortDomainTailNotConverged)
{
    const auto wf = closed_form_wavefunction(ModifiedCoulomb{0.0, 1.0}, state(0, 0, 0.0), natural);
    try {
        normalize(wf, 2.0, 2001);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::tail_not_converged);
        EXPECT_NE(std::string(e.what()).find("tail not converged"), std::string::npos);
    }
}

TEST(Normalize, RejectsTooFewSamples)
{
    const auto wf = closed_form_wavefunction(ModifiedCoulomb{0.0, 1.0}, state(0, 0, 0.0), natural);
    EXPECT_THROW(normalize(wf, 40.0, 1000), Error);
}

TEST(Normalize, AllFamiliesUnitNorm)
{
    for (const auto& spec : reference_potentials()) {
        for (int n = 0; n <= 2; ++n) {
            for (int l = 0; l <= 2; ++l) {
                const double r_max = std::holds_alternative<ModifiedOscillator>(spec) ? 12.0 : 300.0;
                const auto wf = normalize(closed_form_wavefunction(spec, state(n, l, 0.3), natural), r_max, 20001);
                EXPECT_NEAR(integral_r2(wf, r_max, 200001), 1.0, 1e-6) << family_name(family_of(spec)) << n << l;
            }
        }
    }
}

TEST(Wavefunction, OdeResidual)
{
    for (const auto& spec : reference_potentials()) {
        for (int n = 0; n <= 2; ++n) {
            for (int l = 0; l <= 2; ++l) {
                for (double flux : {0.0, 0.3}) {
                    const auto wf = closed_form_wavefunction(spec, state(n, l, flux), natural);
                    ASSERT_FALSE(wf.form.general_case);
                    const auto res = checks::ode_residual(wf, 0.1, 15.0, 1500);
                    EXPECT_LT(res.evaluation_mismatch, 1e-12);
                    EXPECT_LT(res.relative(), 1e-6)
                        << family_name(family_of(spec)) << " n=" << n << " l=" << l << " flux=" << flux;
                }
            }
        }
    }
}

TEST(Wavefunction, NodeCountEqualsRadialQuantumNumber)
{
    for (const auto& spec : reference_potentials()) {
        for (int n = 0; n <= 4; ++n) {
            for (int l = 0; l <= 2; ++l) {
                const auto wf = closed_form_wavefunction(spec, state(n, l, 0.3), natural);
                const double r_max = std::holds_alternative<ModifiedOscillator>(spec) ? 10.0 : 20.0 * (n + l + 2) * (n + l + 2);
                EXPECT_EQ(checks::sign_changes(wf, r_max, 50000), n) << family_name(family_of(spec)) << " n=" << n;
            }
        }
    }
}

TEST(Spectrum, CoulombTable)
{
    const auto table = spectrum(ModifiedCoulomb{0.0, 1.0}, 1, 1, Flux{}, natural);
    ASSERT_EQ(table.rows.size(), 4u);
    const double expected[] = {-0.5, -0.125, -0.125, -1.0 / 18.0};
    for (std::size_t i = 0; i < 4; ++i) {
        ASSERT_TRUE(table.rows[i].energy.has_value());
        EXPECT_NEAR(*table.rows[i].energy, expected[i], 1e-15);
        EXPECT_EQ(table.rows[i].source, Source::closed_form);
        EXPECT_TRUE(table.rows[i].status.empty());
    }
    EXPECT_EQ(table.rows[0].state.l, 0);
    EXPECT_EQ(table.rows[1].state.n, 1);
    EXPECT_EQ(table.rows[2].state.l, 1);
}

TEST(Spectrum, OscillatorTable)
{
    const auto table = spectrum(ModifiedOscillator{0.0, 0.5}, 1, 0, Flux{}, natural);
    ASSERT_EQ(table.rows.size(), 2u);
    EXPECT_NEAR(*table.rows[0].energy, 1.5, 1e-15);
    EXPECT_NEAR(*table.rows[1].energy, 3.5, 1e-15);
}

TEST(Spectrum, RowsBeyondRegularityAreSkipped)
{
    const auto table = spectrum(ModifiedCoulomb{0.0, 1.0}, 1, 1, Flux::from_value(2.5), natural);
    ASSERT_EQ(table.rows.size(), 4u);
    for (const auto& row : table.rows) {
        EXPECT_FALSE(row.energy.has_value());
        EXPECT_EQ(row.status, "skipped:J0<=0");
    }
    const auto unbound = spectrum(ModifiedCoulomb{0.0, -1.0}, 0, 0, Flux{}, natural);
    EXPECT_EQ(unbound.rows.at(0).status, "skipped:unbound");
}

TEST(Flux, Decomposition)
{
    const Flux f = Flux::from_value(2.25);
    EXPECT_EQ(f.whole(), 2);
    EXPECT_EQ(f.fraction(), 0.25);
    const Flux g = Flux::from_value(-0.5);
    EXPECT_EQ(g.whole(), -1);
    EXPECT_EQ(g.fraction(), 0.5);
    EXPECT_EQ(f.shifted(1).whole(), 3);
    EXPECT_THROW(Flux::from_value(NAN), Error);
}

TEST(Family, Names)
{
    for (Family f : {Family::coulomb, Family::oscillator, Family::kratzer, Family::mie}) {
        EXPECT_EQ(parse_family(family_name(f)), f);
    }
    EXPECT_FALSE(parse_family("yukawa").has_value());
}
