#pragma once

#include <functional>

/// Parametric Nikiforov-Uvarov solver.
///
/// An equation of the form
///
///     Psi'' + (a1 - a2 s) / (s (1 - a3 s)) Psi'
///           + (-xi1 s^2 + xi2 s - xi3) / (s^2 (1 - a3 s)^2) Psi = 0
///
/// is characterized by six coefficients. Ten derived quantities fix both the
/// quantization condition and the polynomial form of the eigenfunctions.
namespace nuspec::nu {

/// The six coefficients of the standard form, all dimensionless.
struct Input {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha3 = 0.0;
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;
};

/// Derived parameters alpha4 ... alpha13 together with the input they came from.
struct Derived {
    Input source;
    double alpha4 = 0.0;
    double alpha5 = 0.0;
    double alpha6 = 0.0;
    double alpha7 = 0.0;
    double alpha8 = 0.0;
    double alpha9 = 0.0;
    double alpha10 = 0.0;
    double alpha11 = 0.0;
    double alpha12 = 0.0;
    double alpha13 = 0.0;
};

/// Radicands in [-radicand_slack, 0) are clamped to zero.
inline constexpr double radicand_slack = 1e-12;

/// Throws Errc::complex_branch when alpha8 or alpha9 is negative.
Derived derive_parameters(const Input& input);

/// Left-hand side of the general quantization condition; zero at an eigenvalue.
double energy_residual_general(const Input& input, int n);

/// Quantization condition for alpha3 = 0. Throws Errc::invalid_argument otherwise.
double energy_residual_reduced(const Input& input, int n);

using Mapper = std::function<Input(double energy)>;

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

/// Bisection root of energy_residual_reduced(mapper(E), n) inside the bracket.
///
/// Converges to `tolerance` in E within `max_iterations` halvings. Throws
/// Errc::no_sign_change when the residual does not change sign over the
/// bracket and Errc::no_convergence when the iteration budget runs out.
double solve_energy(const Mapper& mapper, int n, Bracket bracket, double tolerance = 1e-12,
                    int max_iterations = 200);

/// Closed form of an eigenfunction.
///
/// For alpha3 = 0: Psi(s) = s^power * exp(rate * s) * L_degree^(order)(scale * s).
/// Otherwise: Psi(s) = s^power * (1 - alpha3 s)^jacobi_exponent
///                     * P_degree^(order, jacobi_q)(1 - 2 alpha3 s).
struct WavefunctionForm {
    double power = 0.0;
    double rate = 0.0;
    int degree = 0;
    double order = 0.0;
    double scale = 0.0;
    bool general_case = false;
    double alpha3 = 0.0;
    double jacobi_q = 0.0;
    double jacobi_exponent = 0.0;

    /// Psi(s) without the s^power factor.
    double evaluate_regular(double s) const;
    /// Psi(s).
    double evaluate(double s) const;
};

/// Throws Errc::non_normalizable on the alpha3 = 0 path when rate >= 0.
WavefunctionForm wavefunction_form(const Derived& derived, int n);

}  // namespace nuspec::nu
