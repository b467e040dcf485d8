#include "nu_spectra/nu_core.hpp"

#include <cmath>
#include <string>

#include "nu_spectra/error.hpp"
#include "nu_spectra/special_functions.hpp"

namespace nuspec::nu {

namespace {

double checked_sqrt(double radicand, const char* name)
{
    if (radicand < 0.0) {
        if (radicand >= -radicand_slack) {
            return 0.0;
        }
        throw Error(Errc::complex_branch,
                    std::string(name) + " = " + std::to_string(radicand) + " < 0");
    }
    return std::sqrt(radicand);
}

bool finite(const Input& in)
{
    return std::isfinite(in.alpha1) && std::isfinite(in.alpha2) && std::isfinite(in.alpha3) &&
           std::isfinite(in.xi1) && std::isfinite(in.xi2) && std::isfinite(in.xi3);
}

}  // namespace

Derived derive_parameters(const Input& input)
{
    if (!finite(input)) {
        throw Error(Errc::invalid_argument, "NU coefficients must be finite");
    }
    Derived d;
    d.source = input;
    const double a1 = input.alpha1;
    const double a2 = input.alpha2;
    const double a3 = input.alpha3;
    d.alpha4 = 0.5 * (1.0 - a1);
    d.alpha5 = 0.5 * (a2 - 2.0 * a3);
    d.alpha6 = d.alpha5 * d.alpha5 + input.xi1;
    d.alpha7 = 2.0 * d.alpha4 * d.alpha5 - input.xi2;
    d.alpha8 = d.alpha4 * d.alpha4 + input.xi3;
    d.alpha9 = d.alpha6 + a3 * d.alpha7 + a3 * a3 * d.alpha8;

    const double root8 = checked_sqrt(d.alpha8, "alpha8");
    const double root9 = checked_sqrt(d.alpha9, "alpha9");
    d.alpha10 = a1 + 2.0 * d.alpha4 + 2.0 * root8;
    d.alpha11 = a2 - 2.0 * d.alpha5 + 2.0 * (root9 + a3 * root8);
    d.alpha12 = d.alpha4 + root8;
    d.alpha13 = d.alpha5 - (root9 + a3 * root8);
    return d;
}

double energy_residual_general(const Input& input, int n)
{
    const Derived d = derive_parameters(input);
    const double a2 = input.alpha2;
    const double a3 = input.alpha3;
    const double root8 = checked_sqrt(d.alpha8, "alpha8");
    const double root9 = checked_sqrt(d.alpha9, "alpha9");
    const double m = static_cast<double>(n);
    return a2 * m - (2.0 * m + 1.0) * d.alpha5 + (2.0 * m + 1.0) * (root9 + a3 * root8) +
           m * (m - 1.0) * a3 + d.alpha7 + 2.0 * a3 * d.alpha8 + 2.0 * std::sqrt(d.alpha8 * d.alpha9);
}

double energy_residual_reduced(const Input& input, int n)
{
    if (input.alpha3 != 0.0) {
        throw Error(Errc::invalid_argument, "reduced energy condition requires alpha3 = 0");
    }
    const Derived d = derive_parameters(input);
    const double root9 = checked_sqrt(d.alpha9, "alpha9");
    const double m = static_cast<double>(n);
    return m * input.alpha2 - (2.0 * m + 1.0) * d.alpha5 + (2.0 * m + 1.0) * root9 + d.alpha7 +
           2.0 * std::sqrt(d.alpha8 * d.alpha9);
}

double solve_energy(const Mapper& mapper, int n, Bracket bracket, double tolerance, int max_iterations)
{
    double lo = bracket.lo;
    double hi = bracket.hi;
    double f_lo = energy_residual_reduced(mapper(lo), n);
    const double f_hi = energy_residual_reduced(mapper(hi), n);
    if (f_lo == 0.0) {
        return lo;
    }
    if (f_hi == 0.0) {
        return hi;
    }
    if ((f_lo < 0.0) == (f_hi < 0.0)) {
        throw Error(Errc::no_sign_change, "residual has the same sign at E = " + std::to_string(lo) +
                                              " and E = " + std::to_string(hi));
    }
    for (int iter = 0; iter < max_iterations; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= tolerance || mid == lo || mid == hi) {
            return mid;
        }
        const double f_mid = energy_residual_reduced(mapper(mid), n);
        if (f_mid == 0.0) {
            return mid;
        }
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    throw Error(Errc::no_convergence,
                "bisection did not reach tolerance in " + std::to_string(max_iterations) + " iterations");
}

double WavefunctionForm::evaluate_regular(double s) const
{
    if (!general_case) {
        return std::exp(rate * s) * special::laguerre(degree, order, scale * s);
    }
    return std::exp(jacobi_exponent * std::log1p(-alpha3 * s)) *
           special::jacobi(degree, order, jacobi_q, 1.0 - 2.0 * alpha3 * s);
}

double WavefunctionForm::evaluate(double s) const
{
    return std::pow(s, power) * evaluate_regular(s);
}

WavefunctionForm wavefunction_form(const Derived& derived, int n)
{
    if (n < 0) {
        throw Error(Errc::invalid_argument, "radial quantum number must be non-negative");
    }
    WavefunctionForm form;
    form.power = derived.alpha12;
    form.rate = derived.alpha13;
    form.degree = n;
    form.order = derived.alpha10 - 1.0;
    form.scale = derived.alpha11;
    const double a3 = derived.source.alpha3;
    if (a3 == 0.0) {
        if (!(form.rate < 0.0)) {
            throw Error(Errc::non_normalizable,
                        "exponential rate " + std::to_string(form.rate) + " does not decay");
        }
        return form;
    }
    form.general_case = true;
    form.alpha3 = a3;
    form.jacobi_q = derived.alpha11 / a3 - derived.alpha10 - 1.0;
    form.jacobi_exponent = -derived.alpha12 - derived.alpha13 / a3;
    if (!(form.order > -1.0) || !(form.jacobi_q > -1.0)) {
        throw Error(Errc::non_normalizable, "Jacobi parameters fall outside (-1, inf)");
    }
    return form;
}

}  // namespace nuspec::nu
