#include "nu_spectra/special_functions.hpp"

#include <cmath>
#include <string>

#include "nu_spectra/error.hpp"

namespace nuspec::special {

double laguerre(int n, double beta, double x)
{
    if (n < 0) {
        throw Error(Errc::invalid_argument, "Laguerre degree must be non-negative");
    }
    if (!(beta > -1.0)) {
        throw Error(Errc::invalid_argument,
                    "Laguerre order must exceed -1, got " + std::to_string(beta));
    }
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double curr = 1.0 + beta - x;
    for (int k = 2; k <= n; ++k) {
        const double next = ((2.0 * k - 1.0 + beta - x) * curr - (k - 1.0 + beta) * prev) / k;
        prev = curr;
        curr = next;
    }
    return curr;
}

double jacobi(int n, double p, double q, double x)
{
    if (n < 0) {
        throw Error(Errc::invalid_argument, "Jacobi degree must be non-negative");
    }
    if (!(p > -1.0) || !(q > -1.0)) {
        throw Error(Errc::invalid_argument, "Jacobi parameters must exceed -1");
    }
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double curr = (p + 1.0) + 0.5 * (p + q + 2.0) * (x - 1.0);
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + p + q;
        const double a = 2.0 * k * (k + p + q) * (s - 2.0);
        const double b = (s - 1.0) * (s * (s - 2.0) * x + p * p - q * q);
        const double c = 2.0 * (k + p - 1.0) * (k + q - 1.0) * s;
        const double next = (b * curr - c * prev) / a;
        prev = curr;
        curr = next;
    }
    return curr;
}

double binomial_shifted(int n, double beta)
{
    if (n < 0 || !(beta > -1.0)) {
        throw Error(Errc::invalid_argument, "binomial requires n >= 0 and beta > -1");
    }
    return std::exp(std::lgamma(n + beta + 1.0) - std::lgamma(n + 1.0) - std::lgamma(beta + 1.0));
}

double integrate_samples(std::span<const double> values, double step)
{
    const std::size_t count = values.size();
    if (count < 2) {
        throw Error(Errc::invalid_argument, "quadrature needs at least 2 samples");
    }
    if (!(step > 0.0)) {
        throw Error(Errc::invalid_argument, "quadrature step must be positive");
    }
    if (count == 2) {
        return 0.5 * step * (values[0] + values[1]);
    }
    // Simpson over an odd number of points; a leftover panel gets the trapezoid.
    const std::size_t simpson_end = (count % 2 == 1) ? count - 1 : count - 2;
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t i = 1; i < simpson_end; ++i) {
        (i % 2 == 1 ? odd : even) += values[i];
    }
    double total = step / 3.0 * (values[0] + 4.0 * odd + 2.0 * even + values[simpson_end]);
    if (simpson_end != count - 1) {
        total += 0.5 * step * (values[count - 2] + values[count - 1]);
    }
    return total;
}

}  // namespace nuspec::special
