#pragma once

#include <span>

/// Orthogonal polynomials and sampled quadrature.
///
/// All routines are pure and reentrant. Polynomials are evaluated with their
/// three-term recurrences, which stay finite and accurate well past degree 50
/// where explicit factorial sums overflow or cancel.
namespace nuspec::special {

/// Generalized Laguerre polynomial L_n^(beta)(x). Requires n >= 0 and beta > -1.
double laguerre(int n, double beta, double x);

/// Jacobi polynomial P_n^(p,q)(x). Requires n >= 0 and p, q > -1.
double jacobi(int n, double p, double q, double x);

/// Generalized binomial coefficient C(n + beta, n) through log-Gamma; beta > -1.
/// This is L_n^(beta)(0).
double binomial_shifted(int n, double beta);

/// Composite Simpson estimate of the integral of uniformly spaced samples.
/// An even sample count closes the last panel with the trapezoid rule.
double integrate_samples(std::span<const double> values, double step);

}  // namespace nuspec::special
