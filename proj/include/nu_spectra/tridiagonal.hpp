#pragma once

#include <span>
#include <vector>

/// Lowest eigenpairs of symmetric tridiagonal matrices and of pencils
/// (T, W) with T symmetric tridiagonal and W positive diagonal.
///
/// Eigenvalues come from Sturm-sequence bisection on T - mu W (by Sylvester's
/// law of inertia the count of negative pivots equals the number of
/// eigenvalues below mu). Eigenvectors come from inverse iteration with a
/// partially pivoted tridiagonal LU.
namespace nuspec::linalg {

struct Eigenpair {
    double value = 0.0;
    /// Normalized to x^T W x = 1 (W = I for the plain problem).
    std::vector<double> vector;
};

struct InverseIterationOptions {
    int max_iterations = 50;
    /// Converged when |(T - lambda W) x|_inf <= target * (|T| + |lambda| |W|) |x|_inf.
    double residual_target = 1e-8;
};

/// Number of eigenvalues of T x = lambda W x strictly below mu.
int sturm_count(std::span<const double> diag, std::span<const double> offdiag,
                std::span<const double> weight, double mu);

/// Plain symmetric tridiagonal version (W = I).
int sturm_count(std::span<const double> diag, std::span<const double> offdiag, double mu);

/// The k smallest eigenpairs of T, in ascending order. Throws
/// Errc::inverse_iteration_stagnated when a vector misses the residual target.
std::vector<Eigenpair> eigen_tridiagonal(std::span<const double> diag,
                                         std::span<const double> offdiag, int k,
                                         const InverseIterationOptions& options = {});

/// The k smallest eigenpairs of the pencil (T, diag(weight)), in ascending order.
std::vector<Eigenpair> eigen_pencil(std::span<const double> diag, std::span<const double> offdiag,
                                    std::span<const double> weight, int k,
                                    const InverseIterationOptions& options = {});

}  // namespace nuspec::linalg
