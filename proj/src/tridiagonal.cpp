#include "nu_spectra/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "nu_spectra/error.hpp"

namespace nuspec::linalg {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

void check_shapes(std::span<const double> diag, std::span<const double> offdiag,
                  std::span<const double> weight)
{
    if (diag.empty()) {
        throw Error(Errc::invalid_argument, "empty matrix");
    }
    if (offdiag.size() + 1 != diag.size()) {
        throw Error(Errc::invalid_argument, "offdiag length must be diag length - 1");
    }
    if (weight.size() != diag.size()) {
        throw Error(Errc::invalid_argument, "weight length must equal diag length");
    }
    for (double w : weight) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw Error(Errc::invalid_argument, "pencil weights must be positive and finite");
        }
    }
    for (double v : diag) {
        if (!std::isfinite(v)) {
            throw Error(Errc::invalid_argument, "matrix entries must be finite");
        }
    }
    for (double v : offdiag) {
        if (!std::isfinite(v)) {
            throw Error(Errc::invalid_argument, "matrix entries must be finite");
        }
    }
}

double pivot_floor(std::span<const double> offdiag)
{
    double emax = 1.0;
    for (double e : offdiag) {
        emax = std::max(emax, e * e);
    }
    return std::numeric_limits<double>::min() * emax;
}

int count_below(std::span<const double> diag, std::span<const double> offdiag,
                std::span<const double> weight, double mu, double pivmin)
{
    int count = 0;
    double q = diag[0] - mu * weight[0];
    if (std::abs(q) < pivmin) {
        q = -pivmin;
    }
    if (q < 0.0) {
        ++count;
    }
    for (std::size_t i = 1; i < diag.size(); ++i) {
        q = diag[i] - mu * weight[i] - offdiag[i - 1] * offdiag[i - 1] / q;
        if (std::abs(q) < pivmin) {
            q = -pivmin;
        }
        if (q < 0.0) {
            ++count;
        }
    }
    return count;
}

/// Gershgorin interval of W^{-1} T, which shares its spectrum with the pencil.
std::pair<double, double> gershgorin(std::span<const double> diag, std::span<const double> offdiag,
                                     std::span<const double> weight)
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    const std::size_t n = diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) {
            radius += std::abs(offdiag[i - 1]);
        }
        if (i + 1 < n) {
            radius += std::abs(offdiag[i]);
        }
        lo = std::min(lo, (diag[i] - radius) / weight[i]);
        hi = std::max(hi, (diag[i] + radius) / weight[i]);
    }
    const double pad = eps * std::max(std::abs(lo), std::abs(hi)) + std::numeric_limits<double>::min();
    return {lo - pad, hi + pad};
}

/// Smallest mu with more than `index` eigenvalues below it, to full precision.
double bisect_eigenvalue(std::span<const double> diag, std::span<const double> offdiag,
                         std::span<const double> weight, int index, double lo, double hi,
                         double pivmin)
{
    for (int iter = 0; iter < 4096; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi ||
            hi - lo <= 2.0 * eps * std::max(std::abs(lo), std::abs(hi))) {
            break;
        }
        if (count_below(diag, offdiag, weight, mid, pivmin) > index) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// LU factorization with partial pivoting of a tridiagonal matrix.
struct TridiagonalLU {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;
    std::vector<double> upper2;
    std::vector<char> swapped;

    TridiagonalLU(std::vector<double> d, std::vector<double> e, double perturbation)
        : lower(e), diag(std::move(d)), upper(std::move(e))
    {
        const std::size_t n = diag.size();
        upper2.assign(n > 2 ? n - 2 : 0, 0.0);
        swapped.assign(n > 0 ? n - 1 : 0, 0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(diag[i]) >= std::abs(lower[i])) {
                if (diag[i] == 0.0) {
                    diag[i] = perturbation;
                }
                const double fact = lower[i] / diag[i];
                lower[i] = fact;
                diag[i + 1] -= fact * upper[i];
            } else {
                const double fact = diag[i] / lower[i];
                diag[i] = lower[i];
                lower[i] = fact;
                const double temp = upper[i];
                upper[i] = diag[i + 1];
                diag[i + 1] = temp - fact * diag[i + 1];
                if (i + 2 < n) {
                    upper2[i] = upper[i + 1];
                    upper[i + 1] = -fact * upper[i + 1];
                }
                swapped[i] = 1;
            }
        }
        if (std::abs(diag[n - 1]) < perturbation) {
            diag[n - 1] = std::copysign(perturbation, diag[n - 1] == 0.0 ? 1.0 : diag[n - 1]);
        }
        for (double& p : diag) {
            if (p == 0.0) {
                p = perturbation;
            }
        }
    }

    void solve(std::vector<double>& b) const
    {
        const std::size_t n = diag.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (swapped[i]) {
                std::swap(b[i], b[i + 1]);
            }
            b[i + 1] -= lower[i] * b[i];
        }
        b[n - 1] /= diag[n - 1];
        if (n > 1) {
            b[n - 2] = (b[n - 2] - upper[n - 2] * b[n - 1]) / diag[n - 2];
        }
        for (std::size_t i = n < 2 ? 0 : n - 2; i-- > 0;) {
            b[i] = (b[i] - upper[i] * b[i + 1] - upper2[i] * b[i + 2]) / diag[i];
        }
    }
};

double weighted_dot(const std::vector<double>& x, const std::vector<double>& y,
                    std::span<const double> weight)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum += weight[i] * x[i] * y[i];
    }
    return sum;
}

double inf_norm(const std::vector<double>& x)
{
    double m = 0.0;
    for (double v : x) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

/// Residual |(T - lambda W) x|_inf.
double residual(std::span<const double> diag, std::span<const double> offdiag,
                std::span<const double> weight, double lambda, const std::vector<double>& x)
{
    const std::size_t n = diag.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = (diag[i] - lambda * weight[i]) * x[i];
        if (i > 0) {
            r += offdiag[i - 1] * x[i - 1];
        }
        if (i + 1 < n) {
            r += offdiag[i] * x[i + 1];
        }
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace

int sturm_count(std::span<const double> diag, std::span<const double> offdiag,
                std::span<const double> weight, double mu)
{
    check_shapes(diag, offdiag, weight);
    return count_below(diag, offdiag, weight, mu, pivot_floor(offdiag));
}

int sturm_count(std::span<const double> diag, std::span<const double> offdiag, double mu)
{
    const std::vector<double> ones(diag.size(), 1.0);
    return sturm_count(diag, offdiag, ones, mu);
}

std::vector<Eigenpair> eigen_tridiagonal(std::span<const double> diag,
                                         std::span<const double> offdiag, int k,
                                         const InverseIterationOptions& options)
{
    const std::vector<double> ones(diag.size(), 1.0);
    return eigen_pencil(diag, offdiag, ones, k, options);
}

std::vector<Eigenpair> eigen_pencil(std::span<const double> diag, std::span<const double> offdiag,
                                    std::span<const double> weight, int k,
                                    const InverseIterationOptions& options)
{
    const int max_inverse_iterations = options.max_iterations;
    const double residual_target = options.residual_target;
    check_shapes(diag, offdiag, weight);
    const std::size_t n = diag.size();
    if (k < 1 || static_cast<std::size_t>(k) > n) {
        throw Error(Errc::invalid_argument,
                    "requested " + std::to_string(k) + " eigenpairs of a " + std::to_string(n) +
                        "x" + std::to_string(n) + " matrix");
    }
    const double pivmin = pivot_floor(offdiag);
    auto [lo, hi] = gershgorin(diag, offdiag, weight);

    std::vector<double> values(static_cast<std::size_t>(k));
    double floor_value = lo;
    for (int j = 0; j < k; ++j) {
        values[static_cast<std::size_t>(j)] =
            bisect_eigenvalue(diag, offdiag, weight, j, floor_value, hi, pivmin);
        floor_value = std::max(lo, values[static_cast<std::size_t>(j)] -
                                       4.0 * eps * std::abs(values[static_cast<std::size_t>(j)]));
    }

    double op_norm = 0.0;
    double weight_norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(diag[i]);
        if (i > 0) {
            row += std::abs(offdiag[i - 1]);
        }
        if (i + 1 < n) {
            row += std::abs(offdiag[i]);
        }
        op_norm = std::max(op_norm, row);
        weight_norm = std::max(weight_norm, weight[i]);
    }

    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);

    std::vector<Eigenpair> pairs;
    pairs.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        const double lambda = values[static_cast<std::size_t>(j)];
        const double scale = op_norm + std::abs(lambda) * weight_norm;
        std::vector<double> shifted(n);
        for (std::size_t i = 0; i < n; ++i) {
            shifted[i] = diag[i] - lambda * weight[i];
        }
        const TridiagonalLU lu(shifted, std::vector<double>(offdiag.begin(), offdiag.end()),
                               eps * scale);

        std::vector<double> x(n);
        for (double& v : x) {
            v = uniform(rng);
        }
        bool converged = false;
        for (int iter = 0; iter < max_inverse_iterations; ++iter) {
            std::vector<double> y(n);
            for (std::size_t i = 0; i < n; ++i) {
                y[i] = weight[i] * x[i];
            }
            lu.solve(y);
            for (const Eigenpair& prev : pairs) {
                const double overlap = weighted_dot(prev.vector, y, weight);
                for (std::size_t i = 0; i < n; ++i) {
                    y[i] -= overlap * prev.vector[i];
                }
            }
            const double norm = std::sqrt(weighted_dot(y, y, weight));
            if (!(norm > 0.0) || !std::isfinite(norm)) {
                for (double& v : y) {
                    v = uniform(rng);
                }
                x = std::move(y);
                continue;
            }
            for (double& v : y) {
                v /= norm;
            }
            x = std::move(y);
            if (iter >= 1 &&
                residual(diag, offdiag, weight, lambda, x) <= residual_target * scale * inf_norm(x)) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            throw Error(Errc::inverse_iteration_stagnated,
                        "eigenvalue index " + std::to_string(j) + " after " +
                            std::to_string(max_inverse_iterations) + " iterations");
        }
        // Sign convention: first component above noise level is positive.
        const double level = 1e-8 * inf_norm(x);
        for (double v : x) {
            if (std::abs(v) > level) {
                if (v < 0.0) {
                    for (double& w : x) {
                        w = -w;
                    }
                }
                break;
            }
        }
        pairs.push_back(Eigenpair{lambda, std::move(x)});
    }
    return pairs;
}

}  // namespace nuspec::linalg
