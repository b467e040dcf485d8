#pragma once

#include <string>
#include <vector>

#include "nu_spectra/potentials.hpp"

namespace nuspec::oracle {

/// Discretization of the radial axis.
///
/// `uniform`: equally spaced nodes r_min ... r_max, Dirichlet walls at r = 0
/// and one step beyond r_max; the reduced equation for u = r R is discretized
/// directly (3-point, mass-lumped when r_min differs from the step).
///
/// `mapped`: equally spaced nodes in x with r = c ln(1 + e^x), logarithmic
/// near the origin and linear far out; u = sqrt(dr/dx) phi removes the first
/// derivative, leaving a 3-point problem in phi that stays O(h^2) accurate
/// even when u ~ r^(J0 + 1/2) with J0 < 1/2. Walls sit one step outside.
enum class Mesh { uniform, mapped };

struct OracleConfig {
    double r_min = 1e-3;
    double r_max = 40.0;
    int points = 8000;
    int levels_requested = 3;
    Mesh mesh = Mesh::mapped;
    /// Crossover length c of the mapped mesh.
    double map_scale = 1.0;

    /// Throws Errc::invalid_argument unless 0 < r_min < r_max, points >= 100, levels >= 1.
    void validate() const;
};

struct OracleResult {
    OracleConfig config;
    /// Node positions and their quadrature weights for integrals over dr.
    std::vector<double> radii;
    std::vector<double> weights;
    std::vector<double> eigenvalues;
    /// u(r) at the nodes, sum(weights * u^2) = 1, positive near the origin.
    std::vector<std::vector<double>> eigenvectors;
};

/// Grid heuristics sized for levels n <= n_max of the (l, flux) slice.
OracleConfig default_config(const PotentialSpec& spec, int l, Flux flux, const PhysicalScale& scale,
                            int n_max, Mesh mesh = Mesh::mapped);

/// Lowest eigenpairs of -hbar^2/(2M) u'' + [V + hbar^2 lambda0 / (2 M r^2)] u = E u,
/// lambda0 = l0 (l0 + 1).
///
/// Throws Errc::regularity_bound when J0 <= 0 and Errc::unbound when a
/// requested eigenvalue reaches V(r_max).
OracleResult solve_radial(const PotentialSpec& spec, int l, Flux flux, const PhysicalScale& scale,
                          const OracleConfig& config);

struct LevelCheck {
    QuantumState state;
    double closed_form = 0.0;
    double numeric = 0.0;
    double deviation = 0.0;
    bool pass = false;
};

struct ComparisonReport {
    std::vector<LevelCheck> levels;
    double worst_deviation = 0.0;
    bool pass = true;
    /// Set for vacuous comparisons (empty table).
    std::string warning;
    OracleConfig grid;
};

/// Matches each computed row of `closed` (skipped rows are ignored) with the
/// oracle eigenvalue of the same n. A level passes when
/// |E_cf - E_num| <= abs_tol + rel_tol |E_cf|. Throws Errc::level_count_mismatch
/// when the oracle holds fewer levels than needed.
ComparisonReport compare_levels(const SpectrumTable& closed, const OracleResult& numeric,
                                double abs_tol, double rel_tol);

}  // namespace nuspec::oracle
