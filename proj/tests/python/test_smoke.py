import math

import numpy as np
import pytest

import nu_spectra as ns


def hydrogen_like(n, l0, b=1.0, mass=1.0, hbar=1.0):
    # textbook Bohr levels with the flux-shifted orbital number
    return -mass * b**2 / (2.0 * hbar**2 * (n + l0 + 1.0) ** 2)


def test_coulomb_levels_match_bohr_formula():
    spec = ns.ModifiedCoulomb(a=0.0, b=1.0)
    for n in range(4):
        for l in range(3):
            assert ns.energy(spec, n, l) == pytest.approx(hydrogen_like(n, l), abs=1e-14)


def test_oscillator_with_flux():
    spec = ns.ModifiedOscillator(a=0.0, b=0.5)
    # omega = 1: E = 2n + l0 + 3/2
    assert ns.energy(spec, 0, 0, 0.25) == pytest.approx(1.25, abs=1e-14)
    assert ns.energy(spec, 2, 1, 0.25) == pytest.approx(6.25, abs=1e-14)


def test_flux_periodicity_is_exact():
    spec = ns.MieType(a=0.0, b=1.0, c=1.0)
    e1 = ns.energy(spec, 1, 3, ns.Flux(1, 0.3))
    e2 = ns.energy(spec, 1, 2, ns.Flux(0, 0.3))
    assert e1 == e2


def test_flux_split():
    f = ns.Flux.from_value(1.75)
    assert f.whole == 1
    assert f.fraction == pytest.approx(0.75)
    assert float(f) == 1.75


def test_regularity_bound_raises():
    spec = ns.ModifiedCoulomb()
    with pytest.raises(ns.NuSpectraError, match="regularity"):
        ns.closed_form_energy(spec, ns.QuantumState(0, 0, 0.75))
    assert issubclass(ns.NuSpectraError, ValueError)


def test_spectrum_table_marks_skipped_cells():
    table = ns.spectrum(ns.ModifiedCoulomb(), 1, 1, 0.75)
    status = {(r.state.n, r.state.l): r.status for r in table.rows}
    assert status[(0, 0)] == "skipped:J0<=0"
    assert status[(0, 1)] == ""
    assert len(table) == 4


def test_normalized_ground_state_matches_hydrogen():
    spec = ns.ModifiedCoulomb()
    wf = ns.normalize(ns.closed_form_wavefunction(spec, ns.QuantumState(0, 0)), 60.0, 4001)
    r = np.linspace(0.05, 10.0, 50)
    expected = 2.0 * np.exp(-r)
    np.testing.assert_allclose(np.abs(wf.radial(r)), expected, rtol=1e-9, atol=1e-12)
    np.testing.assert_allclose(wf.reduced(r), r * wf.radial(r), rtol=1e-14)


def test_oracle_agrees_with_closed_form():
    spec = ns.ModifiedCoulomb()
    scale = ns.PhysicalScale()
    config = ns.oracle.default_config(spec, 0, 0.0, scale, 2)
    result = ns.oracle.solve_radial(spec, 0, 0.0, scale, config)
    report = ns.oracle.compare_levels(ns.spectrum(spec, 2, 0), result, 1e-4, 0.0)
    assert report.passed
    assert report.worst_deviation < 1e-4
    for n, value in enumerate(result.eigenvalues[:3]):
        assert value == pytest.approx(hydrogen_like(n, 0), abs=1e-4)


def test_nu_root_finder_with_python_mapper():
    spec = ns.KratzerFues(b=1.0, c=1.0)
    state = ns.QuantumState(0, 0)

    def mapper(energy):
        return ns.effective_radial_coefficients(spec, state, energy=energy)

    root = ns.nu.solve_energy(mapper, 0, (-0.4, -0.01))
    # Kratzer: l' (l' + 1) = l (l + 1) + 2 M c / hbar^2
    lp = -0.5 + math.sqrt(0.25 + 2.0)
    assert root == pytest.approx(-1.0 / (2.0 * (lp + 1.0) ** 2), abs=1e-10)
    assert root == pytest.approx(ns.energy(spec, 0, 0), abs=1e-10)


def test_special_functions_vectorize():
    x = np.array([0.0, 1.0, 2.5])
    # L_2^(b)(x) = ((b+1)(b+2) - 2(b+2) x + x^2) / 2
    b = 0.5
    expected = ((b + 1) * (b + 2) - 2 * (b + 2) * x + x**2) / 2
    np.testing.assert_allclose(ns.special.laguerre(2, b, x), expected, rtol=1e-14)
    # P_1^(p,q)(x) = (p + 1) + (p + q + 2)(x - 1) / 2
    np.testing.assert_allclose(ns.special.jacobi(1, 0.5, 1.5, x), 1.5 + 2.0 * (x - 1.0), rtol=1e-14)


def test_tridiagonal_lowest_eigenpair():
    values, vectors = ns.linalg.eigen_tridiagonal([2.0] * 5, [-1.0] * 4, 2)
    for k, value in enumerate(values):
        assert value == pytest.approx(2.0 - 2.0 * math.cos((k + 1) * math.pi / 6), abs=1e-12)
    assert np.linalg.norm(vectors[0]) == pytest.approx(1.0)


def test_potential_values_over_array():
    spec = ns.MieType(a=0.5, b=1.0, c=2.0)
    r = np.array([[0.5, 1.0], [2.0, 4.0]])
    np.testing.assert_allclose(ns.potential_values(spec, r), 0.5 - 1.0 / r + 2.0 / r**2, rtol=1e-15)
