"""Closed-form bound states of central potentials under Aharonov-Bohm flux."""

from ._core import (
    EnergyLevel,
    Family,
    Flux,
    KratzerFues,
    MieType,
    ModifiedCoulomb,
    ModifiedOscillator,
    NuSpectraError,
    PhysicalScale,
    QuantumState,
    RadialWavefunction,
    Source,
    SpectrumRow,
    SpectrumTable,
    Variable,
    closed_form_energy,
    closed_form_wavefunction,
    effective_radial_coefficients,
    energy,
    family_of,
    linalg,
    make_potential,
    normalize,
    nu,
    oracle,
    potential_offset,
    potential_value,
    potential_values,
    special,
    spectrum,
)

__version__ = "0.1.0"
