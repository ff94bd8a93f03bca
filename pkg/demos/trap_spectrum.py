"""Two atoms in a harmonic trap: exact and first-order energies versus dimension."""

import warnings

from fracfermi.errors import EvenDimensionWarning
from fracfermi.trap import TrapProblem, energy_2d, ladder_root, perturbative_energy, spectrum_scan

print("d = 3, lowest level against a0")
for a0 in (0.2, 0.05, 0.01, 0.005):
    p = TrapProblem(3, a0)
    exact, pert = ladder_root(p, 0).E, perturbative_energy(0, p)
    print(f"  a0 = {a0:<6}: exact {exact:.8f}, first order {pert:.8f}, gap {exact - pert:.2e}")

print(f"\nd = 2 digamma branch: E(a0 = 1) = {energy_2d(1.0):.10f}")

print("\nspectrum scan at a0 = 0.1")
with warnings.catch_warnings():
    warnings.simplefilter("ignore", EvenDimensionWarning)
    rows = spectrum_scan([2.5, 3.0, 3.5, 4.0, 4.5], 0.1, 1)
for row in rows:
    print(f"  d = {row.d:.4f} n = {row.n}: {row.E_exact:.8f} {row.E_pert:.8f} {row.flag}")
