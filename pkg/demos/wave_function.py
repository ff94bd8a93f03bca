"""Frobenius wave function around a hard sphere in d = 3.4 dimensions."""

import numpy as np

from fracfermi.pseudopot import beta0_extract, epsilon_sphere_flux, frobenius_build, psi_eval
from fracfermi.specfun import solid_angle

d, k, abar = 3.4, 0.8, 0.6
series = frobenius_build(d, k, abar)
print(f"alpha_0 = {series.alpha[0]:.10f}, beta_0 = {series.beta[0]:.10f}")
for r in np.linspace(abar / 2, 3.0, 8):
    print(f"  psi({r:.3f}) = {psi_eval(series, r):+.10f}")
print(f"node: psi(abar) = {psi_eval(series, abar):+.2e}")
print(f"beta_0 recovered by the regularizing operator: {beta0_extract(series):.12f}")

limit = solid_angle(d) * series.beta[0] * (2 - d)
for eps in (1e-1, 1e-2, 1e-3):
    print(f"  flux through eps = {eps:g}: {epsilon_sphere_flux(series, eps):.10f} (limit {limit:.10f})")
