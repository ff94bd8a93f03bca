"""Two atoms in an isotropic harmonic trap of non-integer dimension.

Oscillator units (hbar * omega = 1, relative-motion oscillator length 1)
are used throughout. The contact interaction enters through the node
radius abar, fixed once from the trap scattering length ``a0`` by

    abar**(d - 2) = a0**(d - 2) / 2**(d / 2).

Exact energies are roots of

    pi (d - 2) / Gamma(d/2)**2 * Gamma(d/4 - E/2) / Gamma(1 - d/4 - E/2)
        + sin(d pi / 2) / abar**(d - 2) = 0.
"""

import math
import warnings
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from scipy.optimize import bisect

from .dimension import DEFAULT_EPS_GUARD, guard_even
from .errors import DomainError, NoRootInInterval, NonConvergence, PoleError
from .specfun import digamma, gamma, kummerU, laguerre, laguerre_sequence, rgamma, solid_angle

__all__ = [
    "TrapProblem",
    "EnergyBranch",
    "OscState",
    "SpectrumRow",
    "GreensSum",
    "ho_energy",
    "ho_wavefunction",
    "energy_residual",
    "solve_energy",
    "ladder_root",
    "perturbative_energy",
    "energy_2d",
    "greens_sum_check",
    "spectrum_scan",
]

POLE_DELTA = 1e-8
BOUND_DEPTH = 40.0


@dataclass(frozen=True)
class TrapProblem:
    """Trap dimension ``d`` in [1, 6) and scattering length ``a0``.

    Even ``d`` is moved to ``d + eps_guard`` at construction; ``shifted``
    records that it happened. A negative ``a0`` (attraction) needs an odd
    integer ``d - 2`` so that ``a0**(d - 2)`` stays real.
    """

    d: float
    a0: float
    eps_guard: float = DEFAULT_EPS_GUARD
    E_min: float = None
    shifted: bool = field(init=False, default=False)

    def __post_init__(self):
        if not (math.isfinite(self.d) and 1.0 <= self.d < 6.0):
            raise DomainError("trap dimension must lie in [1, 6)")
        if math.isnan(self.a0):
            raise DomainError("a0 must not be NaN")
        if self.a0 < 0 and not (self.d - 2.0).is_integer():
            raise DomainError("negative a0 needs an integer d - 2")
        d, shifted = guard_even(self.d, self.eps_guard, min_j=1)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "shifted", shifted)
        if self.E_min is None:
            object.__setattr__(self, "E_min", d / 2.0 - BOUND_DEPTH)

    @property
    def inv_abar_pow(self):
        """1 / abar**(d - 2) = 2**(d/2) * a0**(2 - d); infinite for a0 -> 0 at d > 2."""
        d, a0 = self.d, self.a0
        if a0 == 0.0:
            return math.inf if d > 2 else 0.0
        if math.isinf(a0):
            return 0.0 if d > 2 else math.inf
        return 2.0 ** (d / 2.0) * a0 ** (2.0 - d)

    @property
    def abar(self):
        d, a0 = self.d, self.a0
        return math.copysign(abs(a0) * 2.0 ** (-d / (2.0 * (d - 2.0))), a0)

    @property
    def non_interacting(self):
        return math.isinf(self.inv_abar_pow)


class EnergyBranch(NamedTuple):
    n: int
    E: float
    method: str
    bound: bool = False


class SpectrumRow(NamedTuple):
    d: float
    n: int
    E_exact: float
    E_pert: float
    flag: str


class GreensSum(NamedTuple):
    partial_sum: float
    closed: float


def ho_energy(n, d):
    """Oscillator level 2n + d/2."""
    if n < 0 or d <= 0:
        raise DomainError("ho_energy requires n >= 0 and d > 0")
    return 2.0 * n + d / 2.0


@dataclass(frozen=True)
class OscState:
    n: int
    d: float

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n or self.d <= 0:
            raise DomainError("OscState needs integer n >= 0 and d > 0")

    @property
    def energy(self):
        return ho_energy(self.n, self.d)

    @property
    def normalization(self):
        n, d = self.n, self.d
        return math.sqrt(2.0 * math.gamma(n + 1) / (solid_angle(d) * math.gamma(n + d / 2.0)))


def ho_wavefunction(state, r):
    """s-wave oscillator eigenfunction, normalized with the solid-angle measure."""
    if r < 0:
        raise DomainError("r must be non-negative")
    alpha = (state.d - 2.0) / 2.0
    return state.normalization * math.exp(-0.5 * r * r) * laguerre(state.n, alpha, r * r)


def energy_residual(E, problem):
    """Left side minus right side of the trap energy equation.

    Zeros of the denominator Gamma make the first term vanish rather than
    fail; only the numerator poles E = 2m + d/2 raise.
    """
    d = problem.d
    num_arg = d / 4.0 - E / 2.0
    if num_arg <= 0 and num_arg.is_integer():
        raise PoleError(f"energy equation has a pole at E = {E:g}")
    lhs = math.pi * (d - 2.0) / math.gamma(d / 2.0) ** 2 * gamma(num_arg) * rgamma(1.0 - d / 4.0 - E / 2.0)
    return lhs + math.sin(d * math.pi / 2.0) * problem.inv_abar_pow


def _bisect_root(problem, lo, hi, delta):
    a, b = lo + delta, hi - delta
    fa, fb = energy_residual(a, problem), energy_residual(b, problem)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if fa * fb > 0:
        return None
    return bisect(energy_residual, a, b, args=(problem,), xtol=1e-15, rtol=1e-15, maxiter=400)


def solve_energy(problem, n_max, delta=POLE_DELTA):
    """Exact trap energies below the pole 2 n_max + d/2.

    Every interval between consecutive numerator poles (2m + d/2 - 2, 2m + d/2),
    m = 0..n_max, is searched, plus the bound-state window (E_min, d/2 - 2).
    Empty intervals emit NoRootInInterval. Roots are returned in ascending
    order and labelled by rank.
    """
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    d = problem.d
    if problem.non_interacting:
        return [EnergyBranch(m, ho_energy(m, d), "exact") for m in range(n_max + 1)]
    found = []
    windows = [(problem.E_min, d / 2.0 - 2.0, True)]
    windows += [(2.0 * m + d / 2.0 - 2.0, 2.0 * m + d / 2.0, False) for m in range(n_max + 1)]
    for lo, hi, bound in windows:
        if hi <= lo:
            continue
        # the bound window's left end is not a pole, so it needs no offset
        root = _bisect_root(problem, lo - (delta if bound else 0.0), hi, delta)
        if root is None:
            if not bound:
                warnings.warn(
                    f"no root of the energy equation in ({lo:.10g}, {hi:.10g})",
                    NoRootInInterval,
                    stacklevel=2,
                )
            continue
        found.append((root, bound))
    return [EnergyBranch(n, E, "exact", bound) for n, (E, bound) in enumerate(found)]


def _shift_coefficient(n, d):
    return (
        2.0 * math.pi * (d - 2.0)
        / (math.sin(d * math.pi / 2.0) * math.gamma(d / 2.0) ** 3)
        * math.exp(math.lgamma(n + d / 2.0) - math.lgamma(n + 1.0))
        * rgamma(1.0 - d / 2.0)
    )


def perturbative_energy(n, problem):
    """First-order energy 2n + d/2 + c_n abar**(d - 2) for weak interaction."""
    if problem.shifted:
        raise DomainError("the perturbative energy is not defined at even d")
    d = problem.d
    base = ho_energy(n, d)
    inv = problem.inv_abar_pow
    if math.isinf(inv):
        return base
    if inv == 0.0:
        return math.copysign(math.inf, _shift_coefficient(n, d))
    return base + _shift_coefficient(n, d) / inv


def ladder_root(problem, n, delta=POLE_DELTA):
    """Exact energy continuously connected to the oscillator level ``n``.

    The level moves up for repulsion and down for attraction, so the root
    is sought between level ``n`` and its upper or lower neighbour according
    to the sign of the first-order shift. Returns None if there is no root.
    """
    d = problem.d
    p_n = ho_energy(n, d)
    if problem.non_interacting:
        return EnergyBranch(n, p_n, "exact")
    if _shift_coefficient(n, d) * (1.0 if problem.inv_abar_pow > 0 else -1.0) > 0:
        lo, hi = p_n, p_n + 2.0
        root = _bisect_root(problem, lo, hi, delta)
    elif n == 0:
        root = _bisect_root(problem, problem.E_min - delta, p_n, delta)
    else:
        root = _bisect_root(problem, p_n - 2.0, p_n, delta)
    if root is None:
        return None
    return EnergyBranch(n, root, "exact", root < d / 2.0 - 2.0)


def energy_2d(a0):
    """Lowest energy at d = 2 from psi(1/2 - E/2) = ln(1 / a0**2).

    Solved by bisection on the branch where the digamma argument is positive.
    """
    if not a0 > 0:
        raise DomainError("energy_2d requires a0 > 0")
    target = -2.0 * math.log(a0)
    f = lambda x: digamma(x) - target  # noqa: E731
    lo, hi = 0.5, 2.0
    while f(lo) > 0:
        lo *= 0.5
        if lo < 1e-300:
            raise NonConvergence("energy_2d: no lower bracket")
    while f(hi) < 0:
        hi *= 2.0
        if hi > 1e300:
            raise NonConvergence("energy_2d: no upper bracket")
    x = bisect(f, lo, hi, xtol=1e-15, rtol=1e-15, maxiter=400)
    return 1.0 - 2.0 * x


def greens_sum_check(d, nu, r, n_terms=2000):
    """Compare sum_n L_n^((d-2)/2)(r^2) / (n - nu) with Gamma(-nu) U(-nu, d/2, r^2).

    The series converges only conditionally, so the partial sums are
    Cesaro averaged.
    """
    if not nu < 0:
        raise DomainError("greens_sum_check requires nu < 0")
    if not 0 < r <= 2:
        raise DomainError("r must lie in (0, 2]")
    if not 1 < d < 6:
        raise DomainError("d must lie in (1, 6)")
    x = r * r
    lag = laguerre_sequence(n_terms, (d - 2.0) / 2.0, x)
    partial = np.cumsum(lag / (np.arange(n_terms + 1) - nu))
    cesaro = float(np.mean(partial))
    closed = gamma(-nu) * kummerU(-nu, d / 2.0, x)
    return GreensSum(cesaro, closed)


def spectrum_scan(d_grid, a0, n_max, eps_guard=DEFAULT_EPS_GUARD):
    """Exact and first-order energies for each d in ``d_grid`` and n <= n_max.

    Rows come sorted by (d, n). ``flag`` is empty, or names what went wrong:
    ``no_root`` or ``even_d`` (perturbative value undefined).
    """
    rows = []
    for d in sorted(d_grid):
        problem = TrapProblem(d, a0, eps_guard=eps_guard)
        for n in range(n_max + 1):
            flags = []
            branch = ladder_root(problem, n)
            e_exact = branch.E if branch is not None else math.nan
            if branch is None:
                flags.append("no_root")
            try:
                e_pert = perturbative_energy(n, problem)
            except DomainError:
                e_pert = math.nan
                flags.append("even_d")
            rows.append(SpectrumRow(float(d), n, e_exact, e_pert, ";".join(flags)))
    return rows
