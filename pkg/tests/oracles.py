"""Independent reference evaluations used as test oracles.

Everything here goes through mpmath or scipy quadrature rather than the
package's own series, so agreement is a genuine cross-check.
"""

import math

import mpmath as mp
from scipy.integrate import quad

mp.mp.dps = 30


def rl_lower_limit_quad(alpha, f, df, x, x0):
    """Riemann-Liouville derivative of order alpha in (0, 1) with lower limit x0.

    Uses D f = f(x0) (x - x0)^-alpha / Gamma(1 - alpha)
             + 1/Gamma(1 - alpha) * int_x0^x (x - t)^-alpha f'(t) dt,
    with the kernel singularity removed by u = (x - t)^(1 - alpha).
    """
    p = 1.0 - alpha
    u_max = (x - x0) ** p
    integrand = lambda u: df(x - u ** (1.0 / p)) / p  # noqa: E731
    integral, _ = quad(integrand, 0.0, u_max, epsabs=1e-13, epsrel=1e-13, limit=200)
    return (f(x0) * (x - x0) ** (-alpha) + integral) / math.gamma(1.0 - alpha)


def caputo_quad(eta, f, r):
    """Caputo derivative of order eta > 0 of the mpmath-callable ``f`` at r."""
    m = math.ceil(eta)
    if m == eta:
        return float(mp.diff(f, r, m))
    fm = lambda t: mp.diff(f, t, m)  # noqa: E731
    val = mp.quad(lambda t: (r - t) ** (m - eta - 1) * fm(t), [0, r])
    return float(val / mp.gamma(m - eta))


def kummer_u_quad(a, b, z):
    """Integral representation of U(a, b, z) for a > 0, z > 0.

    The t^(a-1) endpoint singularity is removed with t = s^(1/a).
    """
    a, b, z = mp.mpf(a), mp.mpf(b), mp.mpf(z)

    def integrand(s):
        t = s ** (1 / a)
        return mp.exp(-z * t) * (1 + t) ** (b - a - 1)

    val = mp.quad(integrand, [0, 1, mp.inf])
    return float(val / (a * mp.gamma(a)))


def hyp0f1_limit(b, z, h=1e-8):
    """0F1(;b;z)/Gamma(b) approached from both sides of b."""
    return 0.5 * float(
        mp.hyp0f1(b + h, z) / mp.gamma(b + h) + mp.hyp0f1(b - h, z) / mp.gamma(b - h)
    )


def digamma_root(target, lo, hi):
    """x in (lo, hi) with psi(x) = target, by mpmath bisection."""
    return float(mp.findroot(lambda x: mp.digamma(x) - target, (lo, hi), solver="bisect"))


def t_phase_mp(d, x):
    """T(d, x) as the 0F1 ratio evaluated in extended precision."""
    z = -mp.mpf(x) ** 2 / 4
    return float(mp.hyp0f1(mp.mpf(d) / 2, z) / mp.hyp0f1(2 - mp.mpf(d) / 2, z))


def trap_residual_mp(E, d, a0):
    """The trap energy equation in extended precision."""
    d, E, a0 = mp.mpf(d), mp.mpf(E), mp.mpf(a0)
    lhs = mp.pi * (d - 2) / mp.gamma(d / 2) ** 2 * mp.gamma(d / 4 - E / 2) * mp.rgamma(1 - d / 4 - E / 2)
    return lhs + mp.sin(d * mp.pi / 2) * 2 ** (d / 2) / a0 ** (d - 2)


def oscillator_overlap(m, n, d):
    """Omega(d) int_0^inf phi_m phi_n r^(d-1) dr using scipy special Laguerre."""
    from scipy.special import eval_genlaguerre, gammaln

    alpha = (d - 2.0) / 2.0
    omega = 2.0 * math.pi ** (d / 2.0) / math.gamma(d / 2.0)

    def phi(k, r):
        norm = math.sqrt(2.0 * math.exp(gammaln(k + 1) - gammaln(k + d / 2.0)) / omega)
        return norm * math.exp(-0.5 * r * r) * eval_genlaguerre(k, alpha, r * r)

    val, _ = quad(lambda r: phi(m, r) * phi(n, r) * r ** (d - 1.0), 0.0, math.inf,
                  epsabs=1e-12, epsrel=1e-12, limit=400)
    return omega * val


def caputo_gauss_power_series(eta, r, terms=60):
    """Caputo derivative of t^eta exp(-t^2/2) from the Taylor series of the Gaussian.

    Each power t^(eta + 2j) has Caputo derivative
    Gamma(eta + 2j + 1) / Gamma(2j + 1) * r^(2j).
    """
    eta, r = mp.mpf(eta), mp.mpf(r)
    total = mp.mpf(0)
    for j in range(terms):
        total += (-mp.mpf(1) / 2) ** j / mp.factorial(j) * mp.gamma(eta + 2 * j + 1) / mp.gamma(2 * j + 1) * r ** (2 * j)
    return float(total)
