import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fracfermi.errors import DomainError, NonConvergence, PoleError
from fracfermi.specfun import (
    digamma,
    gamma,
    hyp0f1,
    hyp0f1_regularized,
    hyp1f1_regularized,
    hyp2f1,
    kummerU,
    laguerre,
    laguerre_sequence,
    rgamma,
    solid_angle,
)
from oracles import digamma_root, hyp0f1_limit, kummer_u_quad


@pytest.mark.parametrize(
    "x, expected",
    [(0.5, math.sqrt(math.pi)), (4.0, 6.0), (1.5, math.sqrt(math.pi) / 2)],
)
def test_gamma_known_values(x, expected):
    assert gamma(x) == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("x", [0.0, -1.0, -7.0])
def test_gamma_poles_raise(x):
    with pytest.raises(PoleError):
        gamma(x)
    assert rgamma(x) == 0.0


def test_gamma_rejects_nan():
    with pytest.raises(DomainError):
        gamma(math.nan)


@pytest.mark.parametrize("x", [-49.3, -12.7, -0.4, 0.2, 3.3, 17.9, 49.6])
def test_gamma_matches_mpmath(x):
    assert gamma(x) == pytest.approx(float(mp.gamma(x)), rel=1e-13)


@pytest.mark.parametrize("x", [-170.5, 172.5, 300.0])
def test_rgamma_beyond_gamma_overflow(x):
    assert rgamma(x) == pytest.approx(float(mp.rgamma(x)), rel=1e-10)


def test_rgamma_overflow_is_reported():
    with pytest.raises(DomainError):
        rgamma(-180.25)


def test_gamma_recurrence():
    for x in np.linspace(0.1, 10.0, 100):
        assert gamma(x + 1) == pytest.approx(x * gamma(x), rel=1e-12)


def test_digamma_values():
    euler = 0.5772156649015329
    assert digamma(1.0) == pytest.approx(-euler, abs=1e-12)
    assert digamma(2.0) == pytest.approx(1 - euler, abs=1e-12)
    root = digamma_root(0.0, 1.0, 2.0)
    assert abs(digamma(root)) < 1e-12
    assert root == pytest.approx(1.4616321449, abs=1e-10)


@pytest.mark.parametrize("x", [-48.5, -3.3, -0.5, 0.01, 0.7, 5.5, 9.99, 49.0])
def test_digamma_matches_mpmath(x):
    assert digamma(x) == pytest.approx(float(mp.digamma(x)), abs=1e-12)


def test_digamma_pole():
    with pytest.raises(PoleError):
        digamma(-3.0)


def test_hyp0f1_examples():
    assert hyp0f1(1.5, 0.0) == 1.0
    assert hyp0f1(1.5, -0.25) == pytest.approx(math.sin(1.0), abs=1e-10)
    assert hyp0f1(0.5, -0.25) == pytest.approx(math.cos(1.0), abs=1e-10)
    with pytest.raises(PoleError):
        hyp0f1(-2.0, 0.3)


def test_hyp0f1_regularized_examples():
    assert hyp0f1_regularized(0.0, 0.0) == 0.0
    assert hyp0f1_regularized(1.5, 0.0) == pytest.approx(1.1283791671, abs=1e-10)
    assert hyp0f1_regularized(-1.0, 0.5) == pytest.approx(hyp0f1_limit(-1.0, 0.5), rel=1e-7)


def test_hyp0f1_nonconvergence():
    with pytest.raises(NonConvergence):
        hyp0f1(1.5, -400.0, max_terms=5)


@given(b=st.sampled_from([0.5, 1.5, 2.5]), z=st.floats(-4.0, 4.0))
def test_regularized_times_gamma_is_plain(b, z):
    assert hyp0f1_regularized(b, z) * gamma(b) == pytest.approx(hyp0f1(b, z), rel=1e-12, abs=1e-300)


@given(x=st.floats(1e-3, 3.0))
def test_hyp0f1_trig_identities(x):
    z = -x * x / 4
    assert abs(hyp0f1(1.5, z) - math.sin(x) / x) < 1e-11
    assert abs(hyp0f1(0.5, z) - math.cos(x)) < 1e-11


@pytest.mark.parametrize("b, z", [(-2.5, 3.0), (0.3, -30.0), (-1.0, -7.0), (4.2, 12.0)])
def test_hyp0f1_regularized_matches_mpmath(b, z):
    ref = float(mp.hyp0f1(b, z) / mp.gamma(b)) if b != int(b) else hyp0f1_limit(b, z)
    assert hyp0f1_regularized(b, z) == pytest.approx(ref, rel=1e-7 if b == int(b) else 1e-12)


def test_hyp1f1_regularized_matches_mpmath():
    for a, b, z in [(0.3, 1.5, 2.0), (-1.7, 0.25, 4.0), (1.3, -0.5, 1.0)]:
        ref = float(mp.hyp1f1(a, b, z) / mp.gamma(b))
        assert hyp1f1_regularized(a, b, z) == pytest.approx(ref, rel=1e-12)


def test_kummer_u_examples():
    assert kummerU(0.0, 1.5, 2.0) == pytest.approx(1.0, rel=1e-13)
    assert kummerU(-1.0, 1.5, 2.0) == pytest.approx(0.5, rel=1e-12)
    assert kummerU(-1.0, 1.5, 2.0) == pytest.approx(2.0 - 1.5, rel=1e-12)
    assert kummerU(0.3, 1.5, 2.0) == pytest.approx(kummer_u_quad(0.3, 1.5, 2.0), rel=1e-7)


def test_kummer_u_domain():
    with pytest.raises(DomainError):
        kummerU(0.3, 1.5, 0.0)
    with pytest.raises(PoleError):
        kummerU(0.3, 2.0, 1.0)


@settings(max_examples=25, deadline=None)
@given(
    a=st.floats(0.05, 0.95),
    b=st.floats(1.01, 2.99).filter(lambda b: abs(b - 2.0) > 1e-3),
    z=st.floats(0.5, 4.0),
)
def test_kummer_u_integral_representation(a, b, z):
    assert abs(kummerU(a, b, z) - kummer_u_quad(a, b, z)) < 1e-7


def test_hyp2f1_examples():
    assert hyp2f1(0.3, 0.7, 1.1, 0.0) == 1.0
    assert hyp2f1(1.0, 1.0, 2.0, 0.5) == pytest.approx(2 * math.log(2), rel=1e-13)
    assert hyp2f1(0.0, 2.0, 3.0, 0.7) == 1.0
    with pytest.raises(DomainError):
        hyp2f1(1.0, 1.0, 2.0, 1.0)
    with pytest.raises(PoleError):
        hyp2f1(1.0, 1.0, -2.0, 0.3)


def test_laguerre_examples():
    assert laguerre(0, 0.5, 3.0) == 1.0
    assert laguerre(1, 0.5, 3.0) == pytest.approx(-1.5)
    closed = math.gamma(3.5) / (math.gamma(1.5) * math.gamma(3))
    assert laguerre(2, 0.5, 0.0) == pytest.approx(closed, rel=1e-14)
    assert closed == pytest.approx(1.875)


@pytest.mark.parametrize("n", range(7))
@pytest.mark.parametrize("alpha", [-0.25, 0.5, 1.35])
def test_laguerre_differential_equation(n, alpha):
    # five-point stencils keep truncation and rounding both well below 1e-8
    h = 1e-2
    for u in (0.3, 1.1, 2.7):
        f = [laguerre(n, alpha, u + s * h) for s in (-2, -1, 0, 1, 2)]
        d1 = (f[0] - 8 * f[1] + 8 * f[3] - f[4]) / (12 * h)
        d2 = (-f[0] + 16 * f[1] - 30 * f[2] + 16 * f[3] - f[4]) / (12 * h**2)
        assert abs(u * d2 + (alpha + 1 - u) * d1 + n * f[2]) < 1e-8


def test_laguerre_sequence_matches_scalar():
    seq = laguerre_sequence(30, 0.5, 1.7)
    for n in (0, 1, 5, 30):
        assert seq[n] == pytest.approx(laguerre(n, 0.5, 1.7), rel=1e-13)
        assert seq[n] == pytest.approx(float(mp.laguerre(n, 0.5, 1.7)), rel=1e-10, abs=1e-12)


def test_solid_angle():
    assert solid_angle(3) == pytest.approx(4 * math.pi)
    assert solid_angle(2) == pytest.approx(2 * math.pi)
    assert solid_angle(1) == pytest.approx(2.0)
    with pytest.raises(DomainError):
        solid_angle(0.0)
