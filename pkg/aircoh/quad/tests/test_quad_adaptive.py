import numpy as np
import pytest

import aircoh as ac
from aircoh import constants as cst
from aircoh.errors import ConvergenceError, DomainError


SQRT_PI = 1.7724538509055159


def gauss(x):
    return np.exp(-x * x)


CORPUS_1D = [
    (gauss, (-8., 8.)),
    (lambda x: np.exp(-x * x) * np.cos(4 * x), (-10., 10.)),
    (lambda x: ac.airy_ai(x) ** 2, (-20., 5.)),
    (lambda x: np.exp(-x * x) * np.exp(3j * x), (-8., 8.)),
]


def test_gaussian():
    res = ac.integrate_1d(gauss, ac.Interval(-8., 8.), rel_tol=1e-12)
    assert abs(res.value - SQRT_PI) < 1e-10
    assert res.err_estimate >= 0


def test_polynomial():
    res = ac.integrate_1d(lambda x: x * x, (0., 1.))
    assert np.isclose(res.value, 1. / 3., rtol=1e-14)


def test_gaussian_fourier_pair():
    res = ac.integrate_1d(lambda x: np.exp(-x * x) * np.cos(4 * x), (-10., 10.), rel_tol=1e-10)
    assert abs(res.value - SQRT_PI * np.exp(-4.)) < 1e-8


def test_complex_integrand():
    res = ac.integrate_1d(lambda x: np.exp(-x * x) * np.exp(3j * x), (-8., 8.), rel_tol=1e-10)
    assert isinstance(res.value, complex)
    assert abs(res.value - SQRT_PI * np.exp(-9. / 4.)) < 1e-10


def test_error_within_tolerance():
    for f, dom in CORPUS_1D:
        res = ac.integrate_1d(f, dom, rel_tol=1e-9)
        assert res.err_estimate <= max(1e-9 * abs(res.value), 1e-14)


@pytest.mark.parametrize("f,dom", CORPUS_1D)
def test_halving_tolerance_never_increases_error(f, dom):
    previous = None
    for rel_tol in [1e-4, 5e-5, 2.5e-5, 1e-6, 5e-7, 1e-9, 5e-10]:
        err = ac.integrate_1d(f, dom, rel_tol=rel_tol).err_estimate
        if previous is not None:
            assert err <= previous
        previous = err


def test_deterministic():
    f, dom = CORPUS_1D[2]
    first = ac.integrate_1d(f, dom, rel_tol=1e-10)
    second = ac.integrate_1d(f, dom, rel_tol=1e-10)
    assert first == second


def test_budget_exhausted_carries_estimate():
    with pytest.raises(ConvergenceError) as info:
        ac.integrate_1d(lambda x: np.cos(400 * x) * np.exp(x), (0., 10.),
                        rel_tol=1e-12, max_panels=8)
    assert info.value.result is not None
    assert info.value.result.subdivisions == 8


def test_roundoff_limited_returns_estimate(caplog):
    def noisy(x):
        return np.exp(-x * x) + 1e-9 * np.sin(1e7 * x)

    res = ac.integrate_1d(noisy, (-8., 8.), rel_tol=1e-13)
    assert abs(res.value - SQRT_PI) < 1e-7
    assert res.err_estimate > 1e-13 * SQRT_PI
    assert res.subdivisions < cst.MAX_PANELS
    assert "roundoff" in caplog.text


@pytest.mark.parametrize("rel_tol", [0., 1e-15, 1e-2, 0.5])
def test_tolerance_range(rel_tol):
    with pytest.raises(DomainError):
        ac.integrate_1d(gauss, (-1., 1.), rel_tol=rel_tol)


class TestIntegrate2d(object):

    def test_gaussian(self):
        res = ac.integrate_2d(lambda x, y: np.exp(-x * x - y * y),
                              ((-8., 8.), (-8., 8.)), rel_tol=1e-10)
        assert abs(res.value - np.pi) < 1e-8

    def test_correlated_gaussian(self):
        res = ac.integrate_2d(
            lambda x, y: np.exp(-(x * x + y * y)) * np.exp(-0.5 * (x - y) ** 2),
            ((-8., 8.), (-8., 8.)), rel_tol=1e-10)
        assert abs(res.value - np.pi / np.sqrt(2.)) < 1e-8

    def test_bilinear(self):
        res = ac.integrate_2d(lambda x, y: x * y, ((0., 1.), (0., 1.)))
        assert np.isclose(res.value, 0.25, rtol=1e-14)

    def test_separable_matches_nested_1d(self):
        fx = lambda x: np.exp(-x * x) * np.cos(2 * x)
        fy = lambda y: ac.airy_ai(y) ** 2
        dx, dy = (-8., 8.), (-10., 4.)
        res = ac.integrate_2d(lambda x, y: fx(x) * fy(y), (dx, dy), rel_tol=1e-9)
        nested = (ac.integrate_1d(fx, dx, rel_tol=1e-10).value
                  * ac.integrate_1d(fy, dy, rel_tol=1e-10).value)
        assert np.isclose(res.value, nested, rtol=2e-9)

    def test_complex_phase(self):
        res = ac.integrate_2d(lambda x, y: np.exp(-x * x - y * y + 1j * (x - y)),
                              ((-8., 8.), (-8., 8.)), rel_tol=1e-10)
        assert abs(res.value - np.pi * np.exp(-0.5)) < 1e-9

    def test_budget(self):
        with pytest.raises(ConvergenceError):
            ac.integrate_2d(lambda x, y: np.cos(300 * x * y), ((0., 5.), (0., 5.)),
                            rel_tol=1e-12, max_panels=16)


class TestInterval(object):

    def test_properties(self):
        dom = ac.Interval(-2., 4.)
        assert dom.width == 6.
        assert dom.center == 1.
        assert dom.scaled(2.) == ac.Interval(-5., 7.)
        assert tuple(dom) == (-2., 4.)

    @pytest.mark.parametrize("lo,hi", [(1., 1.), (2., 1.), (-np.inf, 0.), (0., np.nan)])
    def test_invalid(self, lo, hi):
        with pytest.raises(DomainError):
            ac.Interval(lo, hi)
