import logging

import numpy as np
import pytest

import aircoh as ac
from aircoh.errors import DomainError


def test_unit_alpha():
    assert ac.gaussian_window(1., 6.) == ac.Interval(-6., 6.)


def test_scaled_alpha():
    dom = ac.gaussian_window(0.04, 6.)
    assert np.isclose(dom.lo, -30.)
    assert np.isclose(dom.hi, 30.)


def test_shrinks_with_alpha():
    widths = [ac.gaussian_window(alpha, 8.).width for alpha in (1., 100., 1e4)]
    assert np.allclose(widths, [16., 1.6, 0.16])


def test_centered():
    assert ac.gaussian_window(4., 4., center=3.) == ac.Interval(1., 5.)


@pytest.mark.parametrize("alpha", [0., -1., np.nan])
def test_nonpositive_alpha(alpha):
    with pytest.raises(DomainError):
        ac.gaussian_window(alpha, 6.)


def test_too_narrow():
    with pytest.raises(DomainError):
        ac.gaussian_window(1., 3.)


def test_windowed_gaussian():
    res = ac.integrate_windowed_1d(lambda x: np.exp(-2. * (x - 1.) ** 2), 2., center=1.,
                                   rel_tol=1e-12)
    assert np.isclose(res.value, np.sqrt(np.pi / 2.), rtol=1e-11)


def test_widening_retry(caplog):
    """Declared envelope narrower than the true one triggers one widening."""
    f = lambda x: np.exp(-0.5 * x * x)
    with caplog.at_level(logging.DEBUG, logger='aircoh'):
        res = ac.integrate_windowed_1d(f, 1., n_sigmas=4., rel_tol=1e-10)
    assert any('Widened' in r.message for r in caplog.records)
    # window [-6, 6] still cuts exp(-18) of the tail
    assert np.isclose(res.value, np.sqrt(2. * np.pi), rtol=1e-7)


def test_windowed_2d():
    f = lambda x, y: np.exp(-x * x - 4. * y * y)
    res = ac.integrate_windowed_2d(f, (1., 4.), rel_tol=1e-10)
    assert np.isclose(res.value, np.pi / 2., rtol=1e-9)


def test_composite_gauss_legendre():
    nodes, weights = ac.composite_gauss_legendre((-8., 8.), 0.5, order=16)
    assert len(nodes) == 32 * 16
    assert np.isclose(np.sum(weights), 16.)
    assert np.isclose(np.sum(weights * np.exp(-nodes ** 2)), np.sqrt(np.pi), rtol=1e-13)
