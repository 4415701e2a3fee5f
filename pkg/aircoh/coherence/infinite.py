"""
Uncorrelated displacements with a Gaussian spread. The CSD reduces to a
single integral and its modulus is shape invariant under propagation.
"""
import logging

import numpy as np

from aircoh import constants as cst
from aircoh.coherence.base import CSDModel
from aircoh.coherence.kernel import SpreadParams
from aircoh.errors import DomainError
from aircoh.quad import composite_gauss_legendre, gaussian_window, integrate_windowed_1d
from aircoh.specfun.airy import _airy_ai_kernel
from aircoh.util import check_finite

logger = logging.getLogger(__name__)

__all__ = ['InfiniteBeam', 'csd_infinite', 'intensity_infinite', 'flow_infinite',
           'equivalent_propagation_distance']

# Largest l rule amplitude_matrix builds; each factor holds len(xs) x MAX_NODES values
MAX_NODES = 20000


class InfiniteBeam(CSDModel):
    """
    Infinite-energy partially coherent Airy beam.

    :param spread: SpreadParams, or sigma= / alpha= keywords.
    :param rel_tol: Relative tolerance of each quadrature.
    """

    def __init__(self, spread=None, rel_tol=cst.REL_TOL_SCALAR, **kwargs):
        if spread is None:
            spread = SpreadParams(**kwargs)
        elif kwargs:
            raise TypeError("InfiniteBeam cannot accept spread and other arguments.")
        self.spread = spread
        self.rel_tol = rel_tol

    def amplitude(self, x, xp, z):
        check_finite('x', x)
        check_finite('xp', xp)
        check_finite('z', z)
        shift = 0.25 * z * z
        spread = self.spread

        def integrand(lam):
            return (spread.density(lam) * _airy_ai_kernel(x - lam - shift)
                    * _airy_ai_kernel(xp - lam - shift))

        return integrate_windowed_1d(integrand, spread.alpha, rel_tol=self.rel_tol).value

    def amplitude_matrix(self, xs, xps, z, order=16):
        """
        W0 on the grid xs x xps from one composite Gauss-Legendre rule in l.

        :return: float ndarray of shape (len(xs), len(xps)), or None when the
            spread needs more than MAX_NODES nodes.
        """
        xs = np.asarray(xs, dtype=np.float64)
        xps = np.asarray(xps, dtype=np.float64)
        shift = 0.25 * z * z
        dom = gaussian_window(self.spread.alpha)
        x_min = min(xs.min(), xps.min())
        wavelength = 2. * np.pi / np.sqrt(max(shift + dom.hi - x_min, 1.))
        nodes, weights = composite_gauss_legendre(
            dom, 0.5 * min(wavelength, self.spread.sigma), order)
        if len(nodes) > MAX_NODES:
            logger.info("%r: %d nodes at z=%g, using adaptive quadrature", self, len(nodes), z)
            return None
        a = _airy_ai_kernel(xs[:, None] - nodes - shift)
        b = _airy_ai_kernel(xps[:, None] - nodes - shift)
        return (a * (weights * self.spread.density(nodes))) @ b.T

    def flow(self, x, z, h=None):
        """
        Closed form (z I(x - z^2/4, 0), 2 I(x - z^2/4, 0)).

        Passing h switches to the finite-difference derivative form.
        """
        if h is not None:
            return super(InfiniteBeam, self).flow(x, z, h)
        base = self.intensity(x - 0.25 * z * z, 0.)
        return z * base, 2. * base

    def __repr__(self):
        return "InfiniteBeam(sigma={!r})".format(self.spread.sigma)


def csd_infinite(p, x, xp, z, rel_tol=cst.REL_TOL_SCALAR):
    return complex(InfiniteBeam(p, rel_tol).csd(x, xp, z))


def intensity_infinite(p, x, z, rel_tol=cst.REL_TOL_SCALAR):
    return InfiniteBeam(p, rel_tol).intensity(x, z)


def flow_infinite(p, x, z, rel_tol=cst.REL_TOL_SCALAR):
    """:return: (jx, jz) with the constant prefactor set to 1."""
    return InfiniteBeam(p, rel_tol).flow(x, z)


def equivalent_propagation_distance(lambda0):
    """
    Distance z whose parabolic shift z^2/4 equals a displacement lambda0.

    Only displacements towards +x are reachable by forward propagation.
    """
    check_finite('lambda0', lambda0)
    if lambda0 < 0:
        raise DomainError("No propagation distance shifts the beam by {} < 0".format(lambda0))
    return 2. * np.sqrt(lambda0)
