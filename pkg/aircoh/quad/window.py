import logging

import numpy as np

from aircoh import constants as cst
from aircoh.errors import DomainError
from aircoh.quad.adaptive import Interval, integrate_1d, integrate_2d

logger = logging.getLogger(__name__)

__all__ = ['gaussian_window', 'integrate_windowed_1d', 'integrate_windowed_2d']


def gaussian_window(alpha, n_sigmas=cst.N_SIGMAS, center=0.):
    """
    Truncation interval for an envelope exp(-alpha (l - center)^2).

    The half width is n_sigmas / sqrt(alpha), so alpha = 1, n_sigmas = 6
    gives [-6, 6] and alpha = 0.04 gives [-30, 30].

    :param alpha: Envelope coefficient, > 0.
    :param n_sigmas: Width multiplier, >= 4.
    :param center: Envelope center.
    :return: Interval
    """
    if not (np.isfinite(alpha) and alpha > 0):
        raise DomainError("gaussian_window requires alpha > 0, got {}".format(alpha))
    if not n_sigmas >= 4:
        raise DomainError("gaussian_window requires n_sigmas >= 4, got {}".format(n_sigmas))
    half = n_sigmas / np.sqrt(alpha)
    return Interval(center - half, center + half)


def _truncated_1d(f, dom):
    samples = np.abs(np.asarray(f(np.linspace(dom.lo, dom.hi, 257))))
    peak = np.max(samples)
    return peak > 0 and max(samples[0], samples[-1]) > cst.WIDEN_THRESHOLD * peak


def _truncated_2d(f, dom_x, dom_y):
    gx, gy = np.meshgrid(np.linspace(dom_x.lo, dom_x.hi, 65),
                         np.linspace(dom_y.lo, dom_y.hi, 65), indexing='ij')
    samples = np.abs(np.asarray(f(gx, gy)))
    peak = np.max(samples)
    edge = max(samples[0].max(), samples[-1].max(), samples[:, 0].max(), samples[:, -1].max())
    return peak > 0 and edge > cst.WIDEN_THRESHOLD * peak


def integrate_windowed_1d(f, alpha, center=0., n_sigmas=cst.N_SIGMAS,
                          rel_tol=cst.REL_TOL_SCALAR):
    """
    Integrate a Gaussian-damped integrand over its truncation window.

    The window is widened once by 1.5 when the integrand at either end
    exceeds 1e-12 of its sampled peak.
    """
    dom = gaussian_window(alpha, n_sigmas, center)
    if _truncated_1d(f, dom):
        dom = dom.scaled(cst.WIDEN_FACTOR)
        logger.debug("Widened 1D window to %r", dom)
        if _truncated_1d(f, dom):
            logger.warning("Integrand still not negligible at the edges of %r", dom)
    return integrate_1d(f, dom, rel_tol=rel_tol)


def integrate_windowed_2d(f, alphas, centers=(0., 0.), n_sigmas=cst.N_SIGMAS,
                          rel_tol=cst.REL_TOL_SCALAR):
    """
    Two dimensional counterpart of integrate_windowed_1d.

    :param f: Vectorized f(X, Y).
    :param alphas: Envelope coefficients along each axis.
    :param centers: Envelope centers along each axis.
    """
    dom_x = gaussian_window(alphas[0], n_sigmas, centers[0])
    dom_y = gaussian_window(alphas[1], n_sigmas, centers[1])
    if _truncated_2d(f, dom_x, dom_y):
        dom_x = dom_x.scaled(cst.WIDEN_FACTOR)
        dom_y = dom_y.scaled(cst.WIDEN_FACTOR)
        logger.debug("Widened 2D window to %r x %r", dom_x, dom_y)
        if _truncated_2d(f, dom_x, dom_y):
            logger.warning("Integrand still not negligible at the edges of %r x %r",
                           dom_x, dom_y)
    return integrate_2d(f, (dom_x, dom_y), rel_tol=rel_tol)
