import logging

import numpy as np

from aircoh import constants as cst
from aircoh.errors import UndefinedValueError
from aircoh.coherence.tensor import TensorRule
from aircoh.quad import Interval, integrate_1d, integrate_windowed_1d, integrate_windowed_2d
from aircoh.specfun.airy import _airy_ai_kernel
from aircoh.util import check_finite

logger = logging.getLogger(__name__)

__all__ = ['CSDModel', 'KernelBeam', 'propagation_phase', 'degree_of_coherence',
           'flow_from_csd', 'csd_from_kernel']


def propagation_phase(x, xp, z):
    """The fast factor exp(i (x' - x) z / 2) separating W from W0."""
    return np.exp(0.5j * (xp - x) * z)


def degree_of_coherence(W, x, xp, z):
    """
    Complex degree of coherence W(x, x', z) / sqrt(I(x) I(x')).

    :param W: CSD evaluator W(x, x', z).
    :return: complex
    """
    if x == xp:
        intensity = W(x, x, z).real
        if not intensity > 0:
            raise UndefinedValueError(
                "Degree of coherence undefined: I({}) = {}".format(x, intensity))
        return complex(1.)
    i_x = W(x, x, z).real
    i_xp = W(xp, xp, z).real
    if not (i_x > 0 and i_xp > 0):
        raise UndefinedValueError(
            "Degree of coherence undefined: I({}) = {}, I({}) = {}".format(x, i_x, xp, i_xp))
    return complex(W(x, xp, z)) / np.sqrt(i_x * i_xp)


def flow_from_csd(W, x, z, h=cst.FD_STEP):
    """
    Flow from the derivative form i [dW/dx - dW/dx'] at x' = x.

    Central differences of step h; jz = 2 W(x, x, z).

    :param W: CSD evaluator.
    :return: (jx, jz)
    """
    d_x = (W(x + h, x, z) - W(x - h, x, z)) / (2. * h)
    d_xp = (W(x, x + h, z) - W(x, x - h, z)) / (2. * h)
    jx = (1j * (d_x - d_xp)).real
    return float(jx), 2. * float(W(x, x, z).real)


class CSDModel(object):
    """
    Base class of cross-spectral densities W(x, x', z).

    Subclasses implement amplitude(), the CSD with the fast phase
    exp(i (x' - x) z / 2) removed.
    """
    rel_tol = cst.REL_TOL_SCALAR

    def amplitude(self, x, xp, z):
        raise NotImplementedError

    def csd(self, x, xp, z):
        return propagation_phase(x, xp, z) * self.amplitude(x, xp, z)

    def __call__(self, x, xp, z):
        return self.csd(x, xp, z)

    def intensity(self, x, z):
        return float(self.amplitude(x, x, z).real)

    def degree_of_coherence(self, x, xp, z):
        return degree_of_coherence(self.csd, x, xp, z)

    def flow(self, x, z, h=cst.FD_STEP):
        return flow_from_csd(self.csd, x, z, h)


class KernelBeam(CSDModel):
    """
    CSD generated by a displacement kernel,

        W0(x, x', z) = int int C(l, l') exp(i (l - l') z / 2)
                       Ai(x - l - z^2/4) Ai(x' - l' - z^2/4) dl dl'

    evaluated in v = (l + l')/2, u = l - l'.
    """

    def __init__(self, kernel, rel_tol=cst.REL_TOL_SCALAR):
        self.kernel = kernel
        self.rel_tol = rel_tol

    def amplitude(self, x, xp, z):
        check_finite('x', x)
        check_finite('xp', xp)
        check_finite('z', z)
        shift = 0.25 * z * z
        kernel = self.kernel

        def integrand(v, u):
            half = 0.5 * u
            lam = v + half
            lamp = v - half
            return (kernel(lam, lamp) * np.exp(0.5j * u * z)
                    * _airy_ai_kernel(x - lam - shift) * _airy_ai_kernel(xp - lamp - shift))

        res = integrate_windowed_2d(integrand, (kernel.a_sum, kernel.a_diff),
                                    centers=(kernel.center, 0.), rel_tol=self.rel_tol)
        return complex(res.value)

    def tensor_rule(self, z, x_min):
        """
        Fixed tensor rule serving every x >= x_min at z, or None when the
        kernel envelope is too narrow for one.
        """
        if not TensorRule.fits(self.kernel, z, x_min):
            logger.info("%r: no fixed rule at z=%g, using adaptive quadrature", self, z)
            return None
        return TensorRule(self.kernel, z, x_min)

    def amplitude_matrix(self, xs, xps, z):
        """W0 on the grid xs x xps, or None when no fixed rule fits."""
        rule = self.tensor_rule(z, min(np.min(xs), np.min(xps)))
        if rule is None:
            return None
        return rule.amplitude(xs, xps)

    def power(self, z, window=cst.X_WINDOW):
        """
        Total power int I(x, z) dx. The window follows the beam along the
        parabola, so it is applied to x - z^2/4.

        :return: float
        """
        shift = 0.25 * z * z
        window = Interval(window[0] + shift, window[1] + shift)
        rule = self.tensor_rule(z, window.lo)
        if rule is not None:
            intensity = rule.intensity
        else:
            def intensity(xs):
                values = [self.intensity(x, z) for x in np.ravel(xs)]
                return np.reshape(values, np.shape(xs))
        return float(integrate_1d(intensity, window, rel_tol=self.rel_tol).value)

    def power_closed(self):
        """int C(l, l) dl, the power at every z by Airy orthogonality."""
        kernel = self.kernel
        res = integrate_windowed_1d(lambda lam: kernel(lam, lam).real,
                                    kernel.a_sum, center=kernel.center,
                                    rel_tol=self.rel_tol)
        return float(res.value)

    def __repr__(self):
        return "{}(rel_tol={!r})".format(type(self).__name__, self.rel_tol)


def csd_from_kernel(k, x, xp, z, rel_tol=cst.REL_TOL_SCALAR):
    """
    W(x, x', z) for a displacement kernel k.

    :param k: DisplacementKernel
    :return: complex
    """
    return complex(KernelBeam(k, rel_tol).csd(x, xp, z))
