import numpy as np

from aircoh import constants as cst
from aircoh.quad import Interval, gaussian_window, integrate_1d
from aircoh.specfun.airy import _airy_ai_kernel
from aircoh.util import check_finite

__all__ = ['LambdaProfile', 'synth_superposition', 'recover_coefficients']


class LambdaProfile(object):
    """
    Coefficient profile c(l) of a coherent superposition of displaced Airy beams.

    :param func: Vectorized c(l), real or complex.
    :param window: Interval outside which c is negligible.
    """

    def __init__(self, func, window):
        self.func = func
        self.window = window if isinstance(window, Interval) else Interval(*window)

    def __call__(self, lam):
        return self.func(lam)

    def __add__(self, other):
        f, g = self.func, other.func
        window = Interval(min(self.window.lo, other.window.lo),
                          max(self.window.hi, other.window.hi))
        return LambdaProfile(lambda lam: f(lam) + g(lam), window)

    @classmethod
    def gaussian(cls, amp=1., width=1., center=0., n_sigmas=cst.N_SIGMAS):
        """amp exp(-(l - center)^2 / width^2)"""
        def func(lam):
            return amp * np.exp(-np.square(lam - center) / width ** 2)
        return cls(func, gaussian_window(1. / width ** 2, n_sigmas, center))

    @classmethod
    def delta(cls, center=0., width=cst.COHERENT_SIGMA):
        """Unit-area narrow Gaussian standing in for delta(l - center)."""
        return cls.gaussian(1. / (cst.SQRT_PI * width), width, center)


def synth_superposition(c, x, z, rel_tol=cst.REL_TOL_SCALAR):
    """
    Coherent superposition
    U(x, z) = int c(l) exp(i (x - l - z^2/6) z/2) Ai(x - l - z^2/4) dl.

    :param c: LambdaProfile
    :param x: Scalar or array of coordinates.
    :return: complex, or complex ndarray shaped like x
    """
    check_finite('x', x)
    check_finite('z', z)
    if np.ndim(x) > 0:
        xs = np.asarray(x, dtype=np.float64)
        out = np.array([synth_superposition(c, xi, z, rel_tol) for xi in xs.ravel()])
        return out.reshape(xs.shape)

    def integrand(lam):
        arg = x - lam
        return (c(lam) * np.exp(0.5j * (arg - z * z / 6.) * z)
                * _airy_ai_kernel(arg - 0.25 * z * z))

    return complex(integrate_1d(integrand, c.window, rel_tol=rel_tol).value)


def recover_coefficients(u0, lam, window=cst.X_WINDOW, rel_tol=cst.REL_TOL_SCALAR):
    """
    Coefficients c(l) = int U(x, 0) Ai(x - l) dx of a field sampled at z = 0.

    :param u0: Vectorized field at z = 0.
    :param lam: Displacement (scalar).
    :param window: x truncation window; u0 must decay inside it.
    :return: complex
    """
    check_finite('lam', lam)

    def integrand(x):
        return u0(x) * _airy_ai_kernel(x - lam)

    return complex(integrate_1d(integrand, Interval(*window), rel_tol=rel_tol).value)
