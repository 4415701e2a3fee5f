import numpy as np

from aircoh import constants as cst
from aircoh.errors import DomainError
from aircoh.util import check_finite, check_range

__all__ = ['SpreadParams', 'GaugeParams', 'DisplacementKernel']


class SpreadParams(object):
    """
    Gaussian spread of uncorrelated displacements,
    P(l) = sqrt(alpha/pi) exp(-alpha l^2) with alpha = 1/sigma^2.

    Accepts exactly one of sigma or alpha.
    """

    def __init__(self, **kwargs):
        given = {"sigma", "alpha"}.intersection(kwargs)
        if len(given) > 1:
            raise TypeError("SpreadParams can only accept a single sigma or alpha.")
        elif len(given) == 0:
            raise TypeError("SpreadParams needs a sigma or alpha.")
        for name in given:
            setattr(self, name, kwargs.pop(name))
        if kwargs:
            raise TypeError("Non-understood SpreadParams arguments: "
                            "{}".format(kwargs))

    @property
    def sigma(self):
        return self._sigma

    @sigma.setter
    def sigma(self, value):
        check_range('sigma', value, *cst.SIGMA_RANGE)
        self._sigma = float(value)
        self._alpha = 1. / self._sigma ** 2

    @property
    def alpha(self):
        return self._alpha

    @alpha.setter
    def alpha(self, value):
        check_finite('alpha', value)
        if not value > 0:
            raise DomainError("alpha must be positive, got {}".format(value))
        self.sigma = 1. / np.sqrt(value)

    def density(self, lam):
        """P(lambda)"""
        return np.sqrt(self._alpha / np.pi) * np.exp(-self._alpha * np.square(lam))

    def __repr__(self):
        return "SpreadParams(sigma={!r})".format(self._sigma)


class GaugeParams(object):
    """
    Gaussian gauge profile F~(eta) = f_amp exp(-eta^2 / f_width^2).

    Its transform F(d) = f_amp f_width sqrt(pi) exp(-d^2 f_width^2 / 4) is
    the term added to a CSD as a function of x' - x.
    """

    def __init__(self, f_amp, f_width):
        check_finite('f_amp', f_amp)
        check_finite('f_width', f_width)
        if f_amp < 0:
            raise DomainError("f_amp must be >= 0, got {}".format(f_amp))
        if not f_width > 0:
            raise DomainError("f_width must be > 0, got {}".format(f_width))
        self.f_amp = float(f_amp)
        self.f_width = float(f_width)

    def profile(self, eta):
        return self.f_amp * np.exp(-np.square(eta) / self.f_width ** 2)

    def transform(self, d):
        return (self.f_amp * self.f_width * cst.SQRT_PI
                * np.exp(-np.square(d) * self.f_width ** 2 / 4.))

    def __repr__(self):
        return "GaugeParams(f_amp={!r}, f_width={!r})".format(self.f_amp, self.f_width)


class DisplacementKernel(object):
    """
    Correlation C(l, l') of the random displacements of Airy beams.

    The envelope is declared in the rotated coordinates v = (l + l')/2 and
    u = l - l' as exp(-a_sum (v - center)^2 - a_diff u^2); quadrature
    windows are derived from it.

    :param func: Vectorized C(l, l').
    :param a_sum: Envelope coefficient along v.
    :param a_diff: Envelope coefficient along u.
    :param center: Envelope center along v.
    """

    def __init__(self, func, a_sum, a_diff, center=0.):
        for name, value in (('a_sum', a_sum), ('a_diff', a_diff)):
            check_finite(name, value)
            if not value > 0:
                raise DomainError("{} must be positive, got {}".format(name, value))
        check_finite('center', center)
        self.func = func
        self.a_sum = float(a_sum)
        self.a_diff = float(a_diff)
        self.center = float(center)

    def __call__(self, lam, lamp):
        return self.func(lam, lamp)

    @property
    def marginal_alpha(self):
        """Envelope coefficient seen by a single displacement l."""
        return 1. / (1. / self.a_sum + 1. / (4. * self.a_diff))

    def scaled(self, factor):
        func = self.func
        return DisplacementKernel(lambda lam, lamp: factor * func(lam, lamp),
                                  self.a_sum, self.a_diff, self.center)

    def squared_modulus(self):
        """|C|^2 as a kernel with the doubled envelope."""
        func = self.func
        return DisplacementKernel(lambda lam, lamp: np.abs(func(lam, lamp)) ** 2,
                                  2. * self.a_sum, 2. * self.a_diff, self.center)

    def check_hermitian(self, samples, atol=1e-14):
        """
        :param samples: Iterable of (l, l') pairs.
        :return: True if C(l, l') = conj(C(l', l)) at every pair.
        """
        for lam, lamp in samples:
            if abs(self.func(lam, lamp) - np.conj(self.func(lamp, lam))) > atol:
                return False
        return True

    ######################################################################
    # Factories
    ######################################################################
    @classmethod
    def gaussian(cls, alpha, beta, norm=None):
        """
        norm exp(-alpha (l^2 + l'^2)) exp(-beta (l - l')^2).

        Without norm the kernel is normalized to unit double integral.
        """
        if norm is None:
            norm = np.sqrt(alpha * (alpha + 2. * beta)) / np.pi

        def func(lam, lamp):
            return norm * np.exp(-alpha * (np.square(lam) + np.square(lamp))
                                 - beta * np.square(lam - lamp))

        return cls(func, 2. * alpha, 0.5 * alpha + beta)

    @classmethod
    def uncorrelated(cls, spread, delta_width=cst.DELTA_WIDTH):
        """
        P(l) delta(l - l') with a narrow normalized Gaussian standing in for delta.
        """
        alpha = spread.alpha

        def func(lam, lamp):
            v = 0.5 * (lam + lamp)
            u = lam - lamp
            return (np.sqrt(alpha / np.pi) * np.exp(-alpha * v * v)
                    * np.exp(-u * u / delta_width ** 2) / (cst.SQRT_PI * delta_width))

        return cls(func, alpha, 1. / delta_width ** 2)

    @classmethod
    def coherent(cls, center=0., width=cst.COHERENT_SIGMA):
        """Rank-one kernel p(l) p(l') with p a normalized narrow Gaussian at center."""
        def func(lam, lamp):
            return (np.exp(-(np.square(lam - center) + np.square(lamp - center)) / width ** 2)
                    / (np.pi * width ** 2))

        return cls(func, 2. / width ** 2, 0.5 / width ** 2, center)
