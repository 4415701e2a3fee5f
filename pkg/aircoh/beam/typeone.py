import numpy as np

from aircoh import constants as cst
from aircoh.beam.base import FiniteBeam
from aircoh.beam.overlap import gaussian_overlap
from aircoh.coherence import DisplacementKernel
from aircoh.errors import DomainError
from aircoh.util import check_finite, check_range

__all__ = ['TypeIParams', 'TypeIBeam', 'kernel_type1', 'csd_type1',
           'overlap_closed_type1', 'critical_distance_type1']


class TypeIParams(object):
    """
    Type-I kernel parameters: a Gaussian spread alpha of each displacement
    and a Gaussian correlation range beta between displacements.
    """

    def __init__(self, alpha, beta):
        check_range('alpha', alpha, *cst.SIGMA_RANGE)
        check_finite('beta', beta)
        if beta < 0:
            raise DomainError("beta must be >= 0, got {}".format(beta))
        self.alpha = float(alpha)
        self.beta = float(beta)

    @property
    def norm(self):
        """N_I = sqrt(alpha (alpha + 2 beta)) / pi"""
        return np.sqrt(self.alpha * (self.alpha + 2. * self.beta)) / np.pi

    @property
    def spread_sum(self):
        return self.alpha + 2. * self.beta

    @property
    def critical_distance(self):
        return np.sqrt(8. * self.spread_sum)

    def __repr__(self):
        return "TypeIParams(alpha={!r}, beta={!r})".format(self.alpha, self.beta)


def kernel_type1(p, lam, lamp):
    """N_I exp(-alpha (l^2 + l'^2)) exp(-beta (l - l')^2)"""
    return p.norm * np.exp(-p.alpha * (np.square(lam) + np.square(lamp))
                           - p.beta * np.square(np.subtract(lam, lamp)))


def overlap_closed_type1(p, z):
    return gaussian_overlap(p.spread_sum, z)


def critical_distance_type1(p):
    return p.critical_distance


class TypeIBeam(FiniteBeam):
    """
    Finite-energy beam of Type I.

    :param params: TypeIParams, or alpha= and beta= keywords.
    """

    def __init__(self, params=None, rel_tol=cst.REL_TOL_SCALAR, **kwargs):
        if params is None:
            try:
                params = TypeIParams(kwargs.pop('alpha'), kwargs.pop('beta'))
            except KeyError:
                raise TypeError("TypeIBeam requires alpha and beta arguments.")
        if kwargs:
            raise TypeError("Non-understood TypeIBeam arguments: "
                            "{}".format(kwargs))
        self.params = params
        kernel = DisplacementKernel.gaussian(params.alpha, params.beta, params.norm)
        super(TypeIBeam, self).__init__(kernel, rel_tol)

    def overlap_closed(self, z):
        value = overlap_closed_type1(self.params, z)
        return value, value


def csd_type1(p, x, xp, z, rel_tol=cst.REL_TOL_SCALAR):
    return complex(TypeIBeam(p, rel_tol).csd(x, xp, z))
