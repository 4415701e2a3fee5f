import logging

import numpy as np

from aircoh import constants as cst
from aircoh.beam.base import FiniteBeam
from aircoh.beam.convert import map_type2_params
from aircoh.beam.overlap import gaussian_overlap
from aircoh.coherence import DisplacementKernel
from aircoh.quad import integrate_windowed_1d
from aircoh.util import check_range

logger = logging.getLogger(__name__)

__all__ = ['TypeIIParams', 'TypeIIBeam', 'kernel_type2', 'kernel_type2_quadrature',
           'csd_type2', 'overlap_closed_type2', 'critical_distance_type2',
           'adjudicate_type2']


class TypeIIParams(object):
    """
    Type-II kernel parameters: the width a of the distribution R of the
    intermediate displacement and the width b of the transfer S~.
    """

    def __init__(self, a, b):
        check_range('a', a, *cst.SIGMA_RANGE)
        check_range('b', b, *cst.SIGMA_RANGE)
        self.a = float(a)
        self.b = float(b)

    @property
    def alpha_prime(self):
        return map_type2_params(self)[0]

    @property
    def beta_prime(self):
        return map_type2_params(self)[1]

    @property
    def norm(self):
        """N_II = (b/pi) sqrt(a / (a + 2b))"""
        return self.b / np.pi * np.sqrt(self.a / (self.a + 2. * self.b))

    @property
    def critical_distance(self):
        return 4. * np.sqrt(self.b)

    @property
    def critical_distance_derived(self):
        return np.sqrt(8. * self.b)

    def __repr__(self):
        return "TypeIIParams(a={!r}, b={!r})".format(self.a, self.b)


def kernel_type2(p, lam, lamp):
    """N_II exp(-alpha' (l^2 + l'^2)) exp(-beta' (l - l')^2)"""
    alpha_p, beta_p = map_type2_params(p)
    return p.norm * np.exp(-alpha_p * (np.square(lam) + np.square(lamp))
                           - beta_p * np.square(np.subtract(lam, lamp)))


def kernel_type2_quadrature(p, lam, lamp, rel_tol=1e-12):
    """
    int R(l'') S~(l - l'') S~(l' - l'') dl'' by quadrature.

    Equals kernel_type2 up to the factor sqrt(pi / (a + 2b)) / N_II.
    """
    a, b = p.a, p.b

    def integrand(mid):
        return (np.exp(-a * mid * mid) * np.exp(-b * np.square(lam - mid))
                * np.exp(-b * np.square(lamp - mid)))

    center = b * (lam + lamp) / (a + 2. * b)
    return integrate_windowed_1d(integrand, a + 2. * b, center=center, rel_tol=rel_tol).value


def overlap_closed_type2(p, z):
    """
    :return: (paper_value, derived_value) = (exp(-z^2/16b), exp(-z^2/8b))
    """
    paper = float(np.exp(-z * z / (16. * p.b)))
    alpha_p, beta_p = map_type2_params(p)
    return paper, gaussian_overlap(alpha_p + 2. * beta_p, z)


def critical_distance_type2(p, derived=False):
    """4 sqrt(b) as printed, or sqrt(8 b) with derived=True."""
    if derived:
        return p.critical_distance_derived
    return p.critical_distance


class TypeIIBeam(FiniteBeam):
    """
    Finite-energy beam of Type II.

    :param params: TypeIIParams, or a= and b= keywords.
    """

    def __init__(self, params=None, rel_tol=cst.REL_TOL_SCALAR, **kwargs):
        if params is None:
            try:
                params = TypeIIParams(kwargs.pop('a'), kwargs.pop('b'))
            except KeyError:
                raise TypeError("TypeIIBeam requires a and b arguments.")
        if kwargs:
            raise TypeError("Non-understood TypeIIBeam arguments: "
                            "{}".format(kwargs))
        self.params = params
        kernel = DisplacementKernel.gaussian(params.alpha_prime, params.beta_prime, params.norm)
        super(TypeIIBeam, self).__init__(kernel, rel_tol)

    def overlap_closed(self, z):
        return overlap_closed_type2(self.params, z)


def csd_type2(p, x, xp, z, rel_tol=cst.REL_TOL_SCALAR):
    return complex(TypeIIBeam(p, rel_tol).csd(x, xp, z))


def adjudicate_type2(a_values, b_values, z_values):
    """
    Decide which Type-II closed form the quadrature supports.

    :return: dict with 'winner' ('paper', 'derived', 'both' or 'neither'),
        'consistent' (same winner at every point) and the list of
        ((a, b), OverlapReport) pairs.
    """
    reports = []
    for a in a_values:
        for b in b_values:
            beam = TypeIIBeam(TypeIIParams(a, b))
            for z in z_values:
                reports.append(((a, b), beam.overlap_report(z)))
    winners = sorted(set(report.winner for _, report in reports))
    consistent = len(winners) == 1
    winner = winners[0] if consistent else 'neither'
    logger.info("Type-II overlap adjudication: %s (consistent=%s)", winner, consistent)
    return {'winner': winner, 'consistent': consistent, 'reports': reports}
