"""
Overlap of a propagated finite-energy CSD with its input translated along
the Airy parabola. Airy orthogonality reduces the four-fold definition to

    eps(z) = | int int |C|^2 exp(i (l - l') z/2) | ^2 / ( int int |C|^2 )^2
"""
import numpy as np

from aircoh import constants as cst
from aircoh.coherence import KernelBeam, TensorRule
from aircoh.quad import integrate_windowed_2d

__all__ = ['OverlapReport', 'gaussian_overlap', 'overlap_numeric', 'overlap_grid',
           'total_power', 'power_closed']

OVERLAP_REL_TOL = 1e-9


class OverlapReport(object):
    """
    Overlap of the propagated CSD with the shifted input CSD at one z.

    :param z: Propagation distance.
    :param eps_numeric: Quadrature value.
    :param eps_closed_paper: Closed form as printed in the literature.
    :param eps_closed_derived: Closed form from applying the Type-I result.
    :param tol: Relative tolerance when comparing closed and numeric values.
    """
    columns = ('z', 'eps_numeric', 'eps_closed_paper', 'eps_closed_derived',
               'discrepancy_flag')

    def __init__(self, z, eps_numeric, eps_closed_paper, eps_closed_derived,
                 tol=cst.DISCREPANCY_TOL):
        self.z = float(z)
        self.eps_numeric = float(eps_numeric)
        self.eps_closed_paper = float(eps_closed_paper)
        self.eps_closed_derived = float(eps_closed_derived)
        self.tol = tol

    def _agrees(self, value):
        return abs(self.eps_numeric - value) <= self.tol * max(abs(value), abs(self.eps_numeric))

    @property
    def discrepancy_flag(self):
        """True when the printed closed form disagrees with quadrature."""
        return not self._agrees(self.eps_closed_paper)

    @property
    def winner(self):
        paper = self._agrees(self.eps_closed_paper)
        derived = self._agrees(self.eps_closed_derived)
        if paper and derived:
            return 'both'
        if paper:
            return 'paper'
        if derived:
            return 'derived'
        return 'neither'

    def as_row(self):
        return [self.z, self.eps_numeric, self.eps_closed_paper, self.eps_closed_derived,
                int(self.discrepancy_flag)]

    def __repr__(self):
        return ("OverlapReport(z={!r}, eps_numeric={!r}, eps_closed_paper={!r}, "
                "eps_closed_derived={!r})".format(self.z, self.eps_numeric,
                                                  self.eps_closed_paper,
                                                  self.eps_closed_derived))


def gaussian_overlap(spread_sum, z):
    """exp(-z^2 / (8 spread_sum)) with spread_sum = alpha + 2 beta."""
    return float(np.exp(-z * z / (8. * spread_sum)))


def overlap_numeric(kernel, z, rel_tol=OVERLAP_REL_TOL):
    """
    Overlap from the orthogonality-reduced double integral.

    :param kernel: DisplacementKernel with a Gaussian envelope.
    :param z: Propagation distance.
    :return: eps in [0, 1]; exactly 1 at z = 0.
    """
    if z == 0:
        return 1.
    squared = kernel.squared_modulus()
    alphas = (squared.a_sum, squared.a_diff)
    centers = (squared.center, 0.)

    def density(v, u):
        return squared(v + 0.5 * u, v - 0.5 * u)

    norm = integrate_windowed_2d(density, alphas, centers, rel_tol=rel_tol).value
    projection = integrate_windowed_2d(lambda v, u: density(v, u) * np.exp(0.5j * u * z),
                                       alphas, centers, rel_tol=rel_tol).value
    return float(abs(projection / norm) ** 2)


def overlap_grid(kernel, z, lo=-12., hi=4., n=41):
    """
    Overlap evaluated from its four-fold definition on an n x n grid.

    Both amplitudes are sampled on x in [lo, hi] + z^2/4 with trapezoid
    weights: W0(x, x', z) against W0(x - z^2/4, x' - z^2/4, 0).

    :return: eps
    """
    shift = 0.25 * z * z
    xs = np.linspace(lo, hi, n) + shift
    propagated = TensorRule(kernel, z, xs[0]).amplitude(xs, xs)
    shifted = TensorRule(kernel, 0., xs[0] - shift).amplitude(xs - shift, xs - shift)
    w = np.ones(n)
    w[0] = w[-1] = 0.5
    weights = np.outer(w, w)
    inner = np.sum(weights * np.conj(shifted) * propagated)
    norm_shifted = np.sum(weights * np.abs(shifted) ** 2)
    norm_propagated = np.sum(weights * np.abs(propagated) ** 2)
    return float(abs(inner) ** 2 / (norm_shifted * norm_propagated))


def total_power(kernel, z, window=cst.X_WINDOW, rel_tol=cst.REL_TOL_SCALAR):
    """
    :param kernel: DisplacementKernel
    :return: int I(x, z) dx over the truncation window
    """
    return KernelBeam(kernel, rel_tol).power(z, window)


def power_closed(kernel, rel_tol=cst.REL_TOL_SCALAR):
    """int C(l, l) dl, equal to total_power at every z."""
    return KernelBeam(kernel, rel_tol).power_closed()
