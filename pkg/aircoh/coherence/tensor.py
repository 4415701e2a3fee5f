import numpy as np

from aircoh import constants as cst
from aircoh.errors import DomainError
from aircoh.quad import Interval, composite_gauss_legendre
from aircoh.specfun.airy import _airy_ai_kernel

__all__ = ['TensorRule', 'csd_matrix']

MAX_NODES = 4000


def fixed_rule(kernel, z, x_min, order=16, n_sigmas=cst.N_SIGMAS):
    """
    Composite Gauss-Legendre nodes and weights in l for a kernel at z.

    Panels resolve the Airy oscillation at the most negative argument,
    the kernel envelope and the propagation phase.
    """
    shift = 0.25 * z * z
    half = n_sigmas / np.sqrt(kernel.marginal_alpha)
    dom = Interval(kernel.center - half, kernel.center + half)
    wavenumber = np.sqrt(max(shift + dom.hi - x_min, 1.))
    scales = [2. * np.pi / wavenumber,
              1. / np.sqrt(kernel.a_sum),
              1. / np.sqrt(kernel.a_diff)]
    if z != 0:
        scales.append(4. * np.pi / abs(z))
    return composite_gauss_legendre(dom, 0.5 * min(scales), order)


class TensorRule(object):
    """
    Fixed product Gauss-Legendre rule for a smooth displacement kernel.

    With A[i, j] = Ai(x_i - l_j - z^2/4) and
    M[j, k] = w_j w_k C(l_j, l_k) exp(i (l_j - l_k) z / 2), the amplitude on a
    grid is A M A'^T, so one rule serves any number of points at z.

    :param kernel: DisplacementKernel with a resolvable envelope.
    :param z: Propagation distance.
    :param x_min: Smallest x the rule will be asked about.
    """

    def __init__(self, kernel, z, x_min, order=16, n_sigmas=cst.N_SIGMAS):
        self.z = float(z)
        self.shift = 0.25 * z * z
        nodes, weights = fixed_rule(kernel, z, x_min, order, n_sigmas)
        if len(nodes) > MAX_NODES:
            raise DomainError("Kernel envelope too narrow for a fixed rule "
                              "({} nodes).".format(len(nodes)))

        lam, lamp = np.meshgrid(nodes, nodes, indexing='ij')
        self.nodes = nodes
        self.matrix = (np.outer(weights, weights) * kernel(lam, lamp)
                       * np.exp(0.5j * (lam - lamp) * z))

    @classmethod
    def fits(cls, kernel, z, x_min, order=16, n_sigmas=cst.N_SIGMAS):
        """Whether the rule for these arguments stays within MAX_NODES."""
        return len(fixed_rule(kernel, z, x_min, order, n_sigmas)[0]) <= MAX_NODES

    def _airy_matrix(self, xs):
        xs = np.asarray(xs, dtype=np.float64)
        return _airy_ai_kernel(xs[..., None] - self.nodes - self.shift)

    def amplitude(self, xs, xps):
        """W0 on the grid xs x xps, shape (len(xs), len(xps))."""
        return self._airy_matrix(xs) @ self.matrix @ self._airy_matrix(xps).T

    def intensity(self, xs):
        """I(x, z) for every x in xs (any shape)."""
        a = self._airy_matrix(xs)
        return np.sum((a @ self.matrix) * a, axis=-1).real


def csd_matrix(kernel, xs, xps, z):
    """
    Amplitude W0(x, x', z) on a whole grid from one fixed rule.

    :return: complex ndarray of shape (len(xs), len(xps))
    """
    x_min = min(np.min(xs), np.min(xps))
    return TensorRule(kernel, z, x_min).amplitude(xs, xps)
