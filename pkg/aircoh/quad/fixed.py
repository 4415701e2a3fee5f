import numpy as np

from aircoh.quad.adaptive import Interval

__all__ = ['composite_gauss_legendre']


def composite_gauss_legendre(dom, panel_width, order=16):
    """
    Nodes and weights of a composite Gauss-Legendre rule.

    Used where one fixed rule serves many evaluation points at once.

    :param dom: Interval or (lo, hi).
    :param panel_width: Upper bound on the panel width.
    :param order: Gauss-Legendre points per panel.
    :return: (nodes, weights) as 1D arrays.
    """
    if not isinstance(dom, Interval):
        dom = Interval(*dom)
    n_panels = max(1, int(np.ceil(dom.width / panel_width)))
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(dom.lo, dom.hi, n_panels + 1)
    half = 0.5 * np.diff(edges)
    center = 0.5 * (edges[:-1] + edges[1:])
    nodes = (center[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights
