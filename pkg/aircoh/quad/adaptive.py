"""
Adaptive Gauss-Kronrod (G7-K15) quadrature in one and two dimensions.

Integrands are vectorized: they receive arrays of nodes and return arrays
of the same shape, real or complex.
"""
import collections
import logging

import numpy as np

from aircoh import constants as cst
from aircoh.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

__all__ = ['Interval', 'QuadResult', 'integrate_1d', 'integrate_2d']

######################################################################
# Kronrod 15 point rule and its embedded 7 point Gauss rule on [-1, 1]
######################################################################
_XK_HALF = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000])
_WK_HALF = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714])
_WG_HALF = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327])

XK = np.concatenate([-_XK_HALF[:-1], _XK_HALF[::-1]])
WK = np.concatenate([_WK_HALF[:-1], _WK_HALF[::-1]])
# Gauss nodes sit at the odd positions of the half table
WG = np.zeros(15)
WG[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate([_WG_HALF[:-1], _WG_HALF[::-1]])

_EPS = np.finfo(np.float64).eps
_UFLOW = np.finfo(np.float64).tiny
# Bisections allowed to leave both value and error unchanged before giving up
_ROUNDOFF_LIMIT = 10


class Interval(object):
    """
    A finite interval [lo, hi] with lo < hi.
    """

    def __init__(self, lo, hi):
        lo = float(lo)
        hi = float(hi)
        if not (np.isfinite(lo) and np.isfinite(hi)):
            raise DomainError("Interval bounds must be finite.")
        if not lo < hi:
            raise DomainError("Interval requires lo < hi, got [{}, {}].".format(lo, hi))
        self.lo = lo
        self.hi = hi

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def center(self):
        return 0.5 * (self.lo + self.hi)

    def scaled(self, factor):
        """Interval with the same center and width multiplied by factor."""
        half = 0.5 * self.width * factor
        return Interval(self.center - half, self.center + half)

    def __iter__(self):
        yield self.lo
        yield self.hi

    def __eq__(self, other):
        return isinstance(other, Interval) and tuple(self) == tuple(other)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return "Interval({!r}, {!r})".format(self.lo, self.hi)


QuadResult = collections.namedtuple('QuadResult', ['value', 'err_estimate', 'subdivisions'])


def _as_interval(dom):
    if isinstance(dom, Interval):
        return dom
    return Interval(*dom)


def _check_tol(rel_tol):
    if not 1e-14 < rel_tol < 1e-2:
        raise DomainError("rel_tol must lie in (1e-14, 1e-2), got {}".format(rel_tol))


def _scaled_error(diff, resabs, resasc):
    """QUADPACK error heuristic applied panel-wise."""
    err = np.abs(diff)
    nonzero = (resasc != 0.) & (err != 0.)
    err = np.where(nonzero,
                   resasc * np.minimum(1., (200. * err / np.where(nonzero, resasc, 1.)) ** 1.5),
                   err)
    floor = resabs > _UFLOW / (50. * _EPS)
    return np.where(floor, np.maximum(50. * _EPS * resabs, err), err)


def _mark(err):
    """
    Indices of the smallest set of panels holding half of the total error.

    The choice depends only on the error estimates, never on the tolerance.
    """
    order = np.argsort(-err, kind='stable')
    cumulative = np.cumsum(err[order])
    count = int(np.searchsorted(cumulative, 0.5 * cumulative[-1])) + 1
    return np.sort(order[:count])


def _roundoff_count(parent_val, parent_err, child_val, child_err):
    """Bisections that reproduced the parent value without reducing its error."""
    stuck = ((parent_err > 0.)
             & (np.abs(parent_val - child_val) <= 1e-5 * np.abs(child_val))
             & (child_err >= 0.99 * parent_err))
    return int(np.count_nonzero(stuck))


######################################################################
# One dimension
######################################################################
def _panels_1d(f, a, b):
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    nodes = center[:, None] + half[:, None] * XK[None, :]
    fx = np.asarray(f(nodes))
    if fx.shape != nodes.shape:
        fx = np.broadcast_to(fx, nodes.shape)
    kronrod = half * (fx @ WK)
    gauss = half * (fx @ WG)
    resabs = half * (np.abs(fx) @ WK)
    mean = kronrod / (2. * half)
    resasc = half * (np.abs(fx - mean[:, None]) @ WK)
    return kronrod, _scaled_error(kronrod - gauss, resabs, resasc)


def integrate_1d(f, dom, rel_tol=cst.REL_TOL_SCALAR, max_panels=cst.MAX_PANELS,
                 initial_panels=4):
    """
    Adaptive G7-K15 integration of a vectorized function.

    :param f: Callable mapping an ndarray of nodes to values of the same shape.
    :param dom: Interval (or (lo, hi) pair).
    :param rel_tol: Relative tolerance in (1e-14, 1e-2).
    :param max_panels: Subdivision budget.
    :param initial_panels: Number of equal panels to start from.
    :return: QuadResult
    """
    dom = _as_interval(dom)
    _check_tol(rel_tol)
    edges = np.linspace(dom.lo, dom.hi, initial_panels + 1)
    a, b = edges[:-1], edges[1:]
    val, err = _panels_1d(f, a, b)
    roundoff = 0

    while True:
        total = np.sum(val)
        err_total = float(np.sum(err))
        tol = max(rel_tol * abs(total), cst.ABS_FLOOR)
        if err_total <= tol:
            return QuadResult(_to_scalar(total), err_total, len(a))
        if roundoff >= _ROUNDOFF_LIMIT:
            result = QuadResult(_to_scalar(total), err_total, len(a))
            logger.warning("integrate_1d on %r limited by roundoff: %r", dom, result)
            return result
        if len(a) >= max_panels:
            result = QuadResult(_to_scalar(total), err_total, len(a))
            logger.debug("1D budget exhausted on %r: %r", dom, result)
            raise ConvergenceError(
                "integrate_1d exhausted {} panels (err {:.3g} > tol {:.3g})".format(
                    max_panels, err_total, tol), result)

        marked = _mark(err)[:max_panels - len(a)]
        keep = np.ones(len(a), dtype=bool)
        keep[marked] = False
        mid = 0.5 * (a[marked] + b[marked])
        new_a = np.concatenate([a[marked], mid])
        new_b = np.concatenate([mid, b[marked]])
        new_val, new_err = _panels_1d(f, new_a, new_b)
        m = len(marked)
        roundoff += _roundoff_count(val[marked], err[marked],
                                    new_val[:m] + new_val[m:], new_err[:m] + new_err[m:])
        a = np.concatenate([a[keep], new_a])
        b = np.concatenate([b[keep], new_b])
        val = np.concatenate([val[keep], new_val])
        err = np.concatenate([err[keep], new_err])


######################################################################
# Two dimensions
######################################################################
_WKK = np.outer(WK, WK)
_WGK = np.outer(WG, WK)
_WKG = np.outer(WK, WG)


def _panels_2d(f, ax, bx, ay, by):
    cx, hx = 0.5 * (ax + bx), 0.5 * (bx - ax)
    cy, hy = 0.5 * (ay + by), 0.5 * (by - ay)
    nodes_x = cx[:, None, None] + hx[:, None, None] * XK[None, :, None]
    nodes_y = cy[:, None, None] + hy[:, None, None] * XK[None, None, :]
    nodes_x, nodes_y = np.broadcast_arrays(nodes_x, nodes_y)
    fxy = np.asarray(f(nodes_x, nodes_y))
    if fxy.shape != nodes_x.shape:
        fxy = np.broadcast_to(fxy, nodes_x.shape)
    area = hx * hy
    kk = area * np.einsum('nij,ij->n', fxy, _WKK)
    gk = area * np.einsum('nij,ij->n', fxy, _WGK)
    kg = area * np.einsum('nij,ij->n', fxy, _WKG)
    resabs = area * np.einsum('nij,ij->n', np.abs(fxy), _WKK)
    mean = kk / (4. * area)
    resasc = area * np.einsum('nij,ij->n', np.abs(fxy - mean[:, None, None]), _WKK)
    err_x = np.abs(kk - gk)
    err_y = np.abs(kk - kg)
    err = _scaled_error(err_x + err_y, resabs, resasc)
    return kk, err, err_x >= err_y


def integrate_2d(f, dom, rel_tol=cst.REL_TOL_SCALAR, max_panels=cst.MAX_PANELS,
                 initial_panels=2):
    """
    Adaptive tensor G7-K15 integration over a rectangle.

    Rectangles are bisected along the axis whose Gauss/Kronrod discrepancy
    is larger.

    :param f: Callable f(X, Y) on ndarrays of equal shape.
    :param dom: Pair of Intervals (x domain, y domain).
    :param rel_tol: Relative tolerance in (1e-14, 1e-2).
    :param max_panels: Budget on the number of rectangles.
    :param initial_panels: Equal splits per axis to start from.
    :return: QuadResult
    """
    dom_x, dom_y = (_as_interval(d) for d in dom)
    _check_tol(rel_tol)
    ex = np.linspace(dom_x.lo, dom_x.hi, initial_panels + 1)
    ey = np.linspace(dom_y.lo, dom_y.hi, initial_panels + 1)
    ax, ay = (g.ravel() for g in np.meshgrid(ex[:-1], ey[:-1], indexing='ij'))
    bx, by = (g.ravel() for g in np.meshgrid(ex[1:], ey[1:], indexing='ij'))
    val, err, split_x = _panels_2d(f, ax, bx, ay, by)
    roundoff = 0

    while True:
        total = np.sum(val)
        err_total = float(np.sum(err))
        tol = max(rel_tol * abs(total), cst.ABS_FLOOR)
        if err_total <= tol:
            return QuadResult(_to_scalar(total), err_total, len(ax))
        if roundoff >= _ROUNDOFF_LIMIT:
            result = QuadResult(_to_scalar(total), err_total, len(ax))
            logger.warning("integrate_2d on %r x %r limited by roundoff: %r", dom_x, dom_y, result)
            return result
        if len(ax) >= max_panels:
            result = QuadResult(_to_scalar(total), err_total, len(ax))
            logger.debug("2D budget exhausted on %r x %r: %r", dom_x, dom_y, result)
            raise ConvergenceError(
                "integrate_2d exhausted {} rectangles (err {:.3g} > tol {:.3g})".format(
                    max_panels, err_total, tol), result)

        marked = _mark(err)[:max_panels - len(ax)]
        keep = np.ones(len(ax), dtype=bool)
        keep[marked] = False
        sx = split_x[marked]
        mx = np.where(sx, 0.5 * (ax[marked] + bx[marked]), bx[marked])
        my = np.where(sx, by[marked], 0.5 * (ay[marked] + by[marked]))
        # first child keeps the lower corner, second child the upper corner
        new_ax = np.concatenate([ax[marked], np.where(sx, mx, ax[marked])])
        new_bx = np.concatenate([mx, bx[marked]])
        new_ay = np.concatenate([ay[marked], np.where(sx, ay[marked], my)])
        new_by = np.concatenate([my, by[marked]])
        new_val, new_err, new_split = _panels_2d(f, new_ax, new_bx, new_ay, new_by)
        m = len(marked)
        roundoff += _roundoff_count(val[marked], err[marked],
                                    new_val[:m] + new_val[m:], new_err[:m] + new_err[m:])
        ax = np.concatenate([ax[keep], new_ax])
        bx = np.concatenate([bx[keep], new_bx])
        ay = np.concatenate([ay[keep], new_ay])
        by = np.concatenate([by[keep], new_by])
        val = np.concatenate([val[keep], new_val])
        err = np.concatenate([err[keep], new_err])
        split_x = np.concatenate([split_x[keep], new_split])


def _to_scalar(value):
    if np.iscomplexobj(value):
        return complex(value)
    return float(value)
