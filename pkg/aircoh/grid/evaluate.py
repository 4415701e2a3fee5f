"""
Batch evaluation of scalar and CSD evaluators over GridSpec axes.

Grid points are independent work items. With threads > 1 they are mapped
over a thread pool; results are gathered in index order so the table does
not depend on the thread count.
"""
import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from aircoh.coherence import propagation_phase
from aircoh.errors import GridEvaluationError
from aircoh.grid.base import FieldTable

logger = logging.getLogger(__name__)

__all__ = ['parallel_map', 'eval_profile', 'intensity_profile', 'antidiagonal_slice',
           'shifted_slice', 'density_map']


def parallel_map(func, items, threads=1):
    """
    [func(item) for item in items], optionally over a thread pool.

    :param func: Callable of one argument.
    :param items: Sequence of arguments.
    :param threads: Worker count; 1 evaluates in the calling thread.
    :return: list of results in the order of items.
    :raises GridEvaluationError: carrying the index of the first failure.
    """
    items = list(items)

    def call(index):
        try:
            return func(items[index])
        except GridEvaluationError:
            raise
        except Exception as e:
            raise GridEvaluationError(index, e) from e

    if threads is None or threads <= 1:
        return [call(i) for i in range(len(items))]
    logger.debug("Evaluating %d points on %d threads", len(items), threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(call, range(len(items))))


def _as_values(results):
    values = np.asarray(results)
    if not np.iscomplexobj(values):
        values = values.astype(np.float64)
    return values


def eval_profile(f, g, threads=1, meta=None, name='value', vectorized=False):
    """
    Sample f on the points of g.

    :param f: Evaluator of one coordinate.
    :param g: GridSpec
    :param vectorized: f accepts the whole point array at once.
    :return: FieldTable with one axis.
    """
    points = g.points()
    if vectorized:
        try:
            values = f(points)
        except Exception as e:
            # Repeat point by point to report the failing index
            parallel_map(f, points)
            raise GridEvaluationError(0, e) from e
    else:
        values = parallel_map(f, points, threads)
    return FieldTable([g], _as_values(values), meta, name)


def intensity_profile(model, g, z, threads=1, meta=None):
    """
    I(x, z) along g. Kernel beams use one fixed tensor rule for the whole
    grid when their envelope allows it; other models are integrated point
    by point.

    :param model: CSDModel
    :return: real FieldTable
    """
    tensor_rule = getattr(model, 'tensor_rule', None)
    rule = tensor_rule(z, g.start) if tensor_rule is not None else None
    if rule is not None:
        return eval_profile(rule.intensity, g, meta=meta, name='intensity', vectorized=True)
    return eval_profile(lambda x: model.intensity(x, z), g, threads, meta, name='intensity')


def _amplitude_of(W):
    amplitude = getattr(W, 'amplitude', None)
    if amplitude is not None:
        return amplitude
    return lambda x, xp, z: W(x, xp, z) * np.conj(propagation_phase(x, xp, z))


def _matrix_of(W, xs, xps, z):
    """W.amplitude_matrix(xs, xps, z), or None when W has no usable fixed rule."""
    matrix = getattr(W, 'amplitude_matrix', None)
    if matrix is None:
        return None
    return matrix(xs, xps, z)


def antidiagonal_slice(W, g, z, threads=1, meta=None):
    """
    The amplitude W0(x, -x, z) along g, without the fast propagation phase.

    :param W: CSDModel, or a CSD evaluator W(x, x', z) whose phase is removed.
    :param g: GridSpec of x.
    :param z: Propagation distance.
    :return: complex FieldTable
    """
    points = g.points()
    matrix = _matrix_of(W, points, -points, z)
    if matrix is not None:
        values = np.diagonal(matrix).astype(np.complex128)
    else:
        amplitude = _amplitude_of(W)
        values = _as_values(parallel_map(lambda x: amplitude(x, -x, z), points, threads))
        values = values.astype(np.complex128)
    return FieldTable([g], values, meta, name='w0')


def density_map(W0, gx, gxp, z, threads=1, meta=None):
    """
    Real part of W0(x, x', z) on the product grid gx x gxp.

    Models offering amplitude_matrix() are evaluated in one pass; any other
    evaluator is called point by point in row-major order.

    :return: real FieldTable with two axes.
    """
    xs = gx.points()
    xps = gxp.points()
    matrix = _matrix_of(W0, xs, xps, z)
    if matrix is not None:
        values = np.real(matrix)
    else:
        amplitude = getattr(W0, 'amplitude', W0)
        pairs = [(x, xp) for x in xs for xp in xps]
        results = parallel_map(lambda pair: amplitude(pair[0], pair[1], z), pairs, threads)
        values = np.real(np.asarray(results)).reshape(len(xs), len(xps))
    return FieldTable([gx, gxp], values.astype(np.float64), meta, name='re_w0')


def shifted_slice(W, g, z, threads=1, meta=None):
    """
    The input amplitude carried along the parabola, W0(x - z^2/4, -x - z^2/4, 0).

    Comparing it with antidiagonal_slice(W, g, z) shows how far the beam
    departs from rigid self-acceleration.

    :return: complex FieldTable
    """
    points = g.points()
    shift = 0.25 * z * z
    matrix = _matrix_of(W, points - shift, -points - shift, 0.)
    if matrix is not None:
        values = np.diagonal(matrix)
    else:
        amplitude = _amplitude_of(W)
        values = parallel_map(lambda x: amplitude(x - shift, -x - shift, 0.), points, threads)
    return FieldTable([g], _as_values(values).astype(np.complex128), meta, name='w0')
