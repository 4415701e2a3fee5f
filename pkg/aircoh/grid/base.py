import numpy as np

from aircoh.errors import DomainError
from aircoh.util import check_finite

__all__ = ['GridSpec', 'FieldTable']


class GridSpec(object):
    """
    Uniform sampling of [start, stop] with count points, endpoints included.
    """

    def __init__(self, start, stop, count):
        check_finite('start', start)
        check_finite('stop', stop)
        if not start < stop:
            raise DomainError("Grid start {} must be below stop {}".format(start, stop))
        if int(count) != count or count < 2:
            raise DomainError("Grid count must be an integer >= 2, got {}".format(count))
        self.start = float(start)
        self.stop = float(stop)
        self.count = int(count)

    @property
    def step(self):
        return (self.stop - self.start) / (self.count - 1)

    def points(self):
        return np.linspace(self.start, self.stop, self.count)

    def __len__(self):
        return self.count

    def __eq__(self, other):
        return (isinstance(other, GridSpec)
                and (self.start, self.stop, self.count) == (other.start, other.stop, other.count))

    def __repr__(self):
        return "GridSpec({!r}, {!r}, {!r})".format(self.start, self.stop, self.count)


class FieldTable(object):
    """
    Samples of an evaluator on one or two grid axes.

    :param axes: Sequence of one or two GridSpec.
    :param values: Array of shape (len(axes[0]),) or (len(axes[0]), len(axes[1])).
    :param meta: Parameter provenance, copied into output sidecars.
    :param name: Column name of the sampled quantity.
    """

    def __init__(self, axes, values, meta=None, name='value'):
        self.axes = tuple(axes)
        if len(self.axes) not in (1, 2):
            raise DomainError("A FieldTable has one or two axes, got {}".format(len(self.axes)))
        values = np.asarray(values)
        shape = tuple(len(axis) for axis in self.axes)
        if values.shape != shape:
            raise DomainError("Values of shape {} do not match axes {}".format(values.shape, shape))
        check_finite(name, values)
        self.values = values
        self.meta = dict(meta or {})
        self.name = name

    @property
    def is_complex(self):
        return np.iscomplexobj(self.values)

    @property
    def ndim(self):
        return len(self.axes)

    def header(self):
        names = ['x', 'xp'][:self.ndim]
        if self.is_complex:
            return names + ['{}_re'.format(self.name), '{}_im'.format(self.name)]
        return names + [self.name]

    def columns(self):
        """
        Row-major column layout: axis coordinates followed by the value
        (or its real and imaginary parts).

        :return: float ndarray of shape (n_rows, n_columns)
        """
        grids = np.meshgrid(*[axis.points() for axis in self.axes], indexing='ij')
        cols = [g.ravel() for g in grids]
        flat = self.values.ravel()
        if self.is_complex:
            cols += [flat.real, flat.imag]
        else:
            cols.append(flat.astype(np.float64))
        return np.column_stack(cols)

    def __repr__(self):
        return "FieldTable(axes={!r}, name={!r})".format(self.axes, self.name)
