import numpy as np
import pytest

import aircoh as ac
from aircoh.errors import DomainError


class TestGridSpec(object):

    def test_points(self):
        g = ac.GridSpec(0., 1., 3)
        assert np.allclose(g.points(), [0., 0.5, 1.])
        assert g.step == 0.5
        assert len(g) == 3

    @pytest.mark.parametrize("start,stop,count", [(1., 0., 5), (0., 0., 5), (0., 1., 1),
                                                  (0., 1., 2.5), (np.nan, 1., 4)])
    def test_invalid(self, start, stop, count):
        with pytest.raises(DomainError):
            ac.GridSpec(start, stop, count)


class TestFieldTable(object):

    def test_real_columns(self):
        g = ac.GridSpec(0., 1., 3)
        t = ac.FieldTable([g], [1., 2., 3.], name='intensity')
        assert t.header() == ['x', 'intensity']
        assert np.array_equal(t.columns(), [[0., 1.], [0.5, 2.], [1., 3.]])

    def test_complex_columns(self):
        g = ac.GridSpec(0., 1., 2)
        t = ac.FieldTable([g], [1. + 2.j, 3. - 1.j], name='w0')
        assert t.header() == ['x', 'w0_re', 'w0_im']
        assert np.array_equal(t.columns()[1], [1., 3., -1.])

    def test_two_axes_row_major(self):
        gx = ac.GridSpec(0., 1., 2)
        gy = ac.GridSpec(5., 7., 3)
        values = np.arange(6.).reshape(2, 3)
        cols = ac.FieldTable([gx, gy], values).columns()
        assert cols.shape == (6, 3)
        assert np.array_equal(cols[:, 2], np.arange(6.))
        assert np.array_equal(cols[4], [1., 6., 4.])

    def test_shape_mismatch(self):
        with pytest.raises(DomainError):
            ac.FieldTable([ac.GridSpec(0., 1., 3)], [1., 2.])

    def test_non_finite(self):
        with pytest.raises(DomainError):
            ac.FieldTable([ac.GridSpec(0., 1., 2)], [1., np.inf])
