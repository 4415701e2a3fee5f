import numpy as np

import aircoh as ac


SIGMA = 0.5
Z = 6.
SHIFT = 9.


class TestGauge(object):

    @classmethod
    def setup_class(cls):
        cls.base = ac.InfiniteBeam(sigma=SIGMA, rel_tol=1e-10)
        cls.gauge = ac.GaugeParams(0.05, 1.)
        cls.beam = ac.GaugeBeam(cls.base, cls.gauge)

    def test_gauge_off(self):
        beam = ac.GaugeBeam(self.base, ac.GaugeParams(0., 1.))
        assert beam.csd(1., -0.5, 2.) == self.base.csd(1., -0.5, 2.)

    def test_intensity_offset(self):
        expected = self.base.intensity(9., Z) + self.gauge.transform(0.)
        assert np.isclose(self.beam.intensity(9., Z), expected, rtol=1e-12)
        assert np.isclose(self.beam.csd(9., 9., Z).real, expected, rtol=1e-10)

    def test_intensity_shape_invariant(self):
        for x in np.linspace(4., 14., 11):
            assert abs(self.beam.intensity(x, Z) - self.beam.intensity(x - SHIFT, 0.)) < 1e-8

    def test_degree_not_shape_invariant(self):
        g = abs(self.beam.degree_of_coherence(9., 7., Z))
        g0 = abs(self.beam.degree_of_coherence(0., -2., 0.))
        assert abs(g - g0) > 1e-4

    def test_antidiagonal_degree_not_shape_invariant(self):
        worst = 0.
        for x in np.linspace(-3., 3., 13):
            g = abs(self.beam.degree_of_coherence(x, -x, Z))
            g0 = abs(self.beam.degree_of_coherence(x - SHIFT, -x - SHIFT, 0.))
            worst = max(worst, abs(g - g0))
        assert worst > 1e-4

    def test_function_form(self):
        w = ac.csd_gauge_extend(self.base, self.gauge, 1., 3., 2.)
        assert w == self.beam.csd(1., 3., 2.)

    def test_flow_unchanged_by_gauge(self):
        jx, _ = self.beam.flow(9.5, Z, h=1e-3)
        jx_base, _ = self.base.flow(9.5, Z)
        assert abs(jx - jx_base) < 1e-4
