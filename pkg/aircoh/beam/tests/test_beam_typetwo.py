import numpy as np
import pytest

import aircoh as ac
from aircoh.errors import DomainError


class TestTypeIIParams(object):

    def test_derived(self):
        p = ac.TypeIIParams(4., 4.)
        assert np.isclose(p.alpha_prime, 4. / 3.)
        assert np.isclose(p.beta_prime, 4. / 3.)
        assert np.isclose(p.norm, 4. / np.pi * np.sqrt(1. / 3.))

    @pytest.mark.parametrize("a,b", [(0., 1.), (1., 0.), (-1., 4.), (1., 1e7)])
    def test_invalid(self, a, b):
        with pytest.raises(DomainError):
            ac.TypeIIParams(a, b)

    def test_beam_keywords(self):
        with pytest.raises(TypeError):
            ac.TypeIIBeam(a=4.)


class TestKernelTypeTwo(object):

    @pytest.mark.parametrize("a,b", [(4., 4.), (100., 4.), (4., 1.), (100., 5.)])
    def test_normalized(self, a, b):
        p = ac.TypeIIParams(a, b)
        k = ac.TypeIIBeam(p).kernel
        res = ac.integrate_windowed_2d(lambda v, u: ac.kernel_type2(p, v + 0.5 * u, v - 0.5 * u),
                                       (k.a_sum, k.a_diff), rel_tol=1e-11)
        assert abs(res.value - 1.) < 1e-8

    def test_constant_ratio_to_intermediate_integral(self):
        p = ac.TypeIIParams(4., 4.)
        samples = [(lam, lamp) for lam in (-1., 0., 1.5) for lamp in (-0.5, 0.2, 1.)]
        ratios = [ac.kernel_type2(p, lam, lamp) / ac.kernel_type2_quadrature(p, lam, lamp)
                  for lam, lamp in samples]
        assert np.allclose(ratios, ratios[0], rtol=1e-8, atol=0)
        assert np.isclose(ratios[0], p.norm / np.sqrt(np.pi / (p.a + 2. * p.b)), rtol=1e-10)

    def test_hermitian(self):
        p = ac.TypeIIParams(4., 4.)
        w = ac.csd_type2(p, 2., -1., 4., rel_tol=1e-10)
        w_swapped = ac.csd_type2(p, -1., 2., 4., rel_tol=1e-10)
        assert abs(w - np.conj(w_swapped)) < 1e-10


class TestClosedForms(object):

    def test_headline_values(self):
        p = ac.TypeIIParams(100., 4.)
        assert np.isclose(ac.overlap_closed_type2(p, 4.)[0], 0.7788, atol=1e-4)
        assert np.isclose(ac.overlap_closed_type2(p, 8.)[0], 0.3679, atol=1e-4)
        assert np.isclose(ac.overlap_closed_type2(p, 8.)[1], np.exp(-2.))

    def test_origin(self):
        assert ac.overlap_closed_type2(ac.TypeIIParams(4., 1.), 0.) == (1., 1.)

    def test_critical_distance(self):
        p = ac.TypeIIParams(100., 4.)
        assert np.isclose(ac.critical_distance_type2(p), 8.)
        assert np.isclose(ac.critical_distance_type2(p, derived=True), np.sqrt(32.))


def test_high_coherence_keeps_lobes():
    """a = 100 behaves like a coherent beam: side lobes keep their contrast."""
    grid = ac.GridSpec(-10., 2., 121)
    beam = ac.TypeIIBeam(a=100., b=4., rel_tol=1e-6)
    table = ac.intensity_profile(beam, grid, 0.)
    reference = ac.eval_profile(lambda x: ac.airy_ai(x) ** 2, grid)
    assert (ac.lobe_contrast(table, n_lobes=3)
            >= 0.8 * ac.lobe_contrast(reference, n_lobes=3))
