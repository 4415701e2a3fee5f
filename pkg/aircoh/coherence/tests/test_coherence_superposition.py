import numpy as np
from scipy import integrate, special

import aircoh as ac


WINDOW = (-60., 20.)


def window_overlap(lam):
    """int_{-60}^{20} Ai(x) Ai(x - lam) dx from the Wronskian identity."""
    def bracket(x):
        ai, aip, _, _ = special.airy(x)
        ai_s, aip_s, _, _ = special.airy(x - lam)
        if lam == 0:
            return x * ai ** 2 - aip ** 2
        return (aip * ai_s - ai * aip_s) / lam
    return bracket(WINDOW[1]) - bracket(WINDOW[0])


class TestSynthesis(object):

    def test_delta_at_origin(self):
        c = ac.LambdaProfile.delta(0.)
        for x in (-3., 0., 1.5):
            assert abs(ac.synth_superposition(c, x, 0.) - ac.airy_ai(x)) < 1e-6

    def test_delta_translated(self):
        c = ac.LambdaProfile.delta(2.)
        for x in (-1., 2., 4.5):
            expected = ac.airy_field(x - 2., 3.)
            assert abs(ac.synth_superposition(c, x, 3.) - expected) < 1e-5

    def test_linearity(self):
        c1 = ac.LambdaProfile.gaussian(1., 1., 0.)
        c2 = ac.LambdaProfile.gaussian(0.5, 0.4, 1.5)
        for x, z in ((-2., 0.), (1., 2.), (5., 4.)):
            total = ac.synth_superposition(c1 + c2, x, z, rel_tol=1e-11)
            parts = (ac.synth_superposition(c1, x, z, rel_tol=1e-11)
                     + ac.synth_superposition(c2, x, z, rel_tol=1e-11))
            assert abs(total - parts) < 1e-9

    def test_decaying_side(self):
        c = ac.LambdaProfile.gaussian(1., 1., 0.)
        for x in (6.2, 6.5):
            value = ac.synth_superposition(c, x, 0., rel_tol=1e-10)
            ref, _ = integrate.quad(lambda lam: np.exp(-lam * lam) * special.airy(x - lam)[0],
                                    -8., 8., epsabs=0., epsrel=1e-12, limit=200)
            assert abs(value.real - ref) <= 1e-9 * ref
            assert value.imag == 0.

    def test_array_input(self):
        c = ac.LambdaProfile.gaussian()
        xs = np.array([-1., 0., 1.])
        out = ac.synth_superposition(c, xs, 1.)
        assert out.shape == (3,)
        assert out[1] == ac.synth_superposition(c, 0., 1.)


class TestRecovery(object):

    def test_zero_field(self):
        assert ac.recover_coefficients(lambda x: np.zeros_like(x), 0.7) == 0.

    def test_airy_input(self):
        """Coefficients of Ai itself: a truncated delta."""
        c0 = ac.recover_coefficients(ac.airy_ai, 0., rel_tol=1e-10)
        assert np.isclose(c0.real, window_overlap(0.), rtol=1e-8)
        assert c0.real > 2.
        for lam in (-1., 1.):
            c = ac.recover_coefficients(ac.airy_ai, lam, rel_tol=1e-10)
            assert abs(c.real - window_overlap(lam)) < 1e-7
            assert abs(c.real) < c0.real / 5.

    def test_round_trip(self):
        c = ac.LambdaProfile.gaussian(1., 1., 0.)

        def u0(x):
            return ac.synth_superposition(c, x, 0., rel_tol=1e-10)

        for lam in (-3., -1.5, 0., 1.5, 3.):
            recovered = ac.recover_coefficients(u0, lam, rel_tol=1e-8)
            assert abs(recovered - np.exp(-lam * lam)) < 1e-4
