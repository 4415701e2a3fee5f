import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

import aircoh as ac


positive = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False, allow_infinity=False)


def test_sigma_alpha():
    assert ac.sigma_to_alpha(0.5) == 4.
    assert ac.alpha_to_sigma(4.) == 0.5


def test_map_type2_params():
    alpha_p, beta_p = ac.map_type2_params(ac.TypeIIParams(4., 4.))
    assert np.isclose(alpha_p, 4. / 3.)
    assert np.isclose(beta_p, 4. / 3.)


@given(positive, positive)
@settings(max_examples=200, deadline=None)
def test_spread_sum_equals_b(a, b):
    alpha_p, beta_p = ac.map_type2_params(ac.TypeIIParams(a, b))
    assert np.isclose(alpha_p + 2. * beta_p, b, rtol=1e-13)


def test_narrow_intermediate_limit():
    alpha_p, beta_p = ac.map_type2_params(ac.TypeIIParams(100., 1.))
    assert np.isclose(alpha_p, 0.98, atol=1e-3)
    assert np.isclose(beta_p, 0.0098, atol=1e-4)


def test_independent_limit():
    alpha_p, _ = ac.map_type2_params(ac.TypeIIParams(0.01, 10.))
    assert abs(alpha_p - 0.005) / 0.005 < 0.02


def test_dimensional_round_trip():
    x_dim, z_dim = ac.to_dimensional(2., 3., 1e-4, 1e7)
    assert np.isclose(x_dim, 2e-4)
    assert np.isclose(z_dim, 3e-1)
    x, z = ac.to_dimensionless(x_dim, z_dim, 1e-4, 1e7)
    assert np.isclose(x, 2.)
    assert np.isclose(z, 3.)
