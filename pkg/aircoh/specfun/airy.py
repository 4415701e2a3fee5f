import numpy as np
from numba import njit, vectorize
from scipy import integrate

from aircoh import constants as cst
from aircoh.util import check_finite

__all__ = ['airy_ai', 'airy_field', 'airy_ai_quadrature']

_AI0 = cst.AIRY_AI_ZERO
_AIP0 = cst.AIRY_AIP_ZERO
_SERIES_LOWER = cst.SERIES_LOWER
_SERIES_UPPER = cst.SERIES_UPPER
_ASYMPTOTIC_LOWER = cst.ASYMPTOTIC_LOWER
_UNDERFLOW = cst.UNDERFLOW_LIMIT
_SQRT_PI = cst.SQRT_PI

# Gauss-Legendre rule for the steepest descent integral, 6 panels of 32 nodes
_SADDLE_PANELS = 6
_SADDLE_NODES, _SADDLE_WEIGHTS = np.polynomial.legendre.leggauss(32)


######################################################################
# Compiled kernel
######################################################################
@njit(cache=True)
def _airy_ai_saddle(x):
    """
    Ai(x) for moderate x > 0 from the cosine integral deformed through
    the saddle point t = i sqrt(x):

        Ai(x) = exp(-zeta) / pi * int_0^inf exp(-sqrt(x) t^2) cos(t^3/3) dt

    The integrand is positive near the origin, so no cancellation occurs.
    """
    kappa = np.sqrt(x)
    # exp(-kappa t^2) < 1e-17 past the upper limit
    upper = np.sqrt(40. / kappa)
    half = 0.5 * upper / _SADDLE_PANELS
    total = 0.
    for p in range(_SADDLE_PANELS):
        center = (2 * p + 1) * half
        for i in range(_SADDLE_NODES.shape[0]):
            t = center + half * _SADDLE_NODES[i]
            total += _SADDLE_WEIGHTS[i] * np.exp(-kappa * t * t) * np.cos(t * t * t / 3.)
    zeta = 2. / 3. * x * kappa
    return np.exp(-zeta) * half * total / np.pi


@vectorize(['float64(float64)'], nopython=True, cache=True)
def _airy_ai_kernel(x):
    """
    Ai on the real line, piecewise in four regions.

    :param x: finite real argument.
    :return: Ai(x)
    """
    if x > _UNDERFLOW:
        return 0.

    if _SERIES_UPPER <= x < _ASYMPTOTIC_LOWER:
        return _airy_ai_saddle(x)

    if _SERIES_LOWER < x < _SERIES_UPPER:
        # Ai = Ai(0) f(x) + Ai'(0) g(x)
        x3 = x * x * x
        f_term = 1.
        g_term = x
        f_sum = f_term
        g_sum = g_term
        for k in range(1, 200):
            f_term *= x3 / ((3. * k - 1.) * (3. * k))
            g_term *= x3 / ((3. * k) * (3. * k + 1.))
            f_sum += f_term
            g_sum += g_term
            if (abs(f_term) < 1e-18 * abs(f_sum)
                    and abs(g_term) < 1e-18 * abs(g_sum)):
                break
        return _AI0 * f_sum - _AIP0 * g_sum

    t = abs(x)
    zeta = 2. / 3. * t * np.sqrt(t)

    if x > 0.:
        total = 1.
        u_k = 1.
        term_prev = 1.
        sign = 1.
        power = 1.
        for k in range(1, 60):
            u_k *= (6. * k - 5.) * (6. * k - 3.) * (6. * k - 1.) / (216. * k * (2. * k - 1.))
            power *= zeta
            term = u_k / power
            if term > term_prev or term < 1e-17:
                break
            sign = -sign
            total += sign * term
            term_prev = term
        return np.exp(-zeta) * total / (2. * _SQRT_PI * np.sqrt(np.sqrt(t)))

    # Oscillatory side
    even = 1.
    odd = 0.
    u_k = 1.
    power = 1.
    term_prev = 1.
    for k in range(1, 60):
        u_k *= (6. * k - 5.) * (6. * k - 3.) * (6. * k - 1.) / (216. * k * (2. * k - 1.))
        power *= zeta
        term = u_k / power
        if term > term_prev or term < 1e-17:
            break
        term_prev = term
        # k odd contributes to the sine series, k even to the cosine series
        half = k // 2
        sign = 1. if half % 2 == 0 else -1.
        if k % 2 == 1:
            odd += sign * term
        else:
            even += sign * term
    phase = zeta - np.pi / 4.
    return (np.cos(phase) * even + np.sin(phase) * odd) / (_SQRT_PI * np.sqrt(np.sqrt(t)))


######################################################################
# Public interface
######################################################################
def airy_ai(x):
    """
    Airy function Ai for real arguments.

    Absolute error is below 1e-10 on |x| <= 40. Arguments beyond
    x = 200 return exactly zero.

    :param x: Scalar or array of finite coordinates.
    :return: float for scalar input, ndarray otherwise.
    """
    check_finite('x', x)
    value = _airy_ai_kernel(np.asarray(x, dtype=np.float64))
    if np.ndim(value) == 0:
        return float(value)
    return value


def airy_field(x, z):
    """
    Ideal Airy beam propagated to the plane z.

    :param x: Transverse coordinate(s).
    :param z: Propagation distance.
    :return: exp(i(x - z^2/6) z/2) Ai(x - z^2/4)
    """
    check_finite('x', x)
    check_finite('z', z)
    x = np.asarray(x, dtype=np.float64)
    value = np.exp(0.5j * (x - z * z / 6.) * z) * _airy_ai_kernel(x - 0.25 * z * z)
    if np.ndim(value) == 0:
        return complex(value)
    return value


def airy_ai_quadrature(x):
    """
    Slow reference value of Ai(x) from its integral representation.

    The contour of the cosine integral is shifted to t + i*kappa, which
    damps the integrand by exp(-kappa t^2):

        Ai(x) = exp(kappa^3/3 - kappa x) / pi
                * int_0^inf exp(-kappa t^2) cos(t^3/3 + (x - kappa^2) t) dt

    :param x: A finite scalar.
    :return: Ai(x)
    """
    check_finite('x', x)
    kappa = max(np.sqrt(x), 0.5) if x > 0 else 0.5
    upper = np.sqrt(45. / kappa)

    def integrand(t):
        return np.exp(-kappa * t * t) * np.cos(t ** 3 / 3. + (x - kappa * kappa) * t)

    value, _ = integrate.quad(integrand, 0., upper, limit=1000,
                              epsabs=1e-15, epsrel=1e-13)
    return np.exp(kappa ** 3 / 3. - kappa * x) * value / np.pi
