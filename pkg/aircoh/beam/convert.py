import numpy as np

__all__ = ['sigma_to_alpha', 'alpha_to_sigma', 'map_type2_params',
           'to_dimensional', 'to_dimensionless']


def sigma_to_alpha(sigma):
    """
    Envelope coefficient of a Gaussian spread of width sigma.

    :param sigma: spread width
    :return: 1 / sigma^2
    """
    return 1. / sigma ** 2


def alpha_to_sigma(alpha):
    """
    :param alpha: envelope coefficient
    :return: 1 / sqrt(alpha)
    """
    return 1. / np.sqrt(alpha)


def map_type2_params(p):
    """
    Spread factors of the Type-II kernel once the intermediate
    displacement has been integrated out.

    :param p: TypeIIParams (anything with a and b).
    :return: (alpha', beta') = (ab/(a+2b), b^2/(a+2b))
    """
    a, b = p.a, p.b
    return a * b / (a + 2. * b), b * b / (a + 2. * b)


def to_dimensional(x, z, length_scale, wavenumber):
    """
    Convert scaled coordinates to physical ones.

    :param x: transverse coordinate
    :param z: propagation distance
    :param length_scale: transverse scale l
    :param wavenumber: k
    :return: (l x, k l^2 z)
    """
    return length_scale * x, wavenumber * length_scale ** 2 * z


def to_dimensionless(x_dim, z_dim, length_scale, wavenumber):
    return x_dim / length_scale, z_dim / (wavenumber * length_scale ** 2)
