import numpy as np

from aircoh.errors import DomainError, LandmarkError, UndefinedValueError

__all__ = ['landmark_metrics', 'lobe_contrast', 'offdiagonal_fraction']


def _profile(t):
    if t.ndim != 1:
        raise DomainError("Landmarks need a one-axis FieldTable, got {} axes".format(t.ndim))
    return t.axes[0].points(), np.real(t.values)


def landmark_metrics(t, half_level=0.5):
    """
    Peak position, peak value and full width at half maximum of a profile.

    The peak is refined by a parabola through the three samples around the
    global maximum. The width is measured between the first crossings of
    half_level * peak on either side, so it stays within the main lobe.

    :param t: FieldTable with one axis.
    :param half_level: Fraction of the peak defining the width.
    :return: (peak_x, peak_val, fwhm)
    """
    x, v = _profile(t)
    step = t.axes[0].step
    i = int(np.argmax(v))
    if i == 0 or i == len(v) - 1:
        raise LandmarkError("Peak at grid boundary x = {}".format(x[i]))

    y0, y1, y2 = v[i - 1], v[i], v[i + 1]
    curvature = y0 - 2. * y1 + y2
    offset = 0.5 * (y0 - y2) / curvature if curvature != 0 else 0.
    peak_x = x[i] + offset * step
    peak_val = y1 - 0.25 * (y0 - y2) * offset

    level = half_level * peak_val
    left = i
    while left > 0 and v[left - 1] >= level:
        left -= 1
    right = i
    while right < len(v) - 1 and v[right + 1] >= level:
        right += 1
    if left == 0 or right == len(v) - 1:
        raise LandmarkError("Half-maximum crossing outside the grid around x = {}".format(peak_x))

    x_left = x[left - 1] + (level - v[left - 1]) / (v[left] - v[left - 1]) * step
    x_right = x[right] + (v[right] - level) / (v[right] - v[right + 1]) * step
    return float(peak_x), float(peak_val), float(x_right - x_left)


def lobe_contrast(t, n_lobes=3):
    """
    Mean Michelson contrast (max - min) / (max + min) of the first n_lobes
    maximum/minimum pairs, walking from the main peak towards -x.

    :return: contrast in [0, 1]; 0 when no side minimum exists.
    """
    _, v = _profile(t)
    j = int(np.argmax(v))
    contrasts = []
    while len(contrasts) < n_lobes:
        top = v[j]
        while j > 0 and v[j - 1] <= v[j]:
            j -= 1
        if j == 0:
            break
        bottom = v[j]
        if top + bottom > 0:
            contrasts.append((top - bottom) / (top + bottom))
        while j > 0 and v[j - 1] >= v[j]:
            j -= 1
        if j == 0:
            break
    if not contrasts:
        return 0.
    return float(np.mean(contrasts))


def offdiagonal_fraction(t, width):
    """
    Share of sum |W0|^2 carried by points with |x - x'| > width.

    :param t: FieldTable with two axes.
    :return: float in [0, 1]
    """
    if t.ndim != 2:
        raise DomainError("offdiagonal_fraction needs a two-axis FieldTable")
    x, xp = np.meshgrid(t.axes[0].points(), t.axes[1].points(), indexing='ij')
    weight = np.abs(t.values) ** 2
    total = np.sum(weight)
    if not total > 0:
        raise UndefinedValueError("offdiagonal_fraction of a vanishing table")
    return float(np.sum(weight[np.abs(x - xp) > width]) / total)
