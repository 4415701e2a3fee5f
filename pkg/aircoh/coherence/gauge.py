import numpy as np

from aircoh.coherence.base import CSDModel, propagation_phase

__all__ = ['GaugeBeam', 'csd_gauge_extend']


class GaugeBeam(CSDModel):
    """
    W_F(x, x', z) = W(x, x', z) + F(x' - x).

    The added term keeps the intensity shape invariant but not the
    degree of coherence.

    :param model: The underlying CSDModel.
    :param gauge: GaugeParams
    """

    def __init__(self, model, gauge):
        self.model = model
        self.gauge = gauge

    def csd(self, x, xp, z):
        return self.model.csd(x, xp, z) + self.gauge.transform(xp - x)

    def amplitude(self, x, xp, z):
        return self.csd(x, xp, z) * np.conj(propagation_phase(x, xp, z))

    def intensity(self, x, z):
        return self.model.intensity(x, z) + float(self.gauge.transform(0.))

    def __repr__(self):
        return "GaugeBeam({!r}, {!r})".format(self.model, self.gauge)


def csd_gauge_extend(W, g, x, xp, z):
    """
    :param W: CSD evaluator.
    :param g: GaugeParams
    :return: complex
    """
    return complex(W(x, xp, z) + g.transform(xp - x))
