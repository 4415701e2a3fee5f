from aircoh.beam.overlap import OverlapReport, overlap_numeric
from aircoh.coherence import KernelBeam

__all__ = ['FiniteBeam']


class FiniteBeam(KernelBeam):
    """
    Finite-energy beam defined by a parametrized Gaussian kernel.

    Subclasses set self.params and provide overlap_closed().
    """

    def overlap_closed(self, z):
        """:return: (paper_value, derived_value)"""
        raise NotImplementedError

    def overlap_numeric(self, z):
        return overlap_numeric(self.kernel, z)

    def overlap_report(self, z):
        paper, derived = self.overlap_closed(z)
        return OverlapReport(z, self.overlap_numeric(z), paper, derived)

    def shifted_amplitude(self, x, xp, z):
        """Input amplitude translated along the parabola, W0(x - z^2/4, x' - z^2/4, 0)."""
        shift = 0.25 * z * z
        return self.amplitude(x - shift, xp - shift, 0.)

    def __repr__(self):
        return "{}({!r})".format(type(self).__name__, self.params)
