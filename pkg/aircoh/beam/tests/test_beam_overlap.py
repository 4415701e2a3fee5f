import itertools

import numpy as np
import pytest

import aircoh as ac
from aircoh import constants as cst


ALPHAS = (0.5, 1., 2.)
BETAS = (0., 0.5, 24.5)
DISTANCES = (0., 2., 4., 8.)


@pytest.mark.parametrize("alpha,beta", list(itertools.product(ALPHAS, BETAS)))
def test_type1_numeric_matches_closed(alpha, beta):
    beam = ac.TypeIBeam(alpha=alpha, beta=beta)
    for z in DISTANCES:
        numeric = beam.overlap_numeric(z)
        closed, _ = beam.overlap_closed(z)
        assert abs(numeric - closed) <= 1e-6 * closed


def test_origin_is_one():
    assert ac.overlap_numeric(ac.TypeIBeam(alpha=1., beta=0.5).kernel, 0.) == 1.


def test_critical_distances():
    for alpha, beta, z_crit in [(1., 0.5, 4.), (1., 24.5, 20.)]:
        beam = ac.TypeIBeam(alpha=alpha, beta=beta)
        assert np.isclose(beam.overlap_numeric(z_crit), np.exp(-1.), atol=1e-4)


def test_monotone_and_symmetric():
    kernel = ac.TypeIBeam(alpha=1., beta=0.5).kernel
    values = [ac.overlap_numeric(kernel, z) for z in np.linspace(0., 8., 9)]
    assert np.all(np.diff(values) <= 0)
    assert all(0. <= v <= 1. for v in values)
    assert np.isclose(ac.overlap_numeric(kernel, -3.), ac.overlap_numeric(kernel, 3.),
                      rtol=1e-12)


class TestTypeTwoAdjudication(object):

    @classmethod
    def setup_class(cls):
        cls.verdict = ac.adjudicate_type2((4., 100.), (1., 4., 5.), (2., 4., 8.))

    def test_derived_wins(self):
        assert self.verdict['winner'] == 'derived'
        assert self.verdict['consistent']

    def test_reports_flag_printed_form(self):
        assert len(self.verdict["reports"]) == 18
        for _, report in self.verdict['reports']:
            assert report.discrepancy_flag
            assert len(report.as_row()) == len(ac.OverlapReport.columns)


class TestOverlapReport(object):

    def test_winner(self):
        assert ac.OverlapReport(1., 0.5, 0.5, 0.5).winner == 'both'
        assert ac.OverlapReport(1., 0.5, 0.5, 0.4).winner == 'paper'
        assert ac.OverlapReport(1., 0.5, 0.4, 0.5).winner == 'derived'
        assert ac.OverlapReport(1., 0.5, 0.3, 0.4).winner == 'neither'

    def test_row(self):
        row = ac.OverlapReport(2., 0.5, 0.4, 0.5).as_row()
        assert row == [2., 0.5, 0.4, 0.5, 1]


@pytest.mark.parametrize("kernel,z,expected", [
    (ac.TypeIBeam(alpha=0.5, beta=0.).kernel, 2., np.exp(-1.)),
    (ac.TypeIBeam(alpha=0.5, beta=0.25).kernel, 2., np.exp(-0.5)),
    (ac.TypeIIBeam(a=1., b=0.5).kernel, 2., np.exp(-1.)),
])
def test_grid_definition_agrees(kernel, z, expected):
    assert abs(ac.overlap_grid(kernel, z) - expected) < 5e-2


class TestPower(object):

    def test_conserved(self):
        kernel = ac.TypeIIBeam(a=4., b=4.).kernel
        p0 = ac.total_power(kernel, 0.)
        p4 = ac.total_power(kernel, 4.)
        assert abs(p4 - p0) <= 1e-3 * p0

    def test_window_follows_beam(self):
        beam = ac.TypeIIBeam(a=4., b=4.)
        p0 = beam.power(0.)
        assert abs(beam.power(8.) - p0) <= 1e-3 * p0
        assert abs(p0 - beam.power_closed()) <= 1e-3 * p0

    def test_linear_in_kernel(self):
        kernel = ac.TypeIIBeam(a=4., b=4.).kernel
        assert np.isclose(ac.total_power(kernel.scaled(2.), 0.),
                          2. * ac.total_power(kernel, 0.), rtol=1e-7)

    def test_matches_kernel_diagonal(self):
        beam = ac.TypeIBeam(alpha=1., beta=0.5)
        assert np.isclose(beam.power(0.), beam.power_closed(), rtol=1e-6)

    def test_window_captures_tail(self):
        beam = ac.TypeIBeam(alpha=1., beta=0.5)
        peak = max(beam.intensity(x, 0.) for x in np.linspace(-3., 1., 41))
        assert beam.intensity(cst.X_WINDOW[0], 0.) / peak < 1e-6

    def test_closed_type1(self):
        # N_I * sqrt(pi / 2 alpha) with alpha=1, beta=0.5
        kernel = ac.TypeIBeam(alpha=1., beta=0.5).kernel
        assert np.isclose(ac.power_closed(kernel), 1. / np.sqrt(np.pi), rtol=1e-7)
