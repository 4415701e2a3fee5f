"""
Dataset bundles behind the published figures of partially coherent Airy
beams: intensity profiles, anti-diagonal amplitude slices, density maps and
overlap curves, one CSV per curve plus a manifest.
"""
import json
import logging
import os

import numpy as np

from aircoh import constants as cst
from aircoh.beam import OverlapReport, TypeIBeam, TypeIIBeam
from aircoh.coherence import InfiniteBeam
from aircoh.errors import DomainError
from aircoh.grid import (FieldTable, GridSpec, antidiagonal_slice, density_map, eval_profile,
                         intensity_profile, shifted_slice)
from aircoh.specfun import airy_ai
from aircoh.util import remove_outputs, write_csv, write_table

logger = logging.getLogger(__name__)

__all__ = ['FIGURES', 'figure_jobs', 'run_figure', 'write_manifest']

MANIFEST = 'manifest.json'

SIGMAS = (cst.COHERENT_SIGMA, 0.1, 0.5, 5.)
INFINITE_DISTANCES = (0., 6.)
FINITE_DISTANCES = (0., 4., 8.)
OVERLAP_DISTANCES = tuple(float(z) for z in np.linspace(0., 8., 17))

CAPTION_NOTE = ("Captions list a = 4 with b = 1 and b = 5; the datasets follow the "
                "text, b = 4 with a = 100 and a = 4.")


class Job(object):
    """One output file of a figure bundle."""

    def __init__(self, fname, quantity, family, params, z=None):
        self.fname = fname
        self.quantity = quantity
        self.family = family
        self.params = params
        self.z = z

    def entry(self):
        return {'file': self.fname, 'quantity': self.quantity, 'family': self.family,
                'params': self.params, 'z': self.z}


def _tag(value):
    return '{:g}'.format(value)


def _infinite_jobs(fig_id, quantities):
    jobs = []
    for sigma in SIGMAS:
        for z in INFINITE_DISTANCES:
            for quantity in quantities:
                fname = '{}_sigma{}_z{}_{}.csv'.format(fig_id, _tag(sigma), _tag(z), quantity)
                jobs.append(Job(fname, quantity, 'infinite', {'sigma': sigma}, z))
    return jobs


def _finite_jobs(fig_id, family, key, values, fixed, quantity):
    jobs = []
    for value in values:
        params = dict(fixed)
        params[key] = value
        for z in FINITE_DISTANCES:
            fname = '{}_{}{}_z{}_{}.csv'.format(fig_id, key, _tag(value), _tag(z), quantity)
            jobs.append(Job(fname, quantity, family, params, z))
            if z > 0:
                fname = '{}_{}{}_z{}_{}_shifted.csv'.format(
                    fig_id, key, _tag(value), _tag(z), quantity)
                jobs.append(Job(fname, quantity + '_shifted', family, params, z))
        if quantity == 'intensity':
            fname = '{}_{}{}_overlap.csv'.format(fig_id, key, _tag(value))
            jobs.append(Job(fname, 'overlap', family, params))
    for z in FINITE_DISTANCES:
        fname = '{}_coherent_z{}_{}.csv'.format(fig_id, _tag(z), quantity)
        jobs.append(Job(fname, quantity, 'coherent', {}, z))
    return jobs


FIGURES = {
    'fig1': lambda: _infinite_jobs('fig1', ('intensity', 'slice')),
    'fig2': lambda: _infinite_jobs('fig2', ('density',)),
    'fig3': lambda: _finite_jobs('fig3', 'type1', 'beta', (0.5, 24.5), {'alpha': 1.}, 'intensity'),
    'fig4': lambda: _finite_jobs('fig4', 'type1', 'beta', (0.5, 24.5), {'alpha': 1.}, 'slice'),
    'fig5': lambda: _finite_jobs('fig5', 'type2', 'a', (100., 4.), {'b': 4.}, 'intensity'),
    'fig6': lambda: _finite_jobs('fig6', 'type2', 'a', (100., 4.), {'b': 4.}, 'slice'),
}


def figure_jobs(fig_id):
    """
    :param fig_id: One of fig1 ... fig6.
    :return: list of Job
    """
    try:
        return FIGURES[fig_id]()
    except KeyError:
        raise DomainError("Unknown figure {!r}, expected one of {}".format(
            fig_id, sorted(FIGURES)))


def _model(job, rel_tol):
    if job.family == 'infinite':
        return InfiniteBeam(sigma=job.params['sigma'], rel_tol=rel_tol)
    if job.family == 'type1':
        return TypeIBeam(rel_tol=rel_tol, **job.params)
    return TypeIIBeam(rel_tol=rel_tol, **job.params)


def _slice_grid(n):
    start, stop, count = cst.PROFILE_GRID
    return GridSpec(start, stop, n or count)


def _profile_grid(z, n):
    # Intensity follows the parabola so every plane shows the main lobe.
    g = _slice_grid(n)
    shift = 0.25 * z * z
    return GridSpec(g.start + shift, g.stop + shift, g.count)


def _coherent_table(job, n):
    """Ideal Airy beam counterpart of the plotted quantity."""
    shift = 0.25 * job.z * job.z
    if job.quantity == 'intensity':
        return eval_profile(lambda x: airy_ai(x - shift) ** 2, _profile_grid(job.z, n),
                            name='intensity', vectorized=True)
    table = eval_profile(lambda x: airy_ai(x - shift) * airy_ai(-x - shift), _slice_grid(n),
                         name='w0', vectorized=True)
    return FieldTable(table.axes, table.values.astype(np.complex128), name='w0')


def _write_job(job, path, n, rel_tol, threads):
    if job.family == 'coherent':
        write_table(path, _coherent_table(job, n))
        return
    model = _model(job, rel_tol)
    if job.quantity == 'intensity':
        write_table(path, intensity_profile(model, _profile_grid(job.z, n), job.z, threads))
    elif job.quantity == 'intensity_shifted':
        # I(x - z^2/4, 0) is the z = 0 profile relabelled onto the shifted grid
        start = intensity_profile(model, _slice_grid(n), 0., threads)
        write_table(path, FieldTable([_profile_grid(job.z, n)], start.values, name='intensity'))
    elif job.quantity == 'slice':
        write_table(path, antidiagonal_slice(model, _slice_grid(n), job.z, threads))
    elif job.quantity == 'slice_shifted':
        write_table(path, shifted_slice(model, _slice_grid(n), job.z, threads))
    elif job.quantity == 'density':
        start, stop, count = cst.DENSITY_GRID
        g = GridSpec(start, stop, n or count)
        write_table(path, density_map(model, g, g, job.z, threads))
    else:
        rows = [model.overlap_report(z).as_row() for z in OVERLAP_DISTANCES]
        write_csv(path, OverlapReport.columns, rows)


def run_figure(fig_id, outdir, n=None, rel_tol=cst.REL_TOL_FIELD, threads=1):
    """
    Write every dataset of one figure to outdir, then the manifest.

    Files written before a failure are removed again.

    :param fig_id: One of fig1 ... fig6.
    :param outdir: Output directory, created if missing.
    :param n: Optional grid count overriding the defaults.
    :return: The manifest dict.
    """
    jobs = figure_jobs(fig_id)
    if n is not None and n < 2:
        raise DomainError("Grid count must be >= 2, got {}".format(n))
    if not os.path.isdir(outdir):
        os.makedirs(outdir)
    written = []
    try:
        for job in jobs:
            path = os.path.join(outdir, job.fname)
            written.append(path)
            logger.info("Writing %s", path)
            _write_job(job, path, n, rel_tol, threads)
    except Exception:
        remove_outputs(written)
        raise

    manifest = {'figure': fig_id, 'files': [job.entry() for job in jobs],
                'grid_count': n, 'rel_tol': rel_tol, 'notes': []}
    if fig_id in ('fig5', 'fig6'):
        manifest['notes'].append(CAPTION_NOTE)
    if fig_id in ('fig1', 'fig3', 'fig5'):
        manifest['notes'].append("Intensity grids are shifted by z^2/4 at each plane; "
                                 "slices use the fixed grid.")
    elif fig_id != 'fig2':
        manifest['notes'].append("Slices use the fixed grid at every plane.")
    if fig_id not in ('fig1', 'fig2'):
        manifest['notes'].append("*_shifted files carry the z = 0 curve moved by z^2/4; "
                                 "coherent files carry the ideal Airy beam.")
    write_manifest(outdir, manifest)
    return manifest


def write_manifest(outdir, manifest):
    """:return: The manifest file name."""
    fname = os.path.join(outdir, MANIFEST)
    with open(fname, 'w') as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write('\n')
    return fname
