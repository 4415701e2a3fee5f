"""
Command line driver: every command writes one CSV plus a JSON sidecar,
the figure command a bundle of CSVs plus a manifest.

Exit codes: 0 success, 2 usage or validation error, 3 numerical failure.
"""
import argparse
import logging
import os
import sys
import time

import numpy as np

import aircoh
from aircoh import constants as cst
from aircoh.beam import OverlapReport, TypeIBeam, TypeIIBeam
from aircoh.coherence import GaugeBeam, GaugeParams, InfiniteBeam
from aircoh.config import RunConfig
from aircoh.errors import (ConvergenceError, DomainError, GridEvaluationError, LandmarkError,
                           UndefinedValueError)
from aircoh.figures import run_figure, write_manifest
from aircoh.grid import (GridSpec, antidiagonal_slice, density_map, eval_profile,
                         intensity_profile, landmark_metrics, lobe_contrast, parallel_map,
                         shifted_slice)
from aircoh.specfun import airy_ai
from aircoh.util import parse_boolean, remove_outputs, setup_logging, write_csv, write_sidecar

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

COMMAND_DEFAULTS = {
    'density': {'x_from': cst.DENSITY_GRID[0], 'x_to': cst.DENSITY_GRID[1],
                'n': cst.DENSITY_GRID[2]},
    'overlap': {'family': 'type1'},
    'power': {'family': 'type1'},
    'figure': {'n': None},
}

HEADLINE_OVERLAPS = {'exp(-1/4)': float(np.exp(-0.25)), 'exp(-1)': float(np.exp(-1.))}


def _add_beam_arguments(parser):
    parser.add_argument('--family', help='Beam family: infinite, type1, type2 or gauge')
    parser.add_argument('--sigma', type=float, help='Displacement spread (infinite, gauge)')
    parser.add_argument('--alpha', type=float, help='Type-I spread')
    parser.add_argument('--beta', type=float, help='Type-I correlation')
    parser.add_argument('--a', type=float, help='Type-II intermediate width')
    parser.add_argument('--b', type=float, help='Type-II transfer width')
    parser.add_argument('--f-amp', dest='f_amp', type=float, help='Gauge amplitude')
    parser.add_argument('--f-width', dest='f_width', type=float, help='Gauge width')


def _add_x_grid(parser):
    parser.add_argument('--from', dest='x_from', type=float, help='First x')
    parser.add_argument('--to', dest='x_to', type=float, help='Last x')
    parser.add_argument('--n', type=int, help='Number of x samples')


def _add_z_grid(parser):
    parser.add_argument('--z-from', dest='z_from', type=float, help='First z')
    parser.add_argument('--z-to', dest='z_to', type=float, help='Last z')
    parser.add_argument('--z-n', dest='z_n', type=int, help='Number of z samples')


def parse_input(args):
    """
    Parse the command line and return a dict of all given parameters.

    Options left out are None so that config file and defaults apply.

    :param args: Argument list without the program name.
    :return: dict
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='Config file of key = value lines')
    common.add_argument('--output', help='Output CSV file')
    common.add_argument('--threads', type=int,
                        help='Worker threads (default: $AIRCOH_THREADS, else CPU count)')
    common.add_argument('--rel-tol', dest='rel_tol', type=float,
                        help='Relative quadrature tolerance')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for info, -vv for debug output')

    parser = argparse.ArgumentParser(prog='aircoh',
                                     description='Partially coherent Airy beam datasets')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    sub = subparsers.add_parser('airy', parents=[common], help='Ai(x) on a grid')
    _add_x_grid(sub)

    for name, text in [('intensity', 'I(x, z) profile'),
                       ('csd-slice', 'W0(x, -x, z) amplitude slice'),
                       ('density', 'Re W0(x, x\', z) density map'),
                       ('flow', 'Flow components (jx, jz)')]:
        sub = subparsers.add_parser(name, parents=[common], help=text)
        _add_beam_arguments(sub)
        _add_x_grid(sub)
        sub.add_argument('--z', type=float, help='Propagation distance')
        if name == 'csd-slice':
            sub.add_argument('--shifted', type=parse_boolean, nargs='?', const=True,
                             help='Sample the z = 0 slice carried along the parabola')
        if name == 'flow':
            sub.add_argument('--derivative', type=parse_boolean, nargs='?', const=True,
                             help='Finite-difference flow for infinite beams')

    for name, text in [('overlap', 'Overlap with the shifted input'),
                       ('power', 'Total power')]:
        sub = subparsers.add_parser(name, parents=[common], help=text)
        _add_beam_arguments(sub)
        _add_z_grid(sub)

    sub = subparsers.add_parser('landmarks', parents=[common],
                                help='Peak, FWHM and lobe contrast per plane')
    _add_beam_arguments(sub)
    _add_x_grid(sub)
    _add_z_grid(sub)

    sub = subparsers.add_parser('figure', parents=[common], help='Figure dataset bundle')
    sub.add_argument('figure', help='fig1 ... fig6')
    sub.add_argument('--outdir', help='Output directory')
    sub.add_argument('--n', type=int, help='Grid count override')

    # convert argparse to dict
    return vars(parser.parse_args(args))


def build_model(cfg):
    """
    :param cfg: RunConfig
    :return: CSDModel of the configured family.
    """
    if cfg.family in ('infinite', 'gauge') and cfg.sigma > cst.CLI_SIGMA_MAX:
        raise DomainError("sigma must not exceed {}, got {}".format(cst.CLI_SIGMA_MAX, cfg.sigma))
    if cfg.family == 'infinite':
        return InfiniteBeam(sigma=cfg.sigma, rel_tol=cfg.rel_tol)
    if cfg.family == 'type1':
        return TypeIBeam(alpha=cfg.alpha, beta=cfg.beta, rel_tol=cfg.rel_tol)
    if cfg.family == 'type2':
        return TypeIIBeam(a=cfg.a, b=cfg.b, rel_tol=cfg.rel_tol)
    return GaugeBeam(InfiniteBeam(sigma=cfg.sigma, rel_tol=cfg.rel_tol),
                     GaugeParams(cfg.f_amp, cfg.f_width))


def _finite_model(cfg):
    if cfg.family not in ('type1', 'type2'):
        raise DomainError("{} needs a finite-energy family (type1 or type2), got {}".format(
            cfg.command, cfg.family))
    return build_model(cfg)


def _x_grid(cfg, shift=0.):
    return GridSpec(cfg.x_from + shift, cfg.x_to + shift, cfg.n)


def _z_values(cfg):
    return GridSpec(cfg.z_from, cfg.z_to, cfg.z_n).points()


def cmd_airy(cfg):
    table = eval_profile(airy_ai, _x_grid(cfg), name='ai', vectorized=True)
    return table.header(), table.columns(), []


def cmd_intensity(cfg):
    table = intensity_profile(build_model(cfg), _x_grid(cfg), cfg.z, cfg.threads)
    return table.header(), table.columns(), []


def cmd_csd_slice(cfg):
    model = build_model(cfg)
    if cfg.shifted:
        table = shifted_slice(model, _x_grid(cfg), cfg.z, cfg.threads)
        notes = ['W0(x - z^2/4, -x - z^2/4, 0)']
    else:
        table = antidiagonal_slice(model, _x_grid(cfg), cfg.z, cfg.threads)
        notes = ['W0(x, -x, z)']
    return table.header(), table.columns(), notes


def cmd_density(cfg):
    g = _x_grid(cfg)
    table = density_map(build_model(cfg), g, g, cfg.z, cfg.threads)
    return table.header(), table.columns(), []


def cmd_flow(cfg):
    model = build_model(cfg)
    points = _x_grid(cfg).points()
    if cfg.derivative and isinstance(model, InfiniteBeam):
        flow = lambda x: model.flow(x, cfg.z, cst.FD_STEP)
    else:
        flow = lambda x: model.flow(x, cfg.z)
    values = parallel_map(flow, points, cfg.threads)
    rows = np.column_stack([points, np.asarray(values, dtype=np.float64)])
    return ['x', 'jx', 'jz'], rows, []


def cmd_overlap(cfg):
    model = _finite_model(cfg)
    reports = parallel_map(model.overlap_report, _z_values(cfg), cfg.threads)
    notes = []
    if cfg.family == 'type2':
        winners = sorted(set(r.winner for r in reports if r.z != 0))
        verdict = winners[0] if len(winners) == 1 else 'inconsistent'
        notes.append('adjudication: {}'.format(verdict))
        notes.append('headline overlaps: {}'.format(HEADLINE_OVERLAPS))
    return list(OverlapReport.columns), [r.as_row() for r in reports], notes


def cmd_power(cfg):
    model = _finite_model(cfg)
    closed = model.power_closed()
    z_values = _z_values(cfg)
    powers = parallel_map(model.power, z_values, cfg.threads)
    rows = [[z, p, closed] for z, p in zip(z_values, powers)]
    return ['z', 'power', 'power_closed'], rows, []


def cmd_landmarks(cfg):
    model = build_model(cfg)
    rows = []
    for z in _z_values(cfg):
        table = intensity_profile(model, _x_grid(cfg, 0.25 * z * z), z, cfg.threads)
        peak_x, peak_val, fwhm = landmark_metrics(table)
        rows.append([z, peak_x, peak_val, fwhm, lobe_contrast(table)])
    notes = ['x grid shifted by z^2/4 at each plane']
    return ['z', 'peak_x', 'peak_val', 'fwhm', 'lobe_contrast'], rows, notes


HANDLERS = {
    'airy': cmd_airy,
    'intensity': cmd_intensity,
    'csd-slice': cmd_csd_slice,
    'density': cmd_density,
    'flow': cmd_flow,
    'overlap': cmd_overlap,
    'power': cmd_power,
    'landmarks': cmd_landmarks,
}


def sidecar_record(cfg, wall_time, notes):
    return {
        'schema_version': cst.SIDECAR_SCHEMA_VERSION,
        'aircoh_version': aircoh.__version__,
        'command': cfg.command,
        'config': cfg.as_dict(),
        'tolerances': {'rel_tol': cfg.rel_tol, 'abs_floor': cst.ABS_FLOOR,
                       'max_panels': cst.MAX_PANELS, 'n_sigmas': cst.N_SIGMAS},
        'wall_time': wall_time,
        'notes': list(notes),
    }


def run(cfg, start, written):
    """Execute one configured command, appending every file it creates to written."""
    if cfg.command == 'figure':
        manifest = run_figure(cfg.figure, cfg.outdir, cfg.n, cfg.rel_tol, cfg.threads)
        written.extend(os.path.join(cfg.outdir, entry['file']) for entry in manifest['files'])
        manifest.update(sidecar_record(cfg, time.time() - start, manifest['notes']))
        written.append(write_manifest(cfg.outdir, manifest))
        return

    header, rows, notes = HANDLERS[cfg.command](cfg)
    output = cfg.output or os.path.join(cfg.outdir, cfg.command + '.csv')
    written.append(output)
    write_csv(output, header, rows)
    end = time.time()
    written.append(write_sidecar(output, sidecar_record(cfg, end - start, notes)))
    logger.info("Wrote %s", output)


def main(argv=None):
    """
    Entry point of the aircoh script.

    :param argv: Argument list without the program name; defaults to sys.argv[1:].
    :return: Exit code.
    """
    if argv is None:
        argv = sys.argv[1:]
    try:
        parameters = parse_input(argv)
    except SystemExit as e:
        return e.code

    setup_logging(parameters.pop('verbose'))
    configfile = parameters.pop('config')
    start = time.time()
    written = []
    try:
        cfg = RunConfig.from_sources(parameters, configfile,
                                     COMMAND_DEFAULTS.get(parameters['command']))
        logger.debug("%r", cfg)
        run(cfg, start, written)
    except (ConvergenceError, UndefinedValueError, LandmarkError) as e:
        logger.error("Numerical failure: %s", e)
        remove_outputs(written)
        return EXIT_NUMERICAL
    except GridEvaluationError as e:
        logger.error("%s", e)
        remove_outputs(written)
        return EXIT_NUMERICAL if e.is_numerical else EXIT_USAGE
    except (DomainError, TypeError, ValueError, OSError) as e:
        logger.error("%s", e)
        remove_outputs(written)
        return EXIT_USAGE

    end = time.time()
    logger.info("Finished: %.3f seconds.", end - start)
    return EXIT_OK
