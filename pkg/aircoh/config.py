"""
Run configuration of the command line driver.

Values come from three layers, later ones winning: built-in defaults, a
plain ``key = value`` config file and command line flags.
"""
import logging
import os

from aircoh import constants as cst
from aircoh.errors import DomainError
from aircoh.util import parse_boolean

logger = logging.getLogger(__name__)

__all__ = ['RunConfig', 'read_configfile', 'resolve_threads']

THREADS_ENV = 'AIRCOH_THREADS'

FAMILIES = ('infinite', 'type1', 'type2', 'gauge')

# key -> (converter, default)
FIELDS = {
    'command': (str, None),
    'family': (str, 'infinite'),
    'sigma': (float, 0.5),
    'alpha': (float, 1.),
    'beta': (float, 0.5),
    'a': (float, 100.),
    'b': (float, 4.),
    'f_amp': (float, 0.05),
    'f_width': (float, 1.),
    'z': (float, 0.),
    'x_from': (float, cst.PROFILE_GRID[0]),
    'x_to': (float, cst.PROFILE_GRID[1]),
    'n': (int, cst.PROFILE_GRID[2]),
    'z_from': (float, 0.),
    'z_to': (float, 8.),
    'z_n': (int, 9),
    'rel_tol': (float, cst.REL_TOL_FIELD),
    'threads': (int, None),
    'output': (str, None),
    'outdir': (str, '.'),
    'figure': (str, None),
    'shifted': (bool, False),
    'derivative': (bool, False),
}


def read_configfile(fname):
    """
    Parse a plain config file.

    Lines starting with '#' or ';' are comments. Keys may use dashes or
    underscores.

    :param fname: Config file name.
    :return: dict of key -> string value
    """
    params = {}
    with open(fname) as f:
        content = f.readlines()
        for line in content:
            if line[0] != '#' and line[0] != ';' and len(line.strip()) > 0:
                tmp = line.replace('=', ' ').split()
                if len(tmp) != 2:
                    raise DomainError("Malformed config line: {!r}".format(line.strip()))
                params[tmp[0].replace('-', '_')] = tmp[1]
    return params


def resolve_threads(threads=None):
    """
    Thread count: the explicit value, else $AIRCOH_THREADS, else the CPU count.
    """
    if threads is None:
        env = os.environ.get(THREADS_ENV)
        if env:
            try:
                threads = int(env)
            except ValueError:
                raise DomainError("{} must be an integer, got {!r}".format(THREADS_ENV, env))
        else:
            threads = os.cpu_count() or 1
    if threads < 1:
        raise DomainError("Thread count must be >= 1, got {}".format(threads))
    return threads


class RunConfig(object):
    """
    Effective parameters of one command.

    :param kwargs: Any of the FIELDS keys; values may be strings from a
        config file and are converted here. Unknown keys raise TypeError.
    """

    def __init__(self, **kwargs):
        unknown = set(kwargs) - set(FIELDS)
        if unknown:
            raise TypeError("Non-understood RunConfig arguments: {}".format(sorted(unknown)))
        for key, (convert, default) in FIELDS.items():
            value = kwargs.get(key, default)
            if value is not None:
                value = self._convert(key, convert, value)
            setattr(self, key, value)
        if self.family not in FAMILIES:
            raise DomainError("Unknown beam family {!r}, expected one of {}".format(
                self.family, FAMILIES))
        self.threads = resolve_threads(self.threads)

    @staticmethod
    def _convert(key, convert, value):
        try:
            if convert is bool:
                return parse_boolean(value)
            return convert(value)
        except ValueError:
            raise DomainError("Cannot read {} = {!r}".format(key, value))

    @classmethod
    def from_sources(cls, flags, configfile=None, defaults=None):
        """
        Merge defaults, the optional config file and flags (None means unset).

        :param flags: dict of parsed command line values.
        :param configfile: Optional config file name.
        :param defaults: Command specific defaults overriding the built-in ones.
        :return: RunConfig
        """
        params = dict(defaults or {})
        if configfile is not None:
            settings = read_configfile(configfile)
            logger.info("Read %d settings from %s", len(settings), configfile)
            params.update(settings)
        params.update({key: value for key, value in flags.items() if value is not None})
        return cls(**params)

    def as_dict(self):
        return {key: getattr(self, key) for key in sorted(FIELDS)}

    def __repr__(self):
        return "RunConfig({})".format(', '.join(
            '{}={!r}'.format(key, value) for key, value in self.as_dict().items()))
