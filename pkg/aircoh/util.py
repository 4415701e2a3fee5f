import json
import logging
import numbers
import os

import numpy as np

from aircoh import constants as cst
from aircoh.errors import DomainError

logger = logging.getLogger(__name__)

__all__ = ['setup_logging', 'check_finite', 'check_range', 'parse_boolean', 'write_csv',
           'write_table', 'write_sidecar', 'remove_outputs']

LOG_FORMAT = '%(asctime)s %(name)s %(levelname)s: %(message)s'


def setup_logging(verbosity=0):
    """
    Configure the root handler for command line use.

    :param verbosity: 0 for warnings only, 1 for info, 2 or more for debug.
    :return: None
    """
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT)
    logging.getLogger('aircoh').setLevel(level)


def check_finite(name, value):
    """
    Raise DomainError unless every element of value is finite.

    :param name: Argument name used in the message.
    :param value: Scalar or array-like.
    :return: value unchanged.
    """
    if isinstance(value, numbers.Number):
        if not np.isfinite(value):
            raise DomainError("{} must be finite, got {}".format(name, value))
        return value
    arr = np.asarray(value)
    if not np.all(np.isfinite(arr)):
        raise DomainError("{} must be finite".format(name))
    return value


def check_range(name, value, lower, upper):
    """Raise DomainError unless lower < value < upper."""
    check_finite(name, value)
    if not lower < value < upper:
        raise DomainError("{} must lie in ({}, {}), got {}".format(
            name, lower, upper, value))
    return value


def parse_boolean(b):
    """
    Handle different possible Boolean types.

    :param b: bool, None or a string such as 'yes', 'false', '1'.
    :return: bool or None
    """
    if b is None:
        return b
    if b is False or b is True:
        return b
    b = b.strip()
    if len(b) < 1:
        raise ValueError('Cannot parse empty string into boolean.')
    b = b[0].lower()
    if b == 't' or b == 'y' or b == '1':
        return True
    if b == 'f' or b == 'n' or b == '0':
        return False
    raise ValueError('Cannot parse string into boolean.')


def write_csv(fname, header, rows):
    """
    Write a table as comma separated text with 17 significant digits.

    :param fname: Output file name.
    :param header: Column names.
    :param rows: 2D array-like, one row per record.
    :return: None
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=np.float64))
    if rows.shape[1] != len(header):
        raise ValueError("{} columns for a header of {}".format(rows.shape[1], len(header)))
    np.savetxt(fname, rows, fmt=cst.CSV_FORMAT, delimiter=',', newline='\n',
               header=','.join(header), comments='')


def write_table(fname, table):
    """Write a FieldTable with its header row."""
    write_csv(fname, table.header(), table.columns())


def sidecar_name(fname):
    return fname + '.json'


def write_sidecar(fname, record):
    """
    Write the JSON metadata sidecar of an output file.

    :param fname: The CSV the sidecar describes.
    :param record: JSON serializable dict.
    :return: The sidecar file name.
    """
    name = sidecar_name(fname)
    with open(name, 'w') as f:
        json.dump(record, f, indent=2, sort_keys=True)
        f.write('\n')
    return name


def remove_outputs(fnames):
    """Delete whichever of fnames exist."""
    for fname in fnames:
        if os.path.exists(fname):
            os.remove(fname)
            logger.info("Removed partial output %s", fname)
