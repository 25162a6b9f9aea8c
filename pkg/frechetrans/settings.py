"""Library global settings."""
import configparser
import logging
import os

import frechetrans.errors

TOLERANCE = 1e-9
CHUNK_SIZE = 0
ENGINE = 'chunked'
PRUNE = True
DEBUG_CHECKS = False
LOG_LEVEL = 'WARNING'
BENCH_BUDGET = 600.0

ENGINES = ('chunked', 'naive')

DEFAULTS = {
    'tolerance': '1e-9',
    'chunk_size': '0',
    'engine': 'chunked',
    'prune': 'true',
    'debug_checks': 'false',
    'log_level': 'WARNING',
    'bench_budget': '600'
    }

ENVIRONMENT = {
    'tolerance': 'FRECHET_TOL',
    'chunk_size': 'FRECHET_CHUNK',
    'engine': 'FRECHET_ENGINE',
    'prune': 'FRECHET_PRUNE',
    'debug_checks': 'FRECHET_DEBUG',
    'log_level': 'FRECHET_LOG_LEVEL',
    'bench_budget': 'FRECHET_BENCH_BUDGET'
    }


def _parse_bool(text):
    value = text.strip().lower()
    if value in ('1', 'true', 'yes', 'on'):
        return True
    if value in ('0', 'false', 'no', 'off'):
        return False
    raise ValueError('not a boolean: %r' % (text,))


def load(values):
    """Validate raw settings strings and publish them as module constants.

    Args:
        values (dict): Raw strings keyed like DEFAULTS.

    Raises:
        frechetrans.errors.SettingsError: A value does not parse or is out
            of range.
    """
    # pylint: disable=W0603
    global TOLERANCE, CHUNK_SIZE, ENGINE, PRUNE, DEBUG_CHECKS, LOG_LEVEL
    global BENCH_BUDGET
    try:
        tolerance = float(values['tolerance'])
        chunk_size = int(values['chunk_size'])
        prune = _parse_bool(values['prune'])
        debug_checks = _parse_bool(values['debug_checks'])
        bench_budget = float(values['bench_budget'])
    except ValueError as exc:
        raise frechetrans.errors.SettingsError(
            'invalid setting: %s' % (exc,)) from exc
    engine = values['engine'].strip()
    log_level = values['log_level'].strip().upper()
    if tolerance < 0 or chunk_size < 0 or bench_budget <= 0:
        raise frechetrans.errors.SettingsError('settings out of range')
    if engine not in ENGINES:
        raise frechetrans.errors.SettingsError(
            'unknown engine: %s' % (engine,))
    if not isinstance(logging.getLevelName(log_level), int):
        raise frechetrans.errors.SettingsError(
            'unknown log level: %s' % (log_level,))
    TOLERANCE = tolerance
    CHUNK_SIZE = chunk_size
    ENGINE = engine
    PRUNE = prune
    DEBUG_CHECKS = debug_checks
    LOG_LEVEL = log_level
    BENCH_BUDGET = bench_budget


def read_config(locations=None):
    """Collect raw settings from the first config file found and the
    environment.

    Kwargs:
        locations (sequence): Directories searched for frechetrans.conf.

    Returns:
        dict: Raw strings keyed like DEFAULTS.
    """
    if locations is None:
        locations = (os.curdir, os.path.expanduser("~"), "/etc/frechetrans")
    config = configparser.ConfigParser(DEFAULTS)
    values = dict(DEFAULTS)
    for loc in locations:
        try:
            with open(os.path.join(loc, "frechetrans.conf")) as source:
                config.read_file(source)
        except IOError:
            continue
        if config.has_section('frechetrans'):
            for key in DEFAULTS:
                values[key] = config.get('frechetrans', key)
        break
    for key, var in ENVIRONMENT.items():
        if var in os.environ:
            values[key] = os.environ[var]
    return values


load(read_config())
