# pinj
# SPDX-License-Identifier: MIT
"""Run-time settings.

Defaults live here as module constants. They can be overridden by a TOML file
(`pinj.toml` in the working directory, or the file named by $PINJ_CONFIG,
section [pinj]), then by $PINJ_BUDGET, then by explicit arguments.

>>> Settings().enumeration_budget == ENUMERATION_BUDGET
True
>>> load(environ={'PINJ_BUDGET': '500'}, config_path=None).enumeration_budget
500
"""
import logging
import os
import pathlib

import attr
import toml

logger = logging.getLogger(__name__)

# Desk-scale bound: all of IS_9 (17572114 elements) fits, IS_10 does not.
ENUMERATION_BUDGET = 10**8
TUPLE_BUDGET = 10**8
MC_BLOCK_SIZE = 1 << 14
# Largest |IS_n|**2 for which the sampler precomputes a composition table.
TABLE_LIMIT = 4_000_000

DEFAULT_CONFIG_FILE = 'pinj.toml'


@attr.frozen
class Settings:
    enumeration_budget: int = ENUMERATION_BUDGET
    tuple_budget: int = TUPLE_BUDGET
    mc_block_size: int = MC_BLOCK_SIZE
    table_limit: int = TABLE_LIMIT


def _positive_int(name, value):
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise ValueError(f'{name} must be an integer, got {value!r}')
    if value < 1:
        raise ValueError(f'{name} must be positive, got {value}')
    return value


def _read_file(path):
    data = toml.load(path)
    section = data.get('pinj', {})
    known = {f.name for f in attr.fields(Settings)}
    unknown = set(section) - known
    if unknown:
        logger.warning('ignoring unknown settings in %s: %s',
                       path, ', '.join(sorted(unknown)))
    return {k: _positive_int(k, v) for k, v in section.items() if k in known}


def load(environ=None, config_path=DEFAULT_CONFIG_FILE, **overrides):
    """Resolve the effective settings.

    `overrides` with a None value are ignored so CLI flags can be passed
    through unconditionally.
    """
    if environ is None:
        environ = os.environ
    values = {}

    path = environ.get('PINJ_CONFIG', config_path)
    if path is not None and pathlib.Path(path).is_file():
        logger.debug('reading settings from %s', path)
        values.update(_read_file(path))

    if 'PINJ_BUDGET' in environ:
        values['enumeration_budget'] = _positive_int(
            'PINJ_BUDGET', environ['PINJ_BUDGET'])

    for k, v in overrides.items():
        if v is not None:
            values[k] = _positive_int(k, v)

    return Settings(**values)
