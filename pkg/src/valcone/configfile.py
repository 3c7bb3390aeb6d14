# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.
"""configfile: read and write configuration files.

A configuration file is a JSON object:

    {
      "format": "1.0",
      "delta": 2,
      "point_kind": "general",
      "points": [{}, {}, {"satellite_of": 1}],
      "incidences": {"f1": 1, "m0": 0, "m1": 3}
    }

"format" is optional (1.0 is assumed). "point_kind" is omitted exactly
when delta is 0. In "incidences", f1 defaults to 1, m0 to 0, and m1 to
delta+1 when the valuation is non-special (0 otherwise). Unknown keys are
errors.

Public functions:

parse_configuration() -- a JSON object to a Configuration
serialize_configuration() -- a Configuration to a JSON object
load_configuration() -- read a file
write_configuration() -- write a file
dump_json() -- the JSON text valcone writes everywhere
seed_from_environment() -- the VALCONE_SEED fallback
"""

import json
import logging
import os

from packaging.version import InvalidVersion, Version

from valcone import valuation_core
from valcone.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

FORMAT_VERSION = Version('1.0')
FORMAT_LIMIT = Version('2')

TOP_KEYS = ('format', 'delta', 'point_kind', 'points', 'incidences')
POINT_KEYS = ('satellite_of',)
INCIDENCE_KEYS = ('f1', 'm0', 'm1')

SEED_VARIABLE = 'VALCONE_SEED'
DEFAULT_SEED = 1


def _is_int(val):
    return isinstance(val, int) and not isinstance(val, bool)


def _unknown(obj, allowed, where):
    return [('E_RANGE', 'unknown key "' + key + '" in ' + where)
            for key in sorted(obj) if key not in allowed]


def parse_configuration(obj):
    """parse_configuration(obj) -> Configuration

    Check a decoded JSON object and build the Configuration. Format
    problems are E_RANGE; the rules of validate_configuration() apply to
    the rest. Everything wrong is reported in one ConfigurationError.
    """
    if not isinstance(obj, dict):
        raise ConfigurationError([('E_RANGE', 'a configuration is a JSON object')])
    bad = _unknown(obj, TOP_KEYS, 'configuration')

    val = obj.get('format')
    if val is not None:
        try:
            vers = Version(str(val))
            if vers >= FORMAT_LIMIT:
                bad.append(('E_RANGE', 'format ' + str(val) + ' is newer than this program reads'))
        except InvalidVersion:
            bad.append(('E_RANGE', 'format is not a version number: ' + repr(val)))

    delta = obj.get('delta')
    if not _is_int(delta):
        bad.append(('E_RANGE', 'delta must be an integer'))

    point_kind = obj.get('point_kind')
    if point_kind is not None and point_kind not in (valuation_core.SPECIAL, valuation_core.GENERAL):
        bad.append(('E_RANGE', 'point_kind must be "special" or "general"'))

    satellites = []
    points = obj.get('points')
    if not isinstance(points, list):
        bad.append(('E_RANGE', 'points must be a list'))
        points = []
    for (pos, entry) in enumerate(points):
        where = 'point ' + str(pos + 1)
        if not isinstance(entry, dict):
            bad.append(('E_RANGE', where + ' must be an object'))
            satellites.append(None)
            continue
        bad.extend(_unknown(entry, POINT_KEYS, where))
        target = entry.get('satellite_of')
        if target is not None and not _is_int(target):
            bad.append(('E_RANGE', where + ': satellite_of must be an integer'))
            target = None
        satellites.append(target)

    incidences = obj.get('incidences', {})
    if not isinstance(incidences, dict):
        bad.append(('E_RANGE', 'incidences must be an object'))
        incidences = {}
    bad.extend(_unknown(incidences, INCIDENCE_KEYS, 'incidences'))
    for key in INCIDENCE_KEYS:
        if key in incidences and not _is_int(incidences[key]):
            bad.append(('E_RANGE', 'incidence ' + key + ' must be an integer'))

    if bad:
        raise ConfigurationError(bad)

    return valuation_core.validate_configuration(
        delta, point_kind, satellites,
        i_F1=incidences.get('f1', 1),
        i_M0=incidences.get('m0', 0),
        i_M1=incidences.get('m1'))


def serialize_configuration(cfg):
    """serialize_configuration(cfg) -> dict

    The JSON object parse_configuration() turns back into cfg. All three
    incidences are written out.
    """
    res = {
        'format': str(FORMAT_VERSION),
        'delta': cfg.delta,
        'points': [({} if target is None else {'satellite_of': target})
                   for target in cfg.satellites],
        'incidences': {'f1': cfg.i_F1, 'm0': cfg.i_M0, 'm1': cfg.i_M1},
    }
    if cfg.kind != valuation_core.NONE:
        res['point_kind'] = cfg.kind
    return res


def dump_json(obj):
    """dump_json(obj) -> str

    Sorted keys, two-space indent.
    """
    return json.dumps(obj, sort_keys=True, indent=2)


def load_configuration(path):
    """load_configuration(path) -> Configuration

    Read and check a configuration file. Unreadable JSON is reported as
    E_PARSE.
    """
    try:
        with open(path, 'r') as fl:
            obj = json.load(fl)
    except json.JSONDecodeError as ex:
        raise ConfigurationError([('E_PARSE', path + ': ' + str(ex))])
    cfg = parse_configuration(obj)
    logger.info('loaded %s: %d points', path, cfg.n)
    return cfg


def write_configuration(cfg, path):
    """write_configuration(cfg, path) -> None
    """
    with open(path, 'w') as fl:
        fl.write(dump_json(serialize_configuration(cfg)))
        fl.write('\n')


def seed_from_environment(seed=None):
    """seed_from_environment(seed=None) -> int

    The seed itself if given, else $VALCONE_SEED, else DEFAULT_SEED.
    """
    if seed is not None:
        return seed
    val = os.environ.get(SEED_VARIABLE)
    if not val:
        return DEFAULT_SEED
    try:
        return int(val)
    except ValueError:
        raise ConfigurationError([('E_RANGE', SEED_VARIABLE + ' must be an integer: ' + val)])
