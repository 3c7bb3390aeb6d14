# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.
"""valuation_core: configurations of infinitely near points on a
Hirzebruch surface, and the proximity combinatorics they carry.

A configuration is the ordered list p_1 ... p_n of points blown up, each
p_{i+1} lying on the exceptional divisor E_i of the previous blow-up. It
is described purely combinatorially: the integer delta of the surface
F_delta, the kind of the first point, which points are satellite (and to
which earlier point), and how far the distinguished curves F_1, M_0 and
M_1 follow the configuration. Indices are 1-based throughout.

Classes:

CurveIncidences -- how far F_1, M_0, M_1 pass through the points
Configuration -- a validated configuration
DualGraph -- the dual graph of the exceptional divisors

Public functions:

validate_configuration() -- check a description and build a Configuration
proximity_matrix() -- the proximity matrix P
multiplicity_vector() -- multiplicities of the curvette at E_i
point_kind() -- free or satellite
leading_free_run() -- the length of the initial run of free points
nonspecial_shape() -- whether the combinatorial non-speciality test passes
truncate() -- the configuration of the sub-valuation nu_i
dual_graph() -- the dual graph, computed from the lattice pairing
"""

import functools
import logging
from dataclasses import dataclass

import sympy

from valcone.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

SPECIAL = 'special'
GENERAL = 'general'
NONE = 'none'
POINT_KINDS = (SPECIAL, GENERAL, NONE)

FREE = 'free'
SATELLITE = 'satellite'


@dataclass(frozen=True)
class CurveIncidences:
    """CurveIncidences: the last point of the configuration through which
    each distinguished curve passes.

    i_F1 -- F_1, the fiber through p; always at least 1.
    i_M0 -- M_0, the special section; 0 when M_0 misses p.
    i_M1 -- M_1, the negative section of |M| through p; 0 when absent.
    """

    i_F1: int = 1
    i_M0: int = 0
    i_M1: int = 0


@dataclass(frozen=True)
class Configuration:
    """Configuration: a validated configuration of infinitely near points.

    Do not build these directly; use validate_configuration(), which
    checks every rule.

    Fields:

    delta -- the integer delta of the Hirzebruch surface F_delta
    kind -- SPECIAL, GENERAL or NONE (NONE exactly when delta is 0)
    satellites -- tuple of length n; entry i-1 is the index j with p_i
        proximate to p_j (j < i-1), or None when p_i is free
    incidences -- a CurveIncidences
    """

    delta: int
    kind: str
    satellites: tuple
    incidences: CurveIncidences

    @property
    def n(self):
        return len(self.satellites)

    @property
    def i_F1(self):
        return self.incidences.i_F1

    @property
    def i_M0(self):
        return self.incidences.i_M0

    @property
    def i_M1(self):
        return self.incidences.i_M1

    def satellite_of(self, i):
        """satellite_of(i) -> int or None

        The deeper point p_i is proximate to, if p_i is satellite.
        """
        return self.satellites[i - 1]

    def is_satellite(self, i):
        return self.satellites[i - 1] is not None

    def proximate(self, i, j):
        """proximate(i, j) -> bool

        Whether p_i is proximate to p_j.
        """
        if i <= j:
            return False
        return j == i - 1 or self.satellites[i - 1] == j

    def proximate_to(self, j):
        """proximate_to(j) -> list of int

        The indices of the points proximate to p_j, in increasing order.
        """
        return [i for i in range(j + 1, self.n + 1) if self.proximate(i, j)]

    def description(self):
        """description() -> dict

        The keyword arguments which validate_configuration() turns back
        into this configuration.
        """
        return {
            'delta': self.delta,
            'point_kind': self.kind,
            'satellites': list(self.satellites),
            'i_F1': self.i_F1,
            'i_M0': self.i_M0,
            'i_M1': self.i_M1,
        }


def _free_run(satellites):
    count = 0
    for val in satellites:
        if val is not None:
            break
        count += 1
    return count


def nonspecial_shape(delta, kind, i_F1, free_run):
    """nonspecial_shape(delta, kind, i_F1, free_run) -> bool

    The combinatorial non-speciality test: a general point on F_delta with
    delta >= 1, F_1 not passing through p_2, and p_1 ... p_{delta+1} all
    free. Every other valuation is special.
    """
    return (delta >= 1 and kind == GENERAL and i_F1 == 1
            and free_run >= delta + 1)


def validate_configuration(delta, point_kind, satellites, i_F1=1, i_M0=0, i_M1=None):
    """validate_configuration(delta, point_kind, satellites, i_F1=1, i_M0=0,
        i_M1=None) -> Configuration

    Check a configuration description and return the Configuration. The
    satellites argument is a list with one entry per point: None for a
    free point, or the index j of the deeper point it is proximate to.

    If i_M1 is None (not given) it defaults to delta+1 when the
    non-speciality conditions hold, and to 0 otherwise.

    Every violated rule is collected; if there are any, this raises a
    ConfigurationError listing them all.
    """

    bad = []

    if not isinstance(delta, int) or isinstance(delta, bool) or delta < 0:
        raise ConfigurationError([('E_RANGE', 'delta must be a nonnegative integer')])

    if point_kind is None:
        point_kind = NONE
    if point_kind not in POINT_KINDS:
        bad.append(('E_RANGE', 'unknown point kind "' + str(point_kind) + '"'))
    elif delta == 0 and point_kind != NONE:
        bad.append(('E_RANGE', 'delta 0 takes no point kind'))
    elif delta >= 1 and point_kind == NONE:
        bad.append(('E_RANGE', 'delta ' + str(delta) + ' needs point kind special or general'))

    satellites = list(satellites)
    n = len(satellites)
    if n < 1:
        raise ConfigurationError(bad + [('E_RANGE', 'at least one point is required')])

    for (pos, target) in enumerate(satellites):
        i = pos + 1
        if target is None:
            continue
        if not isinstance(target, int) or isinstance(target, bool):
            bad.append(('E_RANGE', 'p' + str(i) + ': satellite_of must be an integer'))
            satellites[pos] = None
            continue
        if i == 1:
            bad.append(('E_PROX', 'p1 cannot be satellite'))
            satellites[pos] = None
            continue
        if not (1 <= target <= i - 2):
            bad.append(('E_PROX', 'p' + str(i) + ': satellite target ' + str(target)
                        + ' outside 1..' + str(i - 2)))
            satellites[pos] = None
            continue
        # p_i lies on the strict transform of E_j only if p_{i-1} did.
        if not (target == i - 2 or satellites[i - 2] == target):
            bad.append(('E_PROX', 'p' + str(i) + ': p' + str(i - 1)
                        + ' is not proximate to p' + str(target)))
            satellites[pos] = None

    free_run = _free_run(satellites)

    for (name, val, low) in [('f1', i_F1, 1), ('m0', i_M0, 0)]:
        if not isinstance(val, int) or isinstance(val, bool) or not (low <= val <= n):
            bad.append(('E_RANGE', name + ' must be in ' + str(low) + '..' + str(n)))

    ranges_ok = not bad
    shape = ranges_ok and nonspecial_shape(delta, point_kind, i_F1, free_run)

    if i_M1 is None:
        i_M1 = (delta + 1) if shape else 0
    elif not isinstance(i_M1, int) or isinstance(i_M1, bool) or i_M1 < 0 or i_M1 > n:
        bad.append(('E_RANGE', 'm1 must be in 0..' + str(n)))
        i_M1 = 0
    elif i_M1 != 0 and i_M1 < delta + 1:
        bad.append(('E_RANGE', 'm1 must be 0 or at least delta+1 = ' + str(delta + 1)))
        i_M1 = 0

    if ranges_ok:
        wants_m0 = (delta == 0 or point_kind == SPECIAL)
        if wants_m0 and i_M0 == 0:
            bad.append(('E_INCIDENCE', 'M0 passes through a special point (m0 >= 1)'))
        if not wants_m0 and i_M0 != 0:
            bad.append(('E_INCIDENCE', 'M0 misses a general point (m0 = 0)'))

        if i_M1 and not shape:
            bad.append(('E_INCIDENCE', 'M1 is declared but the valuation is special'))
        if shape and not i_M1:
            bad.append(('E_INCIDENCE', 'M1 is required: the valuation is non-special'))

        extended = [name for (name, val) in [('f1', i_F1), ('m0', i_M0), ('m1', i_M1)] if val > 1]
        if len(extended) > 1:
            bad.append(('E_INCIDENCE', ' and '.join(extended)
                        + ' share points beyond p1'))

        for (name, val) in [('F1', i_F1), ('M0', i_M0), ('M1', i_M1)]:
            for i in range(2, val + 1):
                if satellites[i - 1] is not None:
                    bad.append(('E_SMOOTH', name + ' passes through satellite point p' + str(i)))
                    break

    if bad:
        raise ConfigurationError(bad)

    cfg = Configuration(delta, point_kind, tuple(satellites),
                        CurveIncidences(i_F1, i_M0, i_M1))
    logger.debug('validated configuration: delta=%d kind=%s n=%d', delta, point_kind, n)
    return cfg


def point_kind(cfg, i):
    """point_kind(cfg, i) -> FREE or SATELLITE
    """
    if cfg.is_satellite(i):
        return SATELLITE
    return FREE


def leading_free_run(cfg):
    """leading_free_run(cfg) -> int

    The largest j such that p_1 ... p_j are all free.
    """
    return _free_run(cfg.satellites)


def proximity_matrix(cfg):
    """proximity_matrix(cfg) -> sympy.ImmutableMatrix

    The n-by-n proximity matrix: 1 on the diagonal, -1 at (i,j) when p_i
    is proximate to p_j, 0 elsewhere. (Rows and columns are 0-based here,
    as sympy has them.)
    """
    n = cfg.n

    def entry(row, col):
        if row == col:
            return 1
        if cfg.proximate(row + 1, col + 1):
            return -1
        return 0

    return sympy.ImmutableMatrix(n, n, entry)


@functools.lru_cache(maxsize=4096)
def multiplicity_vector(cfg, i):
    """multiplicity_vector(cfg, i) -> tuple of int

    The multiplicities m_1 ... m_i of a curvette at E_i at the points
    p_1 ... p_i, found by back-substitution of the proximity equalities
    m_j = sum of m_s over the s <= i with p_s proximate to p_j.
    """
    mults = [0] * (i + 1)
    mults[i] = 1
    for j in range(i - 1, 0, -1):
        total = mults[j + 1]
        target = j
        for s in range(j + 2, i + 1):
            if cfg.satellites[s - 1] == target:
                total += mults[s]
        mults[j] = total
    return tuple(mults[1:])


def truncate(cfg, i):
    """truncate(cfg, i) -> Configuration

    The configuration of the sub-valuation nu_i: the points p_1 ... p_i,
    with each incidence cut down to i. M_1 survives only when the
    truncation is still non-special.
    """
    if i == cfg.n:
        return cfg
    satellites = cfg.satellites[:i]
    i_F1 = min(cfg.i_F1, i)
    i_M0 = min(cfg.i_M0, i)
    i_M1 = 0
    if cfg.i_M1 and nonspecial_shape(cfg.delta, cfg.kind, i_F1, _free_run(satellites)):
        i_M1 = min(cfg.i_M1, i)
    return validate_configuration(cfg.delta, cfg.kind, satellites, i_F1, i_M0, i_M1)


class DualGraph:
    """DualGraph: the dual graph of the exceptional divisors E_1 ... E_n.

    DualGraph(n, edges) -- constructor

    Fields:

    n -- the number of vertices (labelled 1 ... n)
    edges -- sorted list of (i, j) pairs with i < j
    """

    def __init__(self, n, edges):
        self.n = n
        self.edges = sorted(edges)

    def __repr__(self):
        return '<DualGraph n=' + str(self.n) + ' ' + repr(self.edges) + '>'

    def degree(self, i):
        return len([edge for edge in self.edges if i in edge])

    def is_tree(self):
        """is_tree() -> bool

        Whether the graph is connected with n-1 edges.
        """
        if len(self.edges) != self.n - 1:
            return False
        seen = {1}
        todo = [1]
        while todo:
            vert = todo.pop()
            for (i, j) in self.edges:
                for (a, b) in [(i, j), (j, i)]:
                    if a == vert and b not in seen:
                        seen.add(b)
                        todo.append(b)
        return len(seen) == self.n

    def to_dot(self):
        """to_dot() -> str

        The graph in DOT form, one vertex or edge per line.
        """
        result = ['graph dual {']
        for i in range(1, self.n + 1):
            result.append('    %d [label="E%d"];' % (i, i))
        for (i, j) in self.edges:
            result.append('    %d -- %d;' % (i, j))
        result.append('}')
        return '\n'.join(result)


def dual_graph(cfg):
    """dual_graph(cfg) -> DualGraph

    Join E_i and E_j exactly when their strict transforms meet, that is,
    when the lattice pairing of their classes is 1.
    """
    from valcone import lattice

    classes = [lattice.exceptional_class(cfg, i) for i in range(1, cfg.n + 1)]
    edges = []
    for i in range(1, cfg.n + 1):
        for j in range(i + 1, cfg.n + 1):
            if lattice.pair(classes[i - 1], classes[j - 1]) == 1:
                edges.append((i, j))
    return DualGraph(cfg.n, edges)
