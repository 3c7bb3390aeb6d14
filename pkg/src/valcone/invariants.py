# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.
"""invariants: numerical invariants of a divisorial valuation.

Noether's formula turns intersection multiplicities into sums over the
shared infinitely near points. For a smooth germ through p_1 ... p_last,
the value of the curvette phi_i at it is the sum of m_j(phi_i) over
j <= min(i, last). The values at F_1, M_0 and M_1 are called a, b, c.

The maximal contact values beta_0 ... beta_g, beta_{g+1} describe the
same valuation as its proximity structure; this module converts both
ways.

Classes:

NoetherValues -- a, b, c and the inverse volume
McvSequence -- maximal contact values with their gcd chain

Public functions:

noether_value() -- value of a curvette at a smooth germ
abc_values() -- the NoetherValues of the sub-valuation nu_i
volume_inverse() -- sum of the squared multiplicities
maximal_contact_values() -- the McvSequence of a configuration
multiplicity_sequence() -- the multiplicities forced by an McvSequence
configuration_from_mcv() -- rebuild a configuration from its McvSequence
parse_mcv() -- read comma-separated values
criterion_lhs() -- the left side of the non-positivity criterion
"""

import logging
import math
from dataclasses import dataclass

from valcone import valuation_core
from valcone.exceptions import ConfigurationError, McvError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NoetherValues:
    a: int
    b: int
    c: int
    vol_inverse: int

    def as_json(self):
        return {'a': self.a, 'b': self.b, 'c': self.c, 'vol_inverse': self.vol_inverse}


class McvSequence:
    """McvSequence: the maximal contact values of a divisorial valuation.

    McvSequence(values) -- constructor; the last value is beta_{g+1}

    Fields:

    beta -- tuple beta_0 ... beta_g
    beta_top -- beta_{g+1}, the inverse volume
    g -- the number of characteristic terms
    gcd_chain -- tuple e_0 ... e_g with e_0 = beta_0, e_j = gcd(e_{j-1}, beta_j)
    quotients -- tuple n_1 ... n_g with n_j = e_{j-1} / e_j

    The constructor only checks the shape (at least two positive
    integers); problems() lists the admissibility rules it breaks.
    """

    def __init__(self, values):
        values = list(values)
        if len(values) < 2:
            raise McvError('E_MCV_INVALID', 'at least two values are needed (beta_0 and the inverse volume)')
        for val in values:
            if not isinstance(val, int) or isinstance(val, bool) or val <= 0:
                raise McvError('E_MCV_INVALID', 'values must be positive integers: ' + repr(val))
        self.beta = tuple(values[:-1])
        self.beta_top = values[-1]
        self.g = len(self.beta) - 1

        chain = [self.beta[0]]
        for val in self.beta[1:]:
            chain.append(math.gcd(chain[-1], val))
        self.gcd_chain = tuple(chain)
        self.quotients = tuple(chain[j - 1] // chain[j] for j in range(1, len(chain)))

    def __eq__(self, other):
        if not isinstance(other, McvSequence):
            return NotImplemented
        return self.values() == other.values()

    def __hash__(self):
        return hash(self.values())

    def __repr__(self):
        return '<McvSequence ' + ','.join(str(val) for val in self.values()) + '>'

    def values(self):
        """values() -> tuple

        beta_0 ... beta_g followed by beta_{g+1}.
        """
        return self.beta + (self.beta_top,)

    def problems(self):
        """problems() -> list of str

        The admissibility rules this sequence breaks, apart from the
        lower bound on beta_{g+1} (which needs the block expansion).
        """
        res = []
        beta = self.beta
        chain = self.gcd_chain
        for j in range(1, len(beta)):
            if beta[j] <= beta[j - 1]:
                res.append('beta_' + str(j) + ' = ' + str(beta[j]) + ' does not exceed beta_'
                           + str(j - 1) + ' = ' + str(beta[j - 1]))
            if chain[j] == chain[j - 1]:
                res.append('e_' + str(j) + ' = ' + str(chain[j]) + ' does not drop')
        if chain[-1] != 1:
            res.append('the gcd chain ends at ' + str(chain[-1]) + ', not 1')
        for j in range(1, self.g):
            if beta[j + 1] <= self.quotients[j - 1] * beta[j]:
                res.append('beta_' + str(j + 1) + ' = ' + str(beta[j + 1]) + ' is not above n_'
                           + str(j) + ' * beta_' + str(j) + ' = '
                           + str(self.quotients[j - 1] * beta[j]))
        return res

    def characteristic_exponents(self):
        """characteristic_exponents() -> tuple

        beta'_1 ... beta'_g, from beta'_1 = beta_1 and
        beta'_{q+1} = beta_{q+1} - n_q beta_q + beta'_q.
        """
        if self.g == 0:
            return ()
        res = [self.beta[1]]
        for q in range(1, self.g):
            res.append(self.beta[q + 1] - self.quotients[q - 1] * self.beta[q] + res[-1])
        return tuple(res)

    def as_json(self):
        return list(self.values())


def parse_mcv(val):
    """parse_mcv(val) -> McvSequence

    Read a comma-separated list such as "15,51,262,786".
    """
    try:
        values = [int(part) for part in val.split(',') if part.strip()]
    except ValueError:
        raise McvError('E_MCV_INVALID', 'not a list of integers: "' + val + '"')
    return McvSequence(values)


def noether_value(cfg, i, last):
    """noether_value(cfg, i, last) -> int

    The intersection multiplicity of the curvette phi_i with a smooth germ
    passing through p_1 ... p_last (none when last is 0).
    """
    mults = valuation_core.multiplicity_vector(cfg, i)
    return sum(mults[:min(i, last)])


def abc_values(cfg, i=None):
    """abc_values(cfg, i=None) -> NoetherValues

    a_i, b_i, c_i (values of phi_i at M_0, F_1, M_1) and the inverse
    volume of nu_i. The default is i = n.
    """
    if i is None:
        i = cfg.n
    mults = valuation_core.multiplicity_vector(cfg, i)
    return NoetherValues(
        a=noether_value(cfg, i, cfg.i_M0),
        b=noether_value(cfg, i, cfg.i_F1),
        c=noether_value(cfg, i, cfg.i_M1),
        vol_inverse=sum(val * val for val in mults),
    )


def volume_inverse(cfg):
    """volume_inverse(cfg) -> int
    """
    return sum(val * val for val in valuation_core.multiplicity_vector(cfg, cfg.n))


def _satellite_runs(cfg):
    """The first index of each maximal run of consecutive satellite points.
    """
    starts = []
    for i in range(2, cfg.n + 1):
        if cfg.is_satellite(i) and not cfg.is_satellite(i - 1):
            starts.append(i)
    return starts


def maximal_contact_values(cfg):
    """maximal_contact_values(cfg) -> McvSequence

    beta_0 is the multiplicity at p_1; each run of satellite points
    starting at s contributes the value of the curvette at E_{s-1};
    beta_{g+1} is the inverse volume.
    """
    mults = valuation_core.multiplicity_vector(cfg, cfg.n)
    values = [mults[0]]
    for start in _satellite_runs(cfg):
        other = valuation_core.multiplicity_vector(cfg, start - 1)
        values.append(sum(a * b for (a, b) in zip(mults, other)))
    values.append(sum(val * val for val in mults))

    mcv = McvSequence(values)
    problems = mcv.problems()
    if problems:
        raise McvError('E_MCV', 'inconsistent maximal contact values ' + repr(mcv) + ': '
                       + '; '.join(problems))
    return mcv


def _euclid(num, den, out):
    while den:
        (quot, rem) = divmod(num, den)
        out.extend([den] * quot)
        (num, den) = (den, rem)


def multiplicity_sequence(mcv):
    """multiplicity_sequence(mcv) -> tuple of int

    The multiplicities m_1 ... m_n of the curvette at the last point:
    the Euclidean algorithm on each characteristic pair, then free points
    of multiplicity 1 until the squares add up to beta_{g+1}.
    """
    problems = mcv.problems()
    if problems:
        raise McvError('E_MCV_INVALID', repr(mcv) + ': ' + '; '.join(problems))

    out = []
    exps = mcv.characteristic_exponents()
    prev = 0
    for q in range(1, mcv.g + 1):
        _euclid(exps[q - 1] - prev, mcv.gcd_chain[q - 1], out)
        prev = exps[q - 1]

    total = sum(val * val for val in out)
    if mcv.beta_top < total:
        raise McvError('E_MCV_INVALID', 'beta_' + str(mcv.g + 1) + ' = ' + str(mcv.beta_top)
                       + ' is below ' + str(total) + ', the sum over the characteristic blocks')
    out.extend([1] * (mcv.beta_top - total))
    return tuple(out)


def _proximities(mults):
    """Solve the proximity equalities greedily: the points proximate to
    p_j are p_{j+1}, p_{j+2}, ... up to the first partial sum equal to m_j.
    """
    n = len(mults)
    satellites = [None] * n
    for j in range(1, n):
        total = 0
        s = j + 1
        while True:
            if s > n:
                raise McvError('E_MCV_INVALID', 'multiplicity ' + str(mults[j - 1]) + ' at p'
                               + str(j) + ' is not a sum of later ones')
            total += mults[s - 1]
            if s > j + 1:
                if satellites[s - 1] is not None:
                    raise McvError('E_MCV_INVALID', 'p' + str(s) + ' would be satellite twice')
                satellites[s - 1] = j
            if total == mults[j - 1]:
                break
            if total > mults[j - 1]:
                raise McvError('E_MCV_INVALID', 'proximity equality fails at p' + str(j))
            s += 1
    if mults[-1] != 1:
        raise McvError('E_MCV_INVALID', 'the last multiplicity must be 1')
    return satellites


def configuration_from_mcv(delta, point_kind, mcv, i_F1=1, i_M0=0, i_M1=None):
    """configuration_from_mcv(delta, point_kind, mcv, i_F1=1, i_M0=0, i_M1=None)
        -> Configuration

    Rebuild the configuration with the given maximal contact values and
    incidences. The result is checked by recomputing its maximal contact
    values and multiplicities.
    """
    mults = multiplicity_sequence(mcv)
    satellites = _proximities(mults)
    try:
        cfg = valuation_core.validate_configuration(delta, point_kind, satellites,
                                                    i_F1, i_M0, i_M1)
    except ConfigurationError as ex:
        raise ConfigurationError([('E_INCIDENCE', 'incidences do not fit the configuration')]
                                 + ex.violations)

    if valuation_core.multiplicity_vector(cfg, cfg.n) != mults:
        raise McvError('E_MCV_INVALID', repr(mcv) + ' does not round-trip (multiplicities)')
    try:
        again = maximal_contact_values(cfg)
    except McvError as ex:
        raise McvError('E_MCV_INVALID', repr(mcv) + ' does not round-trip: ' + ex.detail)
    if again != mcv:
        raise McvError('E_MCV_INVALID', repr(mcv) + ' does not round-trip (got ' + repr(again) + ')')
    logger.info('rebuilt %d points from %r', cfg.n, mcv)
    return cfg


def criterion_lhs(cfg, i=None):
    """criterion_lhs(cfg, i=None) -> int

    The left side of the non-positivity criterion for nu_i:
    2 a_i b_i + delta b_i^2 for a special valuation, and
    2 c_i b_i - delta b_i^2 for a non-special one.
    """
    vals = abc_values(cfg, i)
    delta = cfg.delta
    if cfg.i_M1:
        return 2 * vals.c * vals.b - delta * vals.b * vals.b
    return 2 * vals.a * vals.b + delta * vals.b * vals.b
