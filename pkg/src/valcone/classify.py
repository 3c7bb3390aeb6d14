# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.
"""classify: special or non-special, and the sign at infinity.

A valuation is non-positive at infinity when the criterion

    2 a_n b_n + delta b_n^2 >= vol^-1      (special)
    2 c_n b_n - delta b_n^2 >= vol^-1      (non-special)

holds, and negative when it holds strictly. Equality is reported as
boundary_non_positive: whether the valuation is then negative depends on
an Iitaka dimension, which is not computed here.

Classes:

ClassificationReport -- the outcome, with the criterion values

Public functions:

is_special() -- special or not, and which clause decided it
classify_at_infinity() -- the full report
nef_pairing_table() -- the nef divisor against the NE(Z) generators
sub_valuation_reports() -- reports for every truncation nu_i
"""

import logging

from valcone import cones, invariants, lattice, valuation_core
from valcone.exceptions import ConeError

logger = logging.getLogger(__name__)

SPECIAL = 'special'
NON_SPECIAL = 'non_special'

NOT_NON_POSITIVE = 'not_non_positive'
NEGATIVE = 'negative'
BOUNDARY = 'boundary_non_positive'

# Clauses of the speciality test.
REASON_DELTA_ZERO = 'delta_zero'
REASON_SPECIAL_POINT = 'special_point'
REASON_FIBER_TANGENT = 'fiber_tangent'
REASON_SHORT_FREE_CHAIN = 'short_free_chain'
REASON_FREE_CHAIN = 'free_chain'


class ClassificationReport:
    """ClassificationReport: the classification of one valuation.

    Fields:

    kind -- SPECIAL or NON_SPECIAL
    reason -- the clause which decided the kind
    lhs -- the left side of the criterion
    vol_inverse -- the inverse volume
    status -- NOT_NON_POSITIVE, NEGATIVE or BOUNDARY
    nef_divisor -- Lambda_n or Delta_n, or None when the criterion fails
    ne_generators -- the NE(Z) GeneratorSet, or None when the criterion fails
    """

    def __init__(self, kind, reason, lhs, vol_inverse, nef_divisor=None, ne_generators=None):
        self.kind = kind
        self.reason = reason
        self.lhs = lhs
        self.vol_inverse = vol_inverse
        if lhs > vol_inverse:
            self.status = NEGATIVE
        elif lhs == vol_inverse:
            self.status = BOUNDARY
        else:
            self.status = NOT_NON_POSITIVE
        self.nef_divisor = nef_divisor
        self.ne_generators = ne_generators

    def __repr__(self):
        return ('<ClassificationReport ' + self.kind + ' ' + self.status + ' '
                + str(self.lhs) + ' vs ' + str(self.vol_inverse) + '>')

    def is_non_positive(self):
        return self.status != NOT_NON_POSITIVE

    def as_json(self):
        res = {
            'kind': self.kind,
            'reason': self.reason,
            'lhs': self.lhs,
            'vol_inverse': self.vol_inverse,
            'status': self.status,
            'nef_divisor': None,
            'ne_generators': None,
        }
        if self.nef_divisor is not None:
            res['nef_divisor'] = self.nef_divisor.as_json()
        if self.ne_generators is not None:
            res['ne_generators'] = self.ne_generators.as_json()
        return res

    def as_text(self):
        """as_text() -> str

        One field per line.
        """
        lines = []
        lines.append('kind: ' + self.kind)
        lines.append('reason: ' + self.reason)
        lines.append('lhs: ' + str(self.lhs))
        lines.append('vol_inverse: ' + str(self.vol_inverse))
        lines.append('status: ' + self.status)
        if self.nef_divisor is not None:
            lines.append('nef_divisor: ' + str(self.nef_divisor))
        if self.ne_generators is not None:
            lines.append('ne_generators: ' + ', '.join(self.ne_generators.labels()))
        return '\n'.join(lines)


def is_special(cfg):
    """is_special(cfg) -> (bool, reason)

    Decide speciality by the combinatorial test: special when delta is
    0, when p is a special point, when p_2 lies on F_1, or when there is
    no run p_1 ... p_j of free points with j >= delta+1.
    """
    if cfg.delta == 0:
        return (True, REASON_DELTA_ZERO)
    if cfg.kind == valuation_core.SPECIAL:
        return (True, REASON_SPECIAL_POINT)
    if cfg.i_F1 >= 2:
        return (True, REASON_FIBER_TANGENT)
    if valuation_core.leading_free_run(cfg) < cfg.delta + 1:
        return (True, REASON_SHORT_FREE_CHAIN)
    return (False, REASON_FREE_CHAIN)


def nef_divisor(cfg):
    """nef_divisor(cfg) -> PicClass

    Lambda_n for a special valuation, Delta_n for a non-special one.
    """
    if cfg.i_M1:
        return cones.delta_class(cfg, cfg.n)
    return cones.lambda_class(cfg, cfg.n)


def classify_at_infinity(cfg):
    """classify_at_infinity(cfg) -> ClassificationReport
    """
    (special, reason) = is_special(cfg)
    lhs = invariants.criterion_lhs(cfg)
    vol = invariants.volume_inverse(cfg)
    report = ClassificationReport(SPECIAL if special else NON_SPECIAL, reason, lhs, vol)
    if report.is_non_positive():
        report.nef_divisor = nef_divisor(cfg)
        report.ne_generators = cones.curve_cone_generators(cfg)
    logger.info('classified: %s (%s), %d vs %d: %s', report.kind, reason, lhs, vol, report.status)
    return report


def nef_pairing_table(cfg):
    """nef_pairing_table(cfg) -> list of (label, int)

    The pairings of the nef divisor with each generator of NE(Z). Raises
    E_NA when the criterion fails, E_NEF if a pairing is negative.
    """
    report = classify_at_infinity(cfg)
    if not report.is_non_positive():
        raise ConeError('E_NA', 'no nef divisor: the criterion fails')
    res = []
    for (lab, cls) in report.ne_generators:
        val = lattice.pair(report.nef_divisor, cls)
        if val < 0:
            raise ConeError('E_NEF', 'nef divisor . ' + lab + ' = ' + str(val))
        res.append((lab, val))
    return res


def sub_valuation_reports(cfg):
    """sub_valuation_reports(cfg) -> list of ClassificationReport

    The reports for nu_1 ... nu_n, in order.
    """
    return [classify_at_infinity(valuation_core.truncate(cfg, i)) for i in range(1, cfg.n + 1)]
