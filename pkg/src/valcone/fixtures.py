# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.
"""fixtures: named configurations, and random ones.

T1 -- delta 1, one special point
CUSP -- delta 1, special point, p_3 satellite to p_1 (the cusp valuation)
FIB5 -- delta 1, five free points at a general point, p_2 on F_1
FREE2 -- delta 1, two free points at a general point (non-special)
EX12 -- delta 2, the non-special valuation with maximal contact values
    15, 51, 262, 786 and M_1 through p_1, p_2, p_3
BND2 -- delta 0, two free points; the criterion holds with equality

random_configuration() draws a valid configuration from a random.Random;
random_nonspecial_configuration() draws a non-special one.
"""

from valcone import invariants, valuation_core
from valcone.valuation_core import GENERAL, SPECIAL, validate_configuration


def t1():
    return validate_configuration(1, SPECIAL, [None], i_F1=1, i_M0=1)


def cusp():
    return validate_configuration(1, SPECIAL, [None, None, 1], i_F1=1, i_M0=1)


def fib5():
    return validate_configuration(1, GENERAL, [None] * 5, i_F1=2, i_M0=0, i_M1=0)


def free2():
    return validate_configuration(1, GENERAL, [None, None], i_F1=1, i_M0=0, i_M1=2)


def ex12():
    mcv = invariants.McvSequence([15, 51, 262, 786])
    return invariants.configuration_from_mcv(2, GENERAL, mcv, i_F1=1, i_M0=0, i_M1=3)


def bnd2():
    return validate_configuration(0, None, [None, None], i_F1=1, i_M0=1)


NAMED = {
    'T1': t1,
    'CUSP': cusp,
    'FIB5': fib5,
    'FREE2': free2,
    'EX12': ex12,
    'BND2': bnd2,
}


def named(name):
    """named(name) -> Configuration

    Raises KeyError for an unknown name.
    """
    return NAMED[name]()


def _satellites(rng, n, satellite_rate, free_head=2):
    res = [None] * min(n, free_head)
    for i in range(len(res) + 1, n + 1):
        if rng.random() >= satellite_rate:
            res.append(None)
            continue
        # p_i may follow p_{i-1} onto the strict transform it lies on,
        # or start a run on E_{i-2}.
        targets = [i - 2]
        if res[i - 2] is not None:
            targets.append(res[i - 2])
        res.append(rng.choice(targets))
    return res


def random_configuration(rng, max_delta=4, max_points=14, satellite_rate=0.4):
    """random_configuration(rng, max_delta=4, max_points=14, satellite_rate=0.4)
        -> Configuration

    A valid configuration with delta <= max_delta and at most max_points
    points. Incidences are drawn among those the validation rules allow:
    at most one of F_1, M_0, M_1 goes beyond p_1, and only along the
    leading free points.
    """
    delta = rng.randint(0, max_delta)
    if delta == 0:
        kind = valuation_core.NONE
    else:
        kind = rng.choice([SPECIAL, GENERAL])
    n = rng.randint(1, max_points)
    satellites = _satellites(rng, n, satellite_rate)
    run = next((pos for (pos, target) in enumerate(satellites) if target is not None), n)

    i_F1 = 1
    i_M0 = 0
    i_M1 = 0
    if delta == 0 or kind == SPECIAL:
        i_M0 = 1
        extend = rng.choice(['f1', 'm0', None])
        if extend == 'f1':
            i_F1 = rng.randint(1, run)
        elif extend == 'm0':
            i_M0 = rng.randint(1, run)
    elif run >= delta + 1 and rng.random() < 0.7:
        i_M1 = rng.randint(delta + 1, run)
    else:
        i_F1 = rng.randint(1, run)
        if i_F1 == 1 and run >= delta + 1:
            i_F1 = 2

    return validate_configuration(delta, kind, satellites, i_F1, i_M0, i_M1)


def random_nonspecial_configuration(rng, max_delta=4, max_points=14, satellite_rate=0.4,
                                    non_positive=False, tries=50):
    """random_nonspecial_configuration(rng, max_delta=4, max_points=14,
        satellite_rate=0.4, non_positive=False, tries=50) -> Configuration

    A non-special configuration: delta >= 1, a general point, p_1 ...
    p_{delta+1} free and M_1 through at least delta+1 of them.

    With non_positive set, draw until the non-positivity criterion
    holds. After tries failures, fall back to the chain of free points
    with M_1 through all of them, where it always holds.
    """
    delta = rng.randint(1, max(1, max_delta))
    top = max(max_points, delta + 1)
    for attempt in range(tries):
        n = rng.randint(delta + 1, top)
        satellites = _satellites(rng, n, satellite_rate, free_head=delta + 1)
        run = next((pos for (pos, target) in enumerate(satellites) if target is not None), n)
        i_M1 = rng.randint(delta + 1, run)
        cfg = validate_configuration(delta, GENERAL, satellites, i_F1=1, i_M0=0, i_M1=i_M1)
        if not non_positive:
            return cfg
        if invariants.criterion_lhs(cfg) >= invariants.volume_inverse(cfg):
            return cfg
    n = rng.randint(delta + 1, top)
    return validate_configuration(delta, GENERAL, [None] * n, i_F1=1, i_M0=0, i_M1=n)
