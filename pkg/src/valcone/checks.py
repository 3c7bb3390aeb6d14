# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.
"""checks: run every consistency check on one configuration.

Each check comes back as pass, fail or skip (not applicable) with a line
of detail. The lattice checks are exact identities; the oracle checks
realize the configuration in coordinates and compare.

Classes:

CheckResult -- the outcome of one check
CheckReport -- all the outcomes

Public functions:

run_checks() -- run them all
"""

import logging
import random

import sympy

from valcone import classify, cones, invariants, lattice, oracle, valuation_core
from valcone.exceptions import ValconeError
from valcone.lattice import pair

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'
SKIP = 'skip'


class CheckResult:
    """CheckResult: one named check and how it went.
    """

    def __init__(self, name, status, detail=''):
        self.name = name
        self.status = status
        self.detail = detail

    def __repr__(self):
        return '<CheckResult ' + self.name + ' ' + self.status + '>'

    def as_json(self):
        return {'name': self.name, 'status': self.status, 'detail': self.detail}


class CheckReport:
    """CheckReport: the list of CheckResults from run_checks().
    """

    def __init__(self, results):
        self.results = list(results)

    def __iter__(self):
        return iter(self.results)

    def get(self, name):
        """get(name) -> CheckResult

        Raises KeyError if no check has this name.
        """
        for res in self.results:
            if res.name == name:
                return res
        raise KeyError(name)

    def failed(self):
        return [res for res in self.results if res.status == FAIL]

    def ok(self):
        return not self.failed()

    def as_json(self):
        return {
            'ok': self.ok(),
            'checks': [res.as_json() for res in self.results],
        }

    def as_text(self):
        width = max(len(res.name) for res in self.results)
        lines = []
        for res in self.results:
            line = res.name.ljust(width) + '  ' + res.status
            if res.detail:
                line += '  ' + res.detail
            lines.append(line)
        return '\n'.join(lines)


class CheckFailed(Exception):
    pass


def _expect(cond, detail):
    if not cond:
        raise CheckFailed(detail)


def check_proximity_equalities(cfg):
    for i in range(1, cfg.n + 1):
        mults = valuation_core.multiplicity_vector(cfg, i)
        _expect(mults[-1] == 1, 'm_' + str(i) + '(phi_' + str(i) + ') is not 1')
        for j in range(1, i):
            total = sum(mults[s - 1] for s in cfg.proximate_to(j) if s <= i)
            _expect(mults[j - 1] == total, 'phi_' + str(i) + ': proximity equality fails at p' + str(j))
    return str(cfg.n) + ' curvettes'


def check_dual_graph(cfg):
    graph = valuation_core.dual_graph(cfg)
    _expect(graph.is_tree(), 'not a tree: ' + repr(graph.edges))
    return str(len(graph.edges)) + ' edges'


def check_mcv_round_trip(cfg):
    mcv = invariants.maximal_contact_values(cfg)
    again = invariants.configuration_from_mcv(cfg.delta, cfg.kind, mcv,
                                              cfg.i_F1, cfg.i_M0, cfg.i_M1)
    _expect(valuation_core.proximity_matrix(again) == valuation_core.proximity_matrix(cfg),
            'proximities differ after the round trip of ' + repr(mcv))
    return ','.join(str(val) for val in mcv.values())


def check_dual_basis(cfg):
    fs = lattice.fstar(cfg)
    ms = lattice.mstar(cfg)
    f1 = lattice.fiber_class(cfg)
    m0 = lattice.special_section_class(cfg)
    exc = [lattice.exceptional_class(cfg, j) for j in range(1, cfg.n + 1)]
    _expect((pair(fs, f1), pair(fs, m0), pair(ms, f1), pair(ms, m0)) == (0, 1, 1, 0),
            'F*, M* are not dual to F1~, M0~')
    for cls in exc:
        _expect(pair(fs, cls) == 0 and pair(ms, cls) == 0, 'F* or M* meets an exceptional curve')
    if cfg.i_M1:
        return 'F*, M* only (non-special)'
    for i in range(1, cfg.n + 1):
        lam = cones.lambda_class(cfg, i)
        _expect(pair(lam, f1) == 0 and pair(lam, m0) == 0, 'Lambda_' + str(i) + ' meets F1~ or M0~')
        for j in range(1, cfg.n + 1):
            _expect(pair(lam, exc[j - 1]) == (1 if i == j else 0),
                    'Lambda_' + str(i) + ' . E' + str(j) + '~ = ' + str(pair(lam, exc[j - 1])))
    return 'Lambda_1 .. Lambda_' + str(cfg.n)


def check_orthogonality(cfg):
    gens = cones.dual_cone_generators(cfg)
    primal = [cls for (lab, cls) in lattice.primal_classes(cfg)]
    for (lab, cls) in gens:
        zeros = [pcls for pcls in primal if pair(cls, pcls) == 0]
        rank = sympy.Matrix([pcls.vector() for pcls in zeros]).rank() if zeros else 0
        _expect(rank == cfg.n + 1, lab + ' is orthogonal to a rank ' + str(rank) + ' set')
    return str(len(gens)) + ' generators'


def _square_family(cfg, name, first, classes):
    """The self-intersection properties along one family X_first ... X_n.
    """
    sq = dict((i, pair(cls, cls)) for (i, cls) in classes)
    limit = max(cfg.i_F1, cfg.i_M0, cfg.i_M1)
    _expect(sq[first] >= 0, name + '_' + str(first) + '^2 = ' + str(sq[first]) + ' < 0')
    for i in range(first + 1, cfg.n + 1):
        if sq[i] >= 0 and cfg.is_satellite(i):
            _expect(sq[i] > 0, name + '_' + str(i) + '^2 = 0 at a satellite point')
        if sq[i] >= 0:
            _expect(sq[i - 1] >= 0, name + '_' + str(i) + '^2 >= 0 but ' + name + '_'
                    + str(i - 1) + '^2 < 0')
            if sq[i - 1] == 0 and i > limit:
                _expect(cfg.is_satellite(i) and not cfg.is_satellite(i - 1),
                        name + '_' + str(i - 1) + '^2 = 0 needs p' + str(i)
                        + ' satellite and p' + str(i - 1) + ' free')


def check_square_properties(cfg):
    delta = cfg.delta
    if not cfg.i_M1:
        _square_family(cfg, 'Lambda', 1,
                      [(i, cones.lambda_class(cfg, i)) for i in range(1, cfg.n + 1)])
        return 'Lambda'

    for i in range(1, delta + 1):
        cls = cones.theta_class(cfg, i)
        _expect(pair(cls, cls) == delta - i, 'Theta_' + str(i) + '^2 is not ' + str(delta - i))
    first = delta + 1
    deltas = [(i, cones.delta_class(cfg, i)) for i in range(first, cfg.n + 1)]
    gammas = [(i, cones.gamma_class(cfg, i)) for i in range(first, cfg.n + 1)]
    _expect(pair(deltas[0][1], deltas[0][1]) == 1, 'Delta_' + str(first) + '^2 is not 1')
    _expect(pair(gammas[0][1], gammas[0][1]) == delta * (delta + 1),
            'Gamma_' + str(first) + '^2 is not ' + str(delta * (delta + 1)))
    _square_family(cfg, 'Delta', first, deltas)
    _square_family(cfg, 'Gamma', first, gammas)
    for k in range(1, delta):
        ups = [(i, cones.upsilon_class(cfg, i, k)) for i in range(first, cfg.n + 1)]
        _expect(pair(ups[0][1], ups[0][1]) == (delta - k) * (delta + 1 - k),
                'Upsilon_' + str(first) + '_' + str(k) + '^2 is not ' + str((delta - k) * (delta + 1 - k)))
        _square_family(cfg, 'Upsilon(k=' + str(k) + ')', first, ups)

    # Delta_i^2 >= 0 forces Gamma_i^2 >= 0 and Upsilon_{i,k}^2 >= 0.
    for (i, cls) in deltas:
        if pair(cls, cls) < 0:
            continue
        gam = cones.gamma_class(cfg, i)
        _expect(pair(gam, gam) >= 0, 'Gamma_' + str(i) + '^2 < 0 while Delta_' + str(i) + '^2 >= 0')
        for k in range(1, delta):
            ups = cones.upsilon_class(cfg, i, k)
            _expect(pair(ups, ups) >= 0, 'Upsilon_' + str(i) + '_' + str(k)
                    + '^2 < 0 while Delta_' + str(i) + '^2 >= 0')
    return 'Theta, Delta, Gamma, Upsilon'


def check_closed_forms(cfg):
    count = 0
    for (lab, cls) in cones.dual_cone_generators(cfg):
        if lab in ('F*', 'M*'):
            continue
        cones.closed_form_self_intersection(cfg, lab)
        count += 1
    return str(count) + ' generators'


def check_sufficient_criteria(cfg):
    if not cfg.i_M1:
        return None
    for i in range(cfg.delta + 1, cfg.n + 1):
        if cones.gamma_sufficient(cfg, i):
            gam = cones.gamma_class(cfg, i)
            _expect(pair(gam, gam) >= 0, 'Gamma_' + str(i) + ' test passes but Gamma^2 < 0')
        for k in range(1, cfg.delta):
            if cones.upsilon_sufficient(cfg, i, k):
                ups = cones.upsilon_class(cfg, i, k)
                _expect(pair(ups, ups) >= 0, 'Upsilon_' + str(i) + '_' + str(k)
                        + ' test passes but Upsilon^2 < 0')
    return 'Gamma, Upsilon'


def check_effectivity(cfg):
    holds = classify.classify_at_infinity(cfg).is_non_positive()
    if cfg.i_M1:
        exprs = cones.nonspecial_effectivity(cfg)
        return (str(len(exprs)) + ' generators effective') if holds else 'identity only'
    for i in range(1, cfg.n + 1):
        (coords, predicted) = cones.effectivity_coordinates(cfg, i)
        _expect(coords == predicted, 'Lambda_' + str(i) + ': coordinates ' + str(coords)
                + ' differ from ' + str(predicted))
        if holds:
            _expect(all(val >= 0 for val in coords), 'Lambda_' + str(i) + ' has a negative coordinate')
    return 'effective' if holds else 'identity only'


def check_m1_expression(cfg):
    if not cfg.i_M1:
        return None
    return str(lattice.m1_expression(cfg))


def check_monotone_truncation(cfg):
    report = classify.classify_at_infinity(cfg)
    if not report.is_non_positive():
        return None
    for sub in classify.sub_valuation_reports(cfg):
        if sub.kind == report.kind:
            _expect(sub.is_non_positive(), 'a truncation of the same kind fails the criterion')
    return 'nu_1 .. nu_' + str(cfg.n)


def _lattice_checks():
    return [
        ('proximity_equalities', check_proximity_equalities),
        ('dual_graph', check_dual_graph),
        ('mcv_round_trip', check_mcv_round_trip),
        ('dual_basis', check_dual_basis),
        ('orthogonality', check_orthogonality),
        ('square_properties', check_square_properties),
        ('closed_forms', check_closed_forms),
        ('sufficient_criteria', check_sufficient_criteria),
        ('effectivity', check_effectivity),
        ('m1_expression', check_m1_expression),
        ('monotone_truncation', check_monotone_truncation),
    ]


def check_axis_values(model):
    got = (oracle.local_value(model, oracle.U), oracle.local_value(model, oracle.V))
    want = oracle.expected_axis_values(model)
    _expect(got == want, 'u, v have values ' + str(got) + ', expected ' + str(want))
    return 'u: ' + str(got[0]) + ', v: ' + str(got[1])


def check_lattice_agreement(model, rng, samples, bound):
    divisor = oracle.criterion_divisor(model)
    for step in range(samples):
        poly = oracle.random_polynomial(rng, bound)
        val = oracle.infinity_value(model, poly)
        cls = oracle.curve_class(model, poly)
        _expect(-val == pair(divisor, cls), 'nu(' + oracle.serialize(poly) + ') = ' + str(val)
                + ' but the lattice gives ' + str(-pair(divisor, cls)))
    return str(samples) + ' polynomials'


def check_soundness(model, seed, samples, bound):
    report = oracle.sample_check(model, samples, bound, seed)
    if report.status == classify.NOT_NON_POSITIVE:
        return None
    if report.counterexamples:
        (poly, val) = report.counterexamples[0]
        raise CheckFailed(str(len(report.counterexamples)) + ' counterexamples, e.g. nu('
                          + oracle.serialize(poly) + ') = ' + str(val))
    return report.status + ', max value ' + str(report.max_value)


def _run(name, func, *args):
    try:
        detail = func(*args)
    except CheckFailed as ex:
        logger.warning('check %s failed: %s', name, ex)
        return CheckResult(name, FAIL, str(ex))
    except ValconeError as ex:
        logger.warning('check %s failed: %s', name, ex)
        return CheckResult(name, FAIL, str(ex))
    if detail is None:
        return CheckResult(name, SKIP, 'not applicable')
    return CheckResult(name, PASS, detail)


def run_checks(cfg, seed=1, samples=10, bound=(3, 3), with_oracle=True):
    """run_checks(cfg, seed=1, samples=10, bound=(3, 3), with_oracle=True)
        -> CheckReport

    The lattice checks, then (unless with_oracle is false) the oracle
    checks on a model realized with the given seed.
    """
    results = [_run(name, func, cfg) for (name, func) in _lattice_checks()]
    if with_oracle:
        try:
            model = oracle.realize_model(cfg, seed)
        except ValconeError as ex:
            results.append(CheckResult('realize_model', FAIL, str(ex)))
        else:
            results.append(CheckResult('realize_model', PASS, model.case))
            rng = random.Random(seed)
            results.append(_run('axis_values', check_axis_values, model))
            results.append(_run('lattice_agreement', check_lattice_agreement,
                                model, rng, samples, bound))
            results.append(_run('soundness', check_soundness, model, seed, samples, bound))
    report = CheckReport(results)
    logger.info('%d checks, %d failed', len(report.results), len(report.failed()))
    return report
