# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.
"""oracle: an independent check of the lattice computations, by direct
blow-up arithmetic.

The configuration is placed in exact rational coordinates (u, v) at p.
The line u = 0 is F_1; v = 0 is M_0 (when p is special or delta is 0),
M_1 (non-special valuations), or the section Y_0 = 0 through p only
(special valuations at a general point). Each following point p_{i+1} is
the origin of one of the two standard charts of the blow-up at p_i:

    chart 1: (u, v) -> (u, u (v + t))     E_i is u = 0
    chart 2: (u, v) -> (u v, v)           E_i is v = 0

Multiplicities of a polynomial at p_1 ... p_n come from successive
strict transforms, and Noether's formula turns them into the value of
the valuation. Functions in the chart at infinity (x, y) are moved to
(u, v) by the chart change for the case at hand.

Classes:

Placement -- how one point was placed
LocalModel -- a realized configuration
Witness -- a polynomial found by witness_search()
NotFound -- the outcome of a search which found nothing
SampleReport -- the outcome of sample_check()

Public functions:

chart_case() -- SS, SG or NS
realize_model() -- place the configuration in coordinates
multiplicity_profile() -- multiplicities of h at p_1 ... p_n
local_value() -- the value of a local polynomial
infinity_value() -- the value of a polynomial in x, y
curve_class() -- the class of the strict transform of {f = 0}
monomial_basis() -- the chart monomials of bidegree (a, b)
interpolate() -- polynomials of bidegree (a, b) through a cluster
witness_search() -- look for a polynomial refuting non-positivity
sample_check() -- evaluate random polynomials against the prediction
"""

import fractions
import functools
import itertools
import logging
import math
import random

import sympy
from sympy import QQ

from valcone import classify, invariants, lattice, valuation_core
from valcone.exceptions import InterpolationError, RealizationError, ValconeError
from valcone.polyparse import INFINITY_RING, LOCAL_RING, U, V, serialize

logger = logging.getLogger(__name__)

CASE_SS = 'SS'
CASE_SG = 'SG'
CASE_NS = 'NS'

POSITIVE = 'positive'
ZERO = 'zero'

DEFAULT_RETRIES = 32
# Free points go in chart 1 at a nonzero parameter in -bound..bound, never in chart 2.
PARAMETER_BOUND = 9


def chart_case(cfg):
    """chart_case(cfg) -> CASE_SS, CASE_SG or CASE_NS
    """
    if cfg.i_M1:
        return CASE_NS
    if cfg.delta == 0 or cfg.kind == valuation_core.SPECIAL:
        return CASE_SS
    return CASE_SG


def _order(g):
    """The multiplicity of g at the origin.
    """
    if not g:
        raise ValconeError('E_RANGE', 'the zero polynomial has no multiplicity')
    return min(sum(monom) for monom in g.itermonoms())


def _blow_up(g, chart, param, power):
    """Transform g to the next chart and divide by the exceptional
    coordinate to the given power.
    """
    if chart == 1:
        moved = g.compose(V, U * (V + param))
        axis = 0
    else:
        moved = g.compose(U, U * V)
        axis = 1
    terms = {}
    for (monom, coeff) in moved.iterterms():
        monom = list(monom)
        monom[axis] -= power
        if monom[axis] < 0:
            raise ValconeError('E_RANGE', 'exceptional divisor divides with multiplicity below '
                               + str(power))
        terms[tuple(monom)] = coeff
    return LOCAL_RING.from_dict(terms)


def _tangent(g):
    """The point of the next exceptional divisor where the strict
    transform of the smooth germ g = 0 passes, as (chart, parameter).
    """
    a = g.get((1, 0), QQ.zero)
    b = g.get((0, 1), QQ.zero)
    if b:
        return (1, -a / b)
    return (2, QQ.zero)


def as_qq(val):
    """as_qq(val) -> QQ element

    Accepts ints, Fractions, QQ elements and strings such as "-3/2".
    """
    if isinstance(val, str):
        try:
            val = fractions.Fraction(val.strip())
        except ValueError:
            raise ValconeError('E_RANGE', 'not a rational number: "' + val + '"')
    return QQ(int(val.numerator), int(val.denominator))


class Placement:
    """Placement: where p_{point} sits on the exceptional divisor of the
    previous point.

    Fields:

    point -- the index of the point placed
    chart -- 1 or 2
    parameter -- a QQ value (0 in chart 2)
    placed -- 'free', 'satellite', 'u' or 'v' (why it sits there)
    """

    def __init__(self, point, chart, parameter, placed):
        self.point = point
        self.chart = chart
        self.parameter = parameter
        self.placed = placed

    def __repr__(self):
        return ('<Placement p' + str(self.point) + ' chart ' + str(self.chart)
                + ' t=' + str(self.parameter) + ' ' + self.placed + '>')

    def as_json(self):
        return {
            'point': self.point,
            'chart': self.chart,
            'parameter': str(self.parameter),
            'placed': self.placed,
        }


class LocalModel:
    """LocalModel: a configuration placed in rational coordinates.

    Fields:

    cfg -- the Configuration
    case -- CASE_SS, CASE_SG or CASE_NS
    placements -- list of Placement for p_2 ... p_n
    seed -- the seed the free parameters were drawn with
    mults -- the multiplicity vector of the curvette at E_n
    """

    def __init__(self, cfg, case, placements, seed=None):
        self.cfg = cfg
        self.case = case
        self.placements = list(placements)
        self.seed = seed
        self.mults = valuation_core.multiplicity_vector(cfg, cfg.n)

    def __repr__(self):
        return '<LocalModel ' + self.case + ' n=' + str(self.cfg.n) + '>'

    def v_germ_last(self):
        """v_germ_last() -> int

        The last point on the germ v = 0.
        """
        if self.case == CASE_NS:
            return self.cfg.i_M1
        if self.case == CASE_SS:
            return self.cfg.i_M0
        return 1

    def parameters(self):
        """parameters() -> dict

        The parameters of the free points, by point index; feeding them
        back to realize_model() reproduces this model.
        """
        return dict((pl.point, pl.parameter) for pl in self.placements if pl.placed == 'free')

    def as_json(self):
        return {
            'chart_case': self.case,
            'seed': self.seed,
            'placements': [pl.as_json() for pl in self.placements],
        }


def _expected_profile(last, n):
    return tuple(1 if i <= last else 0 for i in range(1, n + 1))


def realize_model(cfg, seed=None, parameters=None, retries=DEFAULT_RETRIES):
    """realize_model(cfg, seed=None, parameters=None, retries=DEFAULT_RETRIES)
        -> LocalModel

    Place p_2 ... p_n. Points on F_1, on the v germ, and satellite points
    are forced; free points get the parameter given in the parameters
    dict (by point index) or else a small nonzero integer drawn from
    random.Random(seed), redrawn when it would put the point on a curve
    not declared to pass there.

    Raises RealizationError (E_REALIZE) when the forced placements
    disagree, when a given parameter lands on a tracked curve, or when
    no parameter is found within the retries.
    """
    rng = random.Random(seed)
    parameters = dict(parameters or {})
    case = chart_case(cfg)
    model = LocalModel(cfg, case, [], seed)
    last = {'u': cfg.i_F1, 'v': model.v_germ_last()}

    tracked = {'u': U, 'v': V}
    for i in range(1, cfg.n):
        nxt = i + 1
        through = dict((lab, g) for (lab, g) in tracked.items() if _order(g) >= 1)
        tangents = dict((lab, _tangent(g)) for (lab, g) in through.items())

        required = []
        target = cfg.satellite_of(nxt)
        if target is not None:
            required.append('E' + str(target))
        for germ in ['u', 'v']:
            if nxt <= last[germ]:
                required.append(germ)

        if required:
            missing = [lab for lab in required if lab not in tangents]
            if missing:
                raise RealizationError('E_REALIZE', 'p' + str(nxt) + ' must lie on '
                                       + ', '.join(missing) + ', which misses p' + str(i))
            spots = set(tangents[lab] for lab in required)
            if len(spots) != 1:
                raise RealizationError('E_REALIZE', 'p' + str(nxt) + ': '
                                       + ' and '.join(required) + ' separate at p' + str(i))
            spot = spots.pop()
            placed = 'satellite' if target is not None else required[0]
        else:
            placed = 'free'
            spot = None
            avoid = set(tangents.values())
            if nxt in parameters:
                spot = (1, as_qq(parameters[nxt]))
                if spot in avoid:
                    raise RealizationError('E_REALIZE', 'parameter ' + str(parameters[nxt])
                                           + ' puts p' + str(nxt) + ' on a tracked curve')
            else:
                for attempt in range(retries):
                    val = rng.randint(1, PARAMETER_BOUND) * rng.choice((1, -1))
                    cand = (1, QQ(val))
                    if cand not in avoid:
                        spot = cand
                        break
                    logger.debug('p%d: parameter %d rejected', nxt, val)
                if spot is None:
                    raise RealizationError('E_REALIZE', 'no free parameter for p' + str(nxt)
                                           + ' after ' + str(retries) + ' tries')

        for (lab, tan) in tangents.items():
            if lab not in required and tan == spot:
                raise RealizationError('E_REALIZE', 'p' + str(nxt) + ' would also lie on ' + lab)

        (chart, param) = spot
        model.placements.append(Placement(nxt, chart, param, placed))
        tracked = dict((lab, _blow_up(g, chart, param, _order(g))) for (lab, g) in through.items())
        tracked['E' + str(i)] = U if chart == 1 else V

    for (germ, poly) in [('u', U), ('v', V)]:
        got = multiplicity_profile(model, poly)
        if got != _expected_profile(last[germ], cfg.n):
            raise RealizationError('E_REALIZE', germ + ' germ has profile ' + str(got))
    logger.info('realized %s model with %d placements (seed %s)', case, len(model.placements), seed)
    return model


def multiplicity_profile(model, h):
    """multiplicity_profile(model, h) -> tuple of int

    The multiplicities of the strict transforms of h = 0 at p_1 ... p_n.
    """
    n = model.cfg.n
    res = []
    g = h
    for i in range(1, n + 1):
        if i > 1:
            pl = model.placements[i - 2]
            g = _blow_up(g, pl.chart, pl.parameter, res[-1])
        mult = _order(g)
        res.append(mult)
        if mult == 0:
            res.extend([0] * (n - i))
            break
    return tuple(res)


def local_value(model, h):
    """local_value(model, h) -> int

    The value of the local polynomial h: the sum of m_j(phi_n) times the
    multiplicity of h at p_j.
    """
    return sum(a * b for (a, b) in zip(model.mults, multiplicity_profile(model, h)))


def _to_local(model, f):
    """Write f(x, y) as h(u, v) / (u^A v^B) with A, B minimal.
    Returns (h, A, B, deg_y).
    """
    if not f:
        raise ValconeError('E_RANGE', 'the zero polynomial has no value')
    delta = model.cfg.delta
    terms = list(f.iterterms())
    deg_y = max(j for ((i, j), c) in terms)
    res = {}
    if model.case == CASE_NS:
        # x = 1/u, y = u^delta / v
        big_a = max(i - delta * j for ((i, j), c) in terms)
        big_b = deg_y
        for ((i, j), c) in terms:
            res[(big_a - i + delta * j, big_b - j)] = c
    elif model.case == CASE_SS:
        # x = 1/u, y = 1 / (u^delta v)
        big_a = max(i + delta * j for ((i, j), c) in terms)
        big_b = deg_y
        for ((i, j), c) in terms:
            res[(big_a - i - delta * j, big_b - j)] = c
    else:
        # x = 1/u, y = v / u^delta
        big_a = max(i + delta * j for ((i, j), c) in terms)
        big_b = 0
        for ((i, j), c) in terms:
            res[(big_a - i - delta * j, j)] = c
    return (LOCAL_RING.from_dict(res), big_a, big_b, deg_y)


def infinity_value(model, f):
    """infinity_value(model, f) -> int

    The value of f in the ring of the chart at infinity:
    nu(h_f) - A nu(u) - B nu(v), where f = h_f / (u^A v^B).
    """
    (h, big_a, big_b, deg_y) = _to_local(model, f)
    val = local_value(model, h) - big_a * local_value(model, U)
    if big_b:
        val -= big_b * local_value(model, V)
    return val


def curve_class(model, f):
    """curve_class(model, f) -> PicClass

    The class on Z of the strict transform of the closure of f = 0.
    """
    cfg = model.cfg
    (h, big_a, big_b, deg_y) = _to_local(model, f)
    profile = multiplicity_profile(model, h)
    if model.case == CASE_NS:
        (fcoef, mcoef) = (big_a, big_b)
    else:
        (fcoef, mcoef) = (big_a - cfg.delta * deg_y, deg_y)
    return lattice.custom_class(cfg, fcoef, mcoef, profile)


def criterion_divisor(model):
    """criterion_divisor(model) -> PicClass

    Lambda_n or Delta_n, as the case requires.
    """
    return classify.nef_divisor(model.cfg)


def monomial_basis(model, a, b):
    """monomial_basis(model, a, b) -> list of (i, j)

    The exponents of the chart monomials x^i y^j spanning the sections of
    bidegree (a, b), that is, of the class aF + bM.
    """
    if a < 0 or b < 0:
        raise ValconeError('E_RANGE', 'bidegree must be nonnegative')
    delta = model.cfg.delta
    res = []
    for j in range(b + 1):
        if model.case == CASE_NS:
            top = a + delta * j
        else:
            top = a + delta * (b - j)
        for i in range(top + 1):
            res.append((i, j))
    return res


def basis_size(delta, a, b):
    """basis_size(delta, a, b) -> int

    (a+1)(b+1) + delta b(b+1)/2.
    """
    return (a + 1) * (b + 1) + delta * b * (b + 1) // 2


def _section(model, a, b, i, j):
    """The local equation of the section x^i y^j of bidegree (a, b).
    """
    delta = model.cfg.delta
    if model.case == CASE_NS:
        monom = (a - i + delta * j, b - j)
    elif model.case == CASE_SS:
        monom = (a + delta * b - i - delta * j, b - j)
    else:
        monom = (a + delta * b - i - delta * j, j)
    return LOCAL_RING({monom: QQ.one})


def _rational(val):
    return sympy.Rational(int(val.numerator), int(val.denominator))


def interpolate(model, bidegree, required):
    """interpolate(model, bidegree, required) -> list of PolyElement

    A basis (polynomials in x, y) of the sections of the given bidegree
    whose virtual multiplicity at p_i is at least required[i-1]. Raises
    InterpolationError (E_EMPTY) when only 0 qualifies.
    """
    (a, b) = bidegree
    monos = monomial_basis(model, a, b)
    required = list(required) + [0] * (model.cfg.n - len(required))
    while required and required[-1] == 0:
        required.pop()

    # Each element: (coefficient vector over monos, local polynomial).
    basis = []
    for (pos, (i, j)) in enumerate(monos):
        vec = [QQ.zero] * len(monos)
        vec[pos] = QQ.one
        basis.append((vec, _section(model, a, b, i, j)))

    for (idx, need) in enumerate(required):
        if idx > 0:
            pl = model.placements[idx - 1]
            prev = required[idx - 1]
            basis = [(vec, _blow_up(g, pl.chart, pl.parameter, prev)) for (vec, g) in basis]
        if need == 0:
            continue
        conds = [(p, d - p) for d in range(need) for p in range(d + 1)]
        mat = sympy.Matrix(len(conds), len(basis),
                           lambda row, col: _rational(basis[col][1].get(conds[row], QQ.zero)))
        kernel = mat.nullspace()
        if not kernel:
            raise InterpolationError('E_EMPTY', 'no section of bidegree ' + str(bidegree)
                                     + ' has multiplicities ' + str(tuple(required)))
        newbasis = []
        for col in kernel:
            den = functools.reduce(lambda x, y: x * y // math.gcd(x, y), [int(val.q) for val in col], 1)
            weights = [QQ(int(val.p * den // val.q)) for val in col]
            vec = [sum(w * old[0][k] for (w, old) in zip(weights, basis)) for k in range(len(monos))]
            poly = LOCAL_RING.zero
            for (w, (oldvec, g)) in zip(weights, basis):
                if w:
                    poly += g * w
            newbasis.append((vec, poly))
        basis = newbasis
        logger.debug('interpolate %s: %d sections left after p%d', bidegree, len(basis), idx + 1)

    res = []
    for (vec, g) in basis:
        terms = dict(((i, j), coeff) for ((i, j), coeff) in zip(monos, vec) if coeff)
        res.append(INFINITY_RING.from_dict(terms))
    return res


class Witness:
    """Witness: a polynomial found by witness_search().

    Fields: poly, value, multiple, bidegree.
    """

    found = True

    def __init__(self, poly, value, multiple, bidegree):
        self.poly = poly
        self.value = value
        self.multiple = multiple
        self.bidegree = bidegree

    def as_json(self):
        return {
            'found': True,
            'poly': serialize(self.poly),
            'value': self.value,
            'multiple': self.multiple,
            'bidegree': list(self.bidegree),
        }


class NotFound:
    """NotFound: witness_search() came back empty-handed.

    Fields: mode, max_multiple, max_bidegree, tried (list of
    (multiple, bidegree) pairs which were solved).
    """

    found = False

    def __init__(self, mode, max_multiple, max_bidegree, tried):
        self.mode = mode
        self.max_multiple = max_multiple
        self.max_bidegree = tuple(max_bidegree)
        self.tried = list(tried)

    def as_json(self):
        return {
            'found': False,
            'mode': self.mode,
            'max_multiple': self.max_multiple,
            'max_bidegree': list(self.max_bidegree),
            'tried': [[t, list(bideg)] for (t, bideg) in self.tried],
        }


def _bidegrees(max_bidegree):
    (top_a, top_b) = max_bidegree
    pairs = [(a, b) for a in range(top_a + 1) for b in range(top_b + 1)]
    return sorted(pairs, key=lambda pr: (pr[0] + pr[1], pr[0]))


def _hits(value, mode):
    if mode == POSITIVE:
        return value > 0
    return value == 0


def _is_constant(poly):
    return all(monom == (0, 0) for monom in poly.itermonoms())


def witness_search(model, mode=POSITIVE, max_multiple=6, max_bidegree=(8, 8), seed=None, combos=8):
    """witness_search(model, mode=POSITIVE, max_multiple=6, max_bidegree=(8, 8),
        seed=None, combos=8) -> Witness or NotFound

    For t = 1 ... max_multiple, ask for sections with multiplicities
    t m(phi_n) in each bidegree whose expected dimension is positive,
    smallest first, and evaluate the basis and a few random two-term
    combinations. Mode POSITIVE wants nu(f) > 0, mode ZERO wants a
    nonconstant f with nu(f) = 0.
    """
    if mode not in (POSITIVE, ZERO):
        raise ValconeError('E_RANGE', 'unknown witness mode "' + str(mode) + '"')
    rng = random.Random(seed)
    delta = model.cfg.delta
    tried = []
    for t in range(1, max_multiple + 1):
        req = [t * val for val in model.mults]
        need = sum(r * (r + 1) // 2 for r in req)
        for (a, b) in _bidegrees(max_bidegree):
            if basis_size(delta, a, b) - need <= 0:
                continue
            tried.append((t, (a, b)))
            try:
                polys = interpolate(model, (a, b), req)
            except InterpolationError:
                continue
            candidates = list(polys)
            for (f1, f2) in itertools.islice(itertools.combinations(polys, 2), combos):
                candidates.append(f1 * rng.randint(1, 5) + f2 * rng.randint(-5, 5))
            for f in candidates:
                if not f or _is_constant(f):
                    continue
                val = infinity_value(model, f)
                if _hits(val, mode):
                    logger.info('witness at t=%d, bidegree %s: value %d', t, (a, b), val)
                    return Witness(f, val, t, (a, b))
    return NotFound(mode, max_multiple, max_bidegree, tried)


class SampleReport:
    """SampleReport: values of random polynomials against the predicted
    sign.

    Fields:

    status -- the classification status the sign is checked against
    values -- list of (poly, value)
    max_value -- the largest value seen
    counterexamples -- the (poly, value) pairs breaking the prediction
    """

    def __init__(self, status, values):
        self.status = status
        self.values = list(values)
        self.max_value = max(val for (poly, val) in self.values) if self.values else None
        if status == classify.NEGATIVE:
            self.counterexamples = [(poly, val) for (poly, val) in self.values if val >= 0]
        elif status == classify.BOUNDARY:
            self.counterexamples = [(poly, val) for (poly, val) in self.values if val > 0]
        else:
            self.counterexamples = []

    def as_json(self):
        return {
            'status': self.status,
            'count': len(self.values),
            'max_value': self.max_value,
            'counterexamples': [[serialize(poly), val] for (poly, val) in self.counterexamples],
        }


def random_polynomial(rng, max_bidegree, max_terms=4):
    """random_polynomial(rng, max_bidegree, max_terms=4) -> PolyElement

    A nonconstant polynomial in x, y with exponents bounded by
    max_bidegree and small nonzero integer coefficients.
    """
    (top_a, top_b) = max_bidegree
    if top_a == 0 and top_b == 0:
        raise ValconeError('E_RANGE', 'bidegree (0, 0) only holds constants')
    while True:
        terms = {}
        for step in range(rng.randint(1, max_terms)):
            monom = (rng.randint(0, top_a), rng.randint(0, top_b))
            terms[monom] = QQ(rng.randint(1, 5) * rng.choice((1, -1)))
        poly = INFINITY_RING.from_dict(terms)
        if poly and not _is_constant(poly):
            return poly


def sample_check(model, count=50, max_bidegree=(4, 4), seed=None):
    """sample_check(model, count=50, max_bidegree=(4, 4), seed=None) -> SampleReport
    """
    rng = random.Random(seed)
    status = classify.classify_at_infinity(model.cfg).status
    values = []
    for step in range(count):
        poly = random_polynomial(rng, max_bidegree)
        values.append((poly, infinity_value(model, poly)))
    return SampleReport(status, values)


def expected_axis_values(model):
    """expected_axis_values(model) -> (int, int)

    The values of u and v the lattice predicts: b_n, and a_n, c_n or
    m_1(phi_n) according to the chart case.
    """
    vals = invariants.abc_values(model.cfg)
    if model.case == CASE_NS:
        return (vals.b, vals.c)
    if model.case == CASE_SS:
        return (vals.b, vals.a)
    return (vals.b, model.mults[0])
