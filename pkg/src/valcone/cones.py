# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.
"""cones: generators of the dual cones and of the cone of curves.

For a special valuation, the dual of S_1(Z) = {F_1, M_0, E_1 ... E_n}
is generated by F*, M* and the classes

    Lambda_i = a_i F* + b_i M* - sum m_j(phi_i) E_j*.

For a non-special valuation, the dual of S_2(Z) (which adds M_1) is
generated by F*, M* and the families Theta_i (i <= delta), Delta_i,
Gamma_i and Upsilon_{i,k} (i > delta, 1 <= k < delta).

Classes:

GeneratorSet -- a labelled list of classes

Public functions:

lambda_class(), theta_class(), delta_class(), gamma_class(),
upsilon_class() -- the generator divisors
dual_cone_generators() -- the whole dual cone, verified
curve_cone_generators() -- NE(Z) when the criterion holds
closed_form_self_intersection() -- self-intersection from a, b, c, v
effectivity_coordinates() -- Lambda_i written in S_1(Z)
nonspecial_effectivity() -- the non-special generators written in S_2(Z)
gamma_sufficient(), upsilon_sufficient() -- cheap nonnegativity tests
"""

import logging

from valcone import invariants, lattice, valuation_core
from valcone.exceptions import ConeError
from valcone.lattice import PicClass, pair

logger = logging.getLogger(__name__)

DUAL_CONE_SPECIAL = 'dual_cone_special'
DUAL_CONE_NONSPECIAL = 'dual_cone_nonspecial'
CURVE_CONE_SPECIAL = 'curve_cone_special'
CURVE_CONE_NONSPECIAL = 'curve_cone_nonspecial'


class GeneratorSet:
    """GeneratorSet: a labelled list of classes generating a cone.

    GeneratorSet(kind, classes) -- constructor

    Fields:

    kind -- one of the DUAL_CONE_* or CURVE_CONE_* constants
    classes -- list of (label, PicClass)
    """

    def __init__(self, kind, classes):
        self.kind = kind
        self.classes = list(classes)

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def __repr__(self):
        return '<GeneratorSet ' + self.kind + ' (' + str(len(self.classes)) + ')>'

    def labels(self):
        return [label for (label, cls) in self.classes]

    def get(self, label):
        """get(label) -> PicClass

        Raises KeyError if no class has this label.
        """
        for (lab, cls) in self.classes:
            if lab == label:
                return cls
        raise KeyError(label)

    def as_json(self):
        res = []
        for (label, cls) in self.classes:
            rec = {'label': label}
            rec.update(cls.as_json())
            res.append(rec)
        return res


def label(name, *indices):
    """label(name, *indices) -> str

    Generator labels: label('Delta', 12) is 'Delta_12', label('Upsilon', 3, 1)
    is 'Upsilon_3_1'.
    """
    return '_'.join([name] + [str(val) for val in indices])


def _require_special(cfg):
    if cfg.i_M1:
        raise ConeError('E_NA', 'Lambda classes belong to special valuations')


def _require_nonspecial(cfg):
    if not cfg.i_M1:
        raise ConeError('E_NA', 'Theta/Delta/Gamma/Upsilon classes belong to non-special valuations')


def _check_range(name, val, low, high):
    if not (low <= val <= high):
        raise ConeError('E_RANGE', name + ' = ' + str(val) + ' outside ' + str(low) + '..' + str(high))


def _curvette_tail(cfg, i, scale=1):
    mults = valuation_core.multiplicity_vector(cfg, i)
    return tuple(-scale * mults[j] if j < i else 0 for j in range(cfg.n))


def lambda_class(cfg, i):
    """lambda_class(cfg, i) -> PicClass
    """
    _require_special(cfg)
    _check_range('i', i, 1, cfg.n)
    vals = invariants.abc_values(cfg, i)
    return PicClass(cfg.delta, vals.a, vals.b, _curvette_tail(cfg, i))


def theta_class(cfg, i):
    """theta_class(cfg, i) -> PicClass

    Theta_i = b_i M* - sum m_j(phi_i) E_j*, for 1 <= i <= delta.
    """
    _require_nonspecial(cfg)
    _check_range('i', i, 1, cfg.delta)
    vals = invariants.abc_values(cfg, i)
    return PicClass(cfg.delta, 0, vals.b, _curvette_tail(cfg, i))


def delta_class(cfg, i):
    """delta_class(cfg, i) -> PicClass

    Delta_i = (c_i - delta b_i) F* + b_i M* - sum m_j(phi_i) E_j*.
    """
    _require_nonspecial(cfg)
    _check_range('i', i, cfg.delta + 1, cfg.n)
    return _delta_formula(cfg, i)


def _delta_formula(cfg, i):
    # Defined for every i; below delta+1 it is only used as a dual basis element.
    vals = invariants.abc_values(cfg, i)
    return PicClass(cfg.delta, vals.c - cfg.delta * vals.b, vals.b, _curvette_tail(cfg, i))


def gamma_class(cfg, i):
    """gamma_class(cfg, i) -> PicClass

    Gamma_i = c_i M* - sum delta m_j(phi_i) E_j*.
    """
    _require_nonspecial(cfg)
    _check_range('i', i, cfg.delta + 1, cfg.n)
    vals = invariants.abc_values(cfg, i)
    return PicClass(cfg.delta, 0, vals.c, _curvette_tail(cfg, i, cfg.delta))


def upsilon_class(cfg, i, k):
    """upsilon_class(cfg, i, k) -> PicClass

    Upsilon_{i,k} = (c_i - k b_i)(M* - E_1* - ... - E_k*)
        - (delta - k) sum_{j > k} m_j(phi_i) E_j*.

    The coefficient c_i - k b_i must also equal the sum of m_j(phi_i)
    over k < j <= min(i, i_M1); a mismatch raises E_CLOSED.
    """
    _require_nonspecial(cfg)
    _check_range('i', i, cfg.delta + 1, cfg.n)
    _check_range('k', k, 1, cfg.delta - 1)
    vals = invariants.abc_values(cfg, i)
    mults = valuation_core.multiplicity_vector(cfg, i)
    head = vals.c - k * vals.b
    if head != sum(mults[k:min(i, cfg.i_M1)]):
        raise ConeError('E_CLOSED', 'Upsilon_' + str(i) + '_' + str(k) + ': c - kb = ' + str(head)
                        + ' disagrees with the multiplicity sum')
    e = []
    for j in range(1, cfg.n + 1):
        if j <= k:
            e.append(-head)
        elif j <= i:
            e.append(-(cfg.delta - k) * mults[j - 1])
        else:
            e.append(0)
    return PicClass(cfg.delta, 0, head, tuple(e))


def _family(cfg):
    """All dual cone generators, labelled, without verification."""
    res = [('F*', lattice.fstar(cfg)), ('M*', lattice.mstar(cfg))]
    if not cfg.i_M1:
        for i in range(1, cfg.n + 1):
            res.append((label('Lambda', i), lambda_class(cfg, i)))
        return res

    delta = cfg.delta
    for i in range(1, min(delta, cfg.n) + 1):
        res.append((label('Theta', i), theta_class(cfg, i)))
    for i in range(delta + 1, cfg.n + 1):
        res.append((label('Delta', i), delta_class(cfg, i)))
    for i in range(delta + 1, cfg.n + 1):
        res.append((label('Gamma', i), gamma_class(cfg, i)))
    for i in range(delta + 1, cfg.n + 1):
        for k in range(1, delta):
            res.append((label('Upsilon', i, k), upsilon_class(cfg, i, k)))
    return res


def dual_cone_generators(cfg):
    """dual_cone_generators(cfg) -> GeneratorSet

    The generators of the dual of S_1(Z) (special) or S_2(Z)
    (non-special). Each one is checked to pair nonnegatively with every
    class of the primal set; a failure raises E_DUAL.
    """
    classes = _family(cfg)
    primal = lattice.primal_classes(cfg)
    for (lab, cls) in classes:
        for (plab, pcls) in primal:
            val = pair(cls, pcls)
            if val < 0:
                raise ConeError('E_DUAL', lab + ' . ' + plab + ' = ' + str(val))
    kind = DUAL_CONE_NONSPECIAL if cfg.i_M1 else DUAL_CONE_SPECIAL
    return GeneratorSet(kind, classes)


def curve_cone_generators(cfg):
    """curve_cone_generators(cfg) -> GeneratorSet

    The generators of the cone of curves NE(Z): the strict transforms of
    F_1, M_0 (M_1 as well, if non-special) and E_1 ... E_n. Only valid
    when the non-positivity criterion holds; otherwise raises E_NOT_NPI.
    """
    lhs = invariants.criterion_lhs(cfg)
    vol = invariants.volume_inverse(cfg)
    if lhs < vol:
        raise ConeError('E_NOT_NPI', 'criterion fails: ' + str(lhs) + ' < ' + str(vol))
    kind = CURVE_CONE_NONSPECIAL if cfg.i_M1 else CURVE_CONE_SPECIAL
    return GeneratorSet(kind, lattice.primal_classes(cfg))


def parse_label(val):
    """parse_label(val) -> (name, indices)

    'Upsilon_3_1' gives ('Upsilon', (3, 1)).
    """
    parts = val.split('_')
    try:
        return (parts[0], tuple(int(part) for part in parts[1:]))
    except ValueError:
        raise ConeError('E_NA', 'bad generator label "' + val + '"')


def generator_class(cfg, lab):
    """generator_class(cfg, lab) -> PicClass

    The class named by a generator label.
    """
    (name, indices) = parse_label(lab)
    builders = {
        'Lambda': (lambda_class, 1),
        'Theta': (theta_class, 1),
        'Delta': (delta_class, 1),
        'Gamma': (gamma_class, 1),
        'Upsilon': (upsilon_class, 2),
    }
    if name not in builders or len(indices) != builders[name][1]:
        raise ConeError('E_NA', 'no closed form for "' + lab + '"')
    (func, count) = builders[name]
    return func(cfg, *indices)


def closed_form_self_intersection(cfg, lab):
    """closed_form_self_intersection(cfg, lab) -> int

    The self-intersection of a generator from a_i, b_i, c_i and
    v_i = sum m_j(phi_i)^2, checked against the lattice pairing (E_CLOSED
    on a mismatch).
    """
    (name, indices) = parse_label(lab)
    cls = generator_class(cfg, lab)
    i = indices[0]
    vals = invariants.abc_values(cfg, i)
    (a, b, c, v) = (vals.a, vals.b, vals.c, vals.vol_inverse)
    delta = cfg.delta

    if name == 'Lambda':
        val = 2 * a * b + delta * b * b - v
    elif name == 'Theta':
        val = delta * b * b - v
    elif name == 'Delta':
        val = 2 * b * c - delta * b * b - v
    elif name == 'Gamma':
        val = delta * c * c - delta * delta * v
    else:
        k = indices[1]
        val = (delta - k) * (c * c - k * (2 * c * b - delta * b * b) - (delta - k) * v)

    actual = pair(cls, cls)
    if val != actual:
        raise ConeError('E_CLOSED', lab + ': closed form ' + str(val) + ', pairing ' + str(actual))
    return val


def effectivity_coordinates(cfg, i):
    """effectivity_coordinates(cfg, i) -> (coords, predicted)

    The coordinates of Lambda_i in the basis F_1, M_0, E_1 ... E_n, and
    the vector (Lambda_i.M*, Lambda_i.F*, Lambda_i.Lambda_1, ...,
    Lambda_i.Lambda_n) they must equal. Both are tuples of ints.
    """
    _require_special(cfg)
    cls = lambda_class(cfg, i)
    basis = [cls2 for (lab, cls2) in lattice.primal_classes(cfg, with_m1=False)]
    coords = lattice.coordinates_in_basis(cls, basis)
    predicted = [pair(cls, lattice.mstar(cfg)), pair(cls, lattice.fstar(cfg))]
    predicted += [pair(cls, lambda_class(cfg, j)) for j in range(1, cfg.n + 1)]
    return (tuple(int(val) if val.is_integer else val for val in coords), tuple(predicted))


def nonspecial_effectivity(cfg):
    """nonspecial_effectivity(cfg) -> list of (label, coefficients)

    Write each Theta, Delta, Gamma and Upsilon generator D as

        (D.M_0*) F_1~ + (D.F*) M_1~ + sum (D.Delta_j) E_j~

    where M_0* = M* - delta F* and Delta_j, for every 1 <= j <= n, is
    (c_j - delta b_j) F* + b_j M* - sum m_k(phi_j) E_k*. The coefficients
    are the tuple (D.M_0*, D.F*, D.Delta_1, ..., D.Delta_n).

    The combination must give back D (E_CLOSED otherwise). When the
    non-positivity criterion holds, every coefficient must be >= 0, so
    each generator is effective (E_NEF otherwise).
    """
    _require_nonspecial(cfg)
    delta = cfg.delta
    m0star = PicClass(delta, -delta, 1, (0,) * cfg.n)
    fs = lattice.fstar(cfg)
    duals = [_delta_formula(cfg, j) for j in range(1, cfg.n + 1)]
    basis = [lattice.fiber_class(cfg), lattice.m1_class(cfg)]
    basis += [lattice.exceptional_class(cfg, j) for j in range(1, cfg.n + 1)]
    holds = invariants.criterion_lhs(cfg) >= invariants.volume_inverse(cfg)

    res = []
    for (lab, cls) in _family(cfg):
        if lab in ('F*', 'M*'):
            continue
        coeffs = (pair(cls, m0star), pair(cls, fs)) + tuple(pair(cls, dual) for dual in duals)
        total = basis[0].scale(coeffs[0])
        for (coeff, bcls) in zip(coeffs[1:], basis[1:]):
            total = total + bcls.scale(coeff)
        if total != cls:
            raise ConeError('E_CLOSED', lab + ': the combination gives ' + str(total)
                            + ', not ' + str(cls))
        if holds and min(coeffs) < 0:
            raise ConeError('E_NEF', lab + ' has a negative coefficient: ' + str(coeffs))
        res.append((lab, coeffs))
    return res


def gamma_sufficient(cfg, i):
    """gamma_sufficient(cfg, i) -> bool

    c_i^2 >= delta v_i, which forces Gamma_i^2 >= 0.
    """
    vals = invariants.abc_values(cfg, i)
    return vals.c * vals.c >= cfg.delta * vals.vol_inverse


def upsilon_sufficient(cfg, i, k):
    """upsilon_sufficient(cfg, i, k) -> bool

    c_i^2 - k(2 c_i b_i - delta b_i^2) >= (delta - k) v_i, which forces
    Upsilon_{i,k}^2 >= 0.
    """
    vals = invariants.abc_values(cfg, i)
    (b, c, v) = (vals.b, vals.c, vals.vol_inverse)
    return c * c - k * (2 * c * b - cfg.delta * b * b) >= (cfg.delta - k) * v
