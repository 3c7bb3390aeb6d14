# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.
"""lattice: the Picard lattice of the blown-up surface Z.

Classes are written in the basis F*, M*, E_1*, ..., E_n* of total
transforms. The pairing is F*.F* = 0, F*.M* = 1, M*.M* = delta,
E_i*.E_j* = -1 when i = j (else 0), and the E_i* are orthogonal to F* and
M*.

Classes:

PicClass -- an integral class

Public functions:

pair() -- the intersection pairing
fstar(), mstar(), estar() -- the basis classes
custom_class() -- aF* + bM* minus a multiplicity vector
fiber_class(), special_section_class(), m1_class(), exceptional_class()
    -- strict transforms of F_1, M_0, M_1, E_i
strict_transform_class() -- any of the above, by name
primal_classes() -- the labelled sets S_1(Z) or S_2(Z)
coordinates_in_basis() -- exact coordinates in another basis
m1_expression() -- M_1 in the basis F_1, M_0, E_1 ... E_n, with checks
"""

from dataclasses import dataclass

import sympy

from valcone.exceptions import LatticeError


@dataclass(frozen=True)
class PicClass:
    """PicClass: the class f F* + m M* + sum e_i E_i* on the surface Z
    obtained by blowing up n points of F_delta.
    """

    delta: int
    f: int
    m: int
    e: tuple

    @property
    def n(self):
        return len(self.e)

    def _check(self, other):
        if self.delta != other.delta or len(self.e) != len(other.e):
            raise LatticeError('E_DIM', 'classes from different lattices ('
                               + str((self.delta, len(self.e))) + ' and '
                               + str((other.delta, len(other.e))) + ')')

    def __add__(self, other):
        self._check(other)
        return PicClass(self.delta, self.f + other.f, self.m + other.m,
                        tuple(a + b for (a, b) in zip(self.e, other.e)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, k):
        """scale(k) -> PicClass
        """
        return PicClass(self.delta, k * self.f, k * self.m, tuple(k * a for a in self.e))

    def vector(self):
        """vector() -> list

        The coordinates (f, m, e_1, ..., e_n).
        """
        return [self.f, self.m] + list(self.e)

    def as_json(self):
        return {'f': self.f, 'm': self.m, 'e': list(self.e)}

    def __str__(self):
        terms = []
        for (coeff, name) in [(self.f, 'F*'), (self.m, 'M*')]:
            if coeff:
                terms.append((coeff, name))
        for (pos, coeff) in enumerate(self.e):
            if coeff:
                terms.append((coeff, 'E' + str(pos + 1) + '*'))
        if not terms:
            return '0'
        res = ''
        for (coeff, name) in terms:
            sign = '-' if coeff < 0 else '+'
            mag = abs(coeff)
            body = name if mag == 1 else str(mag) + name
            if not res:
                res = body if sign == '+' else '-' + body
            else:
                res += ' ' + sign + ' ' + body
        return res


def pair(x, y):
    """pair(x, y) -> int

    The intersection number of two classes in the same lattice.
    """
    x._check(y)
    total = x.f * y.m + x.m * y.f + x.delta * x.m * y.m
    for (a, b) in zip(x.e, y.e):
        total -= a * b
    return total


def self_intersection(x):
    return pair(x, x)


def fstar(cfg):
    return PicClass(cfg.delta, 1, 0, (0,) * cfg.n)


def mstar(cfg):
    return PicClass(cfg.delta, 0, 1, (0,) * cfg.n)


def estar(cfg, i):
    return PicClass(cfg.delta, 0, 0, tuple(1 if j == i else 0 for j in range(1, cfg.n + 1)))


def custom_class(cfg, a, b, mults):
    """custom_class(cfg, a, b, mults) -> PicClass

    The class aF* + bM* - sum r_j E_j*. The multiplicity vector may be
    shorter than n; missing entries are 0.
    """
    mults = list(mults)
    if len(mults) > cfg.n:
        raise LatticeError('E_DIM', 'multiplicity vector longer than the configuration')
    mults += [0] * (cfg.n - len(mults))
    return PicClass(cfg.delta, a, b, tuple(-r for r in mults))


def _chain(cfg, last):
    return tuple(-1 if j <= last else 0 for j in range(1, cfg.n + 1))


def fiber_class(cfg):
    """fiber_class(cfg) -> PicClass

    The strict transform of F_1.
    """
    return PicClass(cfg.delta, 1, 0, _chain(cfg, cfg.i_F1))


def special_section_class(cfg):
    """special_section_class(cfg) -> PicClass

    The strict transform of M_0, using M_0 ~ M - delta F.
    """
    return PicClass(cfg.delta, -cfg.delta, 1, _chain(cfg, cfg.i_M0))


def m1_class(cfg):
    """m1_class(cfg) -> PicClass

    The strict transform of M_1. Raises E_NA when the configuration has
    no M_1.
    """
    if not cfg.i_M1:
        raise LatticeError('E_NA', 'M1 is not defined for a special valuation')
    return PicClass(cfg.delta, 0, 1, _chain(cfg, cfg.i_M1))


def exceptional_class(cfg, i):
    """exceptional_class(cfg, i) -> PicClass

    The strict transform of E_i: E_i* minus the E_j* of the points p_j
    proximate to p_i.
    """
    e = [0] * cfg.n
    e[i - 1] = 1
    for j in cfg.proximate_to(i):
        e[j - 1] = -1
    return PicClass(cfg.delta, 0, 0, tuple(e))


def strict_transform_class(cfg, curve):
    """strict_transform_class(cfg, curve) -> PicClass

    The curve is 'F1', 'M0', 'M1', ('E', i) or ('custom', a, b, mults).
    """
    if curve == 'F1':
        return fiber_class(cfg)
    if curve == 'M0':
        return special_section_class(cfg)
    if curve == 'M1':
        return m1_class(cfg)
    if isinstance(curve, tuple) and curve and curve[0] == 'E':
        i = curve[1]
        if not (1 <= i <= cfg.n):
            raise LatticeError('E_NA', 'no exceptional divisor E' + str(i))
        return exceptional_class(cfg, i)
    if isinstance(curve, tuple) and len(curve) == 4 and curve[0] == 'custom':
        return custom_class(cfg, curve[1], curve[2], curve[3])
    raise LatticeError('E_NA', 'unknown curve ' + repr(curve))


def exceptional_label(i):
    return 'E' + str(i) + '~'


def primal_classes(cfg, with_m1=None):
    """primal_classes(cfg, with_m1=None) -> list of (label, PicClass)

    S_1(Z) = F_1, M_0, E_1 ... E_n (strict transforms), and S_2(Z) which
    adds M_1. By default S_2 is returned exactly when the configuration
    has an M_1.
    """
    if with_m1 is None:
        with_m1 = bool(cfg.i_M1)
    res = [('F1~', fiber_class(cfg)), ('M0~', special_section_class(cfg))]
    if with_m1:
        res.append(('M1~', m1_class(cfg)))
    for i in range(1, cfg.n + 1):
        res.append((exceptional_label(i), exceptional_class(cfg, i)))
    return res


def coordinates_in_basis(x, basis):
    """coordinates_in_basis(x, basis) -> tuple of sympy.Rational

    Solve x = sum c_k basis[k] exactly. The basis must have n+2 classes
    of the lattice of x; raises E_SINGULAR if it does not span.
    """
    size = len(x.e) + 2
    if len(basis) != size:
        raise LatticeError('E_DIM', 'a basis needs ' + str(size) + ' classes, got ' + str(len(basis)))
    for cls in basis:
        x._check(cls)
    mat = sympy.Matrix([cls.vector() for cls in basis]).T
    if mat.rank() < size:
        raise LatticeError('E_SINGULAR', 'the classes do not form a basis')
    sol = mat.LUsolve(sympy.Matrix(x.vector()))
    return tuple(sympy.Rational(val) for val in sol)


def m1_expression(cfg):
    """m1_expression(cfg) -> tuple of int

    The coordinates (d01, d02, d_1, ..., d_n) of M_1 in the basis
    F_1, M_0, E_1, ..., E_n (strict transforms). For a non-special
    valuation they are integers with d01 = delta, d02 = 1,
    d_k = delta - k for k <= delta, and d_i <= -1 beyond; anything else
    raises E_LEMMA41.
    """
    if not cfg.i_M1:
        raise LatticeError('E_NA', 'M1 is not defined for a special valuation')
    basis = [fiber_class(cfg), special_section_class(cfg)]
    basis += [exceptional_class(cfg, i) for i in range(1, cfg.n + 1)]
    coords = coordinates_in_basis(m1_class(cfg), basis)
    if any(not val.is_integer for val in coords):
        raise LatticeError('E_LEMMA41', 'non-integral coordinates ' + str(coords))
    coords = tuple(int(val) for val in coords)

    delta = cfg.delta
    expected = [delta, 1] + [delta - k for k in range(1, delta + 1)]
    if list(coords[:len(expected)]) != expected:
        raise LatticeError('E_LEMMA41', 'leading coefficients ' + str(coords[:len(expected)])
                           + ', expected ' + str(tuple(expected)))
    tail = coords[len(expected):]
    if any(val > -1 for val in tail):
        raise LatticeError('E_LEMMA41', 'coefficients beyond E' + str(delta)
                           + ' must be at most -1: ' + str(tail))
    return coords
