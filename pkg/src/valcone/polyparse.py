# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.
"""polyparse: read and write bivariate polynomials with rational
coefficients.

Polynomials live in one of two sympy rings over QQ: the chart at
infinity, in x and y, and the local chart at p, in u and v. The syntax
is the usual one:

    3/2*x^2*y - 1
    (u - 2*v)^2 + u^3

Whitespace is ignored. Only the variables of the chosen chart are
accepted.

Public functions:

parse() -- parse a string into a ring element
serialize() -- write a ring element back as a string
ring_for() -- the ring of a chart tag
"""

import io

from sympy import QQ
from sympy.polys.rings import ring

from valcone.exceptions import PolynomialParseError

INFINITY = 'infinity'
LOCAL = 'local'

INFINITY_RING, X, Y = ring('x,y', QQ)
LOCAL_RING, U, V = ring('u,v', QQ)


def ring_for(chart):
    """ring_for(chart) -> PolyRing

    INFINITY gives the ring in x, y; LOCAL the ring in u, v.
    """
    if chart == INFINITY:
        return INFINITY_RING
    if chart == LOCAL:
        return LOCAL_RING
    raise PolynomialParseError('unknown chart "' + str(chart) + '"')


def parse(val, chart=INFINITY):
    """parse(val, chart=INFINITY) -> PolyElement

    Parse a str containing exactly one polynomial. Raises
    PolynomialParseError if it is ill-formed or uses a variable outside
    the chart.
    """
    fl = io.StringIO(val)
    context = ParseContext(fl, ring_for(chart))
    try:
        res = context.parsepoly()
        context.finalwhite()
        return res
    finally:
        context.close()


def serialize(poly):
    """serialize(poly) -> str

    Write a ring element in the syntax parse() reads, terms in
    decreasing lexicographic order of exponents.
    """
    names = [str(gen) for gen in poly.ring.symbols]
    terms = sorted(poly.terms(), reverse=True)
    if not terms:
        return '0'
    res = ''
    for (monom, coeff) in terms:
        factors = []
        for (name, exp) in zip(names, monom):
            if exp == 1:
                factors.append(name)
            elif exp > 1:
                factors.append(name + '^' + str(exp))
        mag = abs(coeff)
        if mag != 1 or not factors:
            factors.insert(0, str(mag.numerator) if mag.denominator == 1
                           else str(mag.numerator) + '/' + str(mag.denominator))
        body = '*'.join(factors)
        if not res:
            res = ('-' + body) if coeff < 0 else body
        else:
            res += (' - ' if coeff < 0 else ' + ') + body
    return res


class ParseContext:
    """ParseContext: represents the state of an ongoing parse() operation.

    The grammar needs a stream of characters and one character of
    lookahead.

    Fields:

        fl -- a file-like object, from which characters are read.
        ring -- the sympy ring the result lives in.
        nextch -- if a character has been pushed back, it is here;
            if not, this is None.
        pos -- the number of characters consumed so far.

    Constructor:

        ParseContext(fl, ring) -- constructor
    """

    def __init__(self, fl, ring):
        self.fl = fl
        self.ring = ring
        self.gens = dict((str(sym), gen) for (sym, gen) in zip(ring.symbols, ring.gens))
        self.nextch = None
        self.pos = 0

    def close(self):
        """close() -> None

        Shut down the parser, and close the underlying stream.
        """
        self.fl.close()

    def peek(self):
        """peek() -> str

        The next non-whitespace character, left in place ('' at the end).
        """
        ch = self.nextch
        if ch is None:
            ch = self.read()
        while ch and ch.isspace():
            ch = self.read()
        self.nextch = ch
        return ch

    def read(self):
        ch = self.fl.read(1)
        if ch:
            self.pos += 1
        return ch

    def take(self):
        """take() -> str

        Consume and return the next non-whitespace character.
        """
        ch = self.peek()
        self.nextch = None
        return ch

    def finalwhite(self):
        """finalwhite() -> None

        Ensure that the stream is exhausted, apart from whitespace.
        """
        if self.peek():
            raise PolynomialParseError('extra stuff after polynomial', self.pos)

    def parsepoly(self):
        """parsepoly() -> PolyElement

        Parse a signed sum of terms.
        """
        res = self.ring.zero
        ch = self.peek()
        sign = 1
        if ch in ['+', '-']:
            self.take()
            if ch == '-':
                sign = -1
        res = self.parseterm() * sign
        while True:
            ch = self.peek()
            if ch not in ['+', '-']:
                return res
            self.take()
            term = self.parseterm()
            if ch == '+':
                res = res + term
            else:
                res = res - term

    def parseterm(self):
        """parseterm() -> PolyElement

        Parse a product of factors.
        """
        res = self.parsefactor()
        while self.peek() == '*':
            self.take()
            res = res * self.parsefactor()
        return res

    def parsefactor(self):
        """parsefactor() -> PolyElement

        Parse a number, a fraction, a variable or a parenthesized
        polynomial, with an optional exponent.
        """
        ch = self.peek()
        if not ch:
            raise PolynomialParseError('unexpected end of input', self.pos)
        if ch.isdigit():
            num = self.parseint()
            if self.peek() == '/':
                self.take()
                den = self.parseint()
                if den == 0:
                    raise PolynomialParseError('zero denominator', self.pos)
                return self.ring(QQ(num, den))
            return self.ring(num)
        if ch == '(':
            self.take()
            res = self.parsepoly()
            if self.take() != ')':
                raise PolynomialParseError('missing )', self.pos)
            return self.parseexponent(res)
        if ch.isalpha():
            self.take()
            gen = self.gens.get(ch)
            nxt = self.read()
            self.nextch = nxt
            if nxt and (nxt.isalnum() or nxt == '_'):
                raise PolynomialParseError('variables are single letters', self.pos)
            if gen is None:
                raise PolynomialParseError('variable "' + ch + '" is not one of '
                                           + ', '.join(sorted(self.gens)), self.pos)
            return self.parseexponent(gen)
        raise PolynomialParseError('unexpected "' + ch + '"', self.pos)

    def parseexponent(self, base):
        if self.peek() != '^':
            return base
        self.take()
        return base ** self.parseint()

    def parseint(self):
        """parseint() -> int

        Parse a run of digits.
        """
        ch = self.peek()
        if not ch.isdigit():
            raise PolynomialParseError('expected a number', self.pos)
        digits = ''
        ch = self.take()
        while ch and ch.isdigit():
            digits += ch
            ch = self.read()
        self.nextch = ch
        return int(digits)
