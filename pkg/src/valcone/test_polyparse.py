# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.

import unittest

from sympy import QQ

from valcone.exceptions import PolynomialParseError
from valcone.polyparse import (
    INFINITY_RING, LOCAL, LOCAL_RING, U, V, X, Y, parse, ring_for, serialize)


class TestParse(unittest.TestCase):

    def test_parse(self):
        ls = [
            ('x', X),
            ('3/2*x^2*y - 1', INFINITY_RING(QQ(3, 2)) * X**2 * Y - 1),
            ('-(x - y)^2', -(X - Y)**2),
            ('2*x*3', 6 * X),
            ('x^0', INFINITY_RING.one),
            ('  7/14 ', INFINITY_RING(QQ(1, 2))),
            ('x*y + y*x', 2 * X * Y),
            ('(x + 1)*(x - 1)', X**2 - 1),
            ('+y^10', Y**10),
        ]
        for (val, res) in ls:
            self.assertEqual(parse(val), res, val)

    def test_local(self):
        self.assertEqual(parse('(v - 2*u)^2 - u^3', LOCAL), (V - 2 * U)**2 - U**3)
        self.assertEqual(parse('u', LOCAL).ring, LOCAL_RING)
        self.assertIs(ring_for(LOCAL), LOCAL_RING)

    def test_bad_parse(self):
        ls = [
            '', 'x +', '(x', 'x ^', '1/0', 'x + z', 'xy', 'x y', ')',
            'x2', '2x', '*x', 'x^y', '1.5',
        ]
        for val in ls:
            with self.assertRaises(PolynomialParseError) as cm:
                parse(val)
            self.assertEqual(cm.exception.rule, 'E_PARSE', val)

    def test_wrong_chart(self):
        with self.assertRaises(PolynomialParseError):
            parse('u + v')
        with self.assertRaises(PolynomialParseError):
            parse('x', LOCAL)
        with self.assertRaises(PolynomialParseError):
            ring_for('sky')

    def test_position(self):
        with self.assertRaises(PolynomialParseError) as cm:
            parse('x + y )')
        self.assertIn('at position', str(cm.exception))


class TestSerialize(unittest.TestCase):

    def test_serialize(self):
        ls = [
            ('3/2*x^2*y - 1', '3/2*x^2*y - 1'),
            ('y^3 - x', '-x + y^3'),
            ('x - x', '0'),
            ('-1/3', '-1/3'),
            ('2*x*y + x*y', '3*x*y'),
        ]
        for (val, res) in ls:
            self.assertEqual(serialize(parse(val)), res)
        self.assertEqual(serialize((U - 2 * V)**2), 'u^2 - 4*u*v + 4*v^2')

    def test_reparse(self):
        ls = [
            '-(x - 3/7*y)^3 + x*y^2 - 5',
            '(x + y + 1)^4',
            '1/2*x^5 - 1/3*y^5',
        ]
        for val in ls:
            poly = parse(val)
            self.assertEqual(parse(serialize(poly)), poly, val)
