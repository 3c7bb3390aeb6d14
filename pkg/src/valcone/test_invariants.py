# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.

import random
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from valcone import fixtures
from valcone.exceptions import ConfigurationError, McvError
from valcone.invariants import (
    McvSequence, abc_values, configuration_from_mcv, criterion_lhs,
    maximal_contact_values, multiplicity_sequence, parse_mcv, volume_inverse)
from valcone.valuation_core import GENERAL, SPECIAL, multiplicity_vector, proximity_matrix


class TestNoether(unittest.TestCase):

    def test_values(self):
        ls = [
            ('T1', (1, 1, 0, 1)),
            ('CUSP', (2, 2, 0, 6)),
            ('FIB5', (0, 2, 0, 5)),
            ('FREE2', (0, 1, 2, 2)),
            ('EX12', (0, 15, 45, 786)),
            ('BND2', (1, 1, 0, 2)),
        ]
        for (name, (a, b, c, vol)) in ls:
            vals = abc_values(fixtures.named(name))
            self.assertEqual((vals.a, vals.b, vals.c, vals.vol_inverse), (a, b, c, vol), name)
            self.assertEqual(volume_inverse(fixtures.named(name)), vol, name)

    def test_sub_values(self):
        cfg = fixtures.ex12()
        vals = abc_values(cfg, 4)
        self.assertEqual((vals.a, vals.b, vals.c, vals.vol_inverse), (0, 1, 3, 4))
        self.assertEqual(vals.as_json(), {'a': 0, 'b': 1, 'c': 3, 'vol_inverse': 4})

    def test_criterion_lhs(self):
        ls = [
            ('T1', 3),
            ('CUSP', 12),
            ('FIB5', 4),
            ('FREE2', 3),
            ('EX12', 900),
            ('BND2', 2),
        ]
        for (name, lhs) in ls:
            self.assertEqual(criterion_lhs(fixtures.named(name)), lhs, name)


class TestMcv(unittest.TestCase):

    def test_fixtures(self):
        ls = [
            ('T1', (1, 1)),
            ('CUSP', (2, 3, 6)),
            ('FIB5', (1, 5)),
            ('EX12', (15, 51, 262, 786)),
        ]
        for (name, values) in ls:
            mcv = maximal_contact_values(fixtures.named(name))
            self.assertEqual(mcv.values(), values, name)

    def test_sequence(self):
        mcv = McvSequence([15, 51, 262, 786])
        self.assertEqual(mcv.g, 2)
        self.assertEqual(mcv.beta, (15, 51, 262))
        self.assertEqual(mcv.beta_top, 786)
        self.assertEqual(mcv.gcd_chain, (15, 3, 1))
        self.assertEqual(mcv.quotients, (5, 3))
        self.assertEqual(mcv.characteristic_exponents(), (51, 58))
        self.assertEqual(mcv.problems(), [])
        self.assertEqual(mcv.as_json(), [15, 51, 262, 786])
        self.assertEqual(mcv, parse_mcv('15,51,262,786'))
        self.assertEqual(repr(mcv), '<McvSequence 15,51,262,786>')

    def test_problems(self):
        ls = [
            [4, 6],
            [2, 3, 5, 10],
            [6, 4, 1, 100],
            [4, 6, 7, 100],
        ]
        for values in ls:
            self.assertNotEqual(McvSequence(values).problems(), [], values)
            with self.assertRaises(McvError):
                multiplicity_sequence(McvSequence(values))

    def test_bad_shape(self):
        ls = ['', '3', '3,x', '3,-5', '0,1']
        for val in ls:
            with self.assertRaises(McvError) as cm:
                parse_mcv(val)
            self.assertEqual(cm.exception.rule, 'E_MCV_INVALID')

    def test_multiplicity_sequence(self):
        ls = [
            ([1, 1], (1,)),
            ([2, 3, 6], (2, 1, 1)),
            ([1, 5], (1, 1, 1, 1, 1)),
            ([15, 51, 262, 786], (15, 15, 15, 6, 6, 3, 3, 3, 3, 1, 1, 1)),
        ]
        for (values, mults) in ls:
            self.assertEqual(multiplicity_sequence(McvSequence(values)), mults)

        mults = multiplicity_sequence(McvSequence([3, 11, 122]))
        self.assertEqual(mults[:6], (3, 3, 3, 2, 1, 1))
        self.assertEqual(len(mults), 95)

    def test_volume_too_small(self):
        with self.assertRaises(McvError):
            multiplicity_sequence(McvSequence([2, 3, 5]))


class TestFromMcv(unittest.TestCase):

    def test_cusp(self):
        cfg = configuration_from_mcv(1, SPECIAL, McvSequence([2, 3, 6]), 1, 1)
        self.assertEqual(cfg, fixtures.cusp())

    def test_ex12(self):
        cfg = configuration_from_mcv(2, GENERAL, parse_mcv('15,51,262,786'), 1, 0, 3)
        self.assertEqual(cfg.n, 12)
        self.assertEqual(cfg.i_M1, 3)
        self.assertEqual(maximal_contact_values(cfg).values(), (15, 51, 262, 786))

    def test_long(self):
        cfg = configuration_from_mcv(1, SPECIAL, McvSequence([3, 11, 122]), 1, 1)
        self.assertEqual(cfg.n, 95)
        self.assertEqual(cfg.satellite_of(5), 3)
        self.assertEqual(cfg.satellite_of(6), 4)
        self.assertEqual(maximal_contact_values(cfg).values(), (3, 11, 122))

    def test_bad_incidences(self):
        with self.assertRaises(ConfigurationError) as cm:
            configuration_from_mcv(1, SPECIAL, McvSequence([2, 3, 6]), 1, 3)
        self.assertIn('E_SMOOTH', cm.exception.rules())

    def test_inadmissible(self):
        with self.assertRaises(McvError) as cm:
            configuration_from_mcv(1, GENERAL, parse_mcv('4,6'))
        self.assertEqual(cm.exception.rule, 'E_MCV_INVALID')


class TestRoundTrip(unittest.TestCase):

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_round_trip(self, seed):
        cfg = fixtures.random_configuration(random.Random(seed))
        mcv = maximal_contact_values(cfg)
        again = configuration_from_mcv(cfg.delta, cfg.kind, mcv, cfg.i_F1, cfg.i_M0, cfg.i_M1)
        self.assertEqual(proximity_matrix(again), proximity_matrix(cfg))
        self.assertEqual(again, cfg)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_satellite_end(self, seed):
        cfg = fixtures.random_configuration(random.Random(seed))
        mcv = maximal_contact_values(cfg)
        self.assertEqual(mcv.beta_top, volume_inverse(cfg))
        self.assertEqual(mcv.beta[0], multiplicity_vector(cfg, cfg.n)[0])
        if cfg.is_satellite(cfg.n):
            self.assertEqual(mcv.beta_top, mcv.gcd_chain[mcv.g - 1] * mcv.beta[mcv.g])
