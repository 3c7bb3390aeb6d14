# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.

import random
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import QQ

from valcone import classify, fixtures, oracle
from valcone.exceptions import InterpolationError, RealizationError, ValconeError
from valcone.lattice import pair
from valcone.polyparse import LOCAL_RING, U, V, X, Y, parse


def random_local(rng):
    # A nonzero polynomial in u, v with no constant term.
    res = LOCAL_RING.zero
    while not res:
        for deg in range(1, 5):
            for i in range(deg + 1):
                if rng.random() < 0.3:
                    res += rng.randint(-3, 3) * U**i * V**(deg - i)
    return res


class TestRealize(unittest.TestCase):

    def test_cases(self):
        ls = [
            ('T1', oracle.CASE_SS),
            ('CUSP', oracle.CASE_SS),
            ('FIB5', oracle.CASE_SG),
            ('FREE2', oracle.CASE_NS),
            ('EX12', oracle.CASE_NS),
            ('BND2', oracle.CASE_SS),
        ]
        for (name, case) in ls:
            cfg = fixtures.named(name)
            self.assertEqual(oracle.chart_case(cfg), case, name)
            model = oracle.realize_model(cfg, 1)
            self.assertEqual(model.case, case, name)
            self.assertEqual(len(model.placements), cfg.n - 1, name)

    def test_ex12_placements(self):
        model = oracle.realize_model(fixtures.ex12(), 1)
        placed = [pl.placed for pl in model.placements]
        self.assertEqual(placed, ['v', 'v', 'free', 'satellite', 'satellite', 'satellite',
                                  'free', 'free', 'free', 'satellite', 'satellite'])
        self.assertEqual((model.placements[0].chart, model.placements[0].parameter), (1, QQ(0)))
        for pl in model.placements:
            if pl.placed == 'free':
                self.assertEqual(pl.chart, 1)
                self.assertNotEqual(pl.parameter, 0)
        obj = model.as_json()
        self.assertEqual(obj['chart_case'], 'NS')
        self.assertEqual(obj['seed'], 1)
        self.assertEqual(len(obj['placements']), 11)

    def test_fib5_placements(self):
        model = oracle.realize_model(fixtures.fib5(), 3)
        self.assertEqual(model.placements[0].placed, 'u')
        self.assertEqual(model.placements[0].chart, 2)

    def test_single_point(self):
        model = oracle.realize_model(fixtures.t1(), 5)
        self.assertEqual(model.placements, [])
        self.assertEqual(model.parameters(), {})

    def test_reproducible(self):
        cfg = fixtures.ex12()
        model = oracle.realize_model(cfg, 7)
        again = oracle.realize_model(cfg, 7)
        self.assertEqual(model.as_json(), again.as_json())

        again = oracle.realize_model(cfg, parameters=model.parameters())
        self.assertEqual(model.as_json()['placements'], again.as_json()['placements'])

    def test_given_parameters(self):
        cfg = fixtures.ex12()
        model = oracle.realize_model(cfg, parameters={4: '1/2', 8: -3})
        self.assertEqual(model.placements[2].parameter, QQ(1, 2))
        self.assertEqual(model.placements[6].parameter, QQ(-3))

    def test_bad_parameter(self):
        with self.assertRaises(RealizationError) as cm:
            oracle.realize_model(fixtures.ex12(), parameters={4: 0})
        self.assertEqual(cm.exception.rule, 'E_REALIZE')
        with self.assertRaises(ValconeError):
            oracle.realize_model(fixtures.ex12(), parameters={4: 'half'})

    def test_as_qq(self):
        ls = [(3, QQ(3)), ('-3/2', QQ(-3, 2)), (QQ(5, 7), QQ(5, 7)), (' 4 ', QQ(4))]
        for (val, res) in ls:
            self.assertEqual(oracle.as_qq(val), res)


class TestValues(unittest.TestCase):

    def test_ex12(self):
        model = oracle.realize_model(fixtures.ex12(), 1)
        self.assertEqual(oracle.local_value(model, U), 15)
        self.assertEqual(oracle.local_value(model, V), 45)
        self.assertEqual(oracle.infinity_value(model, X), -15)
        self.assertEqual(oracle.infinity_value(model, Y), -15)
        self.assertEqual(oracle.expected_axis_values(model), (15, 45))
        self.assertEqual(oracle.multiplicity_profile(model, V),
                         (1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0))

    def test_t1(self):
        model = oracle.realize_model(fixtures.t1(), 1)
        self.assertEqual(oracle.infinity_value(model, Y), -2)
        self.assertEqual(oracle.infinity_value(model, X), -1)
        self.assertEqual(oracle.infinity_value(model, parse('7/3')), 0)

    def test_cusp(self):
        model = oracle.realize_model(fixtures.cusp(), 1)
        c = model.placements[0].parameter
        cusp = (V - U * c)**2 - U**3
        self.assertEqual(oracle.multiplicity_profile(model, cusp), (2, 1, 1))
        self.assertEqual(oracle.local_value(model, cusp), 6)
        self.assertEqual(oracle.multiplicity_profile(model, U), (1, 0, 0))
        self.assertEqual(oracle.multiplicity_profile(model, LOCAL_RING.one), (0, 0, 0))

    def test_axis_values(self):
        for name in fixtures.NAMED:
            model = oracle.realize_model(fixtures.named(name), 2)
            got = (oracle.local_value(model, U), oracle.local_value(model, V))
            self.assertEqual(got, oracle.expected_axis_values(model), name)

    def test_zero(self):
        model = oracle.realize_model(fixtures.t1(), 1)
        with self.assertRaises(ValconeError):
            oracle.infinity_value(model, X - X)

    def test_lattice_agreement(self):
        for name in fixtures.NAMED:
            model = oracle.realize_model(fixtures.named(name), 3)
            divisor = oracle.criterion_divisor(model)
            rng = random.Random(11)
            for step in range(8):
                poly = oracle.random_polynomial(rng, (3, 3))
                cls = oracle.curve_class(model, poly)
                self.assertEqual(-oracle.infinity_value(model, poly), pair(divisor, cls), name)


class TestInterpolate(unittest.TestCase):

    def test_basis(self):
        for name in ['T1', 'FIB5', 'EX12']:
            model = oracle.realize_model(fixtures.named(name), 1)
            delta = model.cfg.delta
            for a in range(3):
                for b in range(3):
                    monos = oracle.monomial_basis(model, a, b)
                    self.assertEqual(len(monos), oracle.basis_size(delta, a, b))
                    self.assertEqual(len(set(monos)), len(monos))

    def test_no_conditions(self):
        model = oracle.realize_model(fixtures.cusp(), 1)
        polys = oracle.interpolate(model, (1, 1), [0, 0, 0])
        self.assertEqual(len(polys), oracle.basis_size(1, 1, 1))

    def test_conditions(self):
        model = oracle.realize_model(fixtures.cusp(), 1)
        polys = oracle.interpolate(model, (1, 2), [2, 1, 1])
        self.assertGreaterEqual(len(polys), 9 - 5)
        allowed = set(oracle.monomial_basis(model, 1, 2))
        for poly in polys:
            self.assertTrue(set(poly.itermonoms()) <= allowed)

    def test_empty(self):
        model = oracle.realize_model(fixtures.ex12(), 1)
        with self.assertRaises(InterpolationError) as cm:
            oracle.interpolate(model, (0, 0), [1])
        self.assertEqual(cm.exception.rule, 'E_EMPTY')

    def test_bad_bidegree(self):
        model = oracle.realize_model(fixtures.t1(), 1)
        with self.assertRaises(ValconeError):
            oracle.monomial_basis(model, -1, 0)


class TestWitness(unittest.TestCase):

    def test_fib5(self):
        model = oracle.realize_model(fixtures.fib5(), 1)
        res = oracle.witness_search(model, oracle.POSITIVE, 6, (8, 8), seed=1)
        self.assertTrue(res.found)
        self.assertGreater(res.value, 0)
        self.assertEqual(res.multiple, 1)
        self.assertEqual(res.bidegree, (0, 2))
        self.assertEqual(oracle.infinity_value(model, res.poly), res.value)
        obj = res.as_json()
        self.assertTrue(obj['found'])
        self.assertEqual(obj['bidegree'], [0, 2])

    def test_bnd2_zero(self):
        model = oracle.realize_model(fixtures.bnd2(), 1)
        res = oracle.witness_search(model, oracle.ZERO, 2, (2, 2), seed=1)
        self.assertTrue(res.found)
        self.assertEqual(res.value, 0)
        self.assertEqual(res.multiple, 1)
        self.assertEqual(res.bidegree, (1, 1))

    def test_ex12(self):
        model = oracle.realize_model(fixtures.ex12(), 1)
        res = oracle.witness_search(model)
        self.assertFalse(res.found)
        self.assertEqual(res.tried, [])
        self.assertEqual(res.as_json(), {
            'found': False, 'mode': 'positive', 'max_multiple': 6,
            'max_bidegree': [8, 8], 'tried': []})

    def test_bad_mode(self):
        model = oracle.realize_model(fixtures.t1(), 1)
        with self.assertRaises(ValconeError):
            oracle.witness_search(model, 'negative')


class TestSampling(unittest.TestCase):

    def test_ex12(self):
        model = oracle.realize_model(fixtures.ex12(), 1)
        report = oracle.sample_check(model, 50, (4, 4), seed=1)
        self.assertEqual(report.status, classify.NEGATIVE)
        self.assertEqual(len(report.values), 50)
        self.assertEqual(report.counterexamples, [])
        self.assertLess(report.max_value, 0)
        self.assertEqual(report.as_json()['count'], 50)

    def test_random_polynomial(self):
        rng = random.Random(4)
        for step in range(20):
            poly = oracle.random_polynomial(rng, (2, 1))
            self.assertTrue(poly)
            for (i, j) in poly.itermonoms():
                self.assertLessEqual(i, 2)
                self.assertLessEqual(j, 1)
        with self.assertRaises(ValconeError):
            oracle.random_polynomial(rng, (0, 0))


class TestRandomModels(unittest.TestCase):

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_lattice_agreement(self, seed):
        rng = random.Random(seed)
        cfg = fixtures.random_configuration(rng, max_delta=3, max_points=6)
        model = oracle.realize_model(cfg, seed)
        self.assertEqual((oracle.local_value(model, U), oracle.local_value(model, V)),
                         oracle.expected_axis_values(model))
        divisor = oracle.criterion_divisor(model)
        for step in range(20):
            poly = oracle.random_polynomial(rng, (3, 3))
            cls = oracle.curve_class(model, poly)
            self.assertEqual(-oracle.infinity_value(model, poly), pair(divisor, cls))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_multiplicative(self, seed):
        rng = random.Random(seed)
        cfg = fixtures.random_configuration(rng, max_delta=3, max_points=6)
        model = oracle.realize_model(cfg, seed)
        for step in range(20):
            f = oracle.random_polynomial(rng, (2, 2))
            g = oracle.random_polynomial(rng, (2, 2))
            self.assertEqual(oracle.infinity_value(model, f * g),
                             oracle.infinity_value(model, f) + oracle.infinity_value(model, g))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_negative_sampling(self, seed):
        rng = random.Random(seed)
        cfg = fixtures.random_configuration(rng, max_delta=3, max_points=6)
        if classify.classify_at_infinity(cfg).status != classify.NEGATIVE:
            return
        model = oracle.realize_model(cfg, seed)
        report = oracle.sample_check(model, 50, (4, 4), seed=seed)
        self.assertEqual(len(report.values), 50)
        self.assertEqual(report.counterexamples, [])

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_ultrametric(self, seed):
        rng = random.Random(seed)
        cfg = fixtures.random_configuration(rng, max_delta=3, max_points=6)
        model = oracle.realize_model(cfg, seed)
        for step in range(10):
            h1 = random_local(rng)
            h2 = random_local(rng)
            if not h1 + h2:
                continue
            val1 = oracle.local_value(model, h1)
            val2 = oracle.local_value(model, h2)
            total = oracle.local_value(model, h1 + h2)
            self.assertGreaterEqual(total, min(val1, val2), (h1, h2))
            if val1 != val2:
                self.assertEqual(total, min(val1, val2), (h1, h2))
