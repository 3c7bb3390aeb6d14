# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.

import random
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from valcone import fixtures
from valcone.exceptions import ConfigurationError
from valcone.valuation_core import (
    FREE, GENERAL, NONE, SATELLITE, SPECIAL,
    dual_graph, leading_free_run, multiplicity_vector, point_kind,
    proximity_matrix, truncate, validate_configuration)


class TestValidate(unittest.TestCase):

    def test_fixtures_valid(self):
        for (name, func) in fixtures.NAMED.items():
            cfg = func()
            self.assertEqual(validate_configuration(**cfg.description()), cfg, name)

    def test_defaults(self):
        cfg = validate_configuration(1, GENERAL, [None, None])
        self.assertEqual(cfg.i_F1, 1)
        self.assertEqual(cfg.i_M0, 0)
        self.assertEqual(cfg.i_M1, 2)

        cfg = validate_configuration(1, SPECIAL, [None, None], i_M0=1)
        self.assertEqual(cfg.i_M1, 0)

        cfg = validate_configuration(0, None, [None], i_M0=1)
        self.assertEqual(cfg.kind, NONE)

    def test_bad_configurations(self):
        ls = [
            ((1, SPECIAL, [None, 1], 1, 1), ['E_PROX']),
            ((1, SPECIAL, [None, None, 2], 1, 1), ['E_PROX']),
            ((1, SPECIAL, [2], 1, 1), ['E_PROX']),
            ((1, SPECIAL, [None, None, None, 1], 1, 1), ['E_PROX']),
            ((1, SPECIAL, [None, None, 1], 1, 3), ['E_SMOOTH']),
            ((1, SPECIAL, [None, None, 1], 3, 1), ['E_SMOOTH']),
            ((1, SPECIAL, [None, None], 1, 1, 2), ['E_INCIDENCE']),
            ((1, GENERAL, [None, None], 1, 0, 0), ['E_INCIDENCE']),
            ((1, GENERAL, [None, None], 1, 1), ['E_INCIDENCE']),
            ((1, SPECIAL, [None, None], 1, 0), ['E_INCIDENCE']),
            ((1, SPECIAL, [None, None, None], 2, 2), ['E_INCIDENCE']),
            ((1, GENERAL, [None, None], 1, 0, 1), ['E_RANGE', 'E_INCIDENCE']),
            ((0, SPECIAL, [None], 1, 1), ['E_RANGE']),
            ((2, None, [None], 1, 1), ['E_RANGE']),
            ((1, 'sideways', [None], 1, 1), ['E_RANGE']),
            ((1, SPECIAL, [None], 2, 1), ['E_RANGE']),
            ((1, SPECIAL, [None, 1], 1, 5), ['E_PROX', 'E_RANGE']),
        ]
        for (args, rules) in ls:
            with self.assertRaises(ConfigurationError) as cm:
                validate_configuration(*args)
            self.assertEqual(cm.exception.rules(), rules, args)

    def test_negative_delta(self):
        with self.assertRaises(ConfigurationError) as cm:
            validate_configuration(-1, None, [None])
        self.assertEqual(cm.exception.rule, 'E_RANGE')

    def test_no_points(self):
        with self.assertRaises(ConfigurationError) as cm:
            validate_configuration(1, SPECIAL, [], 1, 1)
        self.assertEqual(cm.exception.rule, 'E_RANGE')

    def test_message(self):
        with self.assertRaises(ConfigurationError) as cm:
            validate_configuration(1, SPECIAL, [None, 1], 1, 5)
        msg = str(cm.exception)
        self.assertTrue(msg.startswith('E_PROX: '))
        self.assertIn('; E_RANGE: ', msg)


class TestProximity(unittest.TestCase):

    def test_cusp(self):
        cfg = fixtures.cusp()
        self.assertEqual(proximity_matrix(cfg).tolist(),
                         [[1, 0, 0], [-1, 1, 0], [-1, -1, 1]])
        self.assertEqual(cfg.proximate_to(1), [2, 3])
        self.assertEqual(cfg.proximate_to(2), [3])
        self.assertEqual(point_kind(cfg, 2), FREE)
        self.assertEqual(point_kind(cfg, 3), SATELLITE)
        self.assertEqual(multiplicity_vector(cfg, 3), (2, 1, 1))
        self.assertEqual(multiplicity_vector(cfg, 2), (1, 1))
        self.assertEqual(leading_free_run(cfg), 2)

    def test_ex12(self):
        cfg = fixtures.ex12()
        self.assertEqual(cfg.n, 12)
        self.assertEqual(cfg.satellites,
                         (None, None, None, None, 3, 3, 5, None, None, None, 9, 9))
        self.assertEqual(multiplicity_vector(cfg, 12),
                         (15, 15, 15, 6, 6, 3, 3, 3, 3, 1, 1, 1))
        self.assertEqual(multiplicity_vector(cfg, 4), (1, 1, 1, 1))
        self.assertEqual(multiplicity_vector(cfg, 10), (5, 5, 5, 2, 2, 1, 1, 1, 1, 1))
        self.assertEqual(leading_free_run(cfg), 4)

    def test_free(self):
        cfg = fixtures.fib5()
        self.assertEqual(proximity_matrix(cfg).tolist(),
                         [[1, 0, 0, 0, 0],
                          [-1, 1, 0, 0, 0],
                          [0, -1, 1, 0, 0],
                          [0, 0, -1, 1, 0],
                          [0, 0, 0, -1, 1]])
        self.assertEqual(multiplicity_vector(cfg, 5), (1, 1, 1, 1, 1))


class TestTruncate(unittest.TestCase):

    def test_truncate(self):
        cfg = fixtures.ex12()
        self.assertIs(truncate(cfg, 12), cfg)

        sub = truncate(cfg, 2)
        self.assertEqual(sub.n, 2)
        self.assertEqual(sub.i_M1, 0)

        sub = truncate(cfg, 3)
        self.assertEqual(sub.i_M1, 3)

        sub = truncate(cfg, 7)
        self.assertEqual(sub.satellites, (None, None, None, None, 3, 3, 5))
        self.assertEqual(multiplicity_vector(sub, 7), (5, 5, 5, 2, 2, 1, 1))

        sub = truncate(fixtures.fib5(), 1)
        self.assertEqual(sub.i_F1, 1)


class TestDualGraph(unittest.TestCase):

    def test_cusp(self):
        graph = dual_graph(fixtures.cusp())
        self.assertEqual(graph.edges, [(1, 3), (2, 3)])
        self.assertTrue(graph.is_tree())
        self.assertEqual(graph.degree(3), 2)
        self.assertEqual(graph.to_dot(), '\n'.join([
            'graph dual {',
            '    1 [label="E1"];',
            '    2 [label="E2"];',
            '    3 [label="E3"];',
            '    1 -- 3;',
            '    2 -- 3;',
            '}']))

    def test_chain(self):
        graph = dual_graph(fixtures.fib5())
        self.assertEqual(graph.edges, [(1, 2), (2, 3), (3, 4), (4, 5)])

    def test_ex12(self):
        graph = dual_graph(fixtures.ex12())
        self.assertTrue(graph.is_tree())
        self.assertEqual(len(graph.edges), 11)

    def test_single(self):
        graph = dual_graph(fixtures.t1())
        self.assertEqual(graph.edges, [])
        self.assertTrue(graph.is_tree())


class TestRandomConfigurations(unittest.TestCase):

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_proximity_equalities(self, seed):
        cfg = fixtures.random_configuration(random.Random(seed))
        for i in range(1, cfg.n + 1):
            mults = multiplicity_vector(cfg, i)
            self.assertEqual(mults[-1], 1)
            for j in range(1, i):
                total = sum(mults[s - 1] for s in cfg.proximate_to(j) if s <= i)
                self.assertEqual(mults[j - 1], total)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_dual_graph_tree(self, seed):
        cfg = fixtures.random_configuration(random.Random(seed))
        self.assertTrue(dual_graph(cfg).is_tree())

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_truncations_valid(self, seed):
        cfg = fixtures.random_configuration(random.Random(seed))
        for i in range(1, cfg.n + 1):
            sub = truncate(cfg, i)
            self.assertEqual(sub.n, i)
            self.assertEqual(multiplicity_vector(sub, i), multiplicity_vector(cfg, i))
