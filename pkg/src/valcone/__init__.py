# valcone: divisorial valuations of Hirzebruch surfaces at infinity
# Copyright 2026 by the valcone authors
# This program is distributed under the LGPL.
# See the LGPL document for details.

__all__ = [
    'exceptions', 'valuation_core', 'invariants', 'lattice', 'cones',
    'classify', 'polyparse', 'oracle', 'configfile', 'fixtures', 'checks',
    'cli',
]
