"""Shared fixtures and small independent oracles for the test suite.

The oracle helpers here deliberately work from first definitions (direct
index scans, full cartesian products) so they share no code paths with the
library functions they are used to check.
"""

import itertools
import random

import pytest

from wkit.search import SearchConfig, search
from wkit.seqcore import PmOneSequence, WilliamsonQuadruple


def all_pm_tuples(n):
    """Every ±1 tuple of length n, in itertools order."""
    return list(itertools.product((1, -1), repeat=n))


def symmetric_by_definition(entries):
    """Direct definition scan: entries[i] == entries[(n - i) % n] for all i."""
    n = len(entries)
    return all(entries[i] == entries[(n - i) % n] for i in range(n))


def symmetric_tuples(n):
    """All symmetric ±1 tuples of length n, by filtering the full space."""
    return [t for t in all_pm_tuples(n) if symmetric_by_definition(t)]


def random_pm_sequence(rng, n):
    return PmOneSequence(tuple(rng.choice((1, -1)) for _ in range(n)))


def random_symmetric_sequence(rng, n):
    entries = [0] * n
    for i in range(n // 2 + 1):
        v = rng.choice((1, -1))
        entries[i] = v
        entries[(n - i) % n] = v
    return PmOneSequence(tuple(entries))


def random_quadruple(rng, n):
    return WilliamsonQuadruple(
        random_symmetric_sequence(rng, n),
        random_symmetric_sequence(rng, n),
        random_symmetric_sequence(rng, n),
        random_symmetric_sequence(rng, n),
    )


def make_rng(seed):
    return random.Random(seed)


@pytest.fixture(scope="session")
def found_by_order():
    """Exhaustive search results for orders 1..8 with the default config.

    Maps n to (quadruples, report).  Session-scoped: several test modules
    and the acceptance suite all consume the same sets.
    """
    results = {}
    for n in range(1, 9):
        results[n] = search(SearchConfig(n=n))
    return results
