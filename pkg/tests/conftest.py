"""Shared fixtures: independent oracles and the Eulerian test corpus."""

import itertools
import random
from fractions import Fraction

import pytest

from flagcone.constructions import (appendix_a1, boolean_lattice,
                                    horizontal_double, limit_family_poset)
from flagcone.posets import GradedPoset
from flagcone.subsets import ranks_of
from flagcone.systems import enumerate_even_systems
from flagcone.vectors import FlagVector


def brute_force_flag_vector(p: GradedPoset) -> FlagVector:
    """Chain counts by literal enumeration of all chains, independent of
    the layered DP."""
    entries = {0: Fraction(1)}
    for mask in range(1, 1 << p.n):
        layers = [p.elements_at(r) for r in ranks_of(mask)]
        count = 0
        for combo in itertools.product(*layers):
            if all(p.less(a, b) for a, b in zip(combo, combo[1:])):
                count += 1
        if count:
            entries[mask] = Fraction(count)
    return FlagVector(p.n, "F", entries)


def mobius_by_euler_characteristic(p: GradedPoset, x: int, y: int) -> int:
    """Philip Hall: mu = alternating sum of the interval's flag numbers."""
    from flagcone.posets import flag_f_vector, interval
    sub = interval(p, x, y)
    total = 0
    for mask, value in flag_f_vector(sub).entries.items():
        total += (-1) ** (mask.bit_count() + 1) * int(value)
    return total


def random_rational_vector(rng: random.Random, n: int, basis: str = "F") -> FlagVector:
    entries = {}
    for mask in range(1 << n):
        if rng.random() < 0.8:
            entries[mask] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
    return FlagVector(n, basis, entries)


@pytest.fixture(scope="session")
def eulerian_corpus():
    """Doubled limit posets (n <= 5, N <= 3), Boolean lattices of rank
    <= 5, and the doubled A.1 fixtures; (name, poset) pairs."""
    corpus = []
    for n in range(1, 6):
        for system in enumerate_even_systems(n):
            for N in (1, 2, 3):
                poset = horizontal_double(limit_family_poset(n, system, N))
                corpus.append((f"DP({n},{system!r},{N})", poset))
    for r in range(2, 6):
        corpus.append((f"boolean({r})", boolean_lattice(r)))
    for N in (2, 3):
        corpus.append((f"D(appendixA1({N}))", horizontal_double(appendix_a1(N))))
    return corpus


@pytest.fixture()
def rng():
    return random.Random(745219)
