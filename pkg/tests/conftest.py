"""Shared oracles and generators for the test suite.

The oracles here are deliberately naive: literal quantifier checks and
exhaustive enumerations that the library's cleverer implementations are
measured against.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, Sequence

import pytest

from jurybayes.charges import Charge
from jurybayes.worlds import BooleanSubalgebra


def all_partitions(elements: Sequence) -> Iterator[tuple[frozenset, ...]]:
    """Every partition of a small sequence (Bell-number many)."""
    elements = list(elements)
    if not elements:
        yield ()
        return
    first, rest = elements[0], elements[1:]
    for sub in all_partitions(rest):
        # first joins an existing block, or starts its own
        for i in range(len(sub)):
            yield sub[:i] + (sub[i] | {first},) + sub[i + 1 :]
        yield sub + (frozenset({first}),)


def literal_logical_independence(event: frozenset, algebra: BooleanSubalgebra) -> bool:
    """The quantified definition, checked member by member."""
    ground = algebra.ground_set
    for member in algebra.members():
        if member in (frozenset(), ground):
            continue
        if not (member & event) or not ((ground - member) & event):
            return False
    return True


def oracle_inner_outer(charge: Charge, subset: frozenset) -> tuple[Fraction, Fraction]:
    """sup of member measures below, inf of member measures above."""
    below = [charge.measure(m) for m in charge.algebra.members() if m <= subset]
    above = [charge.measure(m) for m in charge.algebra.members() if subset <= m]
    return max(below), min(above)


def random_masses(rng: random.Random, count: int) -> tuple[Fraction, ...]:
    """Random exact masses, nonnegative and summing to one."""
    weights = [rng.randrange(0, 9) for _ in range(count)]
    if sum(weights) == 0:
        weights[rng.randrange(count)] = 1
    total = sum(weights)
    return tuple(Fraction(w, total) for w in weights)


def random_charge(rng: random.Random, algebra: BooleanSubalgebra) -> Charge:
    return Charge(algebra, random_masses(rng, len(algebra.atoms)))


def random_partition(
    rng: random.Random, ground: Sequence, min_block: int = 1
) -> tuple[frozenset, ...]:
    """A random partition with every block at least ``min_block`` big."""
    items = list(ground)
    rng.shuffle(items)
    blocks: list[frozenset] = []
    i = 0
    while i < len(items):
        size = rng.randrange(min_block, min_block + 2)
        if len(items) - i - size < min_block:
            size = len(items) - i
        blocks.append(frozenset(items[i : i + size]))
        i += size
    return tuple(blocks)


def splitting_event(rng: random.Random, charge: Charge) -> frozenset:
    """A set taking a proper nonempty bite of every positive-mass atom."""
    picked: set = set()
    for atom, mass in zip(charge.algebra.atoms, charge.masses):
        members = sorted(atom, key=repr)
        if mass > 0:
            assert len(members) >= 2, "positive-mass atoms must be splittable"
            k = rng.randrange(1, len(members))
            picked.update(rng.sample(members, k))
        else:
            picked.update(m for m in members if rng.random() < 0.5)
    return frozenset(picked)


def random_rational(
    rng: random.Random,
    low: Fraction = Fraction(0),
    high: Fraction = Fraction(1),
    *,
    inclusive: bool = True,
    max_denominator: int = 40,
) -> Fraction:
    """A random exact rational in the given interval."""
    while True:
        den = rng.randrange(2, max_denominator + 1)
        num = rng.randrange(0, den + 1)
        value = Fraction(num, den)
        if inclusive and low <= value <= high:
            return value
        if not inclusive and low < value < high:
            return value


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
