"""Deterministic enumeration of circuits and markings for sweeps."""

from __future__ import annotations

from itertools import combinations_with_replacement, product
from typing import Iterator

from .circuit import Circuit, validate_circuit


def canonical_circuits(max_d: int, max_entry: int) -> Iterator[Circuit]:
    """All balanced circuits with d <= max_d and |entries| <= max_entry.

    One representative per canonical form (positives then negatives, each
    block by ascending magnitude), with zero marking.  Ordered by rank,
    then number of positives, then entries.
    """
    for rank in range(3, max_d + 3):
        for num_pos in range(1, rank):
            for pos in combinations_with_replacement(range(1, max_entry + 1), num_pos):
                for mag in combinations_with_replacement(
                    range(1, max_entry + 1), rank - num_pos
                ):
                    if sum(pos) == sum(mag):
                        yield validate_circuit(pos + tuple(-m for m in mag))


def balanced_markings(rank: int, bound: int = 1) -> Iterator[tuple[int, ...]]:
    """All zero-sum marking vectors with |nu(i)| <= bound, lexicographic."""
    for nu in product(range(-bound, bound + 1), repeat=rank):
        if sum(nu) == 0:
            yield nu


def with_marking(c: Circuit, nu: tuple[int, ...]) -> Circuit:
    """The same circuit with marking nu (given in internal order)."""
    return Circuit(c.entries, tuple(nu), c.perm)
