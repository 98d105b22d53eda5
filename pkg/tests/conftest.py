"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from circuitcat import Circuit, validate_circuit


@st.composite
def balanced_inputs(draw, max_entry=6, max_positives=3, max_negatives=3):
    """Raw (a, nu) pairs that validate, in a shuffled user order."""
    num_pos = draw(st.integers(1, max_positives))
    pos = draw(
        st.lists(st.integers(1, max_entry), min_size=num_pos, max_size=num_pos)
    )
    total = sum(pos)
    num_neg = draw(st.integers(1, min(max_negatives, total)))
    cuts = sorted(
        draw(
            st.sets(
                st.integers(1, total - 1), min_size=num_neg - 1, max_size=num_neg - 1
            )
        )
    )
    bounds = [0] + cuts + [total]
    neg = [-(bounds[i + 1] - bounds[i]) for i in range(len(bounds) - 1)]
    entries = pos + neg
    if len(entries) < 3:
        entries = entries + [1, -1]
    nu = draw(
        st.lists(
            st.integers(-2, 2), min_size=len(entries) - 1, max_size=len(entries) - 1
        )
    )
    nu = nu + [-sum(nu)]
    seed = draw(st.integers(0, 2**32 - 1))
    order = list(range(len(entries)))
    random.Random(seed).shuffle(order)
    return [entries[i] for i in order], [nu[i] for i in order]


@st.composite
def circuits(draw, max_entry=6, max_positives=3, max_negatives=3) -> Circuit:
    a, nu = draw(balanced_inputs(max_entry, max_positives, max_negatives))
    return validate_circuit(a, nu)


@st.composite
def monomials(draw, circuit: Circuit, max_exp=3):
    exps = []
    for i in range(circuit.rank):
        cap = 1 if circuit.odd[i] else max_exp
        exps.append(draw(st.integers(0, cap)))
    return tuple(exps)
