"""Graded algebra, Hom bases, composition table and quiver emission."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from circuitcat import (
    build_bcategory,
    grading,
    hom_basis,
    monomials_of_weight,
    multiply,
    quiver,
    validate_circuit,
)
from circuitcat.balgebra import max_enumeration_weight
from circuitcat.errors import Overflow, OutOfRange

from conftest import circuits, monomials

FIG_BLOWUP = validate_circuit([1, 2, 3, -1, -5])
FIG_WPS = validate_circuit([2, 3, -5])
FIG_LINE = validate_circuit([1, 1, -2])


def test_grading_examples():
    assert grading(FIG_BLOWUP, (0, 0, 0, 1, 0)) == (1, 1)
    assert grading(FIG_WPS, (2, 0, 0)) == (0, 4)
    c = validate_circuit([2, 3, -5], [1, 0, -1])
    assert grading(c, (1, 0, 1)) == (1, 7)


def test_monomials_of_weight_examples():
    assert monomials_of_weight(FIG_LINE, 1) == [(1, 0, 0), (0, 1, 0)]
    assert monomials_of_weight(FIG_WPS, 1) == []
    assert monomials_of_weight(FIG_BLOWUP, 2) == [
        (2, 0, 0, 0, 0),
        (1, 0, 0, 1, 0),
        (0, 1, 0, 0, 0),
    ]
    assert monomials_of_weight(FIG_LINE, 0) == [(0, 0, 0)]


def test_monomials_respect_enumeration_cap(monkeypatch):
    with pytest.raises(Overflow):
        monomials_of_weight(FIG_LINE, max_enumeration_weight() + 1)
    monkeypatch.setenv("CIRCUITCAT_MAX_WEIGHT", "3")
    assert max_enumeration_weight() == 3
    with pytest.raises(Overflow):
        monomials_of_weight(FIG_LINE, 4)


def test_multiply_examples():
    assert multiply(FIG_WPS, (1, 0, 0), (1, 0, 0)) == (1, (2, 0, 0))
    v3 = (0, 0, 0, 1, 0)
    v4 = (0, 0, 0, 0, 1)
    assert multiply(FIG_BLOWUP, v4, v3) == (-1, (0, 0, 0, 1, 1))
    assert multiply(FIG_BLOWUP, v3, v4) == (1, (0, 0, 0, 1, 1))
    assert multiply(FIG_BLOWUP, v3, v3).sign == 0


def test_hom_basis_examples():
    basis = hom_basis(FIG_WPS, 5, 0, 2)
    assert [x for x, _ in basis] == [(1, 0, 0)]
    assert basis[0][1].degree == 0
    assert hom_basis(FIG_WPS, 5, 1, 0) == []
    degrees = [g.degree for _, g in hom_basis(FIG_BLOWUP, 5, 0, 2)]
    assert degrees == [0, 1, 0]
    with pytest.raises(OutOfRange):
        hom_basis(FIG_WPS, 5, 0, 5)


def test_build_bcategory_examples():
    cat = build_bcategory(FIG_LINE, 2)
    assert cat.dim(0, 1) == 2
    cat = build_bcategory(FIG_WPS, 5)
    assert cat.dim(0, 4) == 1 and cat.basis(0, 4) == ((2, 0, 0),)
    cat = build_bcategory(FIG_LINE, 1)
    assert cat.dim(0, 0) == 1 and cat.basis(0, 0) == ((0, 0, 0),)


def test_composition_table_unital_and_closed():
    cat = build_bcategory(FIG_BLOWUP, 4)
    ident = (0,) * 5
    for (j, k), basis in cat.hom.items():
        for x in basis:
            assert cat.compose(x, ident) == (1, x)
            assert cat.compose(ident, x) == (1, x)
    for entry in cat.composition_table:
        left = cat.basis(entry.j, entry.k)[entry.left]
        right = cat.basis(entry.i, entry.j)[entry.right]
        sign, prod = multiply(cat.circuit, left, right)
        assert sign == entry.sign
        if sign:
            assert cat.basis(entry.i, entry.k)[entry.result] == prod


def test_json_dump_schema():
    payload = build_bcategory(FIG_LINE, 2).to_json_dict()
    assert set(payload) == {"objects", "homs", "compositions"}
    assert payload["objects"] == 2
    hom01 = next(h for h in payload["homs"] if (h["src"], h["dst"]) == (0, 1))
    assert [b["exp"] for b in hom01["basis"]] == [[1, 0, 0], [0, 1, 0]]
    assert all(set(b) == {"exp", "deg", "wt"} for b in hom01["basis"])
    assert all(
        set(e) == {"i", "j", "k", "left", "right", "sign", "result"}
        for e in payload["compositions"]
    )


def test_quiver_figures():
    arrows = quiver(FIG_LINE, 2)
    assert [(a.src, a.dst, a.label) for a in arrows] == [
        (0, 1, "v0"),
        (0, 1, "v1"),
    ]
    arrows = quiver(FIG_WPS, 5)
    assert [(a.src, a.dst, a.label) for a in arrows] == [
        (0, 2, "v0"),
        (1, 3, "v0"),
        (2, 4, "v0"),
        (0, 3, "v1"),
        (1, 4, "v1"),
    ]
    arrows = quiver(FIG_BLOWUP, 5)
    assert len(arrows) == 13
    per_gen = {}
    for a in arrows:
        per_gen[a.label] = per_gen.get(a.label, 0) + 1
    assert per_gen == {"v0": 4, "v1": 3, "v2": 2, "v3": 4}


@given(circuits(), st.data())
def test_supercommutativity(c, data):
    x = data.draw(monomials(c))
    y = data.draw(monomials(c))
    xy = multiply(c, x, y)
    yx = multiply(c, y, x)
    assert xy.exponents == yx.exponents
    px = grading(c, x).degree & 1
    py = grading(c, y).degree & 1
    assert xy.sign == yx.sign * (-1) ** (px * py)


@given(circuits(), st.data())
def test_multiply_associative_with_signs(c, data):
    x = data.draw(monomials(c))
    y = data.draw(monomials(c))
    z = data.draw(monomials(c))
    s1, p1 = multiply(c, y, x)
    left = (0, None) if not s1 else (lambda sm: (s1 * sm.sign, sm.exponents if sm.sign else None))(multiply(c, z, p1))
    s2, p2 = multiply(c, z, y)
    right = (0, None) if not s2 else (lambda sm: (s2 * sm.sign, sm.exponents if sm.sign else None))(multiply(c, p2, x))
    if left[0] == 0:
        assert right[0] == 0
    else:
        assert left == right


@given(circuits(), st.integers(0, 12))
def test_weight_enumeration_invariants(c, w):
    mons = monomials_of_weight(c, w)
    assert len(set(mons)) == len(mons)
    assert mons == sorted(mons, reverse=True)
    for x in mons:
        g = grading(c, x)
        assert g.weight == w
        odd_count = sum(x[i] for i in range(c.rank) if c.odd[i])
        assert g.degree % 2 == odd_count % 2


@given(circuits(), st.integers(1, 9))
def test_hom_basis_matches_weight_enumeration(c, n):
    for j in range(n):
        for k in range(j, n):
            got = [x for x, _ in hom_basis(c, n, j, k)]
            assert got == monomials_of_weight(c, k - j)


@given(circuits(), st.integers(2, 7))
def test_hom_dims_shift_invariant(c, n):
    cat = build_bcategory(c, n)
    for j in range(n):
        for k in range(j, n):
            assert cat.dim(j, k) == cat.dim(0, k - j)
