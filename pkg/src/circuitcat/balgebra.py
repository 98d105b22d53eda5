"""The bigraded super-symmetric algebra on a circuit and its directed category.

A circuit a with marking nu turns the free graded-symmetric algebra on
generators v_0..v_{d+1} into a bigraded algebra: v_i has weight |a_i| and
degree 2*nu(i) (even, polynomial) for a_i > 0 or 2*nu(i)+1 (odd, exterior)
for a_i < 0.  The directed category on n objects has Hom(j, k) spanned by
the monomials of weight k - j, with composition given by the algebra
product and its Koszul sign.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, NamedTuple

from .circuit import Circuit
from .errors import Overflow, OutOfRange

Exponents = tuple[int, ...]

DEFAULT_MAX_WEIGHT = 64


class Bigrading(NamedTuple):
    degree: int
    weight: int


class SignedMonomial(NamedTuple):
    """A monomial with coefficient +1/-1, or the zero element (sign 0)."""

    sign: int
    exponents: Exponents


def identity_monomial(c: Circuit) -> Exponents:
    return (0,) * c.rank


def check_monomial(c: Circuit, x: Exponents) -> None:
    """Raise unless x is a valid exponent vector (odd generators capped at 1)."""
    if len(x) != c.rank:
        raise OutOfRange(f"exponent vector of length {len(x)}, expected {c.rank}")
    for i, r in enumerate(x):
        if r < 0:
            raise OutOfRange(f"negative exponent at generator {i}")
        if r > 1 and c.odd[i]:
            raise OutOfRange(f"odd generator v{i} squared")


def grading(c: Circuit, x: Exponents) -> Bigrading:
    """Bigrading of a monomial: degree from the marking, weight from |a|."""
    degree = 0
    weight = 0
    for i, r in enumerate(x):
        if not r:
            continue
        degree += r * (2 * c.nu[i] + (1 if c.odd[i] else 0))
        weight += r * c.weights[i]
    return Bigrading(degree, weight)


def max_enumeration_weight() -> int:
    """Weight cap for basis enumeration (env CIRCUITCAT_MAX_WEIGHT)."""
    raw = os.environ.get("CIRCUITCAT_MAX_WEIGHT", "")
    return int(raw) if raw else DEFAULT_MAX_WEIGHT


@lru_cache(maxsize=None)
def _weight_basis(weights: tuple[int, ...], odd: tuple[bool, ...], w: int):
    """All exponent vectors of total weight w, descending-lex, as a tuple.

    Bounded knapsack over the generators; odd generators are capped at
    exponent 1.  Descending lex order makes v_0-heavy monomials come
    first, e.g. v_0^2 < v_0 v_3 < v_1 reading left to right.
    """

    def extend(i: int, remaining: int) -> list[Exponents]:
        if i == len(weights):
            return [()] if remaining == 0 else []
        cap = remaining // weights[i]
        if odd[i]:
            cap = min(cap, 1)
        out = []
        for r in range(cap, -1, -1):
            for rest in extend(i + 1, remaining - r * weights[i]):
                out.append((r,) + rest)
        return out

    return tuple(extend(0, w))


def monomials_of_weight(c: Circuit, w: int) -> list[Exponents]:
    """All monomials of weight exactly w, in descending-lex exponent order."""
    if w < 0:
        raise OutOfRange("weight must be nonnegative")
    if w > max_enumeration_weight():
        raise Overflow(f"weight {w} exceeds enumeration cap {max_enumeration_weight()}")
    return list(_weight_basis(c.weights, c.odd, w))


def multiply(c: Circuit, x: Exponents, y: Exponents) -> SignedMonomial:
    """The product x*y with its Koszul sign.

    The sign counts inversions between the odd generators of x (kept
    first) and those of y while merging into the canonical order
    v_0 < ... < v_{d+1}; a repeated odd generator kills the product.
    """
    exps = tuple(a + b for a, b in zip(x, y))
    odd_x = [i for i in c.odd_indices if x[i]]
    odd_y = [i for i in c.odd_indices if y[i]]
    if odd_x and odd_y:
        inversions = 0
        for i in odd_x:
            for j in odd_y:
                if i == j:
                    return SignedMonomial(0, exps)
                if i > j:
                    inversions += 1
        if inversions & 1:
            return SignedMonomial(-1, exps)
    return SignedMonomial(1, exps)


def hom_basis(c: Circuit, n: int, j: int, k: int) -> list[tuple[Exponents, Bigrading]]:
    """Ordered basis of Hom(j, k) with gradings; empty above the diagonal."""
    if n < 1:
        raise OutOfRange(f"need n >= 1, got {n}")
    if not (0 <= j <= n - 1 and 0 <= k <= n - 1):
        raise OutOfRange(f"objects ({j}, {k}) outside 0..{n - 1}")
    if j > k:
        return []
    return [(x, grading(c, x)) for x in monomials_of_weight(c, k - j)]


class CompositionEntry(NamedTuple):
    """One entry of the composition table: basis indices, sign, result index."""

    i: int
    j: int
    k: int
    left: int  # index into Hom(j, k)
    right: int  # index into Hom(i, j)
    sign: int
    result: int | None  # index into Hom(i, k); None when the product is zero


@dataclass(eq=False)
class BCategory:
    """Directed category on objects 0..n-1 with monomial Hom bases."""

    circuit: Circuit
    n: int
    hom: dict[tuple[int, int], tuple[Exponents, ...]] = field(repr=False)

    def basis(self, j: int, k: int) -> tuple[Exponents, ...]:
        if j > k:
            return ()
        return self.hom[(j, k)]

    def dim(self, j: int, k: int) -> int:
        return len(self.basis(j, k))

    def compose(self, x: Exponents, y: Exponents) -> SignedMonomial:
        """x after y, i.e. the product x*y."""
        return multiply(self.circuit, x, y)

    @cached_property
    def composition_table(self) -> tuple[CompositionEntry, ...]:
        entries = []
        for i in range(self.n):
            for j in range(i, self.n):
                for k in range(j, self.n):
                    target = {x: t for t, x in enumerate(self.basis(i, k))}
                    for li, left in enumerate(self.basis(j, k)):
                        for ri, right in enumerate(self.basis(i, j)):
                            sign, prod = multiply(self.circuit, left, right)
                            result = target[prod] if sign else None
                            entries.append(
                                CompositionEntry(i, j, k, li, ri, sign, result)
                            )
        return tuple(entries)

    def to_json_dict(self) -> dict:
        homs = []
        for (j, k), basis in sorted(self.hom.items()):
            homs.append(
                {
                    "src": j,
                    "dst": k,
                    "basis": [
                        {
                            "exp": list(x),
                            "deg": grading(self.circuit, x).degree,
                            "wt": grading(self.circuit, x).weight,
                        }
                        for x in basis
                    ],
                }
            )
        return {
            "objects": self.n,
            "homs": homs,
            "compositions": [
                {
                    "i": e.i,
                    "j": e.j,
                    "k": e.k,
                    "left": e.left,
                    "right": e.right,
                    "sign": e.sign,
                    "result": e.result,
                }
                for e in self.composition_table
            ],
        }


def build_bcategory(c: Circuit, n: int) -> BCategory:
    """Build all Hom bases for objects 0..n-1 (identity markers on the diagonal)."""
    if n < 1:
        raise OutOfRange(f"need n >= 1, got {n}")
    if n - 1 > max_enumeration_weight():
        raise Overflow(f"n={n} needs weights beyond the enumeration cap")
    hom = {}
    for j in range(n):
        for k in range(j, n):
            hom[(j, k)] = tuple(monomials_of_weight(c, k - j))
    return BCategory(circuit=c, n=n, hom=hom)


class Arrow(NamedTuple):
    src: int
    dst: int
    gen: int

    @property
    def label(self) -> str:
        return f"v{self.gen}"


def quiver(c: Circuit, n: int) -> list[Arrow]:
    """The single-generator morphisms: v_r from i to i + |a_r| when in range."""
    if n < 1:
        raise OutOfRange(f"need n >= 1, got {n}")
    arrows = []
    for gen, w in enumerate(c.weights):
        for i in range(n - w):
            arrows.append(Arrow(i, i + w, gen))
    return arrows


def iter_pairs(n: int) -> Iterator[tuple[int, int]]:
    """All directed object pairs j <= k below n."""
    for j in range(n):
        for k in range(j, n):
            yield j, k
