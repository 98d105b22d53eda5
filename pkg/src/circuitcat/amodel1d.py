"""Exact combinatorics of the one-dimensional model.

For a rank-3 circuit (a_0, a_1, -a_0-a_1) with a_0, a_1 > 0 the relevant
paths lift to straight segments in sheared coordinates: path k is
t |-> (t, k*t) on the exact rational domain [-1/a_0, 1/a_1].  Intersection
points of two lifts are indexed by the integers m in
[-(k-j)/a_0, (k-j)/a_1]; products of such points add the indices.  All
arithmetic is exact (ints and fractions), no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .circuit import Circuit, volume
from .errors import (
    BadOrder,
    BranchMismatch,
    NeedBaseCase,
    OutOfBounds,
    OutOfRange,
    VolumeBound,
    WrongHom,
)

INTERIOR = "interior"
THROUGH_PUNCTURE = "through-puncture"


@dataclass(frozen=True)
class LiftedSegment:
    """The lift of path k: t |-> (t, k*t) for t in [-1/a0, 1/a1]."""

    a0: int
    a1: int
    k: int

    def __post_init__(self):
        if self.a0 < 1 or self.a1 < 1:
            raise OutOfRange("slopes need a0, a1 >= 1")

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return Fraction(-1, self.a0), Fraction(1, self.a1)

    def contains(self, t: Fraction) -> bool:
        lo, hi = self.domain
        return lo <= t <= hi

    def point(self, t: Fraction) -> tuple[Fraction, Fraction]:
        return t, self.k * t

    def intersect_shifted(self, other: LiftedSegment, m: int) -> Fraction | None:
        """Parameter t solving self(t) = other(t) + (0, m), or None if parallel."""
        if self.k == other.k:
            return None
        return Fraction(m, self.k - other.k)


@dataclass(frozen=True)
class IntersectionPoint:
    """Intersection of lifts j and k (j < k) carrying its integer index m."""

    j: int
    k: int
    m: int

    def __post_init__(self):
        if self.j > self.k:
            raise BadOrder(f"need j <= k, got ({self.j}, {self.k})")


def bounds(a0: int, a1: int, j: int, k: int) -> tuple[Fraction, Fraction]:
    delta = k - j
    return Fraction(-delta, a0), Fraction(delta, a1)


def intersection_indices(a0: int, a1: int, j: int, k: int) -> list[int]:
    """All integers m with -(k-j)/a0 <= m <= (k-j)/a1, ascending."""
    if a0 < 1 or a1 < 1:
        raise OutOfRange("need a0, a1 >= 1")
    if j > k:
        raise BadOrder(f"need j <= k, got ({j}, {k})")
    delta = k - j
    return list(range(-(delta // a0), delta // a1 + 1))


def intersection_count(a0: int, a1: int, j: int, k: int) -> int:
    """floor((k-j)/a0) + floor((k-j)/a1) + 1."""
    if a0 < 1 or a1 < 1:
        raise OutOfRange("need a0, a1 >= 1")
    if j > k:
        raise BadOrder(f"need j <= k, got ({j}, {k})")
    delta = k - j
    return delta // a0 + delta // a1 + 1


def geometric_oracle(a0: int, a1: int, j: int, k: int) -> list[int]:
    """Independent check: intersect the lifted segments with exact rationals.

    For each candidate shift m, solve k*t = j*t + m and keep the solutions
    whose parameter lies in the common domain.  Coincident lifts (j = k)
    meet in the single index 0.
    """
    if a0 < 1 or a1 < 1:
        raise OutOfRange("need a0, a1 >= 1")
    if j > k:
        raise BadOrder(f"need j <= k, got ({j}, {k})")
    if j == k:
        return [0]
    seg_j = LiftedSegment(a0, a1, j)
    seg_k = LiftedSegment(a0, a1, k)
    delta = k - j
    found = []
    for m in range(-delta, delta + 1):  # |m| <= delta since a0, a1 >= 1
        t = seg_k.intersect_shifted(seg_j, m)
        if t is not None and seg_k.contains(t):
            found.append(m)
    return found


def intersection_points(a0: int, a1: int, j: int, k: int) -> list[IntersectionPoint]:
    return [IntersectionPoint(j, k, m) for m in intersection_indices(a0, a1, j, k)]


def triangle_product(
    a0: int, a1: int, k0: int, k1: int, k2: int, n1: int, n2: int
) -> tuple[int, str]:
    """Index of the unique directed triangle on (k0, k1, k2) and its region.

    The result index is n1 + n2 and always lies in the bounds for
    (k0, k2).  Same-sign inputs stay in the interior; opposite signs force
    the triangle through the puncture.
    """
    if not k0 <= k1 <= k2:
        raise OutOfBounds(f"need k0 <= k1 <= k2, got ({k0}, {k1}, {k2})")
    if n1 not in intersection_indices(a0, a1, k0, k1):
        raise OutOfBounds(f"n1={n1} outside bounds for ({k0}, {k1})")
    if n2 not in intersection_indices(a0, a1, k1, k2):
        raise OutOfBounds(f"n2={n2} outside bounds for ({k1}, {k2})")
    region = INTERIOR if n1 * n2 >= 0 else THROUGH_PUNCTURE
    return n1 + n2, region


@dataclass(frozen=True)
class Hom1dElement:
    """Basis morphism of the one-dimensional model.

    The element p_r^s sits on branch r in {0, 1} with power s >= 1 and has
    degree 2*nu(r)*s.  The identity is encoded as branch None, power 0.
    """

    branch: int | None
    power: int
    degree: int

    @property
    def is_identity(self) -> bool:
        return self.power == 0

    def __str__(self) -> str:
        if self.is_identity:
            return "1"
        return f"p{self.branch}^{self.power}"


def identity_1d() -> Hom1dElement:
    return Hom1dElement(None, 0, 0)


def _require_base_shape(c: Circuit) -> None:
    if c.d != 1 or c.num_positive != 2:
        raise NeedBaseCase(f"{c.text} is not a rank-3 circuit with two positives")


def hom_basis_1d(c: Circuit, n: int, j: int, k: int) -> list[Hom1dElement]:
    """Basis of Hom(L_j, L_k): p_r^{(k-j)/a_r} whenever a_r divides k-j."""
    _require_base_shape(c)
    if n >= volume(c):
        raise VolumeBound(f"n={n} must be < volume {volume(c)}")
    if not (0 <= j <= n - 1 and 0 <= k <= n - 1):
        raise OutOfRange(f"objects ({j}, {k}) outside 0..{n - 1}")
    if j > k:
        return []
    if j == k:
        return [identity_1d()]
    delta = k - j
    out = []
    for r in (0, 1):
        a_r = c.entries[r]
        if delta % a_r == 0:
            s = delta // a_r
            out.append(Hom1dElement(r, s, 2 * c.nu[r] * s))
    return out


def compose_1d(x: Hom1dElement, y: Hom1dElement) -> Hom1dElement:
    """x after y: powers add on a common branch, degrees add.

    A branch mismatch is impossible for composable morphisms within the
    volume bound, so hitting it signals a range violation.
    """
    if y.is_identity:
        return x
    if x.is_identity:
        return y
    if x.branch != y.branch:
        raise BranchMismatch(f"cannot compose {x} after {y}")
    return Hom1dElement(x.branch, x.power + y.power, x.degree + y.degree)


def kappa_1d(c: Circuit, r: int, x: Hom1dElement) -> int:
    """Section-count indicator on Hom(L_0, L_{a_r}): 1 exactly on p_r^1."""
    _require_base_shape(c)
    if r not in (0, 1):
        raise WrongHom(f"branch {r} not in (0, 1)")
    target = c.entries[r]
    if (
        x.is_identity
        or x.branch not in (0, 1)
        or x.power * c.entries[x.branch] != target
    ):
        raise WrongHom(f"{x} is not a basis element of Hom(L_0, L_{target})")
    return 1 if (x.branch == r and x.power == 1) else 0
