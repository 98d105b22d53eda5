"""Euler pairings of exceptional collections and their braid mutations.

The Gram matrix records the pairings chi(E_j, E_k) of an ordered
collection; it is upper unitriangular because the category is directed.
A left mutation at position i replaces the pair (E_i, E_{i+1}) by
(F, E_i) with [F] = chi(E_i, E_{i+1})*[E_i] - [E_{i+1}] and recomputes
all pairings bilinearly; these moves satisfy the braid relations.  The
half twist is the braid word s_1 (s_2 s_1) ... (s_{n-1} ... s_1); applied
to the collection of a circuit it reproduces, up to conjugation by a
diagonal sign matrix, the collection of the negated circuit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .balgebra import hom_basis
from .circuit import Circuit, negate
from .errors import BadPosition, OutOfRange

EULER = "euler"
POINCARE = "poincare"


class DegreePoly:
    """Laurent polynomial in one variable t with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        cleaned = {d: c for d, c in (terms or {}).items() if c}
        object.__setattr__(self, "terms", cleaned)

    @staticmethod
    def monomial(degree: int, coeff: int = 1) -> "DegreePoly":
        return DegreePoly({degree: coeff})

    def __add__(self, other):
        if isinstance(other, int):
            other = DegreePoly({0: other})
        out = dict(self.terms)
        for d, co in other.terms.items():
            out[d] = out.get(d, 0) + co
        return DegreePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return DegreePoly({d: -co for d, co in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = DegreePoly({0: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = DegreePoly({0: other})
        out: dict[int, int] = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return DegreePoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        return isinstance(other, DegreePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for d in sorted(self.terms):
            co = self.terms[d]
            if d == 0:
                bits.append(str(co))
            else:
                head = "" if co == 1 else "-" if co == -1 else str(co)
                bits.append(f"{head}t^{d}" if d != 1 else f"{head}t")
        return " + ".join(bits)

    def to_json(self) -> list[list[int]]:
        return [[d, self.terms[d]] for d in sorted(self.terms)]


def _one(mode: str):
    return 1 if mode == EULER else DegreePoly({0: 1})


def _zero(mode: str):
    return 0 if mode == EULER else DegreePoly()


@dataclass(frozen=True)
class GramMatrix:
    """Upper unitriangular matrix of pairings, over Z or Z[t, 1/t]."""

    rows: tuple[tuple, ...]
    mode: str = EULER

    def __post_init__(self):
        n = len(self.rows)
        one, zero = _one(self.mode), _zero(self.mode)
        for r, row in enumerate(self.rows):
            if len(row) != n:
                raise OutOfRange("gram matrix must be square")
            if row[r] != one:
                raise OutOfRange(f"diagonal entry at {r} is not 1")
            for s in range(r):
                if row[s] != zero:
                    raise OutOfRange(f"entry below diagonal at ({r}, {s})")

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, r: int, s: int):
        return self.rows[r][s]

    def to_json_dict(self) -> dict:
        if self.mode == EULER:
            data = [list(row) for row in self.rows]
        else:
            data = [[e.to_json() for e in row] for row in self.rows]
        return {"mode": self.mode, "size": self.size, "rows": data}


def gram_of_collection(c: Circuit, n: int, mode: str = EULER) -> GramMatrix:
    """Pairing matrix of the n-object collection of the circuit.

    Entry (j, k) sums (-1)^degree (euler) or t^degree (poincare) over the
    basis of Hom(j, k).  Euler entries do not depend on the marking.
    """
    if mode not in (EULER, POINCARE):
        raise OutOfRange(f"unknown mode {mode!r}")
    if n < 1:
        raise OutOfRange(f"need n >= 1, got {n}")
    rows = []
    for j in range(n):
        row = []
        for k in range(n):
            if k < j:
                row.append(_zero(mode))
            else:
                entries = hom_basis(c, n, j, k)
                if mode == EULER:
                    row.append(sum((-1) ** g.degree for _, g in entries))
                else:
                    row.append(
                        sum(
                            (DegreePoly.monomial(g.degree) for _, g in entries),
                            DegreePoly(),
                        )
                    )
        rows.append(tuple(row))
    return GramMatrix(tuple(rows), mode)


def _transformed(g: GramMatrix, t_rows: list[list]) -> GramMatrix:
    """T * G * T^t for the class-substitution matrix T (rows of coefficients)."""
    n = g.size
    zero = _zero(g.mode)
    gt = [
        [
            sum((g.rows[r][u] * t_rows[s][u] for u in range(n)), zero)
            for s in range(n)
        ]
        for r in range(n)
    ]
    new_rows = tuple(
        tuple(
            sum((t_rows[r][u] * gt[u][s] for u in range(n)), zero) for s in range(n)
        )
        for r in range(n)
    )
    return GramMatrix(new_rows, g.mode)


def _substitution(g: GramMatrix, i: int, left: bool) -> list[list]:
    n = g.size
    if not 1 <= i <= n - 1:
        raise BadPosition(f"position {i} outside 1..{n - 1}")
    p = i - 1
    zero, one = _zero(g.mode), _one(g.mode)
    rows = [[one if r == s else zero for s in range(n)] for r in range(n)]
    coeff = g.rows[p][p + 1]
    if left:
        rows[p] = [zero] * n
        rows[p][p], rows[p][p + 1] = coeff, -one
        rows[p + 1] = [zero] * n
        rows[p + 1][p] = one
    else:
        rows[p] = [zero] * n
        rows[p][p + 1] = one
        rows[p + 1] = [zero] * n
        rows[p + 1][p], rows[p + 1][p + 1] = -one, coeff
    return rows


def mutate_left(g: GramMatrix, i: int) -> GramMatrix:
    """Left mutation at the pair in positions (i, i+1), 1-based."""
    return _transformed(g, _substitution(g, i, left=True))


def mutate_right(g: GramMatrix, i: int) -> GramMatrix:
    """Inverse of mutate_left at the same position."""
    return _transformed(g, _substitution(g, i, left=False))


def half_twist(g: GramMatrix) -> GramMatrix:
    """Apply the braid word s_1 (s_2 s_1) ... (s_{n-1} ... s_1) by left mutations."""
    for block in range(1, g.size):
        for i in range(block, 0, -1):
            g = mutate_left(g, i)
    return g


def _sign_conjugate_equal(h: tuple[tuple, ...], t: tuple[tuple, ...]) -> bool:
    """Is there d in {-1, +1}^n with d_r * d_s * h[r][s] == t[r][s] everywhere?

    Propagates sign constraints along nonzero entries; free components
    default to +1 (any choice works for them).
    """
    n = len(h)
    for r in range(n):
        for s in range(n):
            if abs(h[r][s]) != abs(t[r][s]):
                return False
    sign = [0] * n
    for start in range(n):
        if sign[start]:
            continue
        sign[start] = 1
        stack = [start]
        while stack:
            r = stack.pop()
            for s in range(n):
                if r == s:
                    continue
                h_rs = h[r][s] if s > r else h[s][r]
                t_rs = t[r][s] if s > r else t[s][r]
                if not h_rs:
                    continue
                needed = sign[r] * (1 if h_rs == t_rs else -1)
                if sign[s] == 0:
                    sign[s] = needed
                    stack.append(s)
                elif sign[s] != needed:
                    return False
    return True


def check_koszul_duality(c: Circuit, n: int) -> bool:
    """Does the half twist of the collection match the negated circuit's?

    Equality is required only up to conjugation by a diagonal sign matrix,
    which absorbs the shift ambiguity of the mutated classes.
    """
    twisted = half_twist(gram_of_collection(c, n, EULER))
    target = gram_of_collection(negate(c), n, EULER)
    return _sign_conjugate_equal(twisted.rows, target.rows)
