"""Balanced integer circuits: validation, normalization and classification.

A circuit is a vector a in Z^(d+2), d >= 1, whose entries are nonzero and
sum to zero, together with a balanced integer marking nu of the same
length.  Everything else in the package is driven by this datum.  Inputs
are normalized to the internal order "positives first", with each block
sorted by ascending magnitude (stable), so the largest-magnitude negative
always sits last.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    LengthMismatch,
    NeedTwoPositives,
    Overflow,
    TooShort,
    UnbalancedA,
    UnbalancedNu,
    ZeroEntry,
)

MAX_ENTRY = 2**31  # entries above this could push weights past 64 bits


@dataclass(frozen=True)
class Circuit:
    """A validated circuit in internal order.

    entries: nonzero integers, positives first, each block sorted by |.|.
    nu: balanced marking, permuted alongside the entries.
    perm: perm[i] is the position in the originating order of internal
          slot i (identity for circuits built internally).
    """

    entries: tuple[int, ...]
    nu: tuple[int, ...]
    perm: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def d(self) -> int:
        return len(self.entries) - 2

    @cached_property
    def num_positive(self) -> int:
        return sum(1 for a in self.entries if a > 0)

    @cached_property
    def weights(self) -> tuple[int, ...]:
        return tuple(abs(a) for a in self.entries)

    @cached_property
    def odd(self) -> tuple[bool, ...]:
        """Generator parity flags: True where the entry is negative."""
        return tuple(a < 0 for a in self.entries)

    @cached_property
    def odd_indices(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.entries) if a < 0)

    @property
    def text(self) -> str:
        body = ",".join(str(a) for a in self.entries)
        marks = ",".join(str(v) for v in self.nu)
        return f"a={body};nu={marks}"

    def __str__(self) -> str:
        return self.text


def _check_pairs(a, nu, min_len=3) -> None:
    if len(a) != len(nu):
        raise LengthMismatch(f"{len(a)} entries but {len(nu)} markings")
    if len(a) < min_len:
        raise TooShort(f"need at least {min_len} entries, got {len(a)}")
    for x in a:
        if x == 0:
            raise ZeroEntry("circuit entries must be nonzero")
        if abs(x) > MAX_ENTRY:
            raise Overflow(f"|{x}| exceeds {MAX_ENTRY}")
    if sum(a) != 0:
        raise UnbalancedA(f"entries sum to {sum(a)}, expected 0")
    if sum(nu) != 0:
        raise UnbalancedNu(f"markings sum to {sum(nu)}, expected 0")


def validate_circuit(a, nu=None) -> Circuit:
    """Validate (a, nu) and return the circuit in canonical internal order.

    nu defaults to all zeros.  The canonical permutation puts positive
    entries first; both blocks are stably sorted by ascending magnitude,
    which leaves the largest-magnitude negative in the last slot.
    """
    a = tuple(int(x) for x in a)
    nu = (0,) * len(a) if nu is None else tuple(int(v) for v in nu)
    _check_pairs(a, nu)
    order = sorted(range(len(a)), key=lambda i: (a[i] < 0, abs(a[i])))
    return Circuit(
        entries=tuple(a[i] for i in order),
        nu=tuple(nu[i] for i in order),
        perm=tuple(order),
    )


def _from_internal(entries, nu) -> Circuit:
    """Build a circuit that is already in positives-first order.

    Used by decompose, whose output order is structural (the merged
    entry must stay in slot 0) and must not be re-sorted.  Rank 2 is
    allowed here: merging the positives of a rank-3 circuit produces the
    two-generator datum (V, -V), which is a valid algebra even though it
    is below the floor for user input.
    """
    entries, nu = tuple(entries), tuple(nu)
    _check_pairs(entries, nu, min_len=2)
    first_negative = len(entries)
    for i, x in enumerate(entries):
        if x < 0:
            first_negative = i
            break
    if any(x > 0 for x in entries[first_negative:]):
        raise UnbalancedA("entries not in positives-first order")
    return Circuit(entries, nu, tuple(range(len(entries))))


def parse_circuit(text: str) -> Circuit:
    """Parse the textual form "a=1,2,-3;nu=0,0,0" (the nu part is optional)."""
    a_part, _, nu_part = text.strip().partition(";")
    if a_part.startswith("a="):
        a_part = a_part[2:]
    try:
        a = [int(tok) for tok in a_part.split(",") if tok.strip()]
    except ValueError as exc:
        raise UnbalancedA(f"cannot parse entries from {a_part!r}") from exc
    nu = None
    if nu_part:
        if nu_part.startswith("nu="):
            nu_part = nu_part[3:]
        try:
            nu = [int(tok) for tok in nu_part.split(",") if tok.strip()]
        except ValueError as exc:
            raise UnbalancedNu(f"cannot parse markings from {nu_part!r}") from exc
    return validate_circuit(a, nu)


def signature(c: Circuit) -> tuple[int, int]:
    """(p, q) with p+1 positive and q+1 negative entries; p + q = d."""
    pos = c.num_positive
    return pos - 1, c.rank - pos - 1


def volume(c: Circuit) -> int:
    """Sum of the positive entries (equals the sum of negative magnitudes)."""
    return sum(a for a in c.entries if a > 0)


def negate(c: Circuit) -> Circuit:
    """The circuit (-a, -nu), renormalized.  Involutive up to `perm`."""
    return validate_circuit([-a for a in c.entries], [-v for v in c.nu])


@dataclass(frozen=True)
class CobordismKind:
    """Classification label for the birational transition a encodes."""

    kind: str  # "weighted-projective" | "blow-up" | "flip"
    mu: int  # number of exceptional objects, -a_{d+1}
    x_plus: str
    x_minus: str


def classify(c: Circuit) -> CobordismKind:
    """Classify by signature: (d,0) projective, (d-1,1) blow-up, else flip.

    The distinguished negative is the last internal entry (largest
    magnitude), so mu = -a_{d+1}.
    """
    p, q = signature(c)
    positives = c.entries[: c.num_positive]
    others = c.entries[c.num_positive : -1]  # negatives except distinguished
    mu = -c.entries[-1]
    pos_label = ",".join(str(a) for a in positives)
    if q == 0:
        return CobordismKind("weighted-projective", mu, f"P({pos_label})", "∅")
    x_plus = f"O_{{P({pos_label})}}({','.join(str(a) for a in others)})"
    if q == 1:
        stack = f"C^{c.d}" if others[0] == -1 else f"[C^{c.d}/mu{-others[0]}]"
        return CobordismKind("blow-up", mu, x_plus, stack)
    x_minus = (
        f"O_{{P({','.join(str(-a) for a in others)})}}"
        f"({','.join(str(-a) for a in positives)})"
    )
    return CobordismKind("flip", mu, x_plus, x_minus)


def decompose(c: Circuit) -> tuple[Circuit, Circuit]:
    """Split c into the rank-(d+1) merge b and the rank-3 head cc.

    b merges the first two positives into one slot; cc records the merged
    pair.  Both inherit markings accordingly and stay balanced.  The
    output order is structural and is not re-sorted.
    """
    if c.num_positive < 2:
        raise NeedTwoPositives("decompose needs at least two positive entries")
    a, nu = c.entries, c.nu
    b = _from_internal((a[0] + a[1],) + a[2:], (nu[0] + nu[1],) + nu[2:])
    cc = _from_internal((a[0], a[1], -a[0] - a[1]), (nu[0], nu[1], -nu[0] - nu[1]))
    return b, cc
