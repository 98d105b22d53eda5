"""Recursive A-side category over a circuit and its mirror verification.

For a circuit with at least two positive entries, morphisms from L_j to
L_k split over the spectral index m in [-(k-j)/a_0, (k-j)/a_1]: the
summand at m is the weight-(k-j-sigma_w(m)) slice of the merged circuit b
obtained by fusing the first two positive generators into one.  The maps
chi / chi_inv implement the bijection (identify v_0 v_1 with w_0).

Composition is computed two independent ways: a rewriting engine that
factors morphisms into atomic generator steps and folds them (inserting a
w_0 whenever opposite spectral steps cancel), and a transport evaluator
that pulls both factors back through chi_inv, multiplies in the ambient
algebra and pushes the product forward again.  verify_iso checks that the
two agree with signs everywhere and that the mirror map is a graded
bijection compatible with composition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from . import balgebra
from .amodel1d import (
    Hom1dElement,
    compose_1d,
    hom_basis_1d,
    identity_1d,
    intersection_indices,
    kappa_1d,
)
from .balgebra import (
    BCategory,
    Exponents,
    build_bcategory,
    grading,
    identity_monomial,
    monomials_of_weight,
    multiply,
)
from .circuit import Circuit, _from_internal, decompose, volume
from .errors import (
    ExteriorOverflow,
    NeedTwoPositives,
    OutOfRange,
    VolumeBound,
    WrongHom,
)

FLAVOR_1D = "1d"
FLAVOR_RECURSIVE = "recursive"
FLAVOR_DUAL_LEAF = "dual-leaf"


class ShiftPair(NamedTuple):
    sigma_w: int  # weight shift a_0*m0 + a_1*m1
    sigma_d: int  # degree shift 2*(nu(0)*m0 + nu(1)*m1)


class AMorphism(NamedTuple):
    """A-side basis morphism: spectral index plus a merged-circuit monomial."""

    m: int
    inner: Exponents


def m_split(m: int) -> tuple[int, int]:
    """Write m = m1 - m0 with m0, m1 >= 0 and m0*m1 = 0."""
    return max(0, -m), max(0, m)


def sigma_shifts(c: Circuit, m: int) -> ShiftPair:
    """Weight and degree shifts attached to spectral index m."""
    if c.num_positive < 2:
        raise NeedTwoPositives("shifts need two positive generators")
    m0, m1 = m_split(m)
    return ShiftPair(
        c.entries[0] * m0 + c.entries[1] * m1,
        2 * (c.nu[0] * m0 + c.nu[1] * m1),
    )


@lru_cache(maxsize=None)
def _merge(c: Circuit) -> Circuit:
    return decompose(c)[0]


def chi(c: Circuit, x: Exponents) -> tuple[int, Exponents]:
    """Project a monomial to (spectral index, merged monomial).

    With e = min(r_0, r_1) the index is r_1 - r_0 and the merged monomial
    is w_0^e * w_1^{r_2} * ...; weight drops by sigma_w, degree by sigma_d.
    """
    if c.num_positive < 2:
        raise NeedTwoPositives("chi needs two positive generators")
    e = min(x[0], x[1])
    return x[1] - x[0], (e,) + x[2:]


def chi_inv(c: Circuit, m: int, inner: Exponents) -> Exponents:
    """Inverse of chi: restore the v_0 / v_1 exponents from (m, inner)."""
    if c.num_positive < 2:
        raise NeedTwoPositives("chi_inv needs two positive generators")
    b = _merge(c)
    if len(inner) != b.rank:
        raise OutOfRange(f"inner monomial of length {len(inner)}, expected {b.rank}")
    for i, r in enumerate(inner):
        if r < 0:
            raise OutOfRange(f"negative exponent at merged generator {i}")
        if r > 1 and b.odd[i]:
            raise ExteriorOverflow(f"odd merged generator w{i} squared")
    m0, m1 = m_split(m)
    return (inner[0] + m0, inner[0] + m1) + inner[1:]


def hom_decomposition(
    c: Circuit, n: int, j: int, k: int
) -> list[tuple[int, tuple[Exponents, ...]]]:
    """Spectral summands of Hom(L_j, L_k): (m, merged basis) per index m."""
    if c.num_positive < 2:
        raise NeedTwoPositives("decomposition needs two positive generators")
    if n >= volume(c):
        raise VolumeBound(f"n={n} must be < volume {volume(c)}")
    if not (0 <= j <= n - 1 and 0 <= k <= n - 1):
        raise OutOfRange(f"objects ({j}, {k}) outside 0..{n - 1}")
    if j > k:
        return []
    b = _merge(c)
    out = []
    for m in intersection_indices(c.entries[0], c.entries[1], j, k):
        w = (k - j) - sigma_shifts(c, m).sigma_w
        out.append((m, tuple(monomials_of_weight(b, w))))
    return out


# -- composition evaluators --------------------------------------------------


@lru_cache(maxsize=None)
def _gen_steps(b: Circuit) -> tuple[Exponents, ...]:
    return tuple(
        tuple(1 if t == g else 0 for t in range(b.rank)) for g in range(b.rank)
    )


@lru_cache(maxsize=None)
def _atoms(c: Circuit, f: AMorphism) -> tuple[int, ...]:
    """Factor a morphism into atomic generator steps.

    Generators are listed by descending index so that refolding them by
    left multiplication reproduces the canonical monomial with sign +1.
    """
    x = chi_inv(c, f.m, f.inner)
    atoms = []
    for i in range(len(x) - 1, -1, -1):
        atoms.extend([i] * x[i])
    return tuple(atoms)


def compose_rewriting(
    c: Circuit, x: AMorphism, y: AMorphism
) -> tuple[int, AMorphism | None]:
    """x after y, by atomic rewriting.

    Atoms with index 0 / 1 move the spectral accumulator; a step that
    cancels against the accumulator is rewritten into one w_0 insertion.
    All other atoms multiply into the merged monomial with Koszul signs.
    Returns (sign, result); sign 0 with result None when the product dies.
    """
    b = _merge(c)
    steps = _gen_steps(b)
    sign = 1
    m_acc = 0
    inner = identity_monomial(b)
    for g in _atoms(c, y) + _atoms(c, x):
        if g == 0:
            if m_acc > 0:
                inner = (inner[0] + 1,) + inner[1:]
            m_acc -= 1
        elif g == 1:
            if m_acc < 0:
                inner = (inner[0] + 1,) + inner[1:]
            m_acc += 1
        else:
            s, inner = multiply(b, steps[g - 1], inner)
            if s == 0:
                return 0, None
            sign *= s
    return sign, AMorphism(m_acc, inner)


def compose_transport(
    c: Circuit, x: AMorphism, y: AMorphism
) -> tuple[int, AMorphism | None]:
    """x after y, by transporting through chi_inv, multiplying, and chi."""
    xa = chi_inv(c, x.m, x.inner)
    ya = chi_inv(c, y.m, y.inner)
    s, prod = multiply(c, xa, ya)
    if s == 0:
        return 0, None
    return s, AMorphism(*chi(c, prod))


# -- the category ------------------------------------------------------------


@dataclass(eq=False)
class ACategory:
    """A-side directed category; structure depends on the circuit shape.

    recursive: morphisms are AMorphism pairs over the merged circuit,
    1d: the rank-3 base model with branch/power elements,
    dual-leaf: stand-in by the algebra-side category of the same circuit
    (taken when fewer than two entries are positive; flagged in reports).
    """

    circuit: Circuit
    n: int
    flavor: str
    hom: dict = field(repr=False)
    sub: "ACategory | None" = None
    bmodel: BCategory | None = None
    dual_leaves: tuple[str, ...] = ()

    def basis(self, j: int, k: int):
        if j > k:
            return ()
        return self.hom[(j, k)]

    def dim(self, j: int, k: int) -> int:
        return len(self.basis(j, k))

    def compose(self, x, y):
        """x after y via the rewriting engine (sign, element-or-None)."""
        if self.flavor == FLAVOR_RECURSIVE:
            return compose_rewriting(self.circuit, x, y)
        if self.flavor == FLAVOR_1D:
            return 1, compose_1d(x, y)
        s, prod = multiply(self.circuit, x, y)
        return (s, prod) if s else (0, None)

    def compose_via_transport(self, x, y):
        """Independent evaluator used as the composition oracle."""
        if self.flavor == FLAVOR_RECURSIVE:
            return compose_transport(self.circuit, x, y)
        return self.compose(x, y)

    def mirror(self, x: Exponents):
        """Image of an algebra-side basis monomial in this category."""
        if self.flavor == FLAVOR_RECURSIVE:
            return AMorphism(*chi(self.circuit, x))
        if self.flavor == FLAVOR_1D:
            return _mirror_1d(self.circuit, x)
        return x

    def mirror_inv(self, elem) -> Exponents:
        if self.flavor == FLAVOR_RECURSIVE:
            return chi_inv(self.circuit, elem.m, elem.inner)
        if self.flavor == FLAVOR_1D:
            if elem.is_identity:
                return identity_monomial(self.circuit)
            exps = [0] * self.circuit.rank
            exps[elem.branch] = elem.power
            return tuple(exps)
        return elem

    def element_degree(self, elem) -> int:
        if self.flavor == FLAVOR_RECURSIVE:
            inner_deg = grading(_merge(self.circuit), elem.inner).degree
            return inner_deg + sigma_shifts(self.circuit, elem.m).sigma_d
        if self.flavor == FLAVOR_1D:
            return elem.degree
        return grading(self.circuit, elem).degree


def _mirror_1d(c: Circuit, x: Exponents) -> Hom1dElement:
    if not any(x):
        return identity_1d()
    if x[2] or (x[0] and x[1]):
        raise WrongHom(f"{x} is not a pure branch power")
    r = 0 if x[0] else 1
    return Hom1dElement(r, x[r], 2 * c.nu[r] * x[r])


def build_acategory(c: Circuit, n: int) -> ACategory:
    """Build the A-side category on objects 0..n-1 (requires n < volume)."""
    return _build_cached(c, n)


@lru_cache(maxsize=None)
def _build_cached(c: Circuit, n: int) -> ACategory:
    if n < 1:
        raise OutOfRange(f"need n >= 1, got {n}")
    if n >= volume(c):
        raise VolumeBound(f"n={n} must be < volume {volume(c)}")
    pairs = list(balgebra.iter_pairs(n))
    if c.num_positive >= 2 and c.d == 1:
        hom = {(j, k): tuple(hom_basis_1d(c, n, j, k)) for j, k in pairs}
        return ACategory(c, n, FLAVOR_1D, hom)
    if c.num_positive >= 2:
        sub = build_acategory(_merge(c), n)
        hom = {
            (j, k): tuple(
                AMorphism(m, inner)
                for m, basis in hom_decomposition(c, n, j, k)
                for inner in basis
            )
            for j, k in pairs
        }
        return ACategory(
            c, n, FLAVOR_RECURSIVE, hom, sub=sub, dual_leaves=sub.dual_leaves
        )
    bmodel = build_bcategory(c, n)
    return ACategory(
        c,
        n,
        FLAVOR_DUAL_LEAF,
        dict(bmodel.hom),
        bmodel=bmodel,
        dual_leaves=(c.text,),
    )


# -- verification ------------------------------------------------------------


def _zero_nu(entries: tuple[int, ...]) -> Circuit:
    return _from_internal(entries, (0,) * len(entries))


def _fail(kind: str, max_index: int, **at) -> dict:
    return {"kind": kind, "max_index": max_index, "at": at}


_MAX_FAILURES = 25


class _Audit(NamedTuple):
    n_master: int
    failures: tuple[dict, ...]


@lru_cache(maxsize=None)
def _structural_audit(entries: tuple[int, ...]) -> _Audit:
    """Marking-independent checks at the maximal object count.

    Verifies, for every object pair below volume-1: the mirror bijection
    between algebra monomials and A-side elements, agreement of the two
    composition evaluators with the algebra product (signs included),
    spectral additivity with bound closure, and associativity of both
    composition laws.  Failures carry the largest object index involved
    so that reports for smaller n can filter them.
    """
    c = _zero_nu(entries)
    n = volume(c) - 1
    cat = build_acategory(c, n)
    recursive = cat.flavor == FLAVOR_RECURSIVE
    failures: list[dict] = []

    def record(f):
        if len(failures) < _MAX_FAILURES:
            failures.append(f)

    bbasis = {}
    images = {}
    for j, k in balgebra.iter_pairs(n):
        mons = tuple(monomials_of_weight(c, k - j))
        imgs = tuple(cat.mirror(x) for x in mons)
        bbasis[(j, k)] = mons
        images[(j, k)] = imgs
        round_trips = all(cat.mirror_inv(e) == x for x, e in zip(mons, imgs))
        if (
            len(set(imgs)) != len(mons)
            or set(imgs) != set(cat.basis(j, k))
            or not round_trips
        ):
            record(_fail("bijection", k, j=j, k=k))

    # signed[(i, j, k, later, earlier)] = (A-result, B-result)
    signed = {}
    for i in range(n):
        for j in range(i, n):
            earlier = bbasis[(i, j)]
            if not earlier:
                continue
            for k in range(j, n):
                later = bbasis[(j, k)]
                if not later:
                    continue
                spectral = (
                    set(intersection_indices(c.entries[0], c.entries[1], i, k))
                    if recursive
                    else ()
                )
                for y, fy in zip(earlier, images[(i, j)]):
                    for x, fx in zip(later, images[(j, k)]):
                        got = cat.compose(fx, fy)
                        oracle = cat.compose_via_transport(fx, fy)
                        s_b, prod = multiply(c, x, y)
                        b_res = (s_b, prod) if s_b else (0, None)
                        expected = (s_b, cat.mirror(prod)) if s_b else (0, None)
                        if got != oracle or got != expected:
                            record(
                                _fail(
                                    "composition", k, i=i, j=j, k=k, x=list(x), y=list(y)
                                )
                            )
                        if recursive and got[0]:
                            res_m = got[1].m
                            if res_m != fx.m + fy.m or res_m not in spectral:
                                record(_fail("spectral", k, i=i, j=j, k=k, m=res_m))
                        signed[(i, j, k, x, y)] = (got, b_res)

    for i in range(n):
        for j in range(i, n):
            if not bbasis[(i, j)]:
                continue
            for k in range(j, n):
                if not bbasis[(j, k)]:
                    continue
                for l in range(k, n):
                    if not bbasis[(k, l)]:
                        continue
                    for x, fx in zip(bbasis[(i, j)], images[(i, j)]):
                        for y in bbasis[(j, k)]:
                            a_yx, b_yx = signed[(i, j, k, y, x)]
                            for z, fz in zip(bbasis[(k, l)], images[(k, l)]):
                                a_zy, b_zy = signed[(j, k, l, z, y)]
                                if a_yx[0]:
                                    s, e = cat.compose(fz, a_yx[1])
                                    left = (a_yx[0] * s, e) if s else (0, None)
                                else:
                                    left = (0, None)
                                if a_zy[0]:
                                    s, e = cat.compose(a_zy[1], fx)
                                    right = (a_zy[0] * s, e) if s else (0, None)
                                else:
                                    right = (0, None)
                                if left != right:
                                    record(
                                        _fail("associativity", l, i=i, j=j, k=k, l=l)
                                    )
                                if b_yx[0]:
                                    s, e = multiply(c, z, b_yx[1])
                                    bl = (b_yx[0] * s, e) if s else (0, None)
                                else:
                                    bl = (0, None)
                                if b_zy[0]:
                                    s, e = multiply(c, b_zy[1], x)
                                    br = (b_zy[0] * s, e) if s else (0, None)
                                else:
                                    br = (0, None)
                                if bl != br:
                                    record(
                                        _fail("associativity-b", l, i=i, j=j, k=k, l=l)
                                    )
    return _Audit(n, tuple(failures))


@lru_cache(maxsize=None)
def _degree_audit(c: Circuit) -> tuple[dict, ...]:
    """Marking-dependent check: the mirror map preserves degrees."""
    n = volume(c) - 1
    cat = build_acategory(c, n)
    failures = []
    for j, k in balgebra.iter_pairs(n):
        for x in monomials_of_weight(c, k - j):
            elem = cat.mirror(x)
            if cat.element_degree(elem) != grading(c, x).degree:
                failures.append(_fail("degree", k, j=j, k=k, x=list(x)))
                if len(failures) >= _MAX_FAILURES:
                    return tuple(failures)
    return tuple(failures)


def verify_iso(c: Circuit, n: int) -> dict:
    """Check the mirror equivalence at object count n and report.

    The report follows the fixed schema {circuit, n, pairs_checked,
    dims_match, compositions_match, dual_leaves, witness}; dims_match
    covers the graded bijection (dimensions and degrees), while
    compositions_match covers evaluator agreement, spectral additivity
    and associativity.  Sub-levels of the recursion are verified too and
    folded into the booleans.
    """
    cat = build_acategory(c, n)
    dims_ok = True
    comp_ok = True
    witness = None

    level, level_cat = c, cat
    while True:
        audit = _structural_audit(level.entries)
        for f in audit.failures + _degree_audit(level):
            if f["max_index"] > n - 1:
                continue
            if f["kind"] in ("bijection", "degree"):
                dims_ok = False
            else:
                comp_ok = False
            if witness is None:
                witness = {"level": level.text, **f}
        if level_cat.flavor != FLAVOR_RECURSIVE:
            break
        level, level_cat = _merge(level), level_cat.sub

    return {
        "circuit": c.text,
        "n": n,
        "pairs_checked": n * (n + 1) // 2,
        "dims_match": dims_ok,
        "compositions_match": comp_ok,
        "dual_leaves": list(cat.dual_leaves),
        "witness": witness,
    }


def kappa(c: Circuit, j: int, x) -> int:
    """Indicator on Hom(L_0, L_{a_j}): 1 exactly on the mirror of v_j.

    j indexes a positive generator; x must be a basis element of the
    stated morphism space in the representation build_acategory uses for
    this circuit (an object count n > a_j must exist, i.e. a_j < volume).
    """
    if not 0 <= j <= c.num_positive - 1:
        raise WrongHom(f"generator {j} is not positive")
    a_j = c.entries[j]
    v_j = tuple(1 if t == j else 0 for t in range(c.rank))
    if c.num_positive >= 2 and c.d == 1:
        if not isinstance(x, Hom1dElement):
            raise WrongHom(f"expected a branch/power element, got {x!r}")
        return kappa_1d(c, j, x)
    if c.num_positive >= 2:
        if not isinstance(x, AMorphism):
            raise WrongHom(f"expected a spectral morphism, got {x!r}")
        if x.m not in intersection_indices(c.entries[0], c.entries[1], 0, a_j):
            raise WrongHom(f"index {x.m} outside bounds for (0, {a_j})")
        w = a_j - sigma_shifts(c, x.m).sigma_w
        if x.inner not in monomials_of_weight(_merge(c), w):
            raise WrongHom(f"{x.inner} is not a weight-{w} merged monomial")
        return 1 if chi_inv(c, x.m, x.inner) == v_j else 0
    if not isinstance(x, tuple) or x not in monomials_of_weight(c, a_j):
        raise WrongHom(f"{x!r} is not a weight-{a_j} monomial")
    return 1 if x == v_j else 0


def clear_caches() -> None:
    """Drop all memoized builds and audits (mainly for tests)."""
    _merge.cache_clear()
    _gen_steps.cache_clear()
    _atoms.cache_clear()
    _build_cached.cache_clear()
    _structural_audit.cache_clear()
    _degree_audit.cache_clear()
