"""Hollowness and irreducibility predicates over a finite ideal lattice.

Conventions used throughout:

* The zero ideal is never reported strongly hollow (SH) or completely
  strongly hollow (CSH), even though the bare pair condition holds for it
  vacuously; :func:`raw_sh` exposes the bare value.
* Strong irreducibility (SI/CSI) and complete irreducibility (CI) are
  properties of proper ideals only.
* ``Γ_I`` is the sum of the ideals not containing ``I`` and ``L_I = Γ_I : I``.

Most work happens on lattice indices; the public functions accept and return
:class:`~hollowlab.lattice.Ideal` values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NotASubmodule, NotGcdRing, ZeroIdealUndefined
from .lattice import Ideal, IdealLattice, bits

FAMILY_EXHAUSTIVE_LIMIT = 12


def _all(L: IdealLattice) -> int:
    return (1 << len(L)) - 1


def _memo(L: IdealLattice, key: str, fn):
    memo = L.memo
    if key not in memo:
        memo[key] = fn()
    return memo[key]


# ---------------------------------------------------------------- Γ and L


def gamma_index(L: IdealLattice, i: int) -> int:
    """Lattice index of ``Γ_I`` (an empty sum is the zero ideal)."""
    return _memo(L, "gamma", lambda: tuple(
        L.join_all(bits(_all(L) & ~L.up[k])) for k in range(len(L))
    ))[i]


def l_index(L: IdealLattice, i: int) -> int:
    return L.colon(gamma_index(L, i), i)


# ----------------------------------------------------------- hollowness


def sh_witness(L: IdealLattice, i: int) -> tuple[int, int] | None:
    """A pair ``(A, B)`` with ``I ⊆ A+B`` but ``I`` in neither, or None."""
    non = list(bits(_all(L) & ~L.up[i]))
    up = L.up[i]
    jt = L.join_table
    for x, a in enumerate(non):
        row = jt[a]
        for b in non[x:]:
            if up >> row[b] & 1:
                return a, b
    return None


def raw_sh(L: IdealLattice, i: int) -> bool:
    """The bare two-summand condition, which the zero ideal satisfies."""
    return sh_witness(L, i) is None


def is_sh_index(L: IdealLattice, i: int) -> bool:
    return _memo(L, "sh", lambda: tuple(
        k != 0 and raw_sh(L, k) for k in range(len(L))
    ))[i]


def is_csh_index(L: IdealLattice, i: int) -> bool:
    """CSH via the Γ criterion: ``I`` nonzero and ``I ⊄ Γ_I``."""
    return i != 0 and not L.le(i, gamma_index(L, i))


def _subfamilies(pool: list[int], principal: int):
    if len(pool) <= FAMILY_EXHAUSTIVE_LIMIT:
        for k in range(1, len(pool) + 1):
            yield from itertools.combinations(pool, k)
        return
    for k in range(1, 4):
        yield from itertools.combinations(pool, k)
    yield tuple(j for j in pool if principal >> j & 1)
    yield tuple(pool)


def csh_family_witness(L: IdealLattice, i: int) -> tuple[int, ...] | None:
    """Search for a family of ideals, none containing ``I``, whose sum contains ``I``.

    Only such families can break the family condition, so the pool is the
    non-containers of ``I``. Exhaustive when the pool has at most
    ``FAMILY_EXHAUSTIVE_LIMIT`` members; otherwise families of size <= 3, the
    principal non-containers and the whole pool.
    """
    pool = list(bits(_all(L) & ~L.up[i]))
    if i == 0:
        return ()
    for fam in _subfamilies(pool, L.principal_set):
        if fam and L.le(i, L.join_all(fam)):
            return fam
    return None


def is_csh_by_families(L: IdealLattice, i: int) -> bool:
    return csh_family_witness(L, i) is None


# -------------------------------------------------------- irreducibility


def si_witness(L: IdealLattice, k: int) -> tuple[int, int] | None:
    """A pair ``(A, B)`` with ``A ∩ B ⊆ K`` but neither inside ``K``, or None."""
    non = list(bits(_all(L) & ~L.down[k]))
    down = L.down[k]
    for x, a in enumerate(non):
        for b in non[x:]:
            if down >> L.meet(a, b) & 1:
                return a, b
    return None


def is_si_index(L: IdealLattice, k: int) -> bool:
    return _memo(L, "si", lambda: tuple(
        j != L.top and si_witness(L, j) is None for j in range(len(L))
    ))[k]


def is_csi_index(L: IdealLattice, k: int) -> bool:
    """CSI via the dual of the Γ criterion: the meet of all non-subideals escapes ``K``."""
    if k == L.top:
        return False
    return not L.le(L.meet_all(bits(_all(L) & ~L.down[k])), k)


def csi_family_witness(L: IdealLattice, k: int) -> tuple[int, ...] | None:
    pool = list(bits(_all(L) & ~L.down[k]))
    for fam in _subfamilies(pool, L.principal_set):
        if fam and L.le(L.meet_all(fam), k):
            return fam
    return None


def is_ci_index(L: IdealLattice, k: int) -> bool:
    return k != L.top and len(L.covers_above[k]) == 1


def is_waist_index(L: IdealLattice, k: int) -> bool:
    return L.up[k] | L.down[k] == _all(L)


# ------------------------------------------------------ classification


@dataclass(frozen=True)
class Case:
    """Which branch of the SH trichotomy an ideal falls in.

    ``kind`` is one of ``UniqueEscapedMaximal``, ``InAllMaximalPowers``,
    ``UniqueShallowMaximal``, ``NotSH`` or ``Unclassified`` (the last would
    be a counterexample). ``maximal`` and ``n`` are lattice index and exponent.
    """

    kind: str
    maximal: int | None = None
    n: int | None = None

    @property
    def number(self) -> int | None:
        return {"UniqueEscapedMaximal": 1, "InAllMaximalPowers": 2, "UniqueShallowMaximal": 3}.get(self.kind)


def shallow_exponent(L: IdealLattice, i: int, m: int) -> int | None:
    """Least ``n`` with ``I ⊄ M^n``, scanning powers until they stabilize."""
    for n, p in enumerate(L.powers(m), start=1):
        if not L.le(i, p):
            return n
    return None


def classify_sh(L: IdealLattice, i: int) -> Case:
    if not is_sh_index(L, i):
        return Case("NotSH")
    escaped = [m for m in L.maximals if not L.le(i, m)]
    if len(escaped) == 1:
        return Case("UniqueEscapedMaximal", escaped[0])
    if escaped:
        return Case("Unclassified")
    shallow = [(m, n) for m in L.maximals if (n := shallow_exponent(L, i, m)) is not None]
    if not shallow:
        return Case("InAllMaximalPowers")
    if len(shallow) == 1:
        return Case("UniqueShallowMaximal", *shallow[0])
    return Case("Unclassified")


@dataclass(frozen=True)
class HollowProfile:
    index: int
    gamma: Ideal
    l_ideal: Ideal
    is_sh: bool
    is_csh: bool
    case: Case
    raw_sh: bool


def hollow_profile(L: IdealLattice, I: Ideal | int) -> HollowProfile:
    i = I if isinstance(I, int) else L.index_of(I)
    g = gamma_index(L, i)
    return HollowProfile(
        i, L.ideal(g), L.ideal(L.colon(g, i)),
        is_sh_index(L, i), is_csh_index(L, i), classify_sh(L, i), raw_sh(L, i),
    )


@dataclass(frozen=True)
class IrreducibilityProfile:
    index: int
    is_si: bool
    is_csi: bool
    is_ci: bool
    is_waist: bool


def irreducibility_profile(L: IdealLattice, I: Ideal | int) -> IrreducibilityProfile:
    k = I if isinstance(I, int) else L.index_of(I)
    return IrreducibilityProfile(
        k, is_si_index(L, k), is_csi_index(L, k), is_ci_index(L, k), is_waist_index(L, k)
    )


# ------------------------------------------------------- small ideals


def small_in_index(L: IdealLattice, n: int, h: int) -> bool:
    if not L.le(n, h):
        raise NotASubmodule(f"{L.label(n)} is not contained in {L.label(h)}")
    for l in bits(L.down[h]):
        if l != h and L.join(n, l) == h:
            return False
    return True


def is_small_in(L: IdealLattice, N: Ideal, H: Ideal) -> bool:
    """``N ≪ H``: ``N + K = H`` forces ``K = H`` for every ideal ``K ⊆ H``."""
    return small_in_index(L, L.index_of(N), L.index_of(H))


# --------------------------------------------------- extremal searches


def maximal_sh_under_index(L: IdealLattice, i: int) -> tuple[int, ...]:
    cands = [k for k in bits(L.down[i]) if is_sh_index(L, k)]
    cset = sum(1 << k for k in cands)
    return tuple(k for k in cands if not (L.up[k] & cset) & ~(1 << k))


def maximal_sh_under(L: IdealLattice, I: Ideal) -> tuple[Ideal, ...]:
    """Inclusion-maximal SH ideals inside ``I``; empty when none exists."""
    return tuple(L.ideal(k) for k in maximal_sh_under_index(L, L.index_of(I)))


@dataclass(frozen=True)
class Least:
    ideal: int


@dataclass(frozen=True)
class NoLeast:
    minimal: tuple[int, ...]


@dataclass(frozen=True)
class AllContained:
    pass


@dataclass(frozen=True)
class Greatest:
    ideal: int


@dataclass(frozen=True)
class NoGreatest:
    maximal: tuple[int, ...]


def least_escape(L: IdealLattice, k: int) -> Least | NoLeast | AllContained:
    esc = _all(L) & ~L.down[k]
    if not esc:
        return AllContained()
    minimal = tuple(j for j in bits(esc) if L.down[j] & esc == 1 << j)
    if len(minimal) == 1:
        return Least(minimal[0])
    return NoLeast(minimal)


def least_not_contained_in(L: IdealLattice, K: Ideal | int):
    """Least ideal not inside ``K``, or the antichain of minimal ones.

    Results carry lattice indices.
    """
    return least_escape(L, K if isinstance(K, int) else L.index_of(K))


def greatest_non_container(L: IdealLattice, i: int) -> Greatest | NoGreatest:
    if i == 0:
        raise ZeroIdealUndefined("every ideal contains the zero ideal")
    cand = _all(L) & ~L.up[i]
    maximal = tuple(j for j in bits(cand) if L.up[j] & cand == 1 << j)
    if len(maximal) == 1:
        return Greatest(maximal[0])
    return NoGreatest(maximal)


def greatest_not_containing(L: IdealLattice, I: Ideal | int):
    return greatest_non_container(L, I if isinstance(I, int) else L.index_of(I))


# ------------------------------------------------------------ bijection


@dataclass(frozen=True)
class Bijection:
    """CSH ↔ CSI pairing. ``problems`` is empty when every property holds."""

    forward: dict[int, int]
    backward: dict[int, int]
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems


def csh_indices(L: IdealLattice) -> list[int]:
    return [i for i in range(len(L)) if is_csh_index(L, i)]


def csi_indices(L: IdealLattice) -> list[int]:
    return [k for k in range(len(L)) if is_csi_index(L, k)]


def bijection_maps(L: IdealLattice) -> Bijection:
    """``I ↦ Γ_I`` on CSH ideals and ``K ↦`` (least ideal escaping ``K``) on CSI ideals.

    On a local ring the explicit forms ``Γ_I = I·M`` and ``I = (Γ_I : M)``
    are verified as well.
    """
    problems = []
    csh, csi = csh_indices(L), csi_indices(L)
    forward = {i: gamma_index(L, i) for i in csh}
    backward = {}
    for k in csi:
        esc = least_escape(L, k)
        if isinstance(esc, Least):
            backward[k] = esc.ideal
        else:
            problems.append(f"no least escape from CSI {L.label(k)}")
    lab = L.labels
    for i, k in forward.items():
        if k not in backward:
            problems.append(f"Γ of {lab[i]} is {lab[k]}, not CSI")
        elif backward[k] != i:
            problems.append(f"{lab[i]} -> {lab[k]} -> {lab[backward[k]]}")
    for k, i in backward.items():
        if i not in forward:
            problems.append(f"least escape {lab[i]} of {lab[k]} is not CSH")
        elif forward[i] != k:
            problems.append(f"{lab[k]} -> {lab[i]} -> {lab[forward[i]]}")
    if len(L.maximals) == 1:
        m = L.maximals[0]
        for i, k in forward.items():
            if L.product(i, m) != k:
                problems.append(f"Γ of {lab[i]} is not {lab[i]}·M")
            if L.colon(k, m) != i:
                problems.append(f"({lab[k]} : M) is not {lab[i]}")
    return Bijection(forward, backward, tuple(problems))


def order_preserving(L: IdealLattice, pairing: dict[int, int]) -> bool:
    """``I ⊆ I'`` iff ``Γ_I ⊆ Γ_{I'}`` across all pairs."""
    items = list(pairing.items())
    return all(
        L.le(a, b) == L.le(fa, fb) for a, fa in items for b, fb in items
    )


# ------------------------------------------------------- gcd and (★)


@dataclass(frozen=True)
class GcdResult:
    """``status`` is ``"gcd"``, ``"unit"`` or ``"none"``.

    ``element`` is the least generator of the minimal principal ideal.
    """

    status: str
    element: int | None
    ideal: Ideal | None


def gcd_index(L: IdealLattice, x: int, y: int) -> int | None:
    """Least principal ideal containing ``Rx + Ry``, if unique."""
    table = L.memo.setdefault("gcd", {})
    key = (x, y) if x <= y else (y, x)
    if key not in table:
        s = L.join(L.principal_index[x], L.principal_index[y])
        cands = L.principal_set & L.up[s]
        least = [c for c in bits(cands) if cands & ~L.up[c] == 0]
        table[key] = least[0] if least else None
    return table[key]


def gcd_ideal(L: IdealLattice, x: int, y: int) -> GcdResult:
    g = gcd_index(L, x, y)
    if g is None:
        return GcdResult("none", None, None)
    status = "unit" if g == L.top else "gcd"
    return GcdResult(status, L.generators[g][0], L.ideal(g))


def is_gcd_ring(L: IdealLattice) -> bool:
    m = L.ring.order
    return _memo(L, "gcd_ring", lambda: all(
        gcd_index(L, x, y) is not None for x in range(m) for y in range(x, m)
    ))


def star_witness(L: IdealLattice, i: int) -> tuple[int, int] | None:
    """Elements ``(x, y)`` with ``I ⊆ R·gcd(x,y)`` but ``I ⊄ Rx`` and ``I ⊄ Ry``."""
    m = L.ring.order
    pidx = L.principal_index
    for x in range(m):
        for y in range(x, m):
            g = gcd_index(L, x, y)
            if g is None:
                raise NotGcdRing(
                    f"{L.ring.name(x)}, {L.ring.name(y)} have no gcd in {L.ring.provenance}"
                )
            if L.le(i, g) and not L.le(i, pidx[x]) and not L.le(i, pidx[y]):
                return x, y
    return None


def satisfies_star(L: IdealLattice, I: Ideal | int) -> bool:
    """(★) by exhaustive pair scan; raises NotGcdRing unless every pair has a gcd."""
    i = I if isinstance(I, int) else L.index_of(I)
    if not is_gcd_ring(L):
        raise NotGcdRing(f"{L.ring.provenance} has element pairs without a gcd")
    return star_witness(L, i) is None


# ------------------------------------------------------------ helpers


def sh_indices(L: IdealLattice) -> list[int]:
    return [i for i in range(len(L)) if is_sh_index(L, i)]
