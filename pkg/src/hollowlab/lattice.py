"""Ideals as element bitmasks and the full ideal lattice of a finite ring.

Two bitset layers are in play. An ideal's ``members`` is a Python int whose
bit ``e`` is set when element ``e`` belongs to it; a lattice additionally
keeps, per ideal, an int over *lattice indices* (``up[i]`` has bit ``j`` set
when ideal ``i`` is contained in ideal ``j``). Python ints are arbitrary
width, so all set algebra stays word-parallel whatever the ring order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import RingMismatch, UnknownIdeal
from .ring import FiniteRing


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing = field(repr=False)
    members: int

    def __contains__(self, a: int) -> bool:
        return bool(self.members >> a & 1)

    def __len__(self) -> int:
        return popcount(self.members)

    def __iter__(self) -> Iterator[int]:
        return bits(self.members)

    def __le__(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        return self.members & other.members == self.members

    def __lt__(self, other: "Ideal") -> bool:
        return self <= other and self.members != other.members

    def __ge__(self, other: "Ideal") -> bool:
        return other <= self

    def __gt__(self, other: "Ideal") -> bool:
        return other < self

    @property
    def is_zero(self) -> bool:
        return self.members == 1 << self.ring.zero

    @property
    def is_whole(self) -> bool:
        return self.members == (1 << self.ring.order) - 1

    def names(self) -> list[str]:
        return [self.ring.name(a) for a in self]


def _same_ring(*ideals: Ideal) -> FiniteRing:
    R = ideals[0].ring
    for I in ideals[1:]:
        if I.ring is not R:
            raise RingMismatch(f"ideals live in different rings: {R!r} vs {I.ring!r}")
    return R


def full_mask(R: FiniteRing) -> int:
    return (1 << R.order) - 1


def zero_ideal(R: FiniteRing) -> Ideal:
    return Ideal(R, 1 << R.zero)


def whole_ring(R: FiniteRing) -> Ideal:
    return Ideal(R, full_mask(R))


def principal_mask(R: FiniteRing, a: int) -> int:
    m = 0
    for v in R.mul_table[a]:
        m |= 1 << v
    return m


def sum_mask(R: FiniteRing, I: int, J: int) -> int:
    """``I + J`` for additive subgroups given as bitmasks."""
    add = R.add_table
    js = list(bits(J))
    m = 0
    for a in bits(I):
        row = add[a]
        for b in js:
            m |= 1 << row[b]
    return m


def additive_closure(R: FiniteRing, mask: int) -> int:
    """Smallest additive subgroup containing the elements of ``mask``."""
    out = 1 << R.zero
    for g in bits(mask):
        if out >> g & 1:
            continue
        # cyclic subgroup of g, then sum
        cyc, x = 1 << R.zero, g
        while not cyc >> x & 1:
            cyc |= 1 << x
            x = R.add_table[x][g]
        out = sum_mask(R, out, cyc)
    return out


def is_ideal_mask(R: FiniteRing, mask: int) -> bool:
    if not mask >> R.zero & 1:
        return False
    els = list(bits(mask))
    for a in els:
        if not mask >> R.neg(a) & 1:
            return False
        for b in els:
            if not mask >> R.add_table[a][b] & 1:
                return False
        for v in R.mul_table[a]:
            if not mask >> v & 1:
                return False
    return True


def principal_ideal(R: FiniteRing, a: int) -> Ideal:
    """``Ra = {r·a : r in R}``."""
    return Ideal(R, principal_mask(R, a))


def ideal_span(R: FiniteRing, gens: Iterable[int]) -> Ideal:
    """Least ideal containing ``gens``: the sum of the principal ideals."""
    m = 1 << R.zero
    for g in gens:
        m = sum_mask(R, m, principal_mask(R, g))
    return Ideal(R, m)


def radical_mask(R: FiniteRing, mask: int) -> int:
    """``{r : r^n in I for some 1 <= n <= |R|}``."""
    out = 0
    for r in range(R.order):
        x = r
        for _ in range(R.order):
            if mask >> x & 1:
                out |= 1 << r
                break
            x = R.mul_table[x][r]
    return out


def colon_mask(R: FiniteRing, I: int, J: int) -> int:
    """``(I : J) = {r : rJ ⊆ I}``."""
    js = list(bits(J))
    out = 0
    for r in range(R.order):
        row = R.mul_table[r]
        if all(I >> row[b] & 1 for b in js):
            out |= 1 << r
    return out


def _is_prime_mask(R: FiniteRing, I: int) -> bool:
    full = full_mask(R)
    if I == full:
        return False
    outside = [a for a in range(R.order) if not I >> a & 1]
    mul = R.mul_table
    for a in outside:
        for b in outside:
            if I >> mul[a][b] & 1:
                return False
    return True


def _is_primary_mask(R: FiniteRing, I: int, rad: int) -> bool:
    if I == full_mask(R):
        return False
    mul = R.mul_table
    for a in range(R.order):
        if I >> a & 1:
            continue
        row = mul[a]
        for b in range(R.order):
            if I >> row[b] & 1 and not rad >> b & 1:
                return False
    return True


@dataclass(frozen=True, eq=False)
class IdealLattice:
    """Every ideal of ``ring``, sorted by (size, bitmask).

    Index 0 is the zero ideal and the last index is the ring itself.
    ``up[i]`` / ``down[i]`` are lattice-index bitsets of the ideals
    containing / contained in ideal ``i`` (both reflexive).
    """

    ring: FiniteRing = field(repr=False)
    masks: tuple[int, ...]
    up: tuple[int, ...] = field(repr=False)
    down: tuple[int, ...] = field(repr=False)
    hasse_edges: tuple[tuple[int, int], ...] = field(repr=False)
    is_prime: tuple[bool, ...] = field(repr=False)
    is_maximal: tuple[bool, ...] = field(repr=False)
    is_primary: tuple[bool, ...] = field(repr=False)
    radical: tuple[int, ...] = field(repr=False)
    is_minimal_prime: tuple[bool, ...] = field(repr=False)

    def __len__(self) -> int:
        return len(self.masks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IdealLattice):
            return NotImplemented
        return self.ring.content_hash == other.ring.content_hash and self.masks == other.masks

    __hash__ = object.__hash__

    @cached_property
    def index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.masks)}

    @property
    def top(self) -> int:
        return len(self.masks) - 1

    @property
    def bottom(self) -> int:
        return 0

    @cached_property
    def ideals(self) -> tuple[Ideal, ...]:
        return tuple(Ideal(self.ring, m) for m in self.masks)

    def ideal(self, i: int) -> Ideal:
        return self.ideals[i]

    def index_of(self, I: Ideal | int) -> int:
        if isinstance(I, Ideal):
            if I.ring is not self.ring:
                raise RingMismatch("ideal belongs to a different ring than the lattice")
            mask = I.members
        else:
            mask = I
        try:
            return self.index[mask]
        except KeyError:
            raise UnknownIdeal(f"mask {mask:#x} is not an ideal of {self.ring.provenance}") from None

    @property
    def containment(self) -> list[list[bool]]:
        n = len(self)
        return [[bool(self.up[i] >> j & 1) for j in range(n)] for i in range(n)]

    def le(self, i: int, j: int) -> bool:
        """Ideal ``i`` is contained in ideal ``j``."""
        return bool(self.up[i] >> j & 1)

    @cached_property
    def join_table(self) -> tuple[tuple[int, ...], ...]:
        n = len(self)
        up = self.up
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                c = up[i] & up[j]
                row.append((c & -c).bit_length() - 1)
            out.append(tuple(row))
        return tuple(out)

    def join(self, i: int, j: int) -> int:
        return self.join_table[i][j]

    def meet(self, i: int, j: int) -> int:
        return self.index[self.masks[i] & self.masks[j]]

    def join_all(self, idxs: Iterable[int]) -> int:
        out = 0
        jt = self.join_table
        for i in idxs:
            out = jt[out][i]
        return out

    def meet_all(self, idxs: Iterable[int]) -> int:
        m = full_mask(self.ring)
        for i in idxs:
            m &= self.masks[i]
        return self.index[m]

    @cached_property
    def principal_index(self) -> tuple[int, ...]:
        """Lattice index of ``Ra`` for each element ``a``."""
        return tuple(self.index[principal_mask(self.ring, a)] for a in range(self.ring.order))

    @cached_property
    def principal_set(self) -> int:
        """Lattice-index bitset of the principal ideals."""
        out = 0
        for i in self.principal_index:
            out |= 1 << i
        return out

    def is_principal(self, i: int) -> bool:
        return bool(self.principal_set >> i & 1)

    def product(self, i: int, j: int) -> int:
        cache = self.memo.setdefault("product", {})
        key = (i, j) if i <= j else (j, i)
        if key not in cache:
            mul = self.ring.mul_table
            pidx = self.principal_index
            jt = self.join_table
            out = 0
            bs = list(bits(self.masks[j]))
            for a in bits(self.masks[i]):
                row = mul[a]
                for b in bs:
                    out = jt[out][pidx[row[b]]]
            cache[key] = out
        return cache[key]

    @cached_property
    def memo(self) -> dict:
        """Scratch space for tables derived from this lattice by other modules."""
        return {}

    def power(self, i: int, n: int) -> int:
        """``I^n`` with ``I^0 = R``."""
        out = self.top
        for _ in range(n):
            out = self.product(out, i)
        return out

    def powers(self, i: int) -> list[int]:
        """``[I^1, I^2, ..., I^k]`` up to and including the first repeat ``I^k = I^(k+1)``."""
        seq = [i]
        while True:
            nxt = self.product(seq[-1], i)
            if nxt == seq[-1]:
                return seq
            seq.append(nxt)

    def colon(self, i: int, j: int) -> int:
        return self.index[colon_mask(self.ring, self.masks[i], self.masks[j])]

    @cached_property
    def covers_above(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in self.masks]
        for a, b in self.hasse_edges:
            out[a].append(b)
        return tuple(tuple(v) for v in out)

    @cached_property
    def covers_below(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in self.masks]
        for a, b in self.hasse_edges:
            out[b].append(a)
        return tuple(tuple(v) for v in out)

    @cached_property
    def maximals(self) -> tuple[int, ...]:
        return tuple(i for i, f in enumerate(self.is_maximal) if f)

    @cached_property
    def primes(self) -> tuple[int, ...]:
        return tuple(i for i, f in enumerate(self.is_prime) if f)

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return tuple(self._label(i) for i in range(len(self)))

    @cached_property
    def generators(self) -> tuple[tuple[int, ...], ...]:
        """A smallest generating set per ideal, least in index order."""
        return tuple(self._generators(i) for i in range(len(self)))

    def _generators(self, i: int) -> tuple[int, ...]:
        R = self.ring
        if i == 0:
            return (R.zero,)
        pidx = self.principal_index
        cands = [a for a in range(R.order) if self.masks[i] >> a & 1 and pidx[a] != 0]
        for k in range(1, len(cands) + 1):
            for combo in itertools.combinations(cands, k):
                if self.join_all(pidx[a] for a in combo) == i:
                    return combo
        raise AssertionError("an ideal is generated by its own elements")  # pragma: no cover

    def _label(self, i: int) -> str:
        return "(" + ",".join(self.ring.name(a) for a in self.generators[i]) + ")"

    def label(self, I: Ideal | int) -> str:
        i = I if isinstance(I, int) else self.index_of(I)
        return self.labels[i]


def enumerate_ideals(R: FiniteRing) -> IdealLattice:
    """Complete ideal lattice: principal ideals closed under sums to a fixpoint."""
    principals = sorted({principal_mask(R, a) for a in range(R.order)})
    found = set(principals)
    frontier = list(principals)
    while frontier:
        nxt = []
        for I in frontier:
            for P in principals:
                if P & I == P:
                    continue
                S = sum_mask(R, I, P)
                if S not in found:
                    found.add(S)
                    nxt.append(S)
        frontier = nxt
    return lattice_from_masks(R, found)


def lattice_from_masks(R: FiniteRing, masks: Iterable[int]) -> IdealLattice:
    """Build containment, covers and classical flags for a known set of ideals."""
    masks = tuple(sorted(set(masks), key=lambda m: (popcount(m), m)))
    n = len(masks)
    up = []
    down = []
    for i, a in enumerate(masks):
        u = d = 0
        for j, b in enumerate(masks):
            if a & b == a:
                u |= 1 << j
            if a & b == b:
                d |= 1 << j
        up.append(u)
        down.append(d)
    edges = []
    for i in range(n):
        strict = up[i] & ~(1 << i)
        for j in bits(strict):
            # j covers i when nothing lies strictly between them
            between = strict & down[j] & ~(1 << j)
            if not between:
                edges.append((i, j))
    full = full_mask(R)
    index = {m: i for i, m in enumerate(masks)}
    prime = tuple(_is_prime_mask(R, m) for m in masks)
    maximal = tuple(m != full and up[i] == (1 << i) | (1 << (n - 1)) for i, m in enumerate(masks))
    rads = tuple(index[radical_mask(R, m)] for m in masks)
    primary = tuple(_is_primary_mask(R, m, masks[rads[i]]) for i, m in enumerate(masks))
    minprime = []
    for i in range(n):
        below = down[i] & ~(1 << i)
        minprime.append(prime[i] and not any(prime[j] for j in bits(below)))
    return IdealLattice(
        R, masks, tuple(up), tuple(down), tuple(sorted(edges)),
        prime, maximal, primary, rads, tuple(minprime),
    )


def combine(kind: str, I: Ideal, J: Ideal | int, lattice: IdealLattice | None = None) -> Ideal:
    """Ideal algebra: ``sum``, ``intersect``, ``product`` or ``power``.

    For ``power`` the second operand is the exponent and ``I^0`` is ``R``.
    """
    R = I.ring
    if kind == "power":
        n = int(J)
        if n < 0:
            raise ValueError("negative exponent")
        out = whole_ring(R)
        for _ in range(n):
            out = combine("product", out, I)
        return out
    _same_ring(I, J)
    if kind == "sum":
        return Ideal(R, sum_mask(R, I.members, J.members))
    if kind == "intersect":
        return Ideal(R, I.members & J.members)
    if kind == "product":
        gens = {R.mul(a, b) for a in I for b in J}
        return ideal_span(R, sorted(gens))
    raise ValueError(f"unknown combination {kind!r}")


def colon(I: Ideal, J: Ideal) -> Ideal:
    """``(I : J)``; the annihilator of ``J`` is ``colon(zero, J)``."""
    R = _same_ring(I, J)
    return Ideal(R, colon_mask(R, I.members, J.members))


def annihilator(J: Ideal) -> Ideal:
    return colon(zero_ideal(J.ring), J)


@dataclass(frozen=True)
class IdealClass:
    is_prime: bool
    is_maximal: bool
    is_primary: bool
    radical: Ideal
    is_minimal_prime: bool


def classify_ideal(L: IdealLattice, I: Ideal) -> IdealClass:
    i = L.index_of(I)
    return IdealClass(
        L.is_prime[i], L.is_maximal[i], L.is_primary[i],
        L.ideal(L.radical[i]), L.is_minimal_prime[i],
    )


@dataclass(frozen=True)
class LatticeSummary:
    jacobson_radical: Ideal
    nilradical: Ideal
    maximal: tuple[int, ...]
    is_local: bool
    is_field: bool


def nilpotent_mask(R: FiniteRing) -> int:
    return radical_mask(R, 1 << R.zero)


def lattice_summary(L: IdealLattice) -> LatticeSummary:
    R = L.ring
    jac = full_mask(R)
    for i in L.maximals:
        jac &= L.masks[i]
    nil = nilpotent_mask(R)
    return LatticeSummary(
        Ideal(R, jac), Ideal(R, nil), L.maximals,
        len(L.maximals) == 1,
        R.order > 1 and len(L) == 2,
    )


@dataclass(frozen=True)
class RingFlags:
    is_arithmetical: bool
    is_bezout: bool


def is_distributive(L: IdealLattice) -> bool:
    n = len(L)
    for i in range(n):
        for j in range(n):
            ij = L.meet(i, j)
            for k in range(j + 1, n):
                if L.meet(i, L.join(j, k)) != L.join(ij, L.meet(i, k)):
                    return False
    return True


def ring_flags(L: IdealLattice) -> RingFlags:
    bezout = L.principal_set == (1 << len(L)) - 1
    return RingFlags(is_distributive(L), bezout)
