"""Small vector spaces over finite fields, ``M/M²``, and the line/hyperplane split.

Vectors are tuples of field-element indices at the API boundary and
integer codes inside: the code of ``(c_1, ..., c_n)`` is ``sum d(c_i) q^(i-1)``
where ``d`` ranks field elements with zero first. "Coordinate order" on
vectors and on linear functionals is code order, so the first coordinate
varies fastest.
"""

from __future__ import annotations

import itertools
import dataclasses
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import DimensionTooSmall, ImproperSubspace, NotMaximal
from .lattice import IdealLattice, bits
from .quotient import RingHom, make_quotient
from .ring import FiniteRing, make_zmod

Vector = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class FinVectorSpace:
    """``field^dim``. For an ``M/M²`` space, ``projection`` sends each element
    of ``M`` to its coordinate vector and ``basis`` lists ring elements whose
    classes form the basis."""

    field: FiniteRing = dataclasses.field(repr=False)
    dim: int
    projection: dict[int, Vector] | None = dataclasses.field(default=None, repr=False)
    basis: tuple[int, ...] = ()

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def size(self) -> int:
        return self.q**self.dim

    @cached_property
    def digits(self) -> tuple[int, ...]:
        F = self.field
        return (F.zero,) + tuple(a for a in range(F.order) if a != F.zero)

    @cached_property
    def tuples(self) -> tuple[Vector, ...]:
        d = self.digits
        return tuple(tuple(reversed(t)) for t in itertools.product(d, repeat=self.dim))

    @cached_property
    def codes(self) -> dict[Vector, int]:
        return {v: c for c, v in enumerate(self.tuples)}

    def code(self, v: Vector) -> int:
        return self.codes[tuple(v)]

    @cached_property
    def add_table(self) -> tuple[tuple[int, ...], ...]:
        A, T, C = self.field.add_table, self.tuples, self.codes
        return tuple(
            tuple(C[tuple(A[a][b] for a, b in zip(u, v))] for v in T) for u in T
        )

    @cached_property
    def scale_table(self) -> tuple[tuple[int, ...], ...]:
        M, T, C = self.field.mul_table, self.tuples, self.codes
        return tuple(tuple(C[tuple(M[s][a] for a in v)] for v in T) for s in range(self.q))

    @cached_property
    def dot_table(self) -> tuple[tuple[int, ...], ...]:
        """``dot_table[f][v]`` is the field element ``φ_f(v)``."""
        F, T = self.field, self.tuples

        def dot(f, v):
            out = F.zero
            for a, b in zip(f, v):
                out = F.add_table[out][F.mul_table[a][b]]
            return out

        return tuple(tuple(dot(f, v) for v in T) for f in T)

    def span_codes(self, gens: Iterable[int]) -> frozenset[int]:
        out = {0}
        add, scale = self.add_table, self.scale_table
        for g in gens:
            if g in out:
                continue
            line = {scale[s][g] for s in range(self.q)}
            out = {add[a][b] for a in out for b in line}
        return frozenset(out)

    def span(self, vecs: Iterable[Vector]) -> frozenset[Vector]:
        return frozenset(self.tuples[c] for c in self.span_codes(self.code(v) for v in vecs))

    def is_subspace_codes(self, S: frozenset[int]) -> bool:
        if 0 not in S:
            return False
        add, scale = self.add_table, self.scale_table
        members = list(S)
        return all(scale[s][a] in S for a in members for s in range(self.q)) and all(
            add[a][b] in S for a in members for b in members
        )


def standard_space(q: int, n: int) -> FinVectorSpace:
    """``F_q^n`` for prime ``q``."""
    return FinVectorSpace(make_zmod(q), n)


@dataclass(frozen=True)
class Split:
    u: Vector
    functional: Vector
    U: frozenset[Vector]
    H: frozenset[Vector]


def _split_codes(V: FinVectorSpace, W: frozenset[int]) -> tuple[int, int, frozenset[int], frozenset[int]]:
    if V.dim < 2:
        raise DimensionTooSmall(f"need dim >= 2, got {V.dim}")
    if len(W) == 1 or len(W) == V.size:
        raise ImproperSubspace("W must be nonzero and proper")
    F = V.field
    u = next(v for v in range(V.size) if v not in W)
    dots = V.dot_table
    for phi in range(V.size):
        row = dots[phi]
        if row[u] == F.one and any(row[w] != F.zero for w in W):
            break
    else:  # pragma: no cover - excluded by linear algebra
        raise AssertionError("no admissible functional")
    U = V.span_codes([u])
    H = frozenset(v for v in range(V.size) if dots[phi][v] == F.zero)
    return u, phi, U, H


def vs_split(V: FinVectorSpace, W: Iterable[Vector]) -> Split:
    """A line ``U`` and hyperplane ``H`` with ``V = U ⊕ H`` and ``W`` inside neither.

    ``W`` is given by spanning vectors. ``u`` is the first vector outside
    ``W`` in coordinate order and ``H`` is the kernel of the first
    functional with ``φ(u) = 1`` that does not vanish on ``W``.
    """
    Wc = V.span_codes(V.code(w) for w in W)
    u, phi, U, H = _split_codes(V, Wc)
    T = V.tuples
    return Split(T[u], T[phi], frozenset(T[c] for c in U), frozenset(T[c] for c in H))


def _problems_codes(V: FinVectorSpace, W: frozenset[int], U: frozenset[int], H: frozenset[int]) -> list[str]:
    out = []
    if not (V.is_subspace_codes(U) and len(U) == V.q):
        out.append("U is not a line")
    if not (V.is_subspace_codes(H) and len(H) * V.q == V.size):
        out.append("H is not a hyperplane")
    add = V.add_table
    if U & H != {0} or len({add[a][b] for a in U for b in H}) != V.size:
        out.append("U + H is not a direct sum equal to V")
    if W <= U:
        out.append("W ⊆ U")
    if W <= H:
        out.append("W ⊆ H")
    return out


def split_problems(V: FinVectorSpace, W: Iterable[Vector], s: Split) -> list[str]:
    """Postconditions of :func:`vs_split` that fail, checked by brute force."""
    Wc = V.span_codes(V.code(w) for w in W)
    U = frozenset(V.code(v) for v in s.U)
    H = frozenset(V.code(v) for v in s.H)
    return _problems_codes(V, Wc, U, H)


def subspace_codes(V: FinVectorSpace) -> list[frozenset[int]]:
    """Every subspace of ``V``, one per reduced row echelon form."""
    F = V.field
    n = V.dim
    others = [a for a in range(F.order) if a != F.zero]
    entries = [F.zero] + others
    out = [frozenset([0])]
    for k in range(1, n + 1):
        for pivots in itertools.combinations(range(n), k):
            free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
            for vals in itertools.product(entries, repeat=len(free)):
                rows = [[F.zero] * n for _ in range(k)]
                for r, p in enumerate(pivots):
                    rows[r][p] = F.one
                for (r, c), v in zip(free, vals):
                    rows[r][c] = v
                out.append(V.span_codes(V.code(tuple(row)) for row in rows))
    return out


def split_scan(q: int, n: int) -> tuple[int, list[tuple]]:
    """Run :func:`vs_split` on every nonzero proper ``W`` of ``F_q^n``.

    Returns the number of subspaces tried and the failures found.
    """
    V = standard_space(q, n)
    tried = 0
    failures = []
    for W in subspace_codes(V):
        if len(W) == 1 or len(W) == V.size:
            continue
        tried += 1
        _, _, U, H = _split_codes(V, W)
        bad = _problems_codes(V, W, U, H)
        if bad:
            failures.append((q, n, sorted(V.tuples[c] for c in W), bad))
    return tried, failures


# ---------------------------------------------------------------- M/M²


def _representatives(pi: RingHom) -> list[int]:
    reps = [-1] * pi.target.order
    for r, c in enumerate(pi.images):
        if reps[c] < 0:
            reps[c] = r
    return reps


def m_mod_m2(L: IdealLattice, M: int) -> FinVectorSpace:
    """``M/M²`` over the residue field ``R/M``.

    The basis is built greedily from elements of ``M`` in index order.
    """
    if not L.is_maximal[M]:
        raise NotMaximal(f"{L.label(M)} is not maximal")
    R = L.ring
    k, pi = make_quotient(R, L.ideal(M))
    reps = _representatives(pi)
    m2 = L.product(M, M)
    basis: list[int] = []
    span = m2
    for a in bits(L.masks[M]):
        if span == M:
            break
        if not L.masks[span] >> a & 1:
            basis.append(a)
            span = L.join(span, L.principal_index[a])
    V = FinVectorSpace(k, len(basis))
    if V.size * len(L.ideal(m2)) != len(L.ideal(M)):
        raise AssertionError("M/M^2 size does not match its basis")
    m2mask = L.masks[m2]
    proj: dict[int, Vector] = {}
    for vec in V.tuples:
        s = R.zero
        for c, b in zip(vec, basis):
            s = R.add(s, R.mul(reps[c], b))
        for a in bits(L.masks[M]):
            if m2mask >> R.sub(a, s) & 1:
                proj[a] = vec
    return FinVectorSpace(k, len(basis), proj, tuple(basis))


def lift_mask(V: FinVectorSpace, S: Iterable[Vector]) -> int:
    """Preimage in ``M`` of a set of vectors, as a ring-element bitmask."""
    S = set(S)
    out = 0
    for a, v in V.projection.items():
        if v in S:
            out |= 1 << a
    return out


def image_vectors(V: FinVectorSpace, mask: int) -> frozenset[Vector]:
    """Image in ``M/M²`` of the elements of ``mask`` that lie in ``M``."""
    return frozenset(v for a, v in V.projection.items() if mask >> a & 1)
