"""Finite commutative rings with identity, stored as dense operation tables.

Elements of an order-``m`` ring are the integers ``0..m-1``; every
constructor fixes a naming scheme so that witnesses stay readable.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import EmptyProduct, InvalidModulus, NotARing

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """An immutable finite commutative ring with identity.

    Equality is identity: two separately built copies of Z/6 are different
    ring objects, and ideals of one are not ideals of the other.
    """

    add_table: Table
    mul_table: Table
    zero: int
    one: int
    element_names: tuple[str, ...]
    provenance: str

    @property
    def order(self) -> int:
        return len(self.add_table)

    def __repr__(self) -> str:
        return f"FiniteRing({self.provenance!r}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.neg_table[b]]

    def pow(self, a: int, n: int) -> int:
        r = self.one
        for _ in range(n):
            r = self.mul_table[r][a]
        return r

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        z = self.zero
        return tuple(row.index(z) for row in self.add_table)

    @cached_property
    def name_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.element_names)}

    def element(self, name: str) -> int:
        """Index of the element called ``name``."""
        try:
            return self.name_index[name.strip()]
        except KeyError:
            raise KeyError(f"no element named {name!r} in {self.provenance}") from None

    def name(self, a: int) -> str:
        return self.element_names[a]

    @cached_property
    def units(self) -> tuple[int, ...]:
        one = self.one
        return tuple(a for a in range(self.order) if one in self.mul_table[a])

    def is_unit(self, a: int) -> bool:
        return self.one in self.mul_table[a]

    def is_zero_divisor(self, a: int) -> bool:
        """True when ``a·b = 0`` for some nonzero ``b`` (so 0 is one, except in the zero ring)."""
        z = self.zero
        return any(b != z and v == z for b, v in enumerate(self.mul_table[a]))

    @cached_property
    def content_hash(self) -> str:
        h = hashlib.sha256()
        h.update(f"{self.order}:{self.zero}:{self.one}:".encode())
        h.update(np.asarray(self.add_table, dtype=np.int16).tobytes())
        h.update(np.asarray(self.mul_table, dtype=np.int16).tobytes())
        return h.hexdigest()


def _first(bad: np.ndarray) -> tuple[int, ...]:
    return tuple(int(v) for v in np.argwhere(bad)[0])


def check_ring_axioms(add: Table, mul: Table, zero: int, one: int) -> None:
    """Full table scan of the commutative-ring-with-identity axioms.

    Raises NotARing naming the first violated law and a witness tuple.
    """
    A = np.asarray(add, dtype=np.int64)
    M = np.asarray(mul, dtype=np.int64)
    m = len(A)
    if m == 0:
        raise NotARing("nonempty", ())
    if A.shape != (m, m) or M.shape != (m, m):
        raise NotARing("square tables", (m,))
    for T, what in ((A, "additive closure"), (M, "multiplicative closure")):
        bad = (T < 0) | (T >= m)
        if bad.any():
            raise NotARing(what, _first(bad))
    if not (0 <= zero < m and 0 <= one < m):
        raise NotARing("identity indices", (zero, one))
    if m == 1:
        return
    idx = np.arange(m)
    bad = A[zero] != idx
    if bad.any():
        raise NotARing("additive identity", (zero, int(np.argmax(bad))))
    bad = A != A.T
    if bad.any():
        raise NotARing("additive commutativity", _first(bad))
    # (a+b)+c == a+(b+c)
    lhs = A[A[:, :, None], idx[None, None, :]]
    rhs = A[idx[:, None, None], A[None, :, :]]
    bad = lhs != rhs
    if bad.any():
        raise NotARing("additive associativity", _first(bad))
    has_inv = (A == zero).any(axis=1)
    if not has_inv.all():
        raise NotARing("additive inverse", (int(np.argmin(has_inv)),))
    bad = M != M.T
    if bad.any():
        raise NotARing("commutativity", _first(bad))
    lhs = M[M[:, :, None], idx[None, None, :]]
    rhs = M[idx[:, None, None], M[None, :, :]]
    bad = lhs != rhs
    if bad.any():
        raise NotARing("associativity", _first(bad))
    # a(b+c) == ab+ac
    lhs = M[idx[:, None, None], A[None, :, :]]
    rhs = A[M[:, :, None], M[:, None, :]]
    bad = lhs != rhs
    if bad.any():
        raise NotARing("distributivity", _first(bad))
    bad = M[one] != idx
    if bad.any():
        raise NotARing("multiplicative identity", (one, int(np.argmax(bad))))


def make_ring(add, mul, zero, one, names, provenance) -> FiniteRing:
    """Validate tables and wrap them in a FiniteRing."""
    add = tuple(tuple(int(v) for v in row) for row in add)
    mul = tuple(tuple(int(v) for v in row) for row in mul)
    check_ring_axioms(add, mul, zero, one)
    return FiniteRing(add, mul, int(zero), int(one), tuple(names), provenance)


def make_zmod(n: int) -> FiniteRing:
    """The integers modulo ``n``; element ``i`` is named ``"i"``."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidModulus(f"modulus must be a positive integer, got {n!r}")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return make_ring(add, mul, 0, 1 % n, [str(i) for i in range(n)], f"Z/{n}")


def _wrap(provenance: str) -> str:
    return f"({provenance})" if " x " in provenance else provenance


def make_product(factors: Sequence[FiniteRing]) -> FiniteRing:
    """Direct product with componentwise operations.

    Elements are tuples of factor elements in lexicographic order and are
    named ``"(a,b,...)"`` from the factor names.
    """
    factors = list(factors)
    if not factors:
        raise EmptyProduct("direct product needs at least one factor")
    if len(factors) == 1:
        return factors[0]
    elems = list(itertools.product(*(range(f.order) for f in factors)))
    index = {e: i for i, e in enumerate(elems)}

    def op(x, y, tables):
        return index[tuple(t[a][b] for t, a, b in zip(tables, x, y))]

    adds = [f.add_table for f in factors]
    muls = [f.mul_table for f in factors]
    add = [[op(x, y, adds) for y in elems] for x in elems]
    mul = [[op(x, y, muls) for y in elems] for x in elems]
    names = ["(" + ",".join(f.name(a) for f, a in zip(factors, e)) + ")" for e in elems]
    zero = index[tuple(f.zero for f in factors)]
    one = index[tuple(f.one for f in factors)]
    prov = " x ".join(_wrap(f.provenance) for f in factors)
    return make_ring(add, mul, zero, one, names, prov)


def _term(c: int, gen: str) -> str:
    if gen == "1":
        return str(c)
    return gen if c == 1 else f"{c}{gen}"


def coordinate_name(coords: Sequence[int], gen_names: Sequence[str]) -> str:
    terms = [_term(c, g) for c, g in zip(coords, gen_names) if c]
    return "+".join(terms) if terms else "0"


def make_structure_constants(
    divisors: Sequence[int],
    gen_products: Sequence[Sequence[Sequence[int]]],
    one: Sequence[int],
    gen_names: Sequence[str] | None = None,
    provenance: str | None = None,
) -> FiniteRing:
    """Ring on the additive group Z/d_1 x ... x Z/d_k from generator products.

    ``gen_products[i][j]`` is the coordinate tuple of ``e_i * e_j``;
    multiplication is the bilinear extension, reduced coordinatewise.
    The result is accepted only if the full axiom scan passes.
    """
    divisors = [int(d) for d in divisors]
    k = len(divisors)
    if k == 0 or any(d < 1 for d in divisors):
        raise InvalidModulus(f"bad divisors {divisors}")
    if gen_names is None:
        gen_names = [f"e{i + 1}" for i in range(k)]
    gp = np.asarray(gen_products, dtype=np.int64).reshape(k, k, k)
    D = np.asarray(divisors, dtype=np.int64)
    # first coordinate varies fastest, matching the residue-polynomial order
    elems = [tuple(reversed(e)) for e in itertools.product(*(range(d) for d in reversed(divisors)))]
    index = {e: i for i, e in enumerate(elems)}
    E = np.asarray(elems, dtype=np.int64).reshape(len(elems), k)

    add = [[index[tuple(((E[x] + E[y]) % D).tolist())] for y in range(len(elems))]
           for x in range(len(elems))]
    mul = []
    for x in range(len(elems)):
        row = []
        for y in range(len(elems)):
            c = np.einsum("i,j,ijk->k", E[x], E[y], gp) % D
            row.append(index[tuple(c.tolist())])
        mul.append(row)
    names = [coordinate_name(e, gen_names) for e in elems]
    one_t = tuple(int(c) % d for c, d in zip(one, divisors))
    if provenance is None:
        provenance = f"SC{tuple(divisors)}"
    return make_ring(add, mul, index[(0,) * k], index[one_t], names, provenance)
