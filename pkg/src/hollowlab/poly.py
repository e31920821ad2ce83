"""Dense polynomials over F_p and the quotient rings F_p[x]/(f).

Coefficient sequences are stored low degree first: ``(1, 1, 1)`` is
``x^2 + x + 1``.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .errors import InvalidPolynomial, NotPrime
from .ring import FiniteRing, make_ring

Poly = tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


def _require_prime(p: int) -> None:
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p!r} is not prime")


def trim(f: Sequence[int]) -> Poly:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def poly_mod(f: Sequence[int], g: Sequence[int], p: int) -> Poly:
    """Remainder of ``f`` divided by the monic polynomial ``g`` over F_p."""
    r = [c % p for c in f]
    g = trim(c % p for c in g)
    dg = len(g) - 1
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            for j in range(dg + 1):
                r[i - dg + j] = (r[i - dg + j] - c * g[j]) % p
    return trim(r[:dg])


def poly_mul(f: Sequence[int], g: Sequence[int], p: int) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def poly_str(f: Sequence[int], var: str = "x") -> str:
    """Human-readable form, highest degree first: ``x^2+2x+1``."""
    terms = []
    for e in range(len(f) - 1, -1, -1):
        c = f[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            mono = var if e == 1 else f"{var}^{e}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def monic_polys(p: int, d: int):
    """All monic degree-``d`` polynomials, ordered by ``sum c_i p^i`` of the lower coefficients."""
    for low in itertools.product(range(p), repeat=d):
        yield tuple(reversed(low)) + (1,)


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Exhaustive factor scan: no monic factor of degree 1..deg(f)//2 divides ``f``."""
    f = trim(c % p for c in f)
    d = len(f) - 1
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for g in monic_polys(p, k):
            if not poly_mod(f, g, p):
                return False
    return True


def find_irreducible_poly(p: int, d: int) -> Poly:
    """Least monic irreducible polynomial of degree ``d`` over F_p."""
    _require_prime(p)
    if d < 1:
        raise InvalidPolynomial(f"degree must be >= 1, got {d}")
    for f in monic_polys(p, d):
        if is_irreducible(f, p):
            return f
    raise AssertionError("every degree has an irreducible polynomial")  # pragma: no cover


def make_poly_quotient(p: int, f: Sequence[int]) -> FiniteRing:
    """F_p[x]/(f) for monic ``f`` of degree >= 1.

    Residues are the polynomials of degree < deg f, indexed by
    ``sum c_i p^i`` and named like ``2x+1``.
    """
    _require_prime(p)
    f = trim(int(c) % p for c in f)
    if len(f) < 2:
        raise InvalidPolynomial("modulus must have degree >= 1")
    if f[-1] != 1:
        raise InvalidPolynomial(f"modulus {poly_str(f)} is not monic")
    d = len(f) - 1
    elems = [tuple(reversed(low)) for low in itertools.product(range(p), repeat=d)]

    def idx(c: Sequence[int]) -> int:
        c = list(c) + [0] * (d - len(c))
        return sum(v * p**i for i, v in enumerate(c))

    order = p**d
    assert all(idx(e) == i for i, e in enumerate(elems))
    add = [[idx([(a + b) % p for a, b in zip(x, y)]) for y in elems] for x in elems]
    mul = [[idx(poly_mod(poly_mul(trim(x), trim(y), p), f, p)) for y in elems] for x in elems]
    names = [poly_str(trim(e)) for e in elems]
    return make_ring(add, mul, 0, 1 % order, names, f"F{p}[x]/({poly_str(f)})")
