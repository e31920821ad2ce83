"""The standard ring corpus, a ring-name parser, and an on-disk lattice cache."""

from __future__ import annotations

import dataclasses
import json
import os
import re
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .errors import DuplicateRing, OrderCapExceeded, UnknownRing
from .lattice import IdealLattice, enumerate_ideals, lattice_from_masks
from .poly import find_irreducible_poly, is_prime, make_poly_quotient, monic_polys, poly_str
from .ring import FiniteRing, make_product, make_structure_constants, make_zmod

ORDER_CAP = 64
DEFAULT_CACHE_DIR = ".hollow-cache"


# ------------------------------------------------------------- presets


def _nilpotent_sc(divisors, names, products, provenance, one=None):
    """Structure constants from a sparse ``{(i, j): coords}`` product table.

    Generator 0 is the identity; missing products are zero.
    """
    k = len(divisors)
    table = [[[0] * k for _ in range(k)] for _ in range(k)]
    for i in range(k):
        table[0][i][i] = 1
        table[i][0][i] = 1
    for (i, j), coords in products.items():
        table[i][j] = list(coords)
        table[j][i] = list(coords)
    one = one or (1,) + (0,) * (k - 1)
    return make_structure_constants(divisors, table, one, names, provenance)


def _square_zero(p: int, nvars: int, provenance: str) -> FiniteRing:
    names = ("1",) + ("x", "y", "z")[:nvars]
    return _nilpotent_sc((p,) * (nvars + 1), names, {}, provenance)


PRESETS: dict[str, Callable[[], FiniteRing]] = {
    "F2[x,y]/(x,y)^2": lambda: _square_zero(2, 2, "F2[x,y]/(x,y)^2"),
    "Z4[x]/(x^2-2,2x)": lambda: _nilpotent_sc(
        (4, 2), ("1", "x"), {(1, 1): (2, 0)}, "Z4[x]/(x^2-2,2x)"
    ),
    "F2[x,y]/(x^2,y^2)": lambda: _nilpotent_sc(
        (2, 2, 2, 2), ("1", "x", "y", "xy"), {(1, 2): (0, 0, 0, 1)}, "F2[x,y]/(x^2,y^2)"
    ),
    "F3[x,y]/(x,y)^2": lambda: _square_zero(3, 2, "F3[x,y]/(x,y)^2"),
    "F2[x,y,z]/(x,y,z)^2": lambda: _square_zero(2, 3, "F2[x,y,z]/(x,y,z)^2"),
    "Z4[x]/(x^2)": lambda: _nilpotent_sc((4, 4), ("1", "x"), {}, "Z4[x]/(x^2)"),
    "Z4[x]/(x^2,2x)": lambda: _nilpotent_sc((4, 2), ("1", "x"), {}, "Z4[x]/(x^2,2x)"),
    "F2[x,y]/(x^2,xy,y^3)": lambda: _nilpotent_sc(
        (2, 2, 2, 2), ("1", "x", "y", "y^2"), {(2, 2): (0, 0, 0, 1)}, "F2[x,y]/(x^2,xy,y^3)"
    ),
    # not a gcd ring: x and y have two incomparable least principal ideals above them
    "F2[x,y]/(x^2,xy^2,y^3)": lambda: _nilpotent_sc(
        (2, 2, 2, 2, 2), ("1", "x", "y", "xy", "y^2"),
        {(1, 2): (0, 0, 0, 1, 0), (2, 2): (0, 0, 0, 0, 1)}, "F2[x,y]/(x^2,xy^2,y^3)",
    ),
    # Galois ring GR(4, 2): x^2 = -x - 1
    "Z4[x]/(x^2+x+1)": lambda: _nilpotent_sc(
        (4, 4), ("1", "x"), {(1, 1): (3, 3)}, "Z4[x]/(x^2+x+1)"
    ),
    "F2[x,y]/(x,y)^2 x Z/2": lambda: make_product(
        [_square_zero(2, 2, "F2[x,y]/(x,y)^2"), make_zmod(2)]
    ),
}


# -------------------------------------------------------- name parsing


def _strip_outer(s: str) -> str:
    while s.startswith("(") and s.endswith(")") and _balanced(s[1:-1]):
        s = s[1:-1].strip()
    return s


def _balanced(s: str) -> bool:
    depth = 0
    for ch in s:
        depth += ch in "(["
        depth -= ch in ")]"
        if depth < 0:
            return False
    return depth == 0


def split_product(name: str) -> list[str]:
    """Split a product name on top-level ``x`` / ``×`` separators."""
    parts, depth, start, i = [], 0, 0, 0
    s = name.replace("×", " x ")
    while i < len(s):
        ch = s[i]
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif depth == 0 and s.startswith(" x ", i):
            parts.append(s[start:i])
            i += 3
            start = i
            continue
        i += 1
    parts.append(s[start:])
    return [p.strip() for p in parts if p.strip()]


_TERM = re.compile(r"([+-]?)(\d*)(x(?:\^(\d+))?)?")


def parse_poly(text: str, p: int) -> tuple[int, ...]:
    """Coefficients, low degree first, of a polynomial like ``x^3+2x+1`` over F_p."""
    text = text.replace(" ", "").replace("*", "")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise UnknownRing(f"cannot parse polynomial {text!r}")
        sign, digits, mono, exp = m.groups()
        if not digits and not mono:
            raise UnknownRing(f"cannot parse polynomial {text!r}")
        c = int(digits) if digits else 1
        e = (int(exp) if exp else 1) if mono else 0
        coeffs[e] = coeffs.get(e, 0) + (-c if sign == "-" else c)
        pos = m.end()
    d = max(coeffs)
    return tuple(coeffs.get(i, 0) % p for i in range(d + 1))


_ZMOD = re.compile(r"Z/(\d+)(?:Z)?")
_FIELD = re.compile(r"F_?(\d+)")
_POLYQ = re.compile(r"F_?(\d+)\[x\]/\((.+)\)")


def _prime_power(q: int) -> tuple[int, int] | None:
    for p in range(2, q + 1):
        if q % p == 0:
            d, r = 0, q
            while r % p == 0:
                r //= p
                d += 1
            return (p, d) if r == 1 and is_prime(p) else None
    return None


def parse_ring(name: str) -> FiniteRing:
    """Build a ring from its provenance-style name.

    Accepted forms: ``Z/n``, ``Fp[x]/(f)``, ``Fq`` (``F4``, ``F_9``; prime
    ``q`` gives ``Z/q``), any preset name, and products joined by `` x ``.
    """
    name = " ".join(name.split())
    parts = split_product(name)
    if len(parts) > 1:
        if name in PRESETS:
            return PRESETS[name]()
        return make_product([parse_ring(_strip_outer(p)) for p in parts])
    s = _strip_outer(name).replace(" ", "")
    for key, build in PRESETS.items():
        if s == key.replace(" ", ""):
            return build()
    if m := _ZMOD.fullmatch(s):
        n = int(m.group(1))
        if n < 1:
            raise UnknownRing(f"bad modulus in {name!r}")
        return make_zmod(n)
    if m := _POLYQ.fullmatch(s):
        p = int(m.group(1))
        if not is_prime(p):
            raise UnknownRing(f"{p} is not prime in {name!r}")
        return make_poly_quotient(p, parse_poly(m.group(2), p))
    if m := _FIELD.fullmatch(s):
        pp = _prime_power(int(m.group(1)))
        if pp is None:
            raise UnknownRing(f"no field of order {m.group(1)}")
        p, d = pp
        return make_zmod(p) if d == 1 else make_poly_quotient(p, find_irreducible_poly(p, d))
    raise UnknownRing(f"cannot parse ring name {name!r}")


# ------------------------------------------------------------- corpus


@dataclass(frozen=True)
class CorpusSpec:
    """Which rings to generate. ``extra`` lists ring names for :func:`parse_ring`."""

    max_order: int = 32
    zmod: bool = True
    products: bool = True
    poly_quotients: bool = True
    presets: bool = True
    extra: tuple[str, ...] = ()

    @classmethod
    def from_json(cls, text: str) -> "CorpusSpec":
        data = json.loads(text)
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown corpus fields: {sorted(unknown)}")
        if "extra" in data:
            data["extra"] = tuple(data["extra"])
        return cls(**data)

    @classmethod
    def load(cls, path: str | os.PathLike) -> "CorpusSpec":
        return cls.from_json(Path(path).read_text())


def _zmods(n: int) -> list[FiniteRing]:
    return [make_zmod(k) for k in range(2, n + 1)]


def _products(n: int) -> list[FiniteRing]:
    out = []
    for a in range(2, n + 1):
        for b in range(a, n // a + 1):
            out.append(make_product([make_zmod(a), make_zmod(b)]))
    return out


def _poly_quotients(n: int) -> list[FiniteRing]:
    out = []
    for p in range(2, n + 1):
        if not is_prime(p):
            continue
        for d in (2, 3):
            if p**d <= n:
                out.extend(make_poly_quotient(p, f) for f in monic_polys(p, d))
    return out


def build_corpus(spec: CorpusSpec = CorpusSpec()) -> list[FiniteRing]:
    """Rings in deterministic order: zmods, products, polynomial quotients, presets, extras.

    Presets larger than ``max_order`` are skipped; extras must respect the cap.
    """
    if spec.max_order > ORDER_CAP:
        raise OrderCapExceeded(f"max_order {spec.max_order} exceeds the cap {ORDER_CAP}")
    n = spec.max_order
    rings: list[FiniteRing] = []
    if spec.zmod:
        rings += _zmods(n)
    if spec.products:
        rings += _products(n)
    if spec.poly_quotients:
        rings += _poly_quotients(n)
    if spec.presets:
        rings += [r for r in (build() for build in PRESETS.values()) if r.order <= n]
    for name in spec.extra:
        R = parse_ring(name)
        if R.order > ORDER_CAP:
            raise OrderCapExceeded(f"{name} has order {R.order} > {ORDER_CAP}")
        rings.append(R)
    seen: set[str] = set()
    for R in rings:
        if R.provenance in seen:
            raise DuplicateRing(f"{R.provenance} appears twice in the corpus")
        seen.add(R.provenance)
    return rings


def resolve_corpus(arg: str | None) -> list[FiniteRing]:
    """``None`` or ``"default"`` gives the default corpus; otherwise a JSON spec path."""
    if arg in (None, "default"):
        return build_corpus()
    return build_corpus(CorpusSpec.load(arg))


# -------------------------------------------------------------- cache


class LatticeCache:
    """Ideal lattices on disk, one JSON file per ring content hash.

    Only the ideal bitmasks are stored; flags and covers are rebuilt, so a
    hit is identical to a fresh enumeration. Writes go through a temporary
    file and an atomic rename, so concurrent writers of one key are safe.
    """

    def __init__(self, directory: str | os.PathLike | None = None):
        directory = directory or os.environ.get("HOLLOW_CACHE") or DEFAULT_CACHE_DIR
        self.dir = Path(directory)
        self.hits = 0
        self.misses = 0

    def path(self, R: FiniteRing) -> Path:
        return self.dir / f"{R.content_hash}.json"

    def load(self, R: FiniteRing) -> IdealLattice | None:
        try:
            data = json.loads(self.path(R).read_text())
        except (OSError, ValueError):
            return None
        if data.get("order") != R.order:
            return None
        return lattice_from_masks(R, (int(m, 16) for m in data["masks"]))

    def store(self, L: IdealLattice) -> None:
        self.dir.mkdir(parents=True, exist_ok=True)
        R = L.ring
        text = json.dumps(
            {"provenance": R.provenance, "order": R.order, "masks": [hex(m) for m in L.masks]}
        )
        fd, tmp = tempfile.mkstemp(dir=self.dir, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, self.path(R))

    def lattice(self, R: FiniteRing) -> IdealLattice:
        L = self.load(R)
        if L is not None:
            self.hits += 1
            return L
        self.misses += 1
        L = enumerate_ideals(R)
        self.store(L)
        return L


def get_lattice(R: FiniteRing, cache: LatticeCache | None = None) -> IdealLattice:
    return cache.lattice(R) if cache is not None else enumerate_ideals(R)


def find_ring(rings: Sequence[FiniteRing], name: str) -> FiniteRing:
    """The corpus member called ``name``, or a freshly parsed ring."""
    key = " ".join(name.split())
    for R in rings:
        if R.provenance == key:
            return R
    return parse_ring(name)
