"""Quotient rings, their canonical surjections, and localization at a maximal ideal."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotAnIdeal, NotMaximal, RingMismatch
from .lattice import (
    Ideal,
    IdealLattice,
    bits,
    enumerate_ideals,
    ideal_span,
    is_ideal_mask,
)
from .ring import FiniteRing, make_ring


@dataclass(frozen=True, eq=False)
class RingHom:
    """A surjective ring homomorphism, stored as an element map.

    Only quotient maps are ever constructed, so ``images`` is onto and
    ``kernel`` is the preimage of the target's zero.
    """

    source: FiniteRing = field(repr=False)
    target: FiniteRing = field(repr=False)
    images: tuple[int, ...] = field(repr=False)
    kernel: Ideal = field(repr=False)

    def __call__(self, r: int) -> int:
        return self.images[r]

    def __repr__(self) -> str:
        return f"RingHom({self.source.provenance!r} -> {self.target.provenance!r})"


def _greedy_gens(J: Ideal) -> list[int]:
    R = J.ring
    gens: list[int] = []
    span = 1 << R.zero
    for a in J:
        if not span >> a & 1:
            gens.append(a)
            span = ideal_span(R, gens).members
    return gens


def make_quotient(
    R: FiniteRing, J: Ideal, label: str | None = None, provenance: str | None = None
) -> tuple[FiniteRing, RingHom]:
    """``R/J`` with cosets ordered by least representative, and the projection.

    Each coset is named after its least representative.
    """
    if J.ring is not R:
        raise RingMismatch("ideal is not an ideal of this ring")
    if not is_ideal_mask(R, J.members):
        raise NotAnIdeal(f"{J.names()} is not an ideal of {R.provenance}")
    js = list(J)
    rep_of = [-1] * R.order
    reps: list[int] = []
    for r in range(R.order):
        if rep_of[r] >= 0:
            continue
        reps.append(r)
        for j in js:
            rep_of[R.add_table[r][j]] = r
    image_of_rep = {r: k for k, r in enumerate(reps)}
    images = tuple(image_of_rep[rep_of[r]] for r in range(R.order))
    add = [[images[R.add_table[a][b]] for b in reps] for a in reps]
    mul = [[images[R.mul_table[a][b]] for b in reps] for a in reps]
    names = [R.name(r) for r in reps]
    if label is None:
        label = "(" + ",".join(R.name(g) for g in _greedy_gens(J)) + ")" if len(J) > 1 else "(0)"
    prov = provenance or f"({R.provenance})/{label}"
    Q = make_ring(add, mul, images[R.zero], images[R.one], names, prov)
    return Q, RingHom(R, Q, images, J)


def hom_image(phi: RingHom, I: Ideal) -> Ideal:
    """Elementwise image; an ideal because ``phi`` is onto."""
    if I.ring is not phi.source:
        raise RingMismatch("ideal does not live in the source ring")
    m = 0
    for a in I:
        m |= 1 << phi.images[a]
    return Ideal(phi.target, m)


def hom_preimage(phi: RingHom, J: Ideal) -> Ideal:
    """``{r : phi(r) in J}``; always contains the kernel."""
    if J.ring is not phi.target:
        raise RingMismatch("ideal does not live in the target ring")
    m = 0
    for r, v in enumerate(phi.images):
        if J.members >> v & 1:
            m |= 1 << r
    return Ideal(phi.source, m)


def saturation_kernel(L: IdealLattice, M: int) -> int:
    """``{r : s·r = 0 for some s outside M}`` as an element bitmask."""
    R = L.ring
    outside = [s for s in range(R.order) if not L.masks[M] >> s & 1]
    out = 0
    for r in range(R.order):
        col = [R.mul_table[s][r] for s in outside]
        if R.zero in col:
            out |= 1 << r
    return out


def localize_at_maximal(L: IdealLattice, M: Ideal | int) -> tuple[FiniteRing, RingHom]:
    """``R_M`` realized as ``R/K`` with ``K`` the saturation kernel of ``M``.

    For a finite ring this is the local factor of ``R`` at ``M``; the
    extension of an ideal is its image and the contraction its preimage.
    """
    m = L.index_of(M) if isinstance(M, Ideal) else M
    if not L.is_maximal[m]:
        raise NotMaximal(f"{L.label(m)} is not maximal in {L.ring.provenance}")
    R = L.ring
    K = Ideal(R, saturation_kernel(L, m))
    Q, phi = make_quotient(R, K, provenance=f"({R.provenance})_{L.label(m)}")
    QL = enumerate_ideals(Q)
    if sum(QL.is_maximal) != 1:
        raise AssertionError(f"localization of {R.provenance} at {L.label(m)} is not local")
    return Q, phi


def image_mask(phi: RingHom, mask: int) -> int:
    out = 0
    for a in bits(mask):
        out |= 1 << phi.images[a]
    return out


def preimage_mask(phi: RingHom, mask: int) -> int:
    out = 0
    for r, v in enumerate(phi.images):
        if mask >> v & 1:
            out |= 1 << r
    return out
