"""Executable theorem checks over a single ring.

A check has two halves. ``instances(ctx)`` enumerates every tuple that
satisfies the hypotheses, as a dict of named objects, and
``holds(ctx, **inst)`` decides the conclusion for one tuple. Keeping the
halves apart lets a failing tuple be replayed on its own.

Naming convention for instance keys, relied on by witness serialization:
keys starting with an upper-case letter are lattice indices of ideals, the
single letters ``a``, ``x``, ``y`` are ring elements, and anything else is
plain JSON data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterator

from .hollow import (
    Greatest,
    Least,
    csi_family_witness,
    gamma_index,
    greatest_non_container,
    is_ci_index,
    is_csh_by_families,
    is_csh_index,
    is_csi_index,
    is_gcd_ring,
    is_sh_index,
    is_si_index,
    is_waist_index,
    l_index,
    least_escape,
    maximal_sh_under_index,
    satisfies_star,
    small_in_index,
    classify_sh,
)
from .lattice import (
    IdealLattice,
    bits,
    enumerate_ideals,
    is_ideal_mask,
    lattice_summary,
    ring_flags,
)
from .quotient import RingHom, image_mask, localize_at_maximal, make_quotient, preimage_mask
from .ring import FiniteRing
from .vspace import FinVectorSpace, lift_mask, m_mod_m2, split_problems, subspace_codes, vs_split

ELEMENT_KEYS = frozenset({"a", "x", "y"})


@dataclass(frozen=True, eq=False)
class Transport:
    """A quotient map together with the target's lattice."""

    source: IdealLattice
    hom: RingHom
    lattice: IdealLattice

    def image(self, i: int) -> int:
        return self.lattice.index[image_mask(self.hom, self.source.masks[i])]

    def preimage(self, q: int) -> int:
        return self.source.index[preimage_mask(self.hom, self.lattice.masks[q])]


class RingContext:
    """Per-ring cache of everything the checks share."""

    def __init__(self, ring: FiniteRing, lattice: IdealLattice | None = None):
        self.R = ring
        self.L = lattice if lattice is not None else enumerate_ideals(ring)
        self._quotients: dict[int, Transport] = {}
        self._local: dict[int, Transport] = {}
        self._spaces: dict[int, FinVectorSpace] = {}

    @property
    def n(self) -> int:
        return len(self.L)

    @cached_property
    def summary(self):
        return lattice_summary(self.L)

    @cached_property
    def flags(self):
        return ring_flags(self.L)

    @cached_property
    def jr(self) -> int:
        return self.L.index[self.summary.jacobson_radical.members]

    @cached_property
    def nil(self) -> int:
        return self.L.index[self.summary.nilradical.members]

    @property
    def maximals(self) -> tuple[int, ...]:
        return self.L.maximals

    @property
    def is_local(self) -> bool:
        return len(self.L.maximals) == 1

    @cached_property
    def non_zero_divisors(self) -> tuple[int, ...]:
        return tuple(a for a in range(self.R.order) if not self.R.is_zero_divisor(a))

    def le(self, i: int, j: int) -> bool:
        return self.L.le(i, j)

    def sh(self, i: int) -> bool:
        return is_sh_index(self.L, i)

    def csh(self, i: int) -> bool:
        return is_csh_index(self.L, i)

    def si(self, k: int) -> bool:
        return is_si_index(self.L, k)

    def csi(self, k: int) -> bool:
        return is_csi_index(self.L, k)

    def gamma(self, i: int) -> int:
        return gamma_index(self.L, i)

    def strictly_below(self, i: int) -> list[int]:
        return list(bits(self.L.down[i] & ~(1 << i)))

    def escapes_powers(self, i: int, a: int, start: int = 1) -> bool:
        """``I ⊄ A^n`` for some ``n >= start`` (powers scanned to stabilization)."""
        return any(not self.le(i, p) for p in self.L.powers(a)[start - 1:])

    def quotient(self, j: int) -> Transport:
        if j not in self._quotients:
            Q, phi = make_quotient(self.R, self.L.ideal(j))
            self._quotients[j] = Transport(self.L, phi, enumerate_ideals(Q))
        return self._quotients[j]

    def localization(self, m: int) -> Transport:
        if m not in self._local:
            Q, phi = localize_at_maximal(self.L, m)
            self._local[m] = Transport(self.L, phi, enumerate_ideals(Q))
        return self._local[m]

    def mspace(self, m: int) -> FinVectorSpace:
        if m not in self._spaces:
            self._spaces[m] = m_mod_m2(self.L, m)
        return self._spaces[m]

    def minimal_escapes(self, k: int) -> list[int]:
        """Inclusion-minimal ideals not contained in ``K``."""
        L = self.L
        esc = (1 << len(L)) - 1 & ~L.down[k]
        return [j for j in bits(esc) if L.down[j] & esc == 1 << j]

    def maximal_non_containers(self, i: int) -> list[int]:
        """Inclusion-maximal ideals not containing ``I``."""
        L = self.L
        cand = (1 << len(L)) - 1 & ~L.up[i]
        return [j for j in bits(cand) if L.up[j] & cand == 1 << j]

    def is_domain(self) -> bool:
        R = self.R
        return R.order > 1 and all(
            not R.is_zero_divisor(a) for a in range(R.order) if a != R.zero
        )


Instances = Callable[[RingContext], Iterator[dict]]
Holds = Callable[..., bool]


@dataclass(frozen=True)
class TheoremCheck:
    """One statement of the theory made executable.

    ``degenerate`` marks statements whose hypotheses cannot be met by a
    finite ring, so corpus-wide vacuity is expected. ``finite_hypothesis``
    marks statements whose chain-condition hypothesis every finite ring
    satisfies, so that hypothesis is never varied.
    """

    id: str
    anchor: str
    quote: str
    scope: str
    instances: Instances = field(repr=False)
    holds: Holds = field(repr=False)
    degenerate: bool = False
    finite_hypothesis: bool = False
    note: Callable[[RingContext], str | None] | None = field(default=None, repr=False)


REGISTRY: dict[str, TheoremCheck] = {}


def register(id, anchor, quote, scope, instances, holds, **kw) -> TheoremCheck:
    chk = TheoremCheck(id, anchor, quote, scope, instances, holds, **kw)
    REGISTRY[id] = chk
    return chk


def _all_ideals(ctx):
    for i in range(ctx.n):
        yield {"I": i}


def _nonzero_ideals(ctx):
    for i in range(1, ctx.n):
        yield {"I": i}


def _sh_ideals(ctx):
    for i in range(ctx.n):
        if ctx.sh(i):
            yield {"I": i}


# ------------------------------------------------------ existence, Γ


def _h_max_sh(ctx, I):
    below = [k for k in bits(ctx.L.down[I]) if ctx.sh(k)]
    H = maximal_sh_under_index(ctx.L, I)
    if not below:
        return H == ()
    if not H:
        return False
    for h in H:
        if not (ctx.sh(h) and ctx.le(h, I)):
            return False
        if any(k != h and ctx.le(h, k) for k in below):
            return False
    return all(any(ctx.le(k, h) for h in H) for k in below)


register(
    "chk-max-sh", "Thm. max_sh", "maximal strongly hollow ideal $H$",
    "every ideal I; SH ideals below I have inclusion-maximal members, none iff no SH below",
    _all_ideals, _h_max_sh,
)


def _i_csh(ctx):
    for i in range(ctx.n):
        if ctx.csh(i):
            yield {"I": i}


def _h_sandwich(ctx, I):
    L, g = ctx.L, ctx.gamma(I)
    below = L.down[I] & ~(1 << I)
    greatest = [b for b in bits(below) if below & ~L.down[b] == 0]
    above = L.up[g] & ~(1 << g)
    least = [a for a in bits(above) if above & ~L.up[a] == 0]
    return greatest == [L.meet(I, g)] and least == [L.join(I, g)]


register(
    "chk-gamma-sandwich", "Prop. after max_sh", "greatest ideal strictly contained in",
    "CSH I; I∩Γ_I is the greatest ideal strictly below I and I+Γ_I the least strictly above Γ_I",
    _i_csh, _h_sandwich,
)


def _i_colon_sh(ctx):
    L = ctx.L
    for i in range(ctx.n):
        for a in ctx.non_zero_divisors:
            if ctx.sh(L.meet(i, L.principal_index[a])):
                yield {"I": i, "a": a}


def _h_colon_sh(ctx, I, a):
    L = ctx.L
    ra = L.principal_index[a]
    c = L.colon(I, ra)
    return ctx.sh(c) and (not ctx.csh(L.meet(I, ra)) or ctx.csh(c))


register(
    "chk-colon-sh", "Prop. colon_ideal", "then $I:Ra$ is strongly hollow",
    "I and non-zero-divisor a with I∩Ra SH (CSH); (I:Ra) is SH (CSH)",
    _i_colon_sh, _h_colon_sh,
)


# ------------------------------------------------- quotients and maps


def _i_quotient(ctx):
    for i in range(ctx.n):
        if ctx.sh(i):
            for j in range(ctx.n):
                if not ctx.le(i, j):
                    yield {"I": i, "J": j}


def _h_quotient(ctx, I, J):
    T = ctx.quotient(J)
    QL = T.lattice
    q = T.image(ctx.L.join(I, J))
    return (
        is_sh_index(QL, q)
        and gamma_index(QL, q) == T.image(ctx.gamma(I))
        and l_index(QL, q) == T.image(l_index(ctx.L, I))
    )


register(
    "chk-quotient-gamma", "quotient Prop.", "Γ_{(I+J)/J}=Γ_I/J",
    "SH I and J with I⊄J; (I+J)/J is SH in R/J with Γ and L equal to Γ_I/J and L_I/J",
    _i_quotient, _h_quotient,
)


def _i_surj(ctx):
    for k in range(ctx.n):
        for i in range(ctx.n):
            if ctx.sh(i) and not ctx.le(i, k):
                yield {"I": i, "K": k}


def _h_surj(ctx, I, K):
    T = ctx.quotient(K)
    q = T.image(I)
    return is_sh_index(T.lattice, q) and (not ctx.csh(I) or is_csh_index(T.lattice, q))


register(
    "chk-surj-image", "surjection Prop.", "Then $\\varphi(I)$ is strongly hollow in",
    "quotient maps R→R/K and SH I⊄K; φ(I) is SH, and CSH when I is",
    _i_surj, _h_surj,
)


def _sh_preimages(ctx, small: bool):
    for k in range(ctx.n):
        T = ctx.quotient(k)
        for q in range(len(T.lattice)):
            if is_sh_index(T.lattice, q):
                h = T.preimage(q)
                if not small or small_in_index(ctx.L, k, h):
                    yield {"K": k, "H": h}


def _h_ker_preimage(ctx, K, H):
    L = ctx.L
    for A in range(ctx.n):
        for B in range(A, ctx.n):
            if ctx.le(H, L.join(A, B)):
                if not (ctx.le(H, L.join(A, K)) or ctx.le(H, L.join(B, K))):
                    return False
    return True


register(
    "chk-ker-preimage", "Prop. ker-preimage", "preimage of a strongly hollow",
    "kernel K and SH J' of R/K with H its preimage; H⊆A+B gives H⊆A+K or H⊆B+K",
    lambda ctx: _sh_preimages(ctx, False), _h_ker_preimage,
)


def _h_small_kernel(ctx, K, H):
    T = ctx.quotient(K)
    q = T.image(H)
    return ctx.sh(H) and (not is_csh_index(T.lattice, q) or ctx.csh(H))


register(
    "chk-small-kernel", "small-kernel Thm.", "If $\\ker\\varphi\\ll H$",
    "preimage H of an SH (CSH) ideal with K≪H; H is SH (CSH)",
    lambda ctx: _sh_preimages(ctx, True), _h_small_kernel,
)


# ------------------------------------------- extremal characterizations


def _h_least(ctx, I):
    realized = set()
    for k in range(ctx.n):
        e = least_escape(ctx.L, k)
        if isinstance(e, Least):
            realized.add(e.ideal)
    if ctx.csh(I) != (I in realized):
        return False
    return not ctx.csh(I) or least_escape(ctx.L, ctx.gamma(I)) == Least(I)


register(
    "chk-least", "Thm. least", "least (by inclusion) ideal with",
    "every ideal I; CSH iff I is the least ideal escaping some K, with K=Γ_I realizing it",
    _all_ideals, _h_least,
)


def _h_gamma_greatest(ctx, I):
    g = greatest_non_container(ctx.L, I)
    if ctx.csh(I) != isinstance(g, Greatest):
        return False
    return not isinstance(g, Greatest) or g.ideal == ctx.gamma(I)


register(
    "chk-gamma-greatest", "Thm. Gamma", "greatest ideal of $R$ with",
    "nonzero I; CSH iff a greatest non-container exists, and it is Γ_I",
    _nonzero_ideals, _h_gamma_greatest,
)


def _h_csh_gamma(ctx, I):
    return ctx.csh(I) == is_csh_by_families(ctx.L, I)


register(
    "chk-csh-gamma", "Remark after Thm. Gamma", "if and only if $I\\not\\subseteq \\Gamma_I$",
    "nonzero I; the Γ criterion agrees with bounded family sampling",
    _nonzero_ideals, _h_csh_gamma,
)


def _arith(gen):
    def inner(ctx):
        if ctx.flags.is_arithmetical:
            yield from gen(ctx)
    return inner


def _h_arith_minimal(ctx, I):
    return ctx.csh(I) == any(I in ctx.minimal_escapes(k) for k in range(ctx.n))


register(
    "chk-arith-minimal", "arithmetical Prop.", "minimal (by inclusion) ideal with",
    "arithmetical rings, every I; CSH iff I is a minimal escape from some K",
    _arith(_all_ideals), _h_arith_minimal,
)


def _i_si_escape(ctx):
    for k in range(ctx.n):
        if ctx.si(k):
            for i in ctx.minimal_escapes(k):
                yield {"K": k, "I": i}


register(
    "chk-si-minimal-escape", "Cor. after arithmetical Prop.", "minimal with respect to not being",
    "SI K and a minimal escape I from K; I is CSH",
    _i_si_escape, lambda ctx, K, I: ctx.csh(I),
)


def _i_all_k(ctx):
    for k in range(ctx.n):
        yield {"K": k}


def _h_arith_dual(ctx, K):
    return ctx.si(K) == any(K in ctx.maximal_non_containers(i) for i in range(1, ctx.n))


register(
    "chk-arith-dual", "dual Cor. (arithmetical)", "maximal (by inclusion) ideal with",
    "arithmetical rings, every K; SI iff K is a maximal non-container of some nonzero I",
    _arith(_i_all_k), _h_arith_dual,
)


def _i_sh_dual(ctx):
    for i in range(ctx.n):
        if ctx.sh(i):
            for k in ctx.maximal_non_containers(i):
                yield {"I": i, "K": k}


register(
    "chk-sh-dual", "dual Cor. (SH)", "then $K$ is strongly irreducible",
    "SH I and a maximal non-container K of I; K is SI",
    _i_sh_dual, lambda ctx, I, K: ctx.si(K),
)


# ------------------------------------------------- Jacobson radical


def _i_sh_escaping(ctx):
    for i in range(ctx.n):
        if ctx.sh(i) and not ctx.le(i, ctx.jr):
            yield {"I": i}


def _h_escapes(ctx, I):
    g = ctx.gamma(I)
    escaped = [m for m in ctx.maximals if not ctx.le(I, m)]
    return ctx.csh(I) and ctx.L.is_maximal[g] and escaped == [g]


register(
    "chk-escapes-jacobson", "Thm. escapes_jacobian", "the unique maximal ideal of",
    "SH I⊄J(R); I is CSH and Γ_I is the unique maximal ideal not containing I",
    _i_sh_escaping, _h_escapes,
)


def _i_semiprimitive(ctx):
    if ctx.jr == 0:
        yield from _sh_ideals(ctx)


register(
    "chk-semiprimitive", "Cor. (semi-primitive)", "zero Jacobson radical",
    "rings with J(R)=0, SH I; I is CSH",
    _i_semiprimitive, lambda ctx, I: ctx.csh(I),
)


def _minimal_outside_jr(ctx, I):
    return not ctx.le(I, ctx.jr) and all(ctx.le(b, ctx.jr) for b in ctx.strictly_below(I))


register(
    "chk-si-min", "Prop. si_min", "not being contained within $J(R)$",
    "SH I⊄J(R); I is minimal among ideals not inside J(R)",
    _i_sh_escaping, _minimal_outside_jr,
)


def _i_min_jr(ctx):
    for i in range(ctx.n):
        if _minimal_outside_jr(ctx, i):
            yield {"I": i}


register(
    "chk-min-jr", "Thm. after si_min", "contained in $J(R)$, then $I$",
    "I minimal among ideals not inside J(R); I is CSH",
    _i_min_jr, lambda ctx, I: ctx.csh(I),
)


def _i_colon_equal(ctx):
    for inst in _i_colon_sh(ctx):
        if not ctx.le(inst["I"], ctx.jr):
            yield inst


def _h_colon_equal(ctx, I, a):
    L = ctx.L
    ra = L.principal_index[a]
    return L.colon(I, ra) == I and ctx.csh(I) and L.product(I, ra) == L.meet(I, ra)


register(
    "chk-colon-equal", "Prop. (I=(I:Ra))", "$I=(I:Ra)$ and $I$ is",
    "I⊄J(R), non-zero-divisor a, I∩Ra SH; I=(I:Ra), I is CSH and Ia=I∩Ra",
    _i_colon_equal, _h_colon_equal,
)


def _i_domain(ctx):
    if ctx.is_domain():
        yield {}


def _h_domain(ctx):
    proper_ok = all(ctx.le(i, ctx.jr) for i in range(ctx.n - 1) if ctx.sh(i))
    has_sh = any(ctx.sh(i) for i in range(ctx.n))
    return proper_ok and has_sh == ctx.summary.is_field


register(
    "chk-domain-field", "Thm. int_domain_radical + Cor. cont", "if and only if $R$ is a field",
    "finite domains (all fields); proper SH ideals lie in J(R), SH ideals exist iff field",
    _i_domain, _h_domain, degenerate=True,
)


def _i_gamma_proper(ctx):
    for i in range(ctx.n):
        if ctx.gamma(i) != ctx.L.top:
            yield {"I": i}


register(
    "chk-gamma-proper", "Prop. (Γ_I proper)", "either $I\\subseteq J(R)$ or",
    "I with Γ_I proper; I⊆J(R) or I is CSH",
    _i_gamma_proper, lambda ctx, I: ctx.le(I, ctx.jr) or ctx.csh(I),
)


def _h_weakly_coprime(ctx, I):
    L = ctx.L
    g_max = L.is_maximal[ctx.gamma(I)]
    for A in range(ctx.n):
        for B in range(A, ctx.n):
            s = L.join(A, B)
            relevant = s == L.top or (L.is_maximal[s] and not g_max)
            if relevant and ctx.le(I, s) and not (ctx.le(I, A) or ctx.le(I, B)):
                return False
    return True


register(
    "chk-weakly-coprime", "Prop. (weakly coprime)", "sum of weakly coprime ideals",
    "I with Γ_I proper; SH against coprime pairs, and against weakly coprime pairs when Γ_I is not maximal",
    _i_gamma_proper, _h_weakly_coprime,
)


# ---------------------------------------------- annihilator criteria


def _isolating(ctx, m):
    """Ideals inside ``M`` and inside no other maximal ideal."""
    others = [x for x in ctx.maximals if x != m]
    return [k for k in bits(ctx.L.down[m]) if not any(ctx.le(k, x) for x in others)]


def _ann_triples(ctx):
    L = ctx.L
    for m in ctx.maximals:
        for k in _isolating(ctx, m):
            for i in range(ctx.n):
                if L.product(i, k) == 0:
                    yield i, m, k


def _i_ann_local(ctx):
    for i, m, k in _ann_triples(ctx):
        T = ctx.localization(m)
        if is_sh_index(T.lattice, T.image(i)):
            yield {"I": i, "M": m, "K": k}


register(
    "chk-ann-local", "Prop. ann_condition", "strongly hollow in $R_M$",
    "M maximal, K⊆M in no other maximal, IK=0, IR_M SH; I is SH",
    _i_ann_local, lambda ctx, I, M, K: ctx.sh(I),
)


def _i_ann_csh(ctx):
    for i, m, k in _ann_triples(ctx):
        if not ctx.le(i, ctx.jr):
            yield {"I": i, "M": m, "K": k}


register(
    "chk-ann-csh", "Cor. s_ann_condition", "contained in no other maximal",
    "M maximal, K⊆M in no other maximal, IK=0, I⊄J(R); I is CSH",
    _i_ann_csh, lambda ctx, I, M, K: ctx.csh(I),
)


def _primary_for(ctx, m):
    L = ctx.L
    return [k for k in range(ctx.n) if k != L.top and L.is_primary[k] and L.radical[k] == m]


def _i_ann_primary(ctx):
    L = ctx.L
    for m in ctx.maximals:
        for k in _primary_for(ctx, m):
            for i in range(ctx.n):
                if not ctx.le(i, ctx.nil) and L.product(i, k) == 0:
                    yield {"I": i, "M": m, "K": k}


def _h_ann_primary(ctx, I, M, K):
    L = ctx.L
    in_primes = all(ctx.le(I, p) for p in L.primes if p != M)
    local_dim0 = len(ctx.localization(M).lattice.primes) == 1
    return ctx.csh(I) and in_primes and L.is_minimal_prime[M] and local_dim0


register(
    "chk-ann-primary", "Cor. strongest_ann", "M is a minimal prime",
    "I⊄Nil(R), M-primary K with IK=0; I is CSH, lies in every other prime, M is a minimal prime",
    _i_ann_primary, _h_ann_primary,
)


def _i_reduced(ctx):
    if ctx.nil != 0:
        return
    L = ctx.L
    for m in ctx.maximals:
        for k in _primary_for(ctx, m):
            for i in range(ctx.n):
                if L.product(i, k) == 0:
                    yield {"I": i, "M": m, "K": k}


register(
    "chk-reduced-field", "Cor. (reduced)", "then $R_M$ is a field",
    "reduced rings, M-primary K annihilating I; R_M is a field",
    _i_reduced, lambda ctx, I, M, K: len(ctx.localization(M).lattice) == 2,
    finite_hypothesis=True,
)


# -------------------------------------------------- M/M² and powers


def _i_vs_split(ctx):
    for m in ctx.maximals:
        V = ctx.mspace(m)
        if V.dim < 2:
            continue
        for W in subspace_codes(V):
            if 1 < len(W) < V.size:
                yield {"M": m, "w_span": [list(V.tuples[c]) for c in sorted(W)]}


def _h_vs_split(ctx, M, w_span):
    V = ctx.mspace(M)
    W = [tuple(v) for v in w_span]
    s = vs_split(V, W)
    if split_problems(V, W, s):
        return False
    # the preimages in M are ideals that sum to M
    L, R = ctx.L, ctx.R
    J, K = lift_mask(V, s.U), lift_mask(V, s.H)
    if not (is_ideal_mask(R, J) and is_ideal_mask(R, K)):
        return False
    return L.join(L.index[J], L.index[K]) == M


register(
    "chk-vs-split", "Lemma UH_avoid_W", "$W\\nsubseteq U$ and $W\\nsubseteq H$",
    "maximal M with dim M/M²≥2 and every nonzero proper W⊆M/M²; the split meets all postconditions",
    _i_vs_split, _h_vs_split,
)


def _i_in_m2(ctx):
    for i in range(ctx.n):
        if ctx.sh(i) and ctx.le(i, ctx.jr):
            for m in ctx.maximals:
                if ctx.mspace(m).dim >= 2:
                    yield {"I": i, "M": m}


register(
    "chk-i-in-m2", "Thm. I_in_M2", "one has $I \\subseteq M^2$",
    "SH I⊆J(R) and maximal M with dim M/M²≥2; I⊆M²",
    _i_in_m2, lambda ctx, I, M: ctx.le(I, ctx.L.product(M, M)),
)


def _h_comax(ctx, I):
    return sum(ctx.escapes_powers(I, m) for m in ctx.maximals) <= 1


register(
    "chk-comax-powers", "Prop. comax_powers", "at most one maximal ideal",
    "SH I; at most one maximal M has I⊄M^n for some n",
    _sh_ideals, _h_comax,
)


def _i_a_gamma(ctx):
    for inst in _i_sh_escaping(ctx):
        i = inst["I"]
        for a in range(ctx.n):
            if ctx.escapes_powers(i, a):
                yield {"I": i, "A": a}


register(
    "chk-a-gamma", "Cor. A_contained_in_bad_M", "then $A\\subseteq \\Gamma_I$",
    "SH I⊄J(R) and A with I⊄A^n for some n; A⊆Γ_I",
    _i_a_gamma, lambda ctx, I, A: ctx.le(A, ctx.gamma(I)),
)


def _h_trichotomy(ctx, I):
    L = ctx.L
    escaped = [m for m in ctx.maximals if not ctx.le(I, m)]
    c1 = len(escaped) == 1
    c2 = not any(ctx.escapes_powers(I, m) for m in ctx.maximals)
    c3 = not escaped and sum(ctx.escapes_powers(I, m, start=2) for m in ctx.maximals) == 1
    if c1 + c2 + c3 != 1:
        return False
    if c1:
        g = ctx.gamma(I)
        if not (L.is_principal(I) and ctx.csh(I) and g == escaped[0]):
            return False
        for a in range(ctx.n):
            if not ctx.le(a, g) and ctx.escapes_powers(I, a):
                return False
    return True


def _trichotomy_note(ctx):
    counts = {}
    for i in range(ctx.n):
        c = classify_sh(ctx.L, i).number
        if c is not None:
            counts[c] = counts.get(c, 0) + 1
    if not counts:
        return None
    return "cases " + " ".join(f"{k}:{counts[k]}" for k in sorted(counts))


register(
    "chk-trichotomy", "classification Thm.", "one of the following holds",
    "SH I; exactly one of the three cases, with case 1 principal, CSH, Γ_I=M and I⊆A^n for A⊄Γ_I",
    _sh_ideals, _h_trichotomy, note=_trichotomy_note,
)


# ------------------------------------------ CSH ↔ CSI correspondence


def _local(gen):
    def inner(ctx):
        if ctx.is_local:
            yield from gen(ctx)
    return inner


def _i_ci_gives_ch(ctx):
    m = ctx.maximals[0]
    for j in range(ctx.n):
        if ctx.si(j) and ctx.L.colon(j, m) != j:
            yield {"J": j}


def _h_ci_gives_ch(ctx, J):
    return ctx.csh(ctx.L.colon(J, ctx.maximals[0])) and ctx.csi(J)


register(
    "chk-ci-gives-ch", "Prop. ci_gives_ch", "$(J:M)$ is completely strongly hollow",
    "local rings, SI J⊊(J:M); (J:M) is CSH and J is CSI",
    _local(_i_ci_gives_ch), _h_ci_gives_ch,
)


def _i_local_bij(ctx):
    yield from _i_csh(ctx)
    yield from _i_ci_gives_ch(ctx)


def _h_local_bij(ctx, I=None, J=None):
    L, m = ctx.L, ctx.maximals[0]
    if I is not None:
        g = ctx.gamma(I)
        im = L.product(I, m)
        return ctx.si(g) and L.colon(g, m) != g and g == im and L.colon(im, m) == I
    c = L.colon(J, m)
    return ctx.csh(c) and ctx.gamma(c) == J and ctx.csi(J)


register(
    "chk-local-bijection", "Thm. bijection", "bijection between the set of completely",
    "local rings; CSH I ↦ Γ_I=IM is SI with Γ_I≠(Γ_I:M) and I=(IM:M); SI J≠(J:M) ↦ (J:M) inverts it",
    _local(_i_local_bij), _h_local_bij,
)


def _i_true_bij(ctx):
    yield from _i_csh(ctx)
    for k in range(ctx.n):
        if ctx.csi(k):
            yield {"K": k}


def _h_true_bij(ctx, I=None, K=None):
    if I is not None:
        g = ctx.gamma(I)
        return ctx.csi(g) and least_escape(ctx.L, g) == Least(I)
    e = least_escape(ctx.L, K)
    return isinstance(e, Least) and ctx.csh(e.ideal) and ctx.gamma(e.ideal) == K


register(
    "chk-true-bijection", "Thm. true_bij", "bijection between completely strongly hollow",
    "every ring; Γ sends CSH to CSI, least escape sends CSI to CSH, and the maps are mutually inverse",
    _i_true_bij, _h_true_bij,
)


def _i_order(ctx):
    csh = [i for i in range(ctx.n) if ctx.csh(i)]
    for i in csh:
        for j in csh:
            if i != j:
                yield {"I": i, "J": j}


register(
    "chk-order-preserving", "Cor. (order preserving)", "an order preserving map",
    "pairs of CSH ideals; I⊆J iff Γ_I⊆Γ_J",
    _i_order, lambda ctx, I, J: ctx.le(I, J) == ctx.le(ctx.gamma(I), ctx.gamma(J)),
)


def _i_waist(ctx):
    for k in range(ctx.n):
        if ctx.csi(k):
            yield {"K": k}


register(
    "chk-waist", "Cor. (waist)", "is a waist ideal",
    "local rings, CSI K (the ideals Γ_I of the bijection); K is completely irreducible and a waist",
    _local(_i_waist), lambda ctx, K: is_waist_index(ctx.L, K) and is_ci_index(ctx.L, K),
)


register(
    "chk-noetherian-csh", "Lemma cs_noeth", "strongly hollow ideal in a Noetherian",
    "SH I (every finite ring is Noetherian); I is CSH",
    _sh_ideals, lambda ctx, I: ctx.csh(I), finite_hypothesis=True,
)


# ------------------------------------------------ localization at P


def _i_localized_si(ctx):
    for p in ctx.L.primes:
        T = ctx.localization(p)
        QL = T.lattice
        for i in range(ctx.n):
            q = T.image(i)
            if q != QL.top and is_sh_index(QL, q):
                yield {"I": i, "P": p}


def _h_localized_si(ctx, I, P):
    L = ctx.L
    T = ctx.localization(P)
    QL = T.lattice
    q = T.image(I)
    g = gamma_index(QL, q)
    gc = T.preimage(g)
    first = L.is_primary[gc] and L.radical[gc] == P and ctx.si(gc)
    second = q == QL.colon(g, T.image(P))
    third = all(ctx.le(j, gc) or QL.le(q, T.image(j)) for j in range(ctx.n))
    return first and second and third


register(
    "chk-localized-si", "§3 Thm. (Noetherian localization)", "$P$-primary strongly irreducible ideal of",
    "prime P and I with IR_P proper SH; Γ∩R is P-primary SI, IR_P=(Γ:PR_P), every J⊆Γ∩R or IR_P⊆JR_P",
    _i_localized_si, _h_localized_si, finite_hypothesis=True,
)


def _i_pprimary(ctx):
    L = ctx.L
    for p in L.primes:
        for i in range(ctx.n):
            if i != p and i != L.top and L.is_primary[i] and L.radical[i] == p and ctx.si(i):
                yield {"I": i, "P": p}
        T = ctx.localization(p)
        for q in range(len(T.lattice) - 1):
            if is_sh_index(T.lattice, q):
                yield {"S": T.preimage(q), "P": p}


def _h_pprimary(ctx, P, I=None, S=None):
    L = ctx.L
    T = ctx.localization(P)
    QL = T.lattice
    if I is not None:
        ce = T.image(L.colon(I, P))
        back = T.preimage(ce)
        return (
            ce != QL.top
            and is_sh_index(QL, ce)
            and T.preimage(gamma_index(QL, ce)) == I
            and back != I
            and ctx.le(I, back)
        )
    q = T.image(S)
    gc = T.preimage(gamma_index(QL, q))
    return (
        L.is_primary[gc]
        and L.radical[gc] == P
        and ctx.si(gc)
        and gc != P
        and T.image(L.colon(gc, P)) == q
    )


register(
    "chk-pprimary-bij", "§3 Cor. (P-primary bijection)", "$P$-primary strongly irreducible ideals which",
    "P-primary SI I≠P ↦ (I:P)R_P and proper SH S of R_P ↦ Γ_S∩R are inverse; (I:P)R_P∩R⊋I",
    _i_pprimary, _h_pprimary, finite_hypothesis=True,
)


def _i_ring(ctx):
    yield {}


def _h_nonprime_si(ctx):
    lhs = False
    for p in ctx.L.primes:
        QL = ctx.localization(p).lattice
        if any(is_csh_index(QL, q) for q in range(len(QL) - 1)):
            lhs = True
    rhs = any(ctx.si(k) and not ctx.L.is_prime[k] for k in range(ctx.n))
    return lhs == rhs


register(
    "chk-nonprime-si", "§3 Cor. (non-prime SI)", "non-prime strongly irreducible ideal in",
    "every ring; some R_P has a proper CSH ideal iff R has a non-prime SI ideal",
    _i_ring, _h_nonprime_si, finite_hypothesis=True,
)


def _i_colon_m(ctx):
    for i in range(ctx.n):
        if ctx.sh(i) and ctx.le(i, ctx.jr):
            yield {"I": i}


def _h_colon_m(ctx, I):
    g = ctx.gamma(I)
    found = any(ctx.L.colon(g, m) == I for m in ctx.maximals)
    return found == ctx.is_local


register(
    "chk-colonM-local", "§3 Prop. ((Γ_I:M) iff local)", "if and only if $R$ is local",
    "SH I⊆J(R); I=(Γ_I:M) for some maximal M iff R is local",
    _i_colon_m, _h_colon_m, finite_hypothesis=True,
)


def _i_gamma_power(ctx):
    for inst in _i_colon_m(ctx):
        if not ctx.le(inst["I"], ctx.nil):
            yield inst


def _h_gamma_power(ctx, I):
    L = ctx.L
    m = l_index(L, I)
    return L.is_maximal[m] and ctx.gamma(I) in L.powers(m)


register(
    "chk-gamma-power", "§3 Prop. (Γ_I=M^n)", "$\\Gamma_I=M^n$, where $M=\\Gamma_I:I$",
    "SH I⊆J(R) with I⊄Nil(R) (impossible when J(R)=Nil(R), as in every finite ring); Γ_I is a power of L_I",
    _i_gamma_power, _h_gamma_power, degenerate=True, finite_hypothesis=True,
)


def _i_si(ctx):
    for k in range(ctx.n):
        if ctx.si(k):
            yield {"K": k}


def _h_artinian_csi(ctx, K):
    return ctx.csi(K) and csi_family_witness(ctx.L, K) is None and is_ci_index(ctx.L, K)


register(
    "chk-artinian-csi", "Lemma Art_max_csi", "of an Artinian ring $R$",
    "SI K (every finite ring is Artinian); K is CSI and completely irreducible",
    _i_si, _h_artinian_csi, finite_hypothesis=True,
)


def _i_maximal(ctx):
    for m in ctx.maximals:
        yield {"M": m}


def _h_artinian_min(ctx, M):
    e = least_escape(ctx.L, M)
    if not isinstance(e, Least):
        return False
    i = e.ideal
    if not (ctx.csh(i) and ctx.gamma(i) == M):
        return False
    csh = [j for j in range(ctx.n) if ctx.csh(j)]
    least_escaping = all(ctx.le(i, j) for j in csh if not ctx.le(j, M))
    not_below_other = not any(j != i and ctx.le(i, j) for j in csh)
    return least_escaping and not_below_other


register(
    "chk-artinian-min", "§3 Prop. (Artinian minimal CSH)", "corresponds to a minimal completely strongly",
    "maximal M; its least escape I is CSH with Γ_I=M, least among CSH ideals escaping M, and maximal among CSH ideals",
    _i_maximal, _h_artinian_min, finite_hypothesis=True,
)


# ------------------------------------------------------- (★) and gcd


def _gcd_cache(ctx) -> bool:
    return is_gcd_ring(ctx.L)


def _i_star_fg(ctx):
    if not _gcd_cache(ctx):
        return
    for i in range(1, ctx.n):
        if satisfies_star(ctx.L, i):
            yield {"I": i}


def _star_note(ctx):
    return None if _gcd_cache(ctx) else "NotGcdRing: some element pair has no least principal ideal above Rx+Ry"


register(
    "chk-star-fg", "§4 Prop. (finitely generated)", "finitely generated and satisfies $(\\star)$",
    "gcd rings, nonzero I with (★) (every ideal is finitely generated); I is SH",
    _i_star_fg, lambda ctx, I: ctx.sh(I), note=_star_note,
)


def _i_star_bezout(ctx):
    if ctx.flags.is_bezout:
        yield from _sh_ideals(ctx)


register(
    "chk-star-bezout", "§4 Remark (Bezout)", "holds in any Bezout ring",
    "Bezout rings, SH I; I satisfies (★)",
    _i_star_bezout, lambda ctx, I: satisfies_star(ctx.L, I),
)
