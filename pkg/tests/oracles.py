"""Slow, definition-level reference implementations used as test oracles.

Nothing here touches the lattice machinery under test: ideals are Python
frozensets of element indices and every predicate is the textbook
definition evaluated by brute force.
"""

from __future__ import annotations

import itertools


def subgroup_closure(R, seed):
    out = set(seed) | {R.zero}
    frontier = list(out)
    while frontier:
        nxt = []
        for a in frontier:
            for b in list(out):
                for c in (R.add(a, b), R.neg(a)):
                    if c not in out:
                        out.add(c)
                        nxt.append(c)
        frontier = nxt
    return frozenset(out)


def all_subgroups(R):
    """Every additive subgroup, by closing under one extra generator at a time."""
    found = {subgroup_closure(R, ())}
    frontier = list(found)
    while frontier:
        nxt = []
        for S in frontier:
            for g in range(R.order):
                if g not in S:
                    T = subgroup_closure(R, S | {g})
                    if T not in found:
                        found.add(T)
                        nxt.append(T)
        frontier = nxt
    return found


def is_ideal(R, S):
    return all(R.mul(r, s) in S for r in range(R.order) for s in S)


def brute_ideals(R):
    return {S for S in all_subgroups(R) if is_ideal(R, S)}


def ideal_sum(R, A, B):
    return subgroup_closure(R, {R.add(a, b) for a in A for b in B})


def sum_all(R, family):
    out = frozenset({R.zero})
    for A in family:
        out = ideal_sum(R, out, A)
    return out


def brute_sh(R, ideals, I):
    if I == frozenset({R.zero}):
        return False
    return all(
        I <= A or I <= B
        for A in ideals for B in ideals
        if I <= ideal_sum(R, A, B)
    )


def brute_csh_families(R, ideals, I):
    """Family definition over every family of non-containers (small lattices only)."""
    if I == frozenset({R.zero}):
        return False
    pool = [A for A in ideals if not I <= A]
    for k in range(1, len(pool) + 1):
        for fam in itertools.combinations(pool, k):
            if I <= sum_all(R, fam):
                return False
    return True


def brute_si(R, ideals, K):
    if len(K) == R.order:
        return False
    return all(K >= A or K >= B for A in ideals for B in ideals if A & B <= K)


def brute_gamma(R, ideals, I):
    return sum_all(R, [A for A in ideals if not I <= A])


def brute_colon(R, I, J):
    return frozenset(r for r in range(R.order) if all(R.mul(r, j) in I for j in J))


def brute_product(R, A, B):
    return subgroup_closure(R, {R.mul(a, b) for a in A for b in B})


def brute_maximals(R, ideals):
    proper = [A for A in ideals if len(A) < R.order]
    return [A for A in proper if not any(A < B for B in proper)]


def is_unit(R, a):
    return any(R.mul(a, b) == R.one for b in range(R.order))


def bilinear_associative(p, gen_products):
    """Associativity of the bilinear product on F_p^k given by generator products."""
    k = len(gen_products)
    vecs = list(itertools.product(range(p), repeat=k))

    def mul(u, v):
        out = [0] * k
        for i in range(k):
            for j in range(k):
                c = u[i] * v[j]
                if c:
                    for t in range(k):
                        out[t] += c * gen_products[i][j][t]
        return tuple(x % p for x in out)

    return all(mul(mul(a, b), c) == mul(a, mul(b, c)) for a in vecs for b in vecs for c in vecs)
