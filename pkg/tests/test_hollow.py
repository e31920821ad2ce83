import pytest

from hollowlab.errors import NotASubmodule, NotGcdRing, UnknownIdeal, ZeroIdealUndefined
from hollowlab.hollow import (
    AllContained,
    Greatest,
    Least,
    NoGreatest,
    NoLeast,
    bijection_maps,
    csi_family_witness,
    gamma_index,
    gcd_ideal,
    greatest_not_containing,
    hollow_profile,
    irreducibility_profile,
    is_csh_by_families,
    is_csh_index,
    is_csi_index,
    is_gcd_ring,
    is_sh_index,
    is_si_index,
    is_small_in,
    least_not_contained_in,
    maximal_sh_under,
    order_preserving,
    satisfies_star,
    sh_indices,
    star_witness,
)
from hollowlab.lattice import Ideal, bits, principal_ideal, ring_flags

from conftest import idx, lat
from oracles import brute_csh_families, brute_gamma, brute_si, brute_sh


def members(L, i):
    return frozenset(bits(L.masks[i]))


def labels(L, idxs):
    return {L.labels[i] for i in idxs}


# ------------------------------------------------------------- oracles

ORACLE_RINGS = ["Z/6", "Z/8", "Z/12", "Z/2 x Z/4", "F2[x,y]/(x,y)^2", "F2[x,y]/(x^2,y^2)",
                "Z4[x]/(x^2-2,2x)", "Z/2 x Z/2 x Z/2", "F2[x]/(x^3)", "Z/2 x F2[x]/(x^2)"]


@pytest.mark.parametrize("name", ORACLE_RINGS)
def test_predicates_match_definitions(name):
    L = lat(name)
    R = L.ring
    ideals = [members(L, i) for i in range(len(L))]
    for i, I in enumerate(ideals):
        assert is_sh_index(L, i) == brute_sh(R, ideals, I), L.labels[i]
        assert is_si_index(L, i) == brute_si(R, ideals, I), L.labels[i]
        assert members(L, gamma_index(L, i)) == brute_gamma(R, ideals, I)
        if len(L) <= 8:
            assert is_csh_index(L, i) == brute_csh_families(R, ideals, I)


def test_sh_equals_csh_on_corpus(lattices):
    for L in lattices.values():
        for i in range(1, len(L)):
            assert is_sh_index(L, i) == is_csh_index(L, i) == is_csh_by_families(L, i)


def test_si_equals_csi_with_family_sampling(lattices):
    for L in lattices.values():
        for k in range(len(L)):
            assert is_si_index(L, k) == is_csi_index(L, k)
            if k != L.top:
                assert (csi_family_witness(L, k) is None) == is_csi_index(L, k)


def test_csh_ideals_are_principal(lattices):
    for L in lattices.values():
        for i in sh_indices(L):
            assert L.is_principal(i)


# --------------------------------------------------------- profiles


def test_profile_z6():
    L = lat("Z/6")
    p = hollow_profile(L, idx(L, "(2)"))
    assert p.is_sh and p.is_csh
    assert L.label(p.gamma) == "(3)" and L.label(p.l_ideal) == "(3)"
    assert p.case.number == 1
    assert labels(L, sh_indices(L)) == {"(2)", "(3)"}
    assert not hollow_profile(L, L.top).is_sh


def test_profile_z8_case_three():
    L = lat("Z/8")
    p = hollow_profile(L, principal_ideal(L.ring, 2))
    assert p.is_sh and p.is_csh
    assert L.label(p.gamma) == "(4)" and L.label(p.l_ideal) == "(2)"
    assert p.case.kind == "UniqueShallowMaximal"
    assert L.labels[p.case.maximal] == "(2)" and p.case.n == 2


def test_zero_ideal_convention():
    L = lat("Z/8")
    p = hollow_profile(L, 0)
    assert not p.is_sh and not p.is_csh and p.raw_sh
    assert p.case.kind == "NotSH"


def test_profile_unknown_ideal():
    L = lat("Z/8")
    with pytest.raises(UnknownIdeal):
        hollow_profile(L, Ideal(L.ring, 0b11))


def test_irreducibility_examples():
    L6 = lat("Z/6")
    z = irreducibility_profile(L6, 0)
    assert not z.is_si and not z.is_ci
    t = irreducibility_profile(L6, idx(L6, "(2)"))
    assert t.is_si and t.is_csi and t.is_ci and not t.is_waist
    L8 = lat("Z/8")
    f = irreducibility_profile(L8, idx(L8, "(4)"))
    assert f.is_si and f.is_csi and f.is_ci and f.is_waist


def test_whole_ring_is_never_irreducible(lattices):
    for L in lattices.values():
        q = irreducibility_profile(L, L.top)
        assert not (q.is_si or q.is_csi or q.is_ci)


# ------------------------------------------------------ small ideals


def test_small_in_examples():
    L = lat("Z/8")
    R = L.ring
    p = lambda a: principal_ideal(R, a)
    assert is_small_in(L, p(4), p(2))
    assert is_small_in(L, p(0), p(4))
    assert not is_small_in(L, p(2), p(2))
    with pytest.raises(NotASubmodule):
        is_small_in(L, p(2), p(4))


def test_maximal_sh_under_examples():
    L6 = lat("Z/6")
    assert {L6.label(I) for I in maximal_sh_under(L6, L6.ideal(L6.top))} == {"(2)", "(3)"}
    L8 = lat("Z/8")
    assert [L8.label(I) for I in maximal_sh_under(L8, principal_ideal(L8.ring, 2))] == ["(2)"]
    Q = lat("F2[x,y]/(x,y)^2")
    assert maximal_sh_under(Q, Q.ideal(idx(Q, "(x,y)"))) == ()


def test_least_not_contained_in():
    L6 = lat("Z/6")
    assert least_not_contained_in(L6, principal_ideal(L6.ring, 3)) == Least(idx(L6, "(2)"))
    Q = lat("F2[x,y]/(x,y)^2")
    res = least_not_contained_in(Q, idx(Q, "(x)"))
    assert isinstance(res, NoLeast) and labels(Q, res.minimal) == {"(y)", "(x+y)"}
    assert least_not_contained_in(Q, Q.top) == AllContained()


def test_greatest_not_containing():
    L6 = lat("Z/6")
    assert greatest_not_containing(L6, idx(L6, "(2)")) == Greatest(idx(L6, "(3)"))
    res = greatest_not_containing(L6, L6.top)
    assert isinstance(res, NoGreatest) and labels(L6, res.maximal) == {"(2)", "(3)"}
    L8 = lat("Z/8")
    assert greatest_not_containing(L8, idx(L8, "(2)")) == Greatest(idx(L8, "(4)"))
    with pytest.raises(ZeroIdealUndefined):
        greatest_not_containing(L8, 0)


def test_greatest_equals_gamma_for_csh(lattices):
    for L in lattices.values():
        for i in range(1, len(L)):
            g = greatest_not_containing(L, i)
            assert isinstance(g, Greatest) == is_csh_index(L, i)
            if isinstance(g, Greatest):
                assert g.ideal == gamma_index(L, i)


# ---------------------------------------------------------- bijection


def _table(L, b):
    return {L.labels[i]: L.labels[k] for i, k in b.forward.items()}


def test_bijection_examples():
    L8 = lat("Z/8")
    b = bijection_maps(L8)
    assert b.ok and _table(L8, b) == {"(1)": "(2)", "(2)": "(4)", "(4)": "(0)"}
    assert L8.product(idx(L8, "(2)"), idx(L8, "(2)")) == idx(L8, "(4)")
    assert L8.colon(idx(L8, "(4)"), idx(L8, "(2)")) == idx(L8, "(2)")
    L6 = lat("Z/6")
    assert _table(L6, bijection_maps(L6)) == {"(2)": "(3)", "(3)": "(2)"}
    F = lat("F4")
    assert _table(F, bijection_maps(F)) == {F.labels[F.top]: "(0)"}


def test_bijection_on_corpus(lattices):
    for L in lattices.values():
        b = bijection_maps(L)
        assert b.ok, (L.ring.provenance, b.problems)
        assert order_preserving(L, b.forward)
        assert {v: k for k, v in b.forward.items()} == b.backward


# --------------------------------------------------------- gcd and star


def test_gcd_examples():
    Z12 = lat("Z/12")
    g = gcd_ideal(Z12, 4, 6)
    assert g.status == "gcd" and g.element == 2
    Z8 = lat("Z/8")
    assert gcd_ideal(Z8, 2, 0).element == 2
    Q = lat("F2[x,y]/(x,y)^2")
    R = Q.ring
    assert gcd_ideal(Q, R.element("x"), R.element("y")).status == "unit"


def test_gcd_missing():
    L = lat("F2[x,y]/(x^2,xy^2,y^3)")
    R = L.ring
    assert not is_gcd_ring(L)
    g = gcd_ideal(L, R.element("xy"), R.element("y^2"))
    assert g.status == "none" and g.ideal is None
    with pytest.raises(NotGcdRing):
        satisfies_star(L, L.top)
    assert is_gcd_ring(lat("F2[x,y]/(x^2,y^2)"))


def test_star_examples():
    L6 = lat("Z/6")
    assert satisfies_star(L6, idx(L6, "(2)"))
    assert not satisfies_star(L6, L6.top)
    assert star_witness(L6, L6.top) == (2, 3)
    L8 = lat("Z/8")
    assert all(satisfies_star(L8, i) for i in range(len(L8)))


def test_star_matches_sh_on_bezout_members(lattices):
    seen = 0
    for L in lattices.values():
        if not ring_flags(L).is_bezout:
            continue
        seen += 1
        for i in range(1, len(L)):
            assert satisfies_star(L, i) == is_sh_index(L, i), (L.ring.provenance, L.labels[i])
    assert seen > 50
