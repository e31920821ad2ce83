import pytest

from hollowlab.errors import EmptyProduct, InvalidModulus, InvalidPolynomial, NotARing, NotPrime
from hollowlab.lattice import enumerate_ideals
from hollowlab.poly import find_irreducible_poly, is_irreducible, make_poly_quotient
from hollowlab.ring import check_ring_axioms, make_product, make_structure_constants, make_zmod

from oracles import is_unit


def test_zmod_units_by_inverse_scan():
    R = make_zmod(6)
    assert R.order == 6
    assert [a for a in range(6) if is_unit(R, a)] == [1, 5]
    assert R.units == (1, 5)
    assert R.element_names == tuple("012345")
    assert R.provenance == "Z/6"


def test_zero_ring():
    R = make_zmod(1)
    assert R.order == 1 and R.zero == R.one == 0


@pytest.mark.parametrize("n", [0, -3, 2.0, True])
def test_bad_modulus(n):
    with pytest.raises(InvalidModulus):
        make_zmod(n)


def test_product_orders_and_ideal_counts():
    R = make_product([make_zmod(2), make_zmod(3)])
    assert R.order == 6 and len(enumerate_ideals(R)) == 4
    S = make_product([make_zmod(2), make_zmod(2)])
    assert S.order == 4 and len(enumerate_ideals(S)) == 4
    assert R.provenance == "Z/2 x Z/3"
    assert R.name(R.one) == "(1,1)" and R.name(R.zero) == "(0,0)"


def test_product_of_one_factor_and_nested_names():
    Z4 = make_zmod(4)
    assert make_product([Z4]) is Z4
    P = make_product([make_product([make_zmod(2), make_zmod(2)]), make_zmod(3)])
    assert P.provenance == "(Z/2 x Z/2) x Z/3"


def test_empty_product():
    with pytest.raises(EmptyProduct):
        make_product([])


def test_poly_quotient_field_of_four():
    F = make_poly_quotient(2, (1, 1, 1))
    assert F.order == 4 and len(F.units) == 3
    assert F.provenance == "F2[x]/(x^2+x+1)"
    nonzero = [a for a in range(4) if a != F.zero]
    assert all(is_unit(F, a) for a in nonzero)


def test_poly_quotient_nilpotent():
    R = make_poly_quotient(2, (0, 0, 1))
    x = R.element("x")
    assert R.order == 4 and R.mul(x, x) == R.zero


def test_poly_quotient_errors():
    with pytest.raises(NotPrime):
        make_poly_quotient(4, (1, 0, 1))
    with pytest.raises(InvalidPolynomial):
        make_poly_quotient(3, (1, 0, 2))
    with pytest.raises(InvalidPolynomial):
        make_poly_quotient(3, (2,))


def test_find_irreducible():
    assert find_irreducible_poly(2, 2) == (1, 1, 1)
    assert find_irreducible_poly(3, 1) == (0, 1)
    assert find_irreducible_poly(2, 3) == (1, 1, 0, 1)
    with pytest.raises(NotPrime):
        find_irreducible_poly(4, 2)


@pytest.mark.parametrize("p,d", [(2, 2), (2, 3), (3, 2), (5, 2), (3, 3)])
def test_irreducible_quotient_is_field(p, d):
    F = make_poly_quotient(p, find_irreducible_poly(p, d))
    assert all(is_unit(F, a) for a in range(F.order) if a != F.zero)


def test_reducible_by_root():
    # x^2 + 1 = (x + 1)^2 over F_2
    assert not is_irreducible((1, 0, 1), 2)
    assert is_irreducible((1, 0, 1), 3)
    assert not is_irreducible((2, 0, 1), 3)


def _sc_square_zero():
    z = (0, 0, 0)
    return make_structure_constants(
        (2, 2, 2),
        [[(1, 0, 0), (0, 1, 0), (0, 0, 1)], [(0, 1, 0), z, z], [(0, 0, 1), z, z]],
        (1, 0, 0),
        ("1", "x", "y"),
    )


def test_structure_constants_square_zero():
    R = _sc_square_zero()
    assert R.order == 8
    x, y = R.element("x"), R.element("y")
    assert R.mul(x, y) == R.mul(x, x) == R.mul(y, y) == R.zero
    assert R.element_names[:4] == ("0", "1", "x", "1+x")


def test_structure_constants_z4_preset():
    R = make_structure_constants((4, 2), [[(1, 0), (0, 1)], [(0, 1), (2, 0)]], (1, 0), ("1", "x"))
    assert R.order == 8
    L = enumerate_ideals(R)
    assert len(L.maximals) == 1
    x = R.element("x")
    assert R.mul(x, x) == R.element("2")


def test_structure_constants_nonassociative():
    # e1*e1 = e2, e2*e1 = 0, e1*e2 = 0 but e2*e2 = e2 breaks (e1 e1) e2 = e1 (e1 e2)
    with pytest.raises(NotARing) as err:
        make_structure_constants(
            (2, 2, 2),
            [[(1, 0, 0), (0, 1, 0), (0, 0, 1)], [(0, 1, 0), (0, 0, 1), (0, 0, 0)], [(0, 0, 1), (0, 0, 0), (0, 0, 1)]],
            (1, 0, 0),
        )
    assert err.value.axiom == "associativity"
    assert len(err.value.witness) == 3


def test_axiom_scan_reports_first_law():
    add = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    mul = [[(a * b) % 3 for b in range(3)] for a in range(3)]
    mul[1][2] = 0
    with pytest.raises(NotARing) as err:
        check_ring_axioms(add, mul, 0, 1)
    assert err.value.axiom == "commutativity"
    bad_add = [row[:] for row in add]
    bad_add[0][1] = 2
    with pytest.raises(NotARing) as err:
        check_ring_axioms(bad_add, mul, 0, 1)
    assert err.value.axiom == "additive identity"


def test_content_hash_stable_and_distinct():
    assert make_zmod(6).content_hash == make_zmod(6).content_hash
    assert make_zmod(6).content_hash != make_product([make_zmod(2), make_zmod(3)]).content_hash


def test_identity_equality():
    assert make_zmod(5) != make_zmod(5)
