import pytest

from sympower.fields import make_field
from sympower.groebner import (Ideal, buchberger, colon, eliminate, hilbert_data, intersect, is_linear_type,
                               multiplicity, rees_ideal, saturate, symbolic_power)
from sympower.poly import PolyRing, lex


@pytest.fixture
def R():
    return PolyRing(make_field("Q"))


def test_star_generators_are_already_a_basis(R):
    x, y, z = R.gens()
    G = buchberger([x * y, x * z, y * z])
    assert sorted(map(str, G)) == sorted(["x*y", "x*z", "y*z"])


def test_principal_ideal_basis(R):
    x, y, z = R.gens()
    assert buchberger([x], lex(3)) == [x]


def test_twisted_cubic(R):
    x, y, z = R.gens()
    I = Ideal([y - x**2, z - x**3], R)
    assert I.contains(z**2 - y**3)
    assert not I.contains(z - y)
    E = eliminate(I, ["x"])
    assert E.contains(z**2 - y**3)
    assert all(m[0] == 0 for g in E.gens for m in g.terms)


def test_reduced_basis_is_canonical(R):
    x, y, z = R.gens()
    a = Ideal([x**2 - y * z, x * y - z**2], R).groebner_basis()
    b = Ideal([x * y - z**2, (x**2 - y * z) * 3 + (x * y - z**2) * x], R).groebner_basis()
    assert a == b


def test_membership_basics(R):
    x, y, z = R.gens()
    assert Ideal([x], R).contains(x**2)
    assert Ideal([x * y], R).contains(R.zero())


def test_twelve_line_product_is_fgh_hence_in_square(fermat3):
    x, y, z = fermat3.ring.gens()
    F = x * y * z * (x**3 - y**3) * (y**3 - z**3) * (z**3 - x**3)
    f, g, h = fermat3.generators
    assert F == f * g * h
    assert fermat3.ideal.power(2).contains(F)


def test_intersections(R):
    x, y, z = R.gens()
    assert intersect(Ideal([x], R), Ideal([y], R)).equals(Ideal([x * y], R))
    I = Ideal([x**2, y * z], R)
    assert intersect(I, I).equals(I)


def test_triple_intersection_is_second_symbolic_power(star):
    R = star.ring
    x, y, z = R.gens()
    J = intersect(intersect(Ideal([x, y], R).power(2), Ideal([x, z], R).power(2)), Ideal([y, z], R).power(2))
    assert J.equals(symbolic_power(star.ideal, 2))
    assert not J.equals(star.ideal.power(2))


def test_colons(R):
    x, y, z = R.gens()
    assert colon(Ideal([x**2], R), x).equals(Ideal([x], R))
    assert colon(Ideal([x * y, x * z], R), x).equals(Ideal([y, z], R))
    I = Ideal([x * y, z**2], R)
    assert colon(I, R.one()).equals(I)


def test_saturation_removes_embedded_component(R):
    x, y, z = R.gens()
    I = Ideal([x**2, x * y], R)
    # the embedded component is supported on the line x = y = 0
    assert saturate(I, Ideal([x, y], R)).equals(Ideal([x], R))
    # (x) is the only associated prime of height one; the embedded prime (x, y) is not irrelevant
    assert saturate(I).equals(I)


def test_saturation_of_a_point_is_itself(R):
    x, y, z = R.gens()
    I = Ideal([x, y], R)
    assert saturate(I).equals(I)
    m = Ideal([x, y, z], R)
    assert saturate(Ideal([x * y, x * z, y * z], R) * m).equals(Ideal([x * y, x * z, y * z], R))


def test_elimination_edge_cases():
    R = PolyRing(make_field("Q"), ("s", "x"))
    s, x = R.gens()
    assert all(g.is_zero() for g in eliminate(Ideal([s * x - 1], R), ["s"]).gens)
    I = Ideal([x**2], R)
    assert eliminate(I, []).equals(I)


def test_rees_ideal_of_maximal_ideal(R):
    x, y, z = R.gens()
    L = rees_ideal([x, y, z])
    S = L.ring
    X, Y, Z, T1, T2, T3 = S.gens()
    koszul = Ideal([X * T2 - Y * T1, X * T3 - Z * T1, Y * T3 - Z * T2], S)
    assert L.equals(koszul)
    assert is_linear_type(L)


def test_linear_type(fermat3, R):
    assert is_linear_type(rees_ideal(fermat3.generators))
    x, y, z = R.gens()
    L = rees_ideal([x**2, x * y, y**2])
    T1, T2, T3 = L.ring.gens()[3:]
    assert L.contains(T1 * T3 - T2**2)
    assert not is_linear_type(L)


def test_multiplicities(R, fermat3):
    x, y, z = R.gens()
    assert multiplicity(Ideal([x, y], R)) == 1
    assert multiplicity(fermat3.ideal) == 12
    assert hilbert_data(Ideal([x], R)) == (2, 1)


def test_klein_multiplicity(klein11):
    assert multiplicity(klein11[0].ideal) == 49
