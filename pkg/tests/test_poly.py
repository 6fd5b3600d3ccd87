import pytest

from sympower.configs import klein_structure
from sympower.fields import make_field
from sympower.groebner import Ideal
from sympower.poly import PolyRing, graded_basis, reduce


@pytest.fixture
def R():
    return PolyRing(make_field("Q"))


def test_difference_of_squares(R):
    x, y, z = R.gens()
    assert (x + y) * (x - y) == x**2 - y**2
    assert (x * 0).is_zero()


def test_reduce_examples(R):
    x, y, z = R.gens()
    r, q = reduce(x**2 * y, [x * y], R.default_order)
    assert r.is_zero() and q == [x]
    r, q = reduce(x**2 + y**2, [x], R.default_order)
    assert r == y**2 and q == [x]


def test_quartic_reduces_mod_fourth_power_of_maximal_ideal():
    R = PolyRing(make_field("GF(7)"))
    x, y, z = R.gens()
    f = x * (y**3 - z**3)
    m4 = Ideal([x, y, z], R).power(4)
    assert m4.normal_form(f).is_zero()


@pytest.mark.parametrize("d, count", [(0, 1), (5, 21), (8, 45)])
def test_graded_basis_counts(d, count):
    assert len(graded_basis(d, 3)) == count


def test_coefficients(R):
    x, y, z = R.gens()
    assert (x**2 - y**2).coeff(x**2) == 1


def test_klein_coefficients():
    F = make_field("GF(11)")
    ks = klein_structure(F)
    R = ks.gens[0].ring
    x, y, z = R.gens()
    c = F.c
    assert ks.C[2].coeff(x**2 * y**2) == c * 3 + 9
    assert ks.D[2].coeff(z**2) == c * 2 - 10


def test_evaluation(R):
    x, y, z = R.gens()
    assert (x * (y**3 - z**3)).evaluate((1, 1, 1)).is_zero()
    assert (x * y - z**2).evaluate((1, 1, 1)).is_zero()


def test_symmetry(R):
    x, y, z = R.gens()
    assert (x**2 * y).apply_symmetry((2, 1, 0)) == z**2 * y
    f = x * (y**3 - z**3)
    assert f.apply_symmetry((0, 1, 2)) == f
    assert x.apply_symmetry((0, 1, 2), (-1, 1, 1)) == -x


def test_klein_symmetry_maps_C3_to_C1():
    ks = klein_structure(make_field("GF(11)"))
    assert ks.C[2].apply_symmetry((2, 1, 0)) == ks.C[0]


def test_parse_print_roundtrip():
    R = PolyRing(make_field("GF(5)[c]"))
    f = R.parse("4*x^4 + (3*c+9)*x^2*y^2 - 15*z^4")
    assert R.parse(str(f)) == f
    Rq = PolyRing(make_field("Q"))
    g = Rq.parse("1/2*x^2*y - 3*z^3 + x*y*z")
    assert Rq.parse(str(g)) == g
