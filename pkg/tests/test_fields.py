from fractions import Fraction

import pytest

from sympower.fields import FieldError, make_field, parse_field_spec, roots_of_klein_quadratic


def test_prime_field_has_eleven_elements():
    F = make_field("GF(11)")
    assert F.characteristic == 11
    assert len(list(F.elements())) == 11


def test_rationals_characteristic_zero():
    Q = make_field("Q")
    assert Q.characteristic == 0
    assert not Q.is_finite()


def test_quadratic_extension_over_gf5():
    E = make_field("GF(5)[c]")
    assert len(list(E.elements())) == 25
    c = E.c
    assert c * c + c + 2 == 0
    assert str(c * c) == "4*c+3"


@pytest.mark.parametrize("spec, roots", [("GF(11)", [4, 6]), ("GF(7)", [3]), ("Q", [])])
def test_klein_quadratic_roots(spec, roots):
    F = make_field(spec)
    assert sorted(r.value for r in roots_of_klein_quadratic(F)) == roots


def test_extension_collapses_when_quadratic_splits():
    assert make_field("GF(11)[c]") == make_field("GF(11)")


def test_inverse_mod_eleven():
    F = make_field("GF(11)")
    assert F(4).inverse() == 3


def test_rational_sum():
    Q = make_field("Q")
    assert Q(Fraction(1, 2)) + Q(Fraction(1, 3)) == Q(Fraction(5, 6))


def test_extension_inverse_roundtrip():
    E = make_field("GF(5)[c]")
    for a in E.elements():
        if not a.is_zero():
            assert a * a.inverse() == 1


def test_bad_specs_rejected():
    for text in ["GF(12)", "GF(x)", "R"]:
        with pytest.raises(FieldError):
            parse_field_spec(text)
