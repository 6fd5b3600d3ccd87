import pytest

from sympower.criterion import generic_hilbert_burch
from sympower.fields import make_field
from sympower.groebner import power_generators
from sympower.resolve import (build_X, build_Y, check_last_map_equivalence, multiplicity_from_shape,
                              predicted_shape, rees_columns, resolve_power, resolve_quotient)
from sympower.syzygy import HilbertBurchData, hilbert_burch


def _counts(res):
    return res.shape.betti_table()


def test_X_for_fermat3(fermat3):
    hb = hilbert_burch(fermat3.ideal)
    X = build_X(hb)
    x, y, z = fermat3.ring.gens()
    entries = {str(e) for e in X}
    assert len(X) == 6
    assert {str(p) for p in (y * z, x * z, x * y)} <= entries | {str(-e) for e in X}
    assert {str(p) for p in (x**2, y**2, z**2)} <= entries | {str(-e) for e in X}


def test_X_for_klein(klein_hb):
    assert [e.degree() for e in build_X(klein_hb)] == [3, 3, 3, 5, 5, 5]


def test_Y_pattern_symbolic():
    hb = generic_hilbert_burch(make_field("GF(7)"))
    P1, P2, P3, Q1, Q2, Q3 = hb.ring.gens()
    Y = build_Y(hb)
    assert len(Y) == 12 and all(len(r) == 3 for r in Y)
    zero = hb.ring.zero()
    assert [r[1] for r in Y] == [zero, P1, zero, P2, P3, zero, zero, -Q1, zero, -Q2, -Q3, zero]


def test_Y_of_zero_data():
    R = generic_hilbert_burch(make_field("GF(7)")).ring
    zero = R.zero()
    hb = HilbertBurchData.from_columns([zero] * 3, [zero] * 3)
    assert all(e.is_zero() for r in build_Y(hb) for e in r)


def test_Y_for_fermat3_entries_are_signed_hilbert_burch_monomials(fermat3):
    hb = hilbert_burch(fermat3.ideal)
    entries = [e for r in build_Y(hb) for e in r if not e.is_zero()]
    allowed = {str(e) for e in hb.P + hb.Q} | {str(-e) for e in hb.P + hb.Q}
    assert len(entries) == 18
    assert all(len(e) == 1 and str(e) in allowed for e in entries)


def test_fermat3_resolutions(fermat3):
    r2 = resolve_power(fermat3.ideal, 2)
    assert _counts(r2) == {0: {-8: 6}, 1: {-10: 6}, 2: {-12: 1}}
    r3 = resolve_power(fermat3.ideal, 3)
    assert _counts(r3) == {0: {-12: 10}, 1: {-14: 12}, 2: {-16: 3}}


def test_star_resolutions(star):
    assert resolve_power(star.ideal, 2).shape.ranks == [6, 6, 1]
    assert resolve_power(star.ideal, 3).shape.ranks == [10, 12, 3]


def test_klein_cube_resolution(klein_hb):
    res = resolve_power(klein_hb, 3)
    assert _counts(res) == {0: {-24: 10}, 1: {-27: 6, -29: 6}, 2: {-32: 3}}


def test_predicted_shape_rejects_other_powers():
    with pytest.raises(ValueError):
        predicted_shape(4, 2, 1, 1)


def test_rees_columns_are_syzygies(fermat3):
    hb = hilbert_burch(fermat3.ideal)
    cubes = power_generators(list(hb.minors), 3)
    for v in rees_columns(hb, 3):
        assert v.dot(cubes).is_zero()


@pytest.mark.parametrize("name", ["fermat3", "star", "fermat4"])
def test_last_map_equivalence(name, request):
    cfg = request.getfixturevalue(name)
    assert check_last_map_equivalence(cfg.ideal)


def test_last_map_equivalence_klein(klein_hb):
    assert check_last_map_equivalence(klein_hb)


def test_multiplicity_from_quotient_shape(fermat3, star, klein_hb):
    assert multiplicity_from_shape(resolve_quotient(fermat3.ideal)) == 12
    assert multiplicity_from_shape(resolve_quotient(star.ideal)) == 3
    shape = resolve_quotient(klein_hb)
    assert shape.betti_table() == {0: {0: 1}, 1: {-8: 3}, 2: {-11: 1, -13: 1}}
    assert multiplicity_from_shape(shape) == 49
