"""Property suites over small random inputs (fixed seed via the hypothesis profile in conftest)."""

import itertools

from hypothesis import assume, event, given, strategies as st

from sympower.criterion import oracle_check, thm_main_check
from sympower.fields import make_field
from sympower.groebner import Ideal, hilbert_data
from sympower.poly import PolyRing, graded_basis, reduce
from sympower.syzygy import HilbertBurchData, HilbertBurchError, ModuleVector, hilbert_burch, module_member, syzygies

F7 = make_field("GF(7)")
R7 = PolyRing(F7)
F11 = make_field("GF(11)")
R11 = PolyRing(F11)
PERMS = list(itertools.permutations(range(3)))


def forms(R, degree, max_terms=4):
    monos = graded_basis(degree, 3)
    p = R.field.characteristic
    term = st.tuples(st.sampled_from(monos), st.integers(1, p - 1))
    return st.lists(term, min_size=1, max_size=max_terms).map(
        lambda ts: sum((R.monomial(m, c) for m, c in ts), R.zero()))


def homogeneous(R, max_degree=3):
    return st.integers(1, max_degree).flatmap(lambda d: forms(R, d))


def generator_lists(R, n=(2, 3)):
    return st.lists(homogeneous(R), min_size=n[0], max_size=n[1]).filter(lambda gs: all(not g.is_zero() for g in gs))


@st.composite
def hb_data(draw, R=R11):
    """Hilbert-Burch data with linear P and Q of degree 1 or 2, kept when the minors cut out points."""
    e = draw(st.integers(1, 2))
    P = [draw(forms(R, 1, 3)) for _ in range(3)]
    Q = [draw(forms(R, e, 4)) for _ in range(3)]
    minors = HilbertBurchData.signed_minors(P, Q)
    assume(all(not m.is_zero() for m in minors))
    I = Ideal(list(minors), R)
    assume(hilbert_data(I)[0] == 1)
    try:
        hb = hilbert_burch(I)
    except HilbertBurchError:
        assume(False)
    assume(len(I.minimal_generators()) == 3)
    return P, Q, I, hb


@given(generator_lists(R7), st.data())
def test_groebner_basis_canonical_under_permutation_and_scaling(gens, data):
    perm = data.draw(st.permutations(range(len(gens))))
    scales = data.draw(st.lists(st.integers(1, 6), min_size=len(gens), max_size=len(gens)))
    shuffled = [gens[i].scale(k) for i, k in zip(perm, scales)]
    assert Ideal(gens, R7).groebner_basis() == Ideal(shuffled, R7).groebner_basis()


@given(homogeneous(R7, 4), generator_lists(R7))
def test_division_identity(f, divisors):
    order = R7.default_order
    r, q = reduce(f, divisors, order)
    assert f == sum((a * g for a, g in zip(q, divisors)), R7.zero()) + r
    leads = [g.leading_monomial(order) for g in divisors]
    for m in r.terms:
        assert not any(all(a <= b for a, b in zip(lm, m)) for lm in leads)


@given(generator_lists(R7, (2, 3)))
def test_syzygies_annihilate(gens):
    syz = syzygies(gens)
    for v in syz:
        assert v.dot(gens).is_zero()
    # every Koszul relation lies in the computed syzygy module
    n = len(gens)
    degs = [g.degree() for g in gens]
    for i, j in itertools.combinations(range(n), 2):
        comps = [R7.zero()] * n
        comps[i], comps[j] = gens[j], -gens[i]
        ok, _ = module_member(ModuleVector(comps, degs, R7), syz)
        assert ok


@given(hb_data(), st.sampled_from(PERMS))
def test_verdict_invariant_under_variable_permutation(data, perm):
    _, _, I, hb = data
    moved = Ideal([g.apply_symmetry(perm) for g in I.gens], R11)
    assert thm_main_check(hb).contained == thm_main_check(moved).contained


@given(hb_data(), st.integers(1, 10), st.integers(1, 10), st.data())
def test_verdict_invariant_under_hilbert_burch_basis_change(data, a, b, extra):
    P, Q, _, hb = data
    shift = extra.draw(forms(R11, hb.d1 - hb.d0, 3)) if hb.d1 >= hb.d0 else R11.zero()
    P2 = [p.scale(a) for p in hb.P]
    Q2 = [q.scale(b) + shift * p for q, p in zip(hb.Q, hb.P)]
    changed = HilbertBurchData.from_columns(P2, Q2)
    assert changed.check()
    assert thm_main_check(hb).contained == thm_main_check(changed).contained


@given(hb_data())
def test_criterion_agrees_with_oracle(data):
    _, _, I, hb = data
    verdict = thm_main_check(hb).contained
    event(f"contained={verdict}")
    assert verdict == oracle_check(I).contained


def _linear_change(R, rows):
    x = R.gens()
    return [sum((x[j].scale(rows[i][j]) for j in range(3)), R.zero()) for i in range(3)]


@st.composite
def invertible(draw, p=7):
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=3, max_size=3), min_size=3, max_size=3))
    (a, b, c), (d, e, f), (g, h, i) = rows
    assume((a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % p)
    return rows


@given(st.sampled_from(["fermat", "star"]), invertible())
def test_criterion_agrees_with_oracle_after_coordinate_change(kind, rows):
    x, y, z = R7.gens()
    if kind == "fermat":
        gens = [x * (y**3 - z**3), y * (z**3 - x**3), z * (x**3 - y**3)]
    else:
        gens = [x * y, x * z, y * z]
    images = _linear_change(R7, rows)
    I = Ideal([g.substitute(images) for g in gens], R7)
    verdict = thm_main_check(I).contained
    event(f"{kind} contained={verdict}")
    assert verdict == (kind == "star")
    assert oracle_check(I).contained == verdict
