"""Resolutions of I^2 and I^3 for a three-generated height-two ideal.

``build_X``/``build_Y`` write down the predicted maps from Hilbert-Burch data;
``resolve_power`` computes minimal resolutions by iterated syzygies and
checks them against the predicted twists.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .groebner import Ideal, _compositions, power_generators
from .poly import Polynomial
from .syzygy import (HilbertBurchData, ModuleVector, SubmoduleBasis, combine, hilbert_burch,
                     minimalize, syzygies)


class ResolutionError(RuntimeError):
    pass


@dataclass
class ResolutionShape:
    """Twists (as negative shifts, sorted) and ranks of F_0, F_1, F_2."""

    twists_per_step: list

    @property
    def ranks(self) -> list[int]:
        return [len(t) for t in self.twists_per_step]

    def betti_table(self) -> dict:
        return {i: dict(sorted(Counter(t).items(), reverse=True)) for i, t in enumerate(self.twists_per_step)}

    def __eq__(self, other) -> bool:
        return isinstance(other, ResolutionShape) and self.twists_per_step == other.twists_per_step


def _shape(steps: Sequence[Sequence[int]]) -> ResolutionShape:
    return ResolutionShape([sorted(-a for a in s) for s in steps])


def predicted_shape(k: int, d: int, d0: int, d1: int) -> ResolutionShape:
    """Twists of the minimal resolution of I^k (k = 2, 3) from the generator and syzygy degrees."""
    if k == 2:
        return _shape([[2 * d] * 6, [2 * d + d0] * 3 + [2 * d + d1] * 3, [3 * d]])
    if k == 3:
        return _shape([[3 * d] * 10, [3 * d + d0] * 6 + [3 * d + d1] * 6, [4 * d] * 3])
    raise ValueError("only k = 2 and k = 3 are supported")


# ----------------------------------------------------------------------
# predicted maps


def build_X(hb: HilbertBurchData) -> list[Polynomial]:
    P1, P2, P3 = hb.P
    Q1, Q2, Q3 = hb.Q
    return [P1, P2, P3, -Q1, -Q2, -Q3]


def build_Y(hb: HilbertBurchData) -> list[list[Polynomial]]:
    """The 12 x 3 matrix whose rows generate Image(Y^T) in R^3."""
    P1, P2, P3 = hb.P
    Q1, Q2, Q3 = hb.Q
    o = hb.ring.zero()
    rows = [
        [P1, o, o], [P2, P1, o], [P3, o, P1], [o, P2, o], [o, P3, P2], [o, o, P3],
    ]
    rows += [[-a for a in r] for r in [
        [Q1, o, o], [Q2, Q1, o], [Q3, o, Q1], [o, Q2, o], [o, Q3, Q2], [o, o, Q3],
    ]]
    return rows


def Y_columns(hb: HilbertBurchData) -> list[ModuleVector]:
    """Columns of Y as vectors in the twisted rank-12 module of first syzygies of I^3."""
    rows = build_Y(hb)
    tw = rees_twists(hb, 3)
    return [ModuleVector([rows[i][j] for i in range(12)], tw, hb.ring) for j in range(3)]


def Yt_generators(hb: HilbertBurchData) -> list[ModuleVector]:
    """Rows of Y viewed as generators of Image(Y^T) in R^3 (untwisted)."""
    return [ModuleVector(r, (0, 0, 0), hb.ring) for r in build_Y(hb)]


def rees_twists(hb: HilbertBurchData, k: int) -> tuple:
    """Degrees of the first-syzygy basis of I^k: Q-type elements first, then P-type."""
    n = len(_compositions(k - 1, 3))
    return (k * hb.d + hb.d1,) * n + (k * hb.d + hb.d0,) * n


def rees_columns(hb: HilbertBurchData, k: int) -> list[ModuleVector]:
    """First syzygies of the k-fold products from the Rees relations.

    Basis vectors are G*mu then F*mu, with F = sum P_i T_i, G = sum Q_i T_i and
    mu running over the T-monomials of degree k-1 in lex order; the target
    basis is the degree-k T-monomials in lex order.
    """
    ring = hb.ring
    target = _compositions(k, 3)
    index = {m: i for i, m in enumerate(target)}
    cols = []
    for col in (hb.Q, hb.P):
        for mu in _compositions(k - 1, 3):
            comps = [ring.zero() for _ in target]
            for i in range(3):
                m = tuple(a + (j == i) for j, a in enumerate(mu))
                comps[index[m]] = comps[index[m]] + col[i]
            cols.append(ModuleVector(comps, (k * hb.d,) * len(target), ring))
    return cols


# ----------------------------------------------------------------------
# computed resolutions


@dataclass
class Resolution:
    k: int
    hb: HilbertBurchData
    generators: list
    first: list
    second: list
    shape: ResolutionShape
    expected: ResolutionShape
    extra: dict = field(default_factory=dict)


def _degrees(vecs: Sequence[ModuleVector]) -> list[int]:
    return [v.degree() for v in vecs]


def resolve_power(I: Ideal | HilbertBurchData, k: int, check: bool = True) -> Resolution:
    """Minimal free resolution of I^k by iterated syzygies, compared with the prediction."""
    if k not in (2, 3):
        raise ValueError("only k = 2 and k = 3 are supported")
    hb = I if isinstance(I, HilbertBurchData) else hilbert_burch(I)
    gens = power_generators(list(hb.minors), k)
    gens = Ideal(gens, hb.ring).minimal_generators()
    first = minimalize(syzygies(gens))
    second = minimalize(syzygies(first)) if first else []
    third = minimalize(syzygies(second)) if second else []
    if third:
        raise ResolutionError("resolution of I^k is longer than expected")
    for v in first:
        if not v.dot(gens).is_zero():
            raise ResolutionError("first syzygy does not annihilate the generators")
    for w in second:
        if not combine(w.components, first).is_zero():
            raise ResolutionError("composition of consecutive maps is not zero")
    shape = _shape([[g.degree() for g in gens], _degrees(first), _degrees(second)])
    expected = predicted_shape(k, hb.d, hb.d0, hb.d1)
    if check and shape != expected:
        raise ResolutionError(f"resolution shape {shape.betti_table()} differs from {expected.betti_table()}")
    return Resolution(k, hb, gens, first, second, shape, expected)


def resolve_quotient(I: Ideal | HilbertBurchData) -> ResolutionShape:
    """Shape of the resolution of R/I (with the R term first)."""
    hb = I if isinstance(I, HilbertBurchData) else hilbert_burch(I)
    return _shape([[0], [hb.d] * 3, [hb.d + hb.d0, hb.d + hb.d1]])


def multiplicity_from_shape(shape: ResolutionShape, nvars: int = 3) -> int:
    """Degree of the module resolved by ``shape`` (alternating twist sum, codimension nvars-1)."""
    num: dict[int, int] = {}
    for i, tw in enumerate(shape.twists_per_step):
        for a in tw:
            num[-a] = num.get(-a, 0) + (-1) ** i
    top = max(num)
    coeffs = [num.get(j, 0) for j in range(top + 1)]
    for _ in range(nvars - 1):
        if sum(coeffs) != 0:
            raise ValueError("numerator is not divisible by (1-t)^(n-1)")
        acc, q = 0, []
        for a in coeffs[:-1]:
            acc += a
            q.append(acc)
        coeffs = q
    return sum(coeffs)


def check_last_map_equivalence(I: Ideal | HilbertBurchData, res: Resolution | None = None) -> bool:
    """Validate the constructed Y against the computed resolution of I^3.

    Y's rows are only meaningful relative to a basis of the first syzygies, so
    the comparison is carried out in the Rees basis: the Rees columns must
    generate the same module as the computed first syzygies of the cubes, and
    the columns of Y must generate the same module as the computed syzygies of
    the Rees columns (the transpose images then agree up to an automorphism of
    the rank-3 module, which is scalar since all its twists are equal).
    """
    hb = I if isinstance(I, HilbertBurchData) else hilbert_burch(I)
    res = res or resolve_power(hb, 3)
    cubes = power_generators(list(hb.minors), 3)
    if [str(g) for g in cubes] != [str(g) for g in res.generators]:
        # minimal generators were reordered or pruned; fall back to the full list
        res_first = minimalize(syzygies(cubes))
    else:
        res_first = res.first
    rees = rees_columns(hb, 3)
    for v in rees:
        if not v.dot(cubes).is_zero():
            return False
    if not _same_span(rees, res_first):
        return False
    ycols = Y_columns(hb)
    for y in ycols:
        if not combine(y.components, rees).is_zero():
            return False
    computed_last = minimalize(syzygies(rees))
    return len(computed_last) == 3 and _same_span(ycols, computed_last)


def _same_span(a: Sequence[ModuleVector], b: Sequence[ModuleVector]) -> bool:
    A = SubmoduleBasis(a)
    B = SubmoduleBasis(b)
    return all(B.contains(v) for v in a) and all(A.contains(v) for v in b)
