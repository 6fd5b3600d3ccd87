"""Containment tests for I^(3) ⊆ I^2.

* ``thm_main_check``: [f g h]^T ∈ Image(Y^T), decided by module membership.
* ``prop6_check``: the linear-algebra sufficient condition for non-containment.
* ``oracle_check``: brute force, saturating I^m and reducing against I^r.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .fields import Field, FieldElement, PrimeField
from .groebner import Ideal, in_symbolic_power, symbolic_power
from .linalg import echelon, rank
from .poly import Polynomial, PolyRing, graded_basis
from .resolve import build_Y, Yt_generators
from .syzygy import HilbertBurchData, ModuleVector, hilbert_burch, module_member

CHAR2_NOTE = "characteristic 2: I^(3) ⊆ I^2 holds for every three-generated ideal of points"
CHAR3_NOTE = "characteristic 3: the Y^T criterion is inconclusive; oracle verdict only"


class CharacteristicError(ValueError):
    def __init__(self, characteristic: int, requirement: str):
        super().__init__(f"{requirement} (field has characteristic {characteristic})")
        self.characteristic = characteristic
        self.requirement = requirement


class DecompositionError(ValueError):
    pass


@dataclass
class Verdict:
    contained: bool
    method: str
    m: int = 3
    r: int = 2
    certificate: list | None = None
    witness: Polynomial | None = None
    characteristic_note: str | None = None
    timings_ms: dict = field(default_factory=dict)
    betti: dict | None = None


def _hb(I: Ideal | HilbertBurchData) -> HilbertBurchData:
    return I if isinstance(I, HilbertBurchData) else hilbert_burch(I)


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000, 3)


def thm_main_check(I: Ideal | HilbertBurchData) -> Verdict:
    """I^(3) ⊆ I^2 iff [f g h]^T lies in the span of the rows of Y."""
    t0 = time.perf_counter()
    ring = I.ring
    p = ring.field.characteristic
    if p == 3:
        raise CharacteristicError(3, "the Y^T criterion requires characteristic other than 3")
    hb = _hb(I)
    t1 = time.perf_counter()
    target = ModuleVector(list(hb.minors), (0, 0, 0), hb.ring)
    ok, coords = module_member(target, Yt_generators(hb))
    timings = {"hilbert_burch": round((t1 - t0) * 1000, 3), "membership": _ms(t1)}
    return Verdict(ok, "theorem-main", 3, 2, certificate=coords,
                   characteristic_note=CHAR2_NOTE if p == 2 else None, timings_ms=timings,
                   betti={"d": hb.d, "d0": hb.d0, "d1": hb.d1})


def oracle_check(I: Ideal, m: int = 3, r: int = 2) -> Verdict:
    """Compute I^(m) by saturation and test each generator against I^r."""
    if not m >= r >= 1:
        raise ValueError("need m >= r >= 1")
    t0 = time.perf_counter()
    S = symbolic_power(I, m)
    t1 = time.perf_counter()
    Ir = I.power(r)
    order = I.ring.default_order
    bad = [g for g in S.gens if not Ir.contains(g)]
    timings = {"symbolic_power": round((t1 - t0) * 1000, 3), "reduction": _ms(t1)}
    p = I.ring.field.characteristic
    note = CHAR2_NOTE if p == 2 else CHAR3_NOTE if p == 3 else None
    if not bad:
        return Verdict(True, "oracle", m, r, characteristic_note=note, timings_ms=timings)
    bad.sort(key=lambda g: (g.degree(), order.key(g.leading_monomial())))
    return Verdict(False, "oracle", m, r, witness=bad[0].monic(), characteristic_note=note,
                   timings_ms=timings)


def witness_check(F: Polynomial, I: Ideal, m: int = 3, r: int = 2) -> tuple[bool, bool]:
    """(F ∈ I^(m), F ∈ I^r)."""
    if not F.is_homogeneous():
        raise ValueError("witness must be homogeneous")
    return in_symbolic_power(F, I, m), I.power(r).contains(F)


# ----------------------------------------------------------------------
# characteristic 2 and 3


CHAR_SOLUTIONS = {
    2: ["0", "Q3", "Q2", "0", "Q1", "0", "0", "0", "0", "0", "0", "0"],
    3: ["0", "Q3", "0", "0", "-Q1", "0", "0", "P3", "0", "0", "-P1", "0"],
}


def generic_hilbert_burch(F: Field) -> HilbertBurchData:
    """Hilbert-Burch data whose entries are six independent indeterminates."""
    R = PolyRing(F, ("P1", "P2", "P3", "Q1", "Q2", "Q3"))
    v = R.gens()
    return HilbertBurchData.from_columns(v[:3], v[3:])


def char_remark_identity(p: int, modulus: int | None = None) -> bool:
    """Check Y^T w = [f g h]^T for the explicit char-p solution w, over GF(modulus or p)."""
    if p not in CHAR_SOLUTIONS:
        raise ValueError("explicit solutions exist for p = 2 and p = 3")
    F = PrimeField(modulus or p)
    hb = generic_hilbert_burch(F)
    R = hb.ring
    w = [R.parse(s) for s in CHAR_SOLUTIONS[p]]
    Y = build_Y(hb)
    lhs = [sum((w[i] * Y[i][j] for i in range(12)), R.zero()) for j in range(3)]
    return lhs == list(hb.minors)


# ----------------------------------------------------------------------
# the linear-algebra criterion

PAIRS = [(2, 3), (3, 2), (3, 1), (1, 3), (1, 2), (2, 1)]
SIGNS = [1, -1, 1, -1, 1, -1]
# w index (1-based) of the symmetric 3x3 pattern at (row, col)
_SYM = {(0, 0): 1, (0, 1): 2, (0, 2): 3, (1, 0): 2, (1, 1): 4, (1, 2): 5,
        (2, 0): 3, (2, 1): 5, (2, 2): 6}


def _label(i: int, j: int) -> str:
    return f"P{i}Q{j}"


def _vec(f: Polynomial, index: dict, F: Field) -> list:
    v = [F.zero] * len(index)
    for m, c in f.terms.items():
        v[index[m]] = c
    return v


def _inverse(M: list[list], F: Field) -> list[list]:
    n = len(M)
    aug = [row + [F.one if i == j else F.zero for j in range(n)] for i, row in enumerate(M)]
    R, piv = echelon(aug, F)
    if piv[:n] != list(range(n)):
        raise DecompositionError("basis matrix is singular")
    return [r[n:] for r in R]


class ProductDecomposition:
    """A basis of R_d containing products P_iQ_j, with coordinate extraction.

    ``kind="canonical"`` uses span{P_iQ_j : all i, j} ⊕ (P^2)_d; ``kind="monomial"``
    completes the six off-diagonal products greedily with monomials taken in
    decreasing grevlex order.
    """

    def __init__(self, hb: HilbertBurchData, kind: str, complement: str = "echelon"):
        self.hb = hb
        self.kind = kind
        ring = hb.ring
        F = ring.field
        self.F = F
        self.monos = graded_basis(hb.d, ring.nvars)
        self.index = {m: i for i, m in enumerate(self.monos)}
        P, Q = hb.P, hb.Q
        if kind == "canonical":
            labels = [(i, j) for i in range(1, 4) for j in range(1, 4)]
        else:
            labels = list(PAIRS)
        vecs = [_vec(P[i - 1] * Q[j - 1], self.index, F) for i, j in labels]
        if rank(vecs, F) != len(vecs):
            raise DecompositionError("the products P_iQ_j are linearly dependent")
        if kind == "canonical":
            comp = complement_P2(hb, complement)
        else:
            comp = []
            current = [list(v) for v in vecs]
            r = len(current)
            for m in self.monos:
                e = [F.zero] * len(self.monos)
                e[self.index[m]] = F.one
                if rank(current + [e], F) > r:
                    current.append(e)
                    comp.append(e)
                    r += 1
        basis = vecs + comp
        if len(basis) != len(self.monos) or rank(basis, F) != len(basis):
            raise DecompositionError("products and complement do not form a basis")
        self.labels = labels
        self.dims = (len(vecs), len(comp))
        M = [[basis[k][r] for k in range(len(basis))] for r in range(len(self.monos))]
        inv = _inverse(M, F)
        self._rows = {lab: inv[k] for k, lab in enumerate(labels)}

    def coefficient(self, phi: Polynomial, pair: tuple[int, int]):
        """Raw coefficient of P_iQ_j in ``phi`` with respect to this basis."""
        F = self.F
        row = self._rows[pair]
        acc = F.zero
        for m, c in phi.terms.items():
            a = row[self.index[m]]
            if not F.is_zero(a):
                acc = F.add(acc, F.mul(a, c))
        return acc


def _span_vectors(polys: Sequence[Polynomial], deg: int, index: dict, F: Field) -> list[list]:
    """Vectors of all monomial multiples of ``polys`` landing in degree ``deg``."""
    out = []
    for p in polys:
        e = deg - p.degree()
        if e < 0:
            continue
        for m in graded_basis(e, p.ring.nvars):
            out.append(_vec(p.mul_monomial(m), index, F))
    return out


def complement_P2(hb: HilbertBurchData, complement: str = "echelon") -> list[list]:
    """A basis of (P^2)_d as coefficient vectors: reduced echelon rows or a greedy subset."""
    ring = hb.ring
    F = ring.field
    monos = graded_basis(hb.d, ring.nvars)
    index = {m: i for i, m in enumerate(monos)}
    P = hb.P
    squares = [P[i] * P[j] for i in range(3) for j in range(i, 3)]
    span = _span_vectors(squares, hb.d, index, F)
    if complement == "echelon":
        return echelon(span, F)[0]
    if complement == "greedy":
        out: list = []
        for v in reversed(span):
            if rank(out + [v], F) > len(out):
                out.append(v)
        return out
    raise ValueError(f"unknown complement choice {complement!r}")


@dataclass
class Prop6Report:
    condition1: bool
    condition2: bool
    nine_independent: bool
    properties: dict
    decomposition: str
    decomposition_dims: tuple
    nonzero_values: list = field(default_factory=list)


def structure_properties(hb: HilbertBurchData) -> dict:
    """Properties (a), (b), (c) with the relevant dimensions."""
    ring = hb.ring
    F = ring.field
    P, Q = hb.P, hb.Q
    m1 = graded_basis(hb.d1, ring.nvars)
    i1 = {m: i for i, m in enumerate(m1)}
    Pd1 = _span_vectors(P, hb.d1, i1, F)
    dimP1 = rank(Pd1, F) if Pd1 else 0
    qv = [_vec(q, i1, F) for q in Q]
    a = rank(Pd1 + qv, F) == len(m1) and dimP1 + 3 == len(m1)
    md = graded_basis(hb.d, ring.nvars)
    idd = {m: i for i, m in enumerate(md)}
    nine = [_vec(P[i] * Q[j], idd, F) for i in range(3) for j in range(3)]
    b = rank(nine, F) == 9
    comp = complement_P2(hb)
    c = b and rank(nine + comp, F) == 9 + len(comp) == len(md)
    return {"a": a, "b": b, "c": c, "dim_P_d1": dimP1, "dim_R_d1": len(m1),
            "dim_P2_d": len(comp), "dim_R_d": len(md)}


def _functional_values(dec: ProductDecomposition) -> list:
    """Value of the alternating functional on every monomial basis element of the w-space."""
    hb = dec.hb
    F = dec.F
    cols = (hb.P, hb.Q)
    degs = (hb.d1, hb.d0)
    values = []
    for part in (0, 1):
        for a in range(1, 7):
            positions = [(t, s) for (t, s), idx in _SYM.items() if idx == a]
            for mu in graded_basis(degs[part], hb.ring.nvars):
                total = F.zero
                for t, s in positions:
                    term = cols[part][s].mul_monomial(mu)
                    for k, pair in enumerate(PAIRS):
                        if k // 2 != t:
                            continue
                        v = dec.coefficient(term, pair)
                        total = F.add(total, v) if SIGNS[k] > 0 else F.sub(total, v)
                values.append(((a + 6 * part, mu), total))
    return values


def prop6_check(hb: HilbertBurchData | Ideal) -> Prop6Report:
    """Conditions (1) and (2) of the linear-algebra criterion for non-containment."""
    hb = _hb(hb)
    p = hb.ring.field.characteristic
    if p in (2, 3):
        raise CharacteristicError(p, "the product criterion requires characteristic other than 2 and 3")
    props = structure_properties(hb)
    F = hb.ring.field
    md = graded_basis(hb.d, hb.ring.nvars)
    idd = {m: i for i, m in enumerate(md)}
    six = [_vec(hb.P[i - 1] * hb.Q[j - 1], idd, F) for i, j in PAIRS]
    if rank(six, F) != 6:
        raise DecompositionError("the six products P_iQ_j (i != j) are linearly dependent")
    kinds = (["canonical"] if props["a"] and props["b"] and props["c"] else []) + ["monomial"]
    report = None
    for kind in kinds:
        dec = ProductDecomposition(hb, kind)
        vals = _functional_values(dec)
        nonzero = [(key, F.element(v)) for key, v in vals if not F.is_zero(v)]
        report = Prop6Report(True, not nonzero, props["b"], props, kind, dec.dims, nonzero)
        if report.condition2:
            break
    return report


# ----------------------------------------------------------------------
# coefficient table


def cubic_monomials_lex() -> list[tuple]:
    return sorted(graded_basis(3, 3), reverse=True)


@dataclass
class CoefficientTable:
    raw: dict
    unit: FieldElement
    scaled: dict
    columns: list
    rows: list

    def scaled_entry(self, mono: tuple, j: int, pair: tuple[int, int]) -> FieldElement:
        return self.scaled[(mono, j)][pair]


def klein_coefficient_table(hb: HilbertBurchData, complement: str = "echelon") -> CoefficientTable:
    """Coefficients of mu*Q_j (mu cubic) at the six off-diagonal products, canonical decomposition."""
    F = hb.ring.field
    p = F.characteristic
    if p in (2, 3, 7):
        raise CharacteristicError(p, "the coefficient table needs characteristic other than 2, 3 and 7")
    props = structure_properties(hb)
    if not (props["a"] and props["b"] and props["c"]):
        raise DecompositionError(f"canonical decomposition unavailable: {props}")
    if hb.d - hb.d1 != 3:
        raise DecompositionError("table expects a degree-3 P column")
    dec = ProductDecomposition(hb, "canonical", complement)
    monos = cubic_monomials_lex()
    raw = {}
    columns = []
    for mu in monos:
        for j in range(1, 4):
            columns.append((mu, j))
            poly = hb.Q[j - 1].mul_monomial(mu)
            raw[(mu, j)] = {pair: F.element(dec.coefficient(poly, pair)) for pair in PAIRS}
    c = F.c
    ref = raw[((3, 0, 0), 3)][(2, 3)]
    unit = ref / (c * 2 + 12)
    if unit.is_zero():
        raise DecompositionError("reference entry vanishes; cannot infer the unit")
    scaled = {key: {pair: v / unit for pair, v in row.items()} for key, row in raw.items()}
    return CoefficientTable(raw, unit, scaled, columns, list(PAIRS))
