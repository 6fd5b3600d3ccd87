"""Ideals, Groebner bases and the standard ideal-theoretic constructions.

Everything funnels through :mod:`sympower._core`.  Ideals cache one reduced
basis per (order, grading) pair.  Saturation by the irrelevant ideal of a
three-variable ring uses a coordinate change plus Bayer's division trick
instead of iterated colons; other saturations iterate colons.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct
from typing import Iterable, Sequence

from ._core import Ctx, Elem
from .poly import MonomialOrder, Polynomial, PolyRing


def _ctx(ring: PolyRing, order: MonomialOrder, grading: Sequence[int] | None = None) -> Ctx:
    return Ctx(ring.field, ring.nvars, order.rows, grading=grading)


def _pack(ctx: Ctx, f: Polynomial) -> dict:
    return {ctx.pack(m): c for m, c in f.terms.items()}


def _unpack(ctx: Ctx, d: dict, ring: PolyRing) -> Polynomial:
    return Polynomial(ring, {ctx.unpack(P)[1]: c for P, c in d.items()})


def _elem_poly(ctx: Ctx, e: Elem, ring: PolyRing) -> Polynomial:
    return _unpack(ctx, ctx.elem_dict(e), ring)


class Ideal:
    """A polynomial ideal given by generators, with lazily cached Groebner bases."""

    def __init__(self, gens: Iterable[Polynomial], ring: PolyRing | None = None,
                 grading: Sequence[int] | None = None):
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("an empty ideal needs an explicit ring")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise ValueError("generators live in different rings")
        self.ring = ring
        self.gens = [g for g in gens if not g.is_zero()]
        self.grading = tuple(grading) if grading is not None else None
        self._gbs: dict = {}

    def __repr__(self) -> str:
        return f"Ideal({len(self.gens)} generators in {self.ring!r})"

    # Groebner machinery ------------------------------------------------
    def _basis(self, order: MonomialOrder | None = None) -> tuple[Ctx, list[Elem]]:
        order = order or self.ring.default_order
        key = (order.rows, self.grading)
        hit = self._gbs.get(key)
        if hit is None:
            ctx = _ctx(self.ring, order, self.grading)
            elems = ctx.groebner([_pack(ctx, g) for g in self.gens])
            hit = self._gbs[key] = (ctx, elems)
        return hit

    def groebner_basis(self, order: MonomialOrder | None = None) -> list[Polynomial]:
        ctx, elems = self._basis(order)
        elems = sorted(elems, key=lambda e: ctx.key(e.lead), reverse=True)
        return [_elem_poly(ctx, e, self.ring) for e in elems]

    def leading_monomials(self, order: MonomialOrder | None = None) -> list[tuple]:
        ctx, elems = self._basis(order)
        return [ctx.unpack(e.lead)[1] for e in elems]

    def normal_form(self, f: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
        ctx, elems = self._basis(order)
        return _unpack(ctx, ctx.reduce(_pack(ctx, f), elems), self.ring)

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if not self.gens:
            return False
        ctx, elems = self._basis()
        return not ctx.reduce(_pack(ctx, f), elems, full=False)

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def is_subset(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def equals(self, other: "Ideal") -> bool:
        return self.is_subset(other) and other.is_subset(self)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.gens + other.gens, self.ring, self.grading)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal([a * b for a in self.gens for b in other.gens], self.ring, self.grading)

    def power(self, k: int) -> "Ideal":
        """Ideal generated by all ``k``-fold products (monomials in the generators, lex order)."""
        return Ideal(power_generators(self.gens, k), self.ring, self.grading)

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def minimal_generators(self) -> list[Polynomial]:
        """Greedy minimal generating subset for a homogeneous ideal."""
        gens = sorted(self.gens, key=lambda g: g.degree())
        kept: list[Polynomial] = []
        for g in gens:
            if not kept or not Ideal(kept, self.ring).contains(g):
                kept.append(g)
        return kept


def power_generators(gens: Sequence[Polynomial], k: int) -> list[Polynomial]:
    """All products g^a with |a| = k, ordered by the exponent vectors a in lex order."""
    n = len(gens)
    out = []
    for a in _compositions(k, n):
        p = gens[0].ring.one()
        for g, e in zip(gens, a):
            if e:
                p = p * g ** e
        out.append(p)
    return out


def _compositions(k: int, n: int) -> list[tuple]:
    """Exponent vectors of total degree ``k`` in ``n`` slots, lex-descending."""
    if n == 1:
        return [(k,)]
    out = []
    for first in range(k, -1, -1):
        for rest in _compositions(k - first, n - 1):
            out.append((first,) + rest)
    return out


# ----------------------------------------------------------------------
# module-level API


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder | None = None) -> list[Polynomial]:
    """Reduced Groebner basis (monic, sorted by decreasing leading term)."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    return Ideal(gens).groebner_basis(order)


def ideal_member(f: Polynomial, I: Ideal) -> bool:
    return I.contains(f)


def _aux_ring(ring: PolyRing, name: str, front: bool = True) -> PolyRing:
    while name in ring.names:
        name += "_"
    return ring.extend([name], front=front)


def eliminate(I: Ideal, block: Sequence[int | str], order: MonomialOrder | None = None) -> Ideal:
    """I intersected with the subring free of the ``block`` variables."""
    ring = I.ring
    idx = sorted(ring.index(v) for v in block)
    if not idx:
        return Ideal(I.gens, ring, I.grading)
    order = order or _elimination_order(ring.nvars, idx, I.grading)
    J = Ideal(I.gens, ring, I.grading)
    basis = J.groebner_basis(order)
    keep = [g for g in basis if not any(m[i] for m in g.terms for i in idx)]
    return Ideal(keep, ring, I.grading)


def _elimination_order(n: int, block: Sequence[int], grading: Sequence[int] | None) -> MonomialOrder:
    w = list(grading) if grading is not None else [1] * n
    rows = []
    row = [0] * n
    for i in block:
        row[i] = max(w[i], 1)
    rows.append(row)
    for i in reversed(block[1:]):
        r = [0] * n
        r[i] = -1
        rows.append(r)
    rest = [i for i in range(n) if i not in block]
    row = [0] * n
    for i in rest:
        row[i] = w[i]
    rows.append(row)
    for i in reversed(rest[1:]):
        r = [0] * n
        r[i] = -1
        rows.append(r)
    return MonomialOrder("elimination", rows)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1-t)*J (t of degree zero)."""
    ring = I.ring
    if not I.gens or not J.gens:
        return Ideal([], ring)
    big = _aux_ring(ring, "t")
    t = big.var(0)
    pos = list(range(1, big.nvars))
    lift = [g.change_ring(big, pos) for g in I.gens]
    lift2 = [g.change_ring(big, pos) for g in J.gens]
    gens = [t * g for g in lift] + [(big.one() - t) * g for g in lift2]
    base = I.grading or (1,) * ring.nvars
    grading = (0,) + tuple(base)
    L = eliminate(Ideal(gens, big, grading), [0])
    back = [_drop_front(g, ring) for g in L.gens]
    return Ideal(back, ring, I.grading)


def _drop_front(g: Polynomial, ring: PolyRing) -> Polynomial:
    return Polynomial(ring, {m[1:]: c for m, c in g.terms.items()})


def exact_quotient(a: Polynomial, b: Polynomial) -> Polynomial:
    from .poly import reduce as divide

    r, (q,) = divide(a, [b])
    if not r.is_zero():
        raise ArithmeticError("division is not exact")
    return q


def colon(I: Ideal, f: Polynomial) -> Ideal:
    """(I : f) = (I ∩ (f)) / f."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    if f.degree() == 0:
        return Ideal(I.gens, I.ring, I.grading)
    K = intersect(I, Ideal([f], I.ring))
    return Ideal([exact_quotient(g, f) for g in K.gens], I.ring, I.grading)


def colon_ideal(I: Ideal, J: Ideal) -> Ideal:
    result = None
    for g in J.gens:
        K = colon(I, g)
        result = K if result is None else intersect(result, K)
    return result if result is not None else Ideal([I.ring.one()], I.ring)


def saturate(I: Ideal, J: Ideal | None = None, support: Ideal | None = None,
             method: str = "auto") -> Ideal:
    """(I : J^∞).

    ``J=None`` means the irrelevant ideal of a three-variable ring.  In that
    case (with ``method="auto"``) a linear form avoiding the zero set of
    ``support`` (default: I) is moved to the last coordinate and Bayer's
    division trick is applied to a grevlex basis.  Otherwise colons by the
    generators of J are iterated until the ideal stops growing.
    """
    ring = I.ring
    if J is None:
        if method == "auto" and ring.nvars == 3 and I.is_homogeneous():
            res = _saturate_irrelevant(I, support or I)
            if res is not None:
                return res
        J = Ideal(ring.gens(), ring)
    current = Ideal(I.gens, ring, I.grading)
    while True:
        nxt = colon_ideal(current, J)
        if nxt.is_subset(current):
            return current
        current = nxt


def _bayer(I: Ideal, var: int) -> Ideal:
    """(I : x_var^∞) for homogeneous I, with x_var last in grevlex."""
    ring = I.ring
    n = ring.nvars
    perm = list(range(n))
    perm[var], perm[n - 1] = perm[n - 1], perm[var]
    moved = [g.apply_symmetry(perm) for g in I.gens]
    basis = Ideal(moved, ring).groebner_basis()
    out = []
    for g in basis:
        k = min(m[n - 1] for m in g.terms)
        g = Polynomial(ring, {m[:-1] + (m[-1] - k,): c for m, c in g.terms.items()})
        out.append(g.apply_symmetry(perm))
    return Ideal(out, ring, I.grading)


def saturate_by_variable(I: Ideal, var: int | str) -> Ideal:
    return _bayer(I, I.ring.index(var))


def _linear_candidates(ring: PolyRing):
    F = ring.field
    x, y, z = ring.gens()
    yield z
    yield x
    yield y
    yield x + y + z
    if F.is_finite():
        p = F.characteristic
        vals = range(min(p, 7))
    else:
        vals = range(-3, 4)
    for a, b in iproduct(vals, repeat=2):
        if a == 0 and b == 0:
            continue
        yield x.scale(F.from_int(a)) + y.scale(F.from_int(b)) + z


def avoids_zero_set(I: Ideal, l: Polynomial) -> bool:
    """True when I + (l) is primary to the irrelevant ideal (l vanishes at no zero of I)."""
    lead = (I + Ideal([l], I.ring)).leading_monomials()
    n = I.ring.nvars
    return all(any(m[i] > 0 and sum(m) == m[i] for m in lead) for i in range(n))


def _saturate_irrelevant(I: Ideal, support: Ideal) -> Ideal | None:
    ring = I.ring
    for l in _linear_candidates(ring):
        if avoids_zero_set(support, l):
            return _saturate_along(I, l)
    return None


def _saturate_along(I: Ideal, l: Polynomial) -> Ideal:
    """(I : l^∞) for a linear form l, via a coordinate change sending l to the last variable."""
    ring = I.ring
    F = ring.field
    n = ring.nvars
    coeffs = [l.terms.get(tuple(int(i == j) for i in range(n)), F.zero) for j in range(n)]
    k = max(j for j in range(n) if not F.is_zero(coeffs[j]))
    perm = list(range(n))
    perm[k], perm[n - 1] = perm[n - 1], perm[k]
    coeffs = [coeffs[perm[j]] for j in range(n)]
    gens = [g.apply_symmetry(perm) for g in I.gens]
    V = ring.gens()
    cinv = F.inv(coeffs[-1])
    # forward: x_last -> (x_last - sum a_j x_j) / c
    last = V[-1]
    for j in range(n - 1):
        last = last - V[j].scale(ring.field.element(coeffs[j]))
    fwd = V[:-1] + [last.scale(ring.field.element(cinv))]
    back_last = V[-1].scale(ring.field.element(coeffs[-1]))
    for j in range(n - 1):
        back_last = back_last + V[j].scale(ring.field.element(coeffs[j]))
    bwd = V[:-1] + [back_last]
    moved = Ideal([g.substitute(fwd, ring) for g in gens], ring)
    sat = _bayer(moved, n - 1)
    out = [g.substitute(bwd, ring).apply_symmetry(perm) for g in sat.gens]
    return Ideal(out, ring, I.grading)


def symbolic_power(I: Ideal, m: int) -> Ideal:
    """I^(m) = (I^m : (x,y,z)^∞) for a radical ideal of points."""
    return saturate(I.power(m), support=I)


def in_symbolic_power(F: Polynomial, I: Ideal, m: int) -> bool:
    """F ∈ I^(m), tested variable by variable: F ∈ (I^m : v^∞) for v = x, y, z."""
    if F.is_zero():
        return True
    Im = I.power(m)
    return all(_bayer(Im, v).contains(F) for v in range(I.ring.nvars))


# ----------------------------------------------------------------------
# Rees algebra


def rees_ideal(gens: Sequence[Polynomial]) -> Ideal:
    """Kernel of R[T_1..T_k] -> R[s], T_i -> s*f_i, by eliminating s."""
    ring = gens[0].ring
    k = len(gens)
    degs = {g.degree() for g in gens}
    if len(degs) != 1 or not all(g.is_homogeneous() for g in gens):
        raise ValueError("Rees ideal needs homogeneous generators of one degree")
    (d,) = degs
    tnames = [f"T{i + 1}" for i in range(k)]
    target = ring.extend(tnames)
    full = target.extend(["s"])
    n = ring.nvars
    pos = list(range(n))
    s = full.var("s")
    rel = [full.var(tnames[i]) - s * g.change_ring(full, pos) for i, g in enumerate(gens)]
    grading = (1,) * n + (d,) * k + (0,)
    L = eliminate(Ideal(rel, full, grading), ["s"])
    out = [Polynomial(target, {m[:-1]: c for m, c in g.terms.items()}) for g in L.gens]
    ideal = Ideal(out, target, (1,) * n + (d,) * k)
    ideal.base_nvars = n
    return ideal


def t_degree(g: Polynomial, base_nvars: int) -> int:
    return max(sum(m[base_nvars:]) for m in g.terms)


def is_linear_type(L: Ideal, base_nvars: int | None = None) -> bool:
    """True iff L is generated by its elements of T-degree one.

    The T-linear part of L is generated by the Groebner basis elements of
    T-degree at most one (division never raises T-degree), so it suffices to
    test the remaining basis elements for membership in that part.
    """
    n = base_nvars if base_nvars is not None else getattr(L, "base_nvars", 3)
    basis = L.groebner_basis()
    low = [g for g in basis if t_degree(g, n) <= 1]
    high = [g for g in basis if t_degree(g, n) > 1]
    if not high:
        return True
    L1 = Ideal(low, L.ring, L.grading)
    return all(L1.contains(g) for g in high)


# ----------------------------------------------------------------------
# Hilbert series of monomial ideals


def _minimize_monomials(monos: Iterable[tuple]) -> tuple:
    monos = sorted(set(monos), key=sum)
    out: list = []
    for m in monos:
        if not any(all(a <= b for a, b in zip(u, m)) for u in out):
            out.append(m)
    return tuple(sorted(out))


def _poly_add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _shift(a: list, k: int) -> list:
    return [0] * k + a


@lru_cache(maxsize=None)
def _numerator(monos: tuple) -> tuple:
    """Numerator N(t) of the Hilbert series of k[x]/M, with HS = N / (1-t)^n."""
    if not monos:
        return (1,)
    if any(sum(m) == 0 for m in monos):
        return (0,)
    nontrivial = [m for m in monos if sum(1 for e in m if e) > 1]
    if not nontrivial:
        result = [1]
        for m in monos:
            e = sum(m)
            factor = [1] + [0] * (e - 1) + [-1]
            result = _poly_mul(result, factor)
        return tuple(result)
    m = max(nontrivial, key=sum)
    i = max(range(len(m)), key=lambda j: (sum(1 for u in monos if u[j]), m[j]))
    pivot = tuple(int(j == i) for j in range(len(m)))
    plus = _minimize_monomials(monos + (pivot,))
    quot = _minimize_monomials(tuple(tuple(max(a - b, 0) for a, b in zip(u, pivot)) for u in monos))
    return tuple(_trim(_poly_add(list(_numerator(plus)), _shift(list(_numerator(quot)), 1))))


def _poly_mul(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return out


def _trim(a: list) -> list:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def hilbert_numerator(I: Ideal) -> list[int]:
    """Coefficients of N(t) with HS(R/I) = N(t) / (1-t)^n, from GB leading terms."""
    if not I.gens:
        return [1]
    return list(_numerator(_minimize_monomials(I.leading_monomials())))


def hilbert_data(I: Ideal) -> tuple[int, int]:
    """(Krull dimension, multiplicity) of R/I."""
    num = hilbert_numerator(I)
    n = I.ring.nvars
    k = 0
    while k < n and sum(num) == 0 and any(num):
        # divide by (1 - t)
        q = []
        acc = 0
        for a in num[:-1]:
            acc += a
            q.append(acc)
        num = _trim(q) if q else [0]
        k += 1
    return n - k, sum(num)


def multiplicity(I: Ideal) -> int:
    """Degree of R/I for a one-dimensional quotient (an ideal of points)."""
    dim, deg = hilbert_data(I)
    if dim != 1:
        raise ValueError(f"expected a one-dimensional quotient, got dimension {dim}")
    return deg
