"""Graded free modules: syzygies, minimal generators, membership, Hilbert-Burch data.

Everything is computed from one augmented Groebner basis: a generator v_j of
R^r becomes (v_j ; e_j) in R^(r+k) under a position-over-term order, so the
elements whose leading term falls in the last k components are syzygies and
reductions against the first r components yield membership certificates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ._core import Ctx, Elem
from .groebner import Ideal
from .linalg import echelon
from .poly import Polynomial, PolyRing


class TwistError(ValueError):
    pass


class HilbertBurchError(ValueError):
    pass


class ModuleVector:
    """Element of R(-a_1) ⊕ ... ⊕ R(-a_k)."""

    __slots__ = ("components", "twists", "ring")

    def __init__(self, components: Sequence[Polynomial], twists: Sequence[int] | None = None,
                 ring: PolyRing | None = None):
        self.components = tuple(components)
        self.ring = ring or self.components[0].ring
        self.twists = tuple(twists) if twists is not None else (0,) * len(self.components)
        if len(self.twists) != len(self.components):
            raise TwistError("one twist per component is required")

    @classmethod
    def zero(cls, ring: PolyRing, twists: Sequence[int]) -> "ModuleVector":
        return cls([ring.zero() for _ in twists], twists, ring)

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> Polynomial:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def degree(self) -> int | None:
        """Module degree (entry degree plus twist); None for the zero vector."""
        degs = {c.degree() + a for c, a in zip(self.components, self.twists) if not c.is_zero()}
        if not degs:
            return None
        if len(degs) > 1 or not all(c.is_homogeneous() for c in self.components):
            raise TwistError("vector is not homogeneous")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        try:
            self.degree()
        except TwistError:
            return False
        return True

    def _check(self, other: "ModuleVector") -> None:
        if self.twists != other.twists:
            raise TwistError("twist mismatch")

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        return ModuleVector([a + b for a, b in zip(self, other)], self.twists, self.ring)

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        self._check(other)
        return ModuleVector([a - b for a, b in zip(self, other)], self.twists, self.ring)

    def __neg__(self) -> "ModuleVector":
        return ModuleVector([-a for a in self], self.twists, self.ring)

    def scale(self, p) -> "ModuleVector":
        return ModuleVector([a * p for a in self], self.twists, self.ring)

    def __eq__(self, other) -> bool:
        return (isinstance(other, ModuleVector) and self.twists == other.twists
                and self.components == other.components)

    def __hash__(self) -> int:
        return hash((self.components, self.twists))

    def dot(self, gens: Sequence) -> Polynomial | "ModuleVector":
        """sum_i v_i * gens_i, for polynomial or vector ``gens``."""
        acc = None
        for c, g in zip(self.components, gens):
            if c.is_zero():
                continue
            t = g.scale(c) if isinstance(g, ModuleVector) else c * g
            acc = t if acc is None else acc + t
        if acc is None:
            g0 = gens[0]
            return ModuleVector.zero(g0.ring, g0.twists) if isinstance(g0, ModuleVector) else self.ring.zero()
        return acc

    def __repr__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def combine(coords: Sequence[Polynomial], gens: Sequence[ModuleVector]) -> ModuleVector:
    """sum_j coords_j * gens_j."""
    acc = ModuleVector.zero(gens[0].ring, gens[0].twists)
    for c, g in zip(coords, gens):
        if not c.is_zero():
            acc = acc + g.scale(c)
    return acc


def _as_vectors(gens: Sequence) -> list[ModuleVector]:
    out = []
    for g in gens:
        if isinstance(g, ModuleVector):
            out.append(g)
        else:
            out.append(ModuleVector([g], (0,), g.ring))
    return out


# ----------------------------------------------------------------------
# packing


def _module_ctx(ring: PolyRing, twists: Sequence[int]) -> Ctx:
    return Ctx(ring.field, ring.nvars, ring.default_order.rows, twists=twists)


def _pack_vec(ctx: Ctx, v: ModuleVector, offset: int = 0) -> dict:
    out = {}
    for i, comp in enumerate(v.components):
        for m, c in comp.terms.items():
            out[ctx.pack(m, i + offset)] = c
    return out


def _unpack_vec(ctx: Ctx, d: dict, ring: PolyRing, start: int, stop: int,
                twists: Sequence[int]) -> ModuleVector:
    comps: list[dict] = [{} for _ in range(stop - start)]
    for P, c in d.items():
        i, m = ctx.unpack(P)
        if start <= i < stop:
            comps[i - start][m] = c
    return ModuleVector([Polynomial(ring, t) for t in comps], twists, ring)


class _Augmented:
    """Augmented basis for generators v_1..v_k of a submodule of R^r."""

    def __init__(self, gens: Sequence[ModuleVector]):
        self.gens = list(gens)
        g0 = self.gens[0]
        self.ring = g0.ring
        self.r = len(g0)
        self.k = len(self.gens)
        self.twists = g0.twists
        self.gen_degrees = [self._deg(v) for v in self.gens]
        self.ctx = _module_ctx(self.ring, tuple(self.twists) + tuple(self.gen_degrees))
        F = self.ring.field
        inputs = []
        for j, v in enumerate(self.gens):
            if v.twists != self.twists:
                raise TwistError("generators have different twists")
            d = _pack_vec(self.ctx, v)
            d[self.ctx.pack((0,) * self.ring.nvars, self.r + j)] = F.one
            inputs.append(d)
        self.syz_elems: list[Elem] = []
        self.basis = self.ctx.groebner(inputs, product_criterion=False, skip_comp=self.r,
                                       reduced=False, collect=self.syz_elems)

    def _deg(self, v: ModuleVector) -> int:
        d = v.degree()
        if d is None:
            # zero generator: any degree keeps things homogeneous
            return 0
        return d

    def syzygies(self) -> list[ModuleVector]:
        ctx = self.ctx
        return [_unpack_vec(ctx, ctx.elem_dict(e), self.ring, self.r, self.r + self.k,
                            self.gen_degrees) for e in self.syz_elems]

    def member(self, v: ModuleVector) -> tuple[bool, list[Polynomial] | None]:
        ctx = self.ctx
        d = _pack_vec(ctx, v)
        if not d:
            return True, [self.ring.zero() for _ in range(self.k)]
        rem = ctx.reduce(d, self.basis, full=False, stop_comp=self.r)
        if rem and ctx.comp(max(rem, key=ctx.key)) < self.r:
            return False, None
        w = _unpack_vec(ctx, rem, self.ring, self.r, self.r + self.k, self.gen_degrees)
        return True, [-c for c in w.components]


def syzygies(gens: Sequence) -> list[ModuleVector]:
    """Generators of the first syzygy module of polynomials or module vectors.

    The result is a Schreyer-type generating set (not minimal); each vector
    lives in the free module twisted by the generator degrees.
    """
    vecs = _as_vectors(gens)
    if not vecs:
        return []
    aug = _Augmented(vecs)
    return aug.syzygies()


def module_member(v: ModuleVector | Sequence[Polynomial], gens: Sequence) -> tuple[bool, list[Polynomial] | None]:
    """Decide v ∈ span(gens); on success also return verified coordinates."""
    if not isinstance(v, ModuleVector):
        v = ModuleVector(list(v), gens[0].twists if gens and isinstance(gens[0], ModuleVector) else None)
    vecs = _as_vectors(gens)
    if not vecs:
        return v.is_zero(), ([] if v.is_zero() else None)
    if v.twists != vecs[0].twists:
        raise TwistError("twist mismatch between vector and generators")
    ok, coords = _Augmented(vecs).member(v)
    if ok and combine(coords, vecs) != v:
        raise AssertionError("membership certificate failed to re-expand")
    return ok, coords


class SubmoduleBasis:
    """Reusable membership oracle for one submodule."""

    def __init__(self, gens: Sequence[ModuleVector]):
        self.gens = _as_vectors(gens)
        self._aug = _Augmented(self.gens)

    def member(self, v: ModuleVector) -> tuple[bool, list[Polynomial] | None]:
        ok, coords = self._aug.member(v)
        if ok and combine(coords, self.gens) != v:
            raise AssertionError("membership certificate failed to re-expand")
        return ok, coords

    def contains(self, v: ModuleVector) -> bool:
        return self.member(v)[0]


def _plain_basis(vecs: Sequence[ModuleVector]) -> tuple[Ctx, list[Elem]]:
    ring = vecs[0].ring
    ctx = _module_ctx(ring, vecs[0].twists)
    return ctx, ctx.groebner([_pack_vec(ctx, v) for v in vecs], product_criterion=False, reduced=False)


def minimalize(vectors: Iterable[ModuleVector]) -> list[ModuleVector]:
    """Minimal generating subset of a homogeneous family, by increasing degree."""
    vecs = [v for v in vectors if not v.is_zero()]
    if not vecs:
        return []
    vecs.sort(key=lambda v: v.degree())
    ring = vecs[0].ring
    F = ring.field
    kept: list[ModuleVector] = []
    i = 0
    while i < len(vecs):
        deg = vecs[i].degree()
        batch = []
        while i < len(vecs) and vecs[i].degree() == deg:
            batch.append(vecs[i])
            i += 1
        if kept:
            ctx, basis = _plain_basis(kept)
        else:
            ctx = _module_ctx(ring, batch[0].twists)
            basis = []
        forms = [ctx.reduce(_pack_vec(ctx, v), basis) for v in batch]
        support = sorted({P for nf in forms for P in nf})
        rows: list = []
        for v, nf in zip(batch, forms):
            if not nf:
                continue
            row = [nf.get(P, F.zero) for P in support]
            if len(echelon(rows + [row], F)[1]) > len(rows):
                rows.append(row)
                rows = echelon(rows, F)[0]
                kept.append(v)
    return kept


def _lead_tuple(v: ModuleVector) -> tuple:
    order = v.ring.default_order
    return tuple(order.key(c.leading_monomial()) if not c.is_zero() else () for c in v.components)


# ----------------------------------------------------------------------
# Hilbert-Burch


@dataclass
class HilbertBurchData:
    """Presentation columns P (degree d0) and Q (degree d1) of a 3-generated ideal."""

    P: tuple
    Q: tuple
    d0: int
    d1: int
    d: int
    minors: tuple
    gens: tuple = ()
    scale: object = None
    extra: dict = field(default_factory=dict)

    @property
    def ring(self) -> PolyRing:
        return self.minors[0].ring

    @property
    def f(self) -> Polynomial:
        return self.minors[0]

    @property
    def g(self) -> Polynomial:
        return self.minors[1]

    @property
    def h(self) -> Polynomial:
        return self.minors[2]

    @staticmethod
    def signed_minors(P: Sequence[Polynomial], Q: Sequence[Polynomial]) -> tuple:
        P1, P2, P3 = P
        Q1, Q2, Q3 = Q
        return (P2 * Q3 - P3 * Q2, P3 * Q1 - P1 * Q3, P1 * Q2 - P2 * Q1)

    @classmethod
    def from_columns(cls, P: Sequence[Polynomial], Q: Sequence[Polynomial],
                     gens: Sequence[Polynomial] | None = None) -> "HilbertBurchData":
        P, Q = tuple(P), tuple(Q)
        d0 = _column_degree(P)
        d1 = _column_degree(Q)
        minors = cls.signed_minors(P, Q)
        if all(m.is_zero() for m in minors):
            d = d0 + d1
        else:
            d = next(m.degree() for m in minors if not m.is_zero())
        scale = None
        if gens is not None:
            scale = _scalar_ratio(minors, gens)
            if scale is None:
                raise HilbertBurchError("minors are not a scalar multiple of the generators")
        return cls(P, Q, d0, d1, d, minors, tuple(gens or minors), scale)

    def check(self) -> bool:
        """Both columns annihilate the minors, and degrees add up."""
        for col in (self.P, self.Q):
            s = sum((a * b for a, b in zip(col, self.minors)), self.ring.zero())
            if not s.is_zero():
                return False
        return self.d0 + self.d1 == self.d


def _column_degree(col: Sequence[Polynomial]) -> int:
    degs = {c.degree() for c in col if not c.is_zero()}
    if len(degs) > 1 or not all(c.is_homogeneous() for c in col):
        raise HilbertBurchError("column entries must be homogeneous of one degree")
    return degs.pop() if degs else 0


def _scalar_ratio(a: Sequence[Polynomial], b: Sequence[Polynomial]):
    """Raw scalar k with a_i = k*b_i for all i, or None."""
    F = a[0].ring.field
    k = None
    for u, v in zip(a, b):
        if v.is_zero():
            if not u.is_zero():
                return None
            continue
        m = next(iter(v.terms))
        ratio = F.div(u.terms.get(m, F.zero), v.terms[m])
        if F.is_zero(ratio):
            return None
        if k is None:
            k = ratio
        elif ratio != k:
            return None
        if u != v.scale(F.element(k)):
            return None
    return k


def hilbert_burch(I: Ideal | Sequence[Polynomial]) -> HilbertBurchData:
    """Hilbert-Burch columns for a height-two ideal with three generators of one degree.

    The Q column is rescaled so that the signed minors reproduce the
    (minimal) input generators exactly; ``scale`` records the factor the raw
    minors carried before rescaling.
    """
    gens = I.minimal_generators() if isinstance(I, Ideal) else list(I)
    if isinstance(I, Ideal):
        order = {id(g): i for i, g in enumerate(I.gens)}
        gens.sort(key=lambda g: order[id(g)])
    if len(gens) != 3:
        raise HilbertBurchError(f"expected 3 minimal generators, found {len(gens)}")
    degs = {g.degree() for g in gens}
    if len(degs) != 1 or not all(g.is_homogeneous() for g in gens):
        raise HilbertBurchError("generators must be homogeneous of one degree")
    (d,) = degs
    syz = minimalize(syzygies(gens))
    if len(syz) != 2:
        raise HilbertBurchError(f"expected 2 minimal syzygies, found {len(syz)}")
    syz.sort(key=lambda v: (v.degree(), _lead_tuple(v)))
    P, Q = tuple(syz[0].components), tuple(syz[1].components)
    minors = HilbertBurchData.signed_minors(P, Q)
    k = _scalar_ratio(minors, gens)
    if k is None:
        raise HilbertBurchError("minors do not regenerate the generators (input is not ACM)")
    F = gens[0].ring.field
    inv = F.element(F.inv(k))
    Q = tuple(q.scale(inv) for q in Q)
    data = HilbertBurchData.from_columns(P, Q, gens)
    data.scale = k
    return data
