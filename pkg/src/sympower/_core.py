"""Packed-monomial Buchberger core shared by ideal and module computations.

A term is a Python int: exponent i lives in a 16-bit field (variable 0 in the
most significant one) and the module component sits above all exponent fields.
Multiplying by a monomial is integer addition and divisibility is a single
mask test on the difference.  The order is any matrix order on exponents,
refined to position-over-term for modules (component 0 largest).

Pair selection is the normal strategy (smallest sugar, then smallest lcm),
with the Gebauer-Moeller form of the chain criterion and, for ideals only,
the coprime-leading-term criterion.  The returned reduced basis is unique for
the order, so its content never depends on pair processing order.
"""

from __future__ import annotations

from heapq import heapify, heappop, heappush
from typing import Sequence

from .fields import PrimeField

SHIFT = 16
FIELD_MASK = (1 << SHIFT) - 1
MAX_EXP = 1 << (SHIFT - 1)
ROW_BITS = 40
ROW_OFFSET = 1 << (ROW_BITS - 1)


class Elem:
    """Monic basis element: ``lead`` has coefficient one, ``tail`` is a list of (term, coeff)."""

    __slots__ = ("lead", "tail", "sugar")

    def __init__(self, lead: int, tail: list, sugar: int):
        self.lead = lead
        self.tail = tail
        self.sugar = sugar


class Ctx:
    """Term arithmetic for a fixed field, variable count, order and grading."""

    def __init__(
        self,
        field,
        nvars: int,
        rows: Sequence[Sequence[int]],
        grading: Sequence[int] | None = None,
        twists: Sequence[int] | None = None,
    ):
        self.field = field
        self.p = field.characteristic if isinstance(field, PrimeField) else 0
        self.nvars = nvars
        self.rows = [tuple(r) for r in rows]
        self.grading = tuple(grading) if grading is not None else (1,) * nvars
        self.twists = tuple(twists) if twists is not None else (0,)
        self.ncomps = len(self.twists)
        self.compshift = SHIFT * nvars
        guard = 0
        for i in range(nvars):
            guard |= 1 << (SHIFT * i + SHIFT - 1)
        self.divmask = guard | (-1 << self.compshift)
        self.monomask = (1 << self.compshift) - 1
        self._keys: dict[int, int] = {}
        self._degs: dict[int, int] = {}

    # packing ------------------------------------------------------------
    def pack(self, exps: Sequence[int], comp: int = 0) -> int:
        P = comp
        for e in exps:
            if e >= MAX_EXP:
                raise OverflowError("exponent too large for packed monomials")
            P = (P << SHIFT) | e
        return P

    def unpack(self, P: int) -> tuple[int, tuple]:
        n = self.nvars
        exps = tuple((P >> (SHIFT * (n - 1 - i))) & FIELD_MASK for i in range(n))
        return P >> self.compshift, exps

    def key(self, P: int) -> int:
        k = self._keys.get(P)
        if k is None:
            comp, exps = self.unpack(P)
            k = 0
            if self.ncomps > 1:
                k = ROW_OFFSET - comp
            for row in self.rows:
                k = (k << ROW_BITS) | (sum(w * e for w, e in zip(row, exps)) + ROW_OFFSET)
            self._keys[P] = k
        return k

    def deg(self, P: int) -> int:
        d = self._degs.get(P)
        if d is None:
            comp, exps = self.unpack(P)
            d = sum(w * e for w, e in zip(self.grading, exps)) + self.twists[comp]
            self._degs[P] = d
        return d

    def mono_deg(self, P: int) -> int:
        _, exps = self.unpack(P)
        return sum(w * e for w, e in zip(self.grading, exps))

    def divides(self, a: int, b: int) -> bool:
        return ((b - a) & self.divmask) == 0

    def lcm(self, a: int, b: int) -> int:
        out = a & ~self.monomask
        for i in range(self.nvars):
            s = SHIFT * i
            ea = (a >> s) & FIELD_MASK
            eb = (b >> s) & FIELD_MASK
            out |= (ea if ea > eb else eb) << s
        return out

    def coprime(self, a: int, b: int) -> bool:
        for i in range(self.nvars):
            s = SHIFT * i
            if (a >> s) & FIELD_MASK and (b >> s) & FIELD_MASK:
                return False
        return True

    def comp(self, P: int) -> int:
        return P >> self.compshift

    # polynomials as dicts ----------------------------------------------
    def lead(self, poly: dict) -> int:
        return max(poly, key=self.key)

    def sugar(self, poly: dict) -> int:
        return max(self.deg(P) for P in poly)

    def make_elem(self, poly: dict, sugar: int | None = None) -> Elem:
        F = self.field
        lead = self.lead(poly)
        lc = poly[lead]
        if sugar is None:
            sugar = self.sugar(poly)
        if lc == F.one:
            tail = [(P, c) for P, c in poly.items() if P != lead]
        else:
            inv = F.inv(lc)
            tail = [(P, F.mul(c, inv)) for P, c in poly.items() if P != lead]
        return Elem(lead, tail, sugar)

    def elem_dict(self, e: Elem) -> dict:
        d = {e.lead: self.field.one}
        d.update(e.tail)
        return d

    # reduction ------------------------------------------------------
    def reduce(
        self,
        poly: dict,
        reducers: Sequence[Elem],
        full: bool = True,
        stop_comp: int | None = None,
        quotients: list | None = None,
    ) -> dict:
        """Normal form of ``poly`` modulo ``reducers``.

        With ``full=False`` only leading terms are reduced.  With ``stop_comp``
        the reduction returns as soon as the leading term lies in a component
        ``>= stop_comp``.  When ``quotients`` is a list of dicts (one per
        reducer) the multipliers used are accumulated there.
        """
        if not poly:
            return {}
        F = self.field
        p = self.p
        keys = self._keys
        keyf = self.key
        mask = self.divmask
        cs = self.compshift
        work = dict(poly)
        heap = [(-keyf(P), P) for P in work]
        heapify(heap)
        rem: dict = {}
        leads = [g.lead for g in reducers]
        nred = len(leads)
        while heap:
            _, P = heappop(heap)
            c = work.pop(P, None)
            if c is None:
                continue
            if stop_comp is not None and (P >> cs) >= stop_comp:
                rem[P] = c
                rem.update(work)
                return rem
            for idx in range(nred):
                d = P - leads[idx]
                if not (d & mask):
                    break
            else:
                rem[P] = c
                if not full:
                    rem.update(work)
                    return rem
                continue
            g = reducers[idx]
            if quotients is not None:
                q = quotients[idx]
                old = q.get(d)
                q[d] = c if old is None else F.add(old, c)
            if p:
                for Q, a in g.tail:
                    R = Q + d
                    old = work.get(R)
                    if old is None:
                        work[R] = (-c * a) % p
                        k = keys.get(R)
                        if k is None:
                            k = keyf(R)
                        heappush(heap, (-k, R))
                    else:
                        v = (old - c * a) % p
                        if v:
                            work[R] = v
                        else:
                            del work[R]
            else:
                for Q, a in g.tail:
                    R = Q + d
                    old = work.get(R)
                    if old is None:
                        work[R] = F.neg(F.mul(c, a))
                        heappush(heap, (-keyf(R), R))
                    else:
                        v = F.sub(old, F.mul(c, a))
                        if F.is_zero(v):
                            del work[R]
                        else:
                            work[R] = v
        return rem

    def spoly(self, a: Elem, b: Elem, L: int) -> dict:
        F = self.field
        p = self.p
        da = L - a.lead
        db = L - b.lead
        out = {Q + da: c for Q, c in a.tail}
        for Q, c in b.tail:
            R = Q + db
            old = out.get(R)
            if old is None:
                out[R] = (-c) % p if p else F.neg(c)
            else:
                v = (old - c) % p if p else F.sub(old, c)
                if F.is_zero(v):
                    del out[R]
                else:
                    out[R] = v
        return out

    # Buchberger -----------------------------------------------------
    def groebner(
        self,
        inputs: Sequence[dict],
        product_criterion: bool = True,
        skip_comp: int | None = None,
        reduced: bool = True,
        collect: list | None = None,
    ) -> list[Elem]:
        """Groebner basis of the submodule generated by ``inputs``.

        ``skip_comp``: pairs whose lcm lies in a component ``>= skip_comp`` are
        not formed (used when only the elements with leading term below that
        component need to form a Groebner basis).  Every element created with
        leading term in such a component is appended to ``collect``.
        """
        G: list[Elem] = []
        active: list[int] = []
        live: dict[tuple[int, int], int] = {}
        heap: list = []
        for idx, poly in enumerate(inputs):
            if poly:
                heappush(heap, (self.sugar(poly), self.key(self.lead(poly)), -1, idx))
        while heap:
            s, _, i, j = heappop(heap)
            if i < 0:
                h = self.reduce(inputs[j], [G[a] for a in active])
            else:
                L = live.pop((i, j), None)
                if L is None:
                    continue
                h = self.reduce(self.spoly(G[i], G[j], L), [G[a] for a in active])
            if not h:
                continue
            e = self.make_elem(h, s)
            if collect is not None and skip_comp is not None and (e.lead >> self.compshift) >= skip_comp:
                collect.append(e)
            hi = len(G)
            G.append(e)
            self._update(G, active, live, heap, hi, product_criterion, skip_comp)
        result = [G[a] for a in active]
        if reduced:
            result = self.interreduce(result)
        return result

    def _update(self, G, active, live, heap, hi, product_criterion, skip_comp):
        h = G[hi]
        hl = h.lead
        cs = self.compshift
        hcomp = hl >> cs
        divides = self.divides
        cand = []
        if skip_comp is None or hcomp < skip_comp:
            for j in active:
                gl = G[j].lead
                if (gl >> cs) == hcomp:
                    cand.append((j, self.lcm(hl, gl)))
        D = []
        for idx, (j, L) in enumerate(cand):
            if product_criterion and self.coprime(hl, G[j].lead):
                D.append((j, L, True))
                continue
            if any(divides(L2, L) for _, L2 in cand[idx + 1:]):
                continue
            if any(divides(L2, L) for _, L2, _ in D):
                continue
            D.append((j, L, False))
        # drop old pairs made redundant by the new leading term
        for (a, b), L in list(live.items()):
            if divides(hl, L) and self.lcm(G[a].lead, hl) != L and self.lcm(G[b].lead, hl) != L:
                del live[(a, b)]
        for j, L, cop in D:
            if cop:
                continue
            g = G[j]
            s = max(g.sugar + self.mono_deg(L - g.lead), h.sugar + self.mono_deg(L - hl))
            live[(j, hi)] = L
            heappush(heap, (s, self.key(L), j, hi))
        active[:] = [j for j in active if not divides(hl, G[j].lead)] + [hi]

    def interreduce(self, elems: Sequence[Elem]) -> list[Elem]:
        elems = sorted(elems, key=lambda e: self.key(e.lead))
        # minimal leading terms only
        minimal: list[Elem] = []
        for e in elems:
            if not any(self.divides(m.lead, e.lead) for m in minimal):
                minimal.append(e)
        out = []
        for e in minimal:
            others = [m for m in minimal if m is not e]
            tail = self.reduce(dict(e.tail), others) if e.tail else {}
            out.append(Elem(e.lead, list(tail.items()), e.sugar))
        return out


def normal_form(ctx: Ctx, poly: dict, basis: Sequence[Elem]) -> dict:
    return ctx.reduce(poly, basis)


def is_reduced_to_zero(ctx: Ctx, poly: dict, basis: Sequence[Elem]) -> bool:
    return not ctx.reduce(poly, basis, full=False)

