"""Sparse multivariate polynomials with exponent-tuple monomials.

Monomials are tuples of non-negative integers, one entry per ring variable.
Coefficients are stored as raw field values (see :mod:`sympower.fields`).
Monomial orders are matrix orders: a list of integer weight rows compared
lexicographically, which covers grevlex, lex and block elimination orders.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .fields import QQ, Field, FieldElement, FieldError

Monomial = tuple


class MonomialOrder:
    """A matrix monomial order.  ``key(m)`` is the tuple of row dot products."""

    def __init__(self, kind: str, rows: Sequence[Sequence[int]], name: str | None = None):
        self.kind = kind
        self.rows = tuple(tuple(r) for r in rows)
        self.nvars = len(self.rows[0])
        self.name = name or kind
        self._cache: dict = {}

    def key(self, m: Monomial) -> tuple:
        k = self._cache.get(m)
        if k is None:
            k = tuple(sum(w * e for w, e in zip(row, m)) for row in self.rows)
            self._cache[m] = k
        return k

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"MonomialOrder({self.name}, nvars={self.nvars})"


def _revlex_rows(n: int, idx: Sequence[int]) -> list[list[int]]:
    # all but the first variable of the block, last variable first
    rows = []
    for i in reversed(idx[1:]):
        row = [0] * n
        row[i] = -1
        rows.append(row)
    return rows


def grevlex(n: int, weights: Sequence[int] | None = None) -> MonomialOrder:
    """Graded reverse lexicographic order on ``n`` variables, x_0 > ... > x_{n-1}."""
    w = list(weights) if weights is not None else [1] * n
    return MonomialOrder("grevlex", [w] + _revlex_rows(n, list(range(n))))


def lex(n: int) -> MonomialOrder:
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] = 1
        rows.append(row)
    return MonomialOrder("lex", rows)


def block_order(n: int, block: Sequence[int]) -> MonomialOrder:
    """Elimination order: monomials in ``block`` variables dominate, grevlex in each block."""
    block = sorted(block)
    rest = [i for i in range(n) if i not in block]
    rows = []
    row = [0] * n
    for i in block:
        row[i] = 1
    rows.append(row)
    rows += _revlex_rows(n, block)
    row = [0] * n
    for i in rest:
        row[i] = 1
    rows.append(row)
    rows += _revlex_rows(n, rest)
    if not block or not rest:
        rows = [r for r in rows if any(r)]
    return MonomialOrder(f"block{len(block)}", rows, name=f"block-elimination({block})")


class PolyRing:
    """Polynomial ring over ``field`` in the named variables."""

    def __init__(self, field: Field = QQ, names: Sequence[str] = ("x", "y", "z")):
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if "c" in names:
            raise ValueError("'c' is reserved for the extension generator")
        self.field = field
        self.names = tuple(names)
        self.nvars = len(self.names)

    @cached_property
    def default_order(self) -> MonomialOrder:
        return grevlex(self.nvars)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRing) and self.field == other.field and self.names == other.names

    def __hash__(self) -> int:
        return hash((self.field, self.names))

    def __repr__(self) -> str:
        return f"{self.field}[{','.join(self.names)}]"

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(self.field.one)

    def constant(self, raw) -> "Polynomial":
        if isinstance(raw, FieldElement):
            raw = raw.value
        elif isinstance(raw, (int, Fraction)):
            raw = self.field(raw).value
        if self.field.is_zero(raw):
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: raw})

    def monomial(self, exps: Monomial, coeff=1) -> "Polynomial":
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        c = self.field(coeff).value if not isinstance(coeff, FieldElement) else coeff.value
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, {tuple(exps): c})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def var(self, v: int | str) -> "Polynomial":
        i = self.index(v)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def index(self, v: int | str) -> int:
        if isinstance(v, int):
            if not 0 <= v < self.nvars:
                raise IndexError(v)
            return v
        return self.names.index(v)

    def extend(self, names: Sequence[str], front: bool = False) -> "PolyRing":
        new = tuple(names) + self.names if front else self.names + tuple(names)
        return PolyRing(self.field, new)

    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)


class Polynomial:
    """Immutable sparse polynomial: ``terms`` maps monomial tuples to raw coefficients."""

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # construction helpers ------------------------------------------------
    def _new(self, terms: dict) -> "Polynomial":
        return Polynomial(self.ring, terms)

    def _other(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise FieldError(f"mixed rings: {self.ring} and {other.ring}")
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.ring.constant(other)
        return NotImplemented

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = F.add(v, c)
                if F.is_zero(v):
                    del out[m]
                else:
                    out[m] = v
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return self._new({m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = F.mul(c1, c2)
                old = out.get(m)
                out[m] = v if old is None else F.add(old, v)
        return self._new({m: c for m, c in out.items() if not F.is_zero(c)})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, s) -> "Polynomial":
        F = self.ring.field
        s = F(s).value if not isinstance(s, FieldElement) else s.value
        if F.is_zero(s):
            return self.ring.zero()
        return self._new({m: F.mul(c, s) for m, c in self.terms.items()})

    def mul_monomial(self, mono: Monomial, coeff=None) -> "Polynomial":
        F = self.ring.field
        if coeff is None:
            return self._new({tuple(a + b for a, b in zip(m, mono)): c for m, c in self.terms.items()})
        return self._new(
            {tuple(a + b for a, b in zip(m, mono)): F.mul(c, coeff) for m, c in self.terms.items()}
        )

    # comparison -------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.terms == self.ring.constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # structure --------------------------------------------------------
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def weighted_degree(self, weights: Sequence[int]) -> int:
        return max(sum(w * e for w, e in zip(weights, m)) for m in self.terms)

    def is_weighted_homogeneous(self, weights: Sequence[int]) -> bool:
        return len({sum(w * e for w, e in zip(weights, m)) for m in self.terms}) <= 1

    def sorted_terms(self, order: MonomialOrder | None = None) -> list:
        order = order or self.ring.default_order
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder | None = None) -> Monomial:
        order = order or self.ring.default_order
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder | None = None) -> FieldElement:
        return FieldElement(self.ring.field, self.terms[self.leading_monomial(order)])

    def monic(self, order: MonomialOrder | None = None) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[self.leading_monomial(order)]
        return self.scale(FieldElement(self.ring.field, self.ring.field.inv(lc)))

    def coeff(self, m: Monomial | "Polynomial") -> FieldElement:
        if isinstance(m, Polynomial):
            if len(m.terms) != 1:
                raise ValueError("coefficient extraction needs a single monomial")
            (m,) = m.terms
        F = self.ring.field
        return FieldElement(F, self.terms.get(tuple(m), F.zero))

    def variables(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def homogeneous_part(self, d: int) -> "Polynomial":
        return self._new({m: c for m, c in self.terms.items() if sum(m) == d})

    # evaluation and substitution --------------------------------------
    def evaluate(self, point: Sequence) -> FieldElement:
        F = self.ring.field
        if len(point) != self.ring.nvars:
            raise ValueError("point has wrong number of coordinates")
        vals = [F(p).value if not isinstance(p, FieldElement) else p.value for p in point]
        total = F.zero
        powers: dict = {}
        for m, c in self.terms.items():
            t = c
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    pw = powers.get(key)
                    if pw is None:
                        pw = powers[key] = F.power(vals[i], e)
                    t = F.mul(t, pw)
            total = F.add(total, t)
        return FieldElement(F, total)

    def substitute(self, images: Sequence["Polynomial"], ring: PolyRing | None = None) -> "Polynomial":
        """Replace variable i by ``images[i]`` (all living in ``ring``)."""
        ring = ring or images[0].ring
        result = ring.zero()
        cache: dict = {}
        F = ring.field
        acc: dict = {}
        for m, c in self.terms.items():
            t = ring.constant(FieldElement(F, c))
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    pw = cache.get(key)
                    if pw is None:
                        pw = cache[key] = images[i] ** e
                    t = t * pw
            for mm, cc in t.terms.items():
                old = acc.get(mm)
                acc[mm] = cc if old is None else F.add(old, cc)
        result = Polynomial(ring, {m: c for m, c in acc.items() if not F.is_zero(c)})
        return result

    def apply_symmetry(self, perm: Sequence[int], signs: Sequence[int] | None = None) -> "Polynomial":
        """Send variable i to ``signs[i] * variable perm[i]``."""
        n = self.ring.nvars
        if sorted(perm) != list(range(n)):
            raise ValueError("perm must be a permutation of the variables")
        signs = signs or [1] * n
        F = self.ring.field
        out = {}
        for m, c in self.terms.items():
            new = [0] * n
            sign = 1
            for i, e in enumerate(m):
                new[perm[i]] += e
                if signs[i] < 0 and e % 2:
                    sign = -sign
            out[tuple(new)] = c if sign > 0 else F.neg(c)
        return self._new(out)

    def change_ring(self, ring: PolyRing, positions: Sequence[int] | None = None) -> "Polynomial":
        """Embed into ``ring`` placing variable i at ``positions[i]`` (same field)."""
        if positions is None:
            positions = [ring.names.index(nm) for nm in self.ring.names]
        out = {}
        for m, c in self.terms.items():
            new = [0] * ring.nvars
            for i, e in enumerate(m):
                if e:
                    new[positions[i]] = e
            out[tuple(new)] = c
        return Polynomial(ring, out)

    # printing ---------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        F = self.ring.field
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                nm if e == 1 else f"{nm}^{e}" for nm, e in zip(self.ring.names, m) if e
            )
            neg = False
            if F.characteristic == 0 and isinstance(c, Fraction) and c < 0:
                neg, c = True, -c
            cs = F.raw_str(c)
            if "+" in cs or "-" in cs[1:]:
                cs = f"({cs})"
            if mono:
                term = mono if c == F.one else f"{cs}*{mono}"
            else:
                term = cs
            parts.append(("- " if neg else "+ ") + term)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self) -> str:
        return f"Polynomial({self})"


# ----------------------------------------------------------------------
# text grammar

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


class _Parser:
    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.tokens = []
        for num, ident, op in _TOKEN.findall(text):
            if num:
                self.tokens.append(("num", int(num)))
            elif ident:
                self.tokens.append(("id", ident))
            elif op.strip():
                self.tokens.append(("op", op))
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ValueError(f"expected {op!r}, got {val!r}")

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ValueError("empty polynomial text")
        p = self.expr()
        if self.pos != len(self.tokens):
            raise ValueError(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.factor()
            elif kind == "op" and val == "/":
                self.take()
                q = self.factor()
                if q.degree() > 0 or q.is_zero():
                    raise ValueError("division only by non-zero constants")
                (cval,) = q.terms.values()
                p = p.scale(FieldElement(self.ring.field, self.ring.field.inv(cval)))
            elif kind in ("num", "id") or (kind == "op" and val == "("):
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            f = self.factor()
            return -f if val == "-" else f
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise ValueError("exponent must be a non-negative integer")
            return base ** e
        return base

    def atom(self) -> Polynomial:
        kind, val = self.take()
        if kind == "num":
            return self.ring.constant(self.ring.field.from_int(val))
        if kind == "id":
            if val == "c":
                return self.ring.constant(self.ring.field.c)
            if val not in self.ring.names:
                raise ValueError(f"unknown variable {val!r}")
            return self.ring.var(val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ValueError(f"unexpected token {val!r}")


# ----------------------------------------------------------------------
# division and monomial bases


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def reduce(
    f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder | None = None
) -> tuple[Polynomial, list[Polynomial]]:
    """Multivariate division of ``f`` by ``G``.

    Repeatedly takes the largest remaining term; if some leading monomial of
    ``G`` divides it, the first such divisor in list order is used.  Returns
    ``(normal_form, quotients)`` with ``f == sum(q*g) + normal_form``.
    """
    if not G or any(g.is_zero() for g in G):
        raise ValueError("divisors must be a non-empty list of non-zero polynomials")
    ring = f.ring
    F = ring.field
    order = order or ring.default_order
    leads = [(g.leading_monomial(order), g) for g in G]
    lead_inv = [F.inv(g.terms[lm]) for lm, g in leads]
    quotients: list[dict] = [{} for _ in G]
    work = dict(f.terms)
    rem: dict = {}
    while work:
        m = max(work, key=order.key)
        c = work[m]
        for i, (lm, g) in enumerate(leads):
            if _divides(lm, m):
                shift = tuple(a - b for a, b in zip(m, lm))
                q = F.mul(c, lead_inv[i])
                quotients[i][shift] = F.add(quotients[i].get(shift, F.zero), q)
                for gm, gc in g.terms.items():
                    mm = tuple(a + b for a, b in zip(gm, shift))
                    v = F.sub(work.get(mm, F.zero), F.mul(q, gc))
                    if F.is_zero(v):
                        work.pop(mm, None)
                    else:
                        work[mm] = v
                break
        else:
            rem[m] = c
            del work[m]
    qs = [Polynomial(ring, {m: c for m, c in q.items() if not F.is_zero(c)}) for q in quotients]
    return Polynomial(ring, rem), qs


def graded_basis(d: int, nvars: int = 3, order: MonomialOrder | None = None) -> list[Monomial]:
    """All monomials of total degree ``d``, sorted decreasingly under ``order``."""
    if d < 0:
        return []
    order = order or grevlex(nvars)
    monos = set()
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        monos.add(tuple(e))
    return sorted(monos, key=order.key, reverse=True)


def coeff(f: Polynomial, m: Monomial | Polynomial) -> FieldElement:
    return f.coeff(m)


def evaluate(f: Polynomial, point: Sequence) -> FieldElement:
    return f.evaluate(point)


def apply_symmetry(f: Polynomial, perm: Sequence[int], signs: Sequence[int] | None = None) -> Polynomial:
    return f.apply_symmetry(perm, signs)


def product(polys: Iterable[Polynomial], ring: PolyRing | None = None) -> Polynomial:
    polys = list(polys)
    result = ring.one() if ring is not None else polys[0].ring.one()
    for p in polys:
        result = result * p
    return result
