"""Exact coefficient fields: the rationals, prime fields and GF(p)[c]/(c^2+c+2).

Elements are stored in a raw canonical form (``Fraction``, ``int`` residue or a
pair ``(a, b)`` meaning ``a + b*c``) so that the polynomial engine can work on
plain Python values.  :class:`FieldElement` wraps a raw value together with its
field for the public API.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator


class FieldError(ValueError):
    """Invalid field construction or an illegal field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Declarative description of a field.

    ``kind`` is ``"rationals"``, ``"prime"`` or ``"quadratic-extension"``.  For the
    extension, ``p == 0`` means the base field is Q.
    """

    kind: str
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("rationals", "prime", "quadratic-extension"):
            raise FieldError(f"unknown field kind {self.kind!r}")
        if self.kind == "prime" and not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")
        if self.kind == "quadratic-extension" and self.p and not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def modulus(self) -> str | None:
        return "t^2+t+2" if self.kind == "quadratic-extension" else None

    def __str__(self) -> str:
        if self.kind == "rationals":
            return "Q"
        if self.kind == "prime":
            return f"GF({self.p})"
        return "Q[c]" if self.p == 0 else f"GF({self.p})[c]"


class Field:
    """Base class.  Subclasses implement arithmetic on raw values."""

    characteristic: int
    spec: FieldSpec
    zero: object
    one: object
    # Raw value of the distinguished root of t^2+t+2, when the field has one.
    c_raw: object | None = None

    # raw arithmetic ---------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def from_fraction(self, q: Fraction):
        num = self.from_int(q.numerator)
        if q.denominator == 1:
            return num
        return self.div(num, self.from_int(q.denominator))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, k: int):
        if k < 0:
            return self.power(self.inv(a), -k)
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def canonical(self, a):
        return a

    def raw_str(self, a) -> str:
        raise NotImplementedError

    # element API ------------------------------------------------------
    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElement(self, self.from_int(value))
        if isinstance(value, Fraction):
            return FieldElement(self, self.from_fraction(value))
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def element(self, raw) -> "FieldElement":
        return FieldElement(self, self.canonical(raw))

    @property
    def c(self) -> "FieldElement":
        if self.c_raw is None:
            raise FieldError(f"{self} contains no root of t^2+t+2")
        return FieldElement(self, self.c_raw)

    def is_finite(self) -> bool:
        return self.characteristic != 0

    def elements(self) -> Iterator["FieldElement"]:
        raise FieldError(f"{self} is infinite")

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.spec == other.spec and self.c_raw == other.c_raw

    def __hash__(self) -> int:
        return hash((self.spec, self.c_raw))

    def __str__(self) -> str:
        return str(self.spec)

    def __repr__(self) -> str:
        return f"<field {self}>"


class RationalField(Field):
    characteristic = 0

    def __init__(self):
        self.spec = FieldSpec("rationals")
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        return Fraction(q)

    def canonical(self, a):
        return Fraction(a)

    def raw_str(self, a) -> str:
        return str(a)


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.spec = FieldSpec("prime", p)
        self.zero = 0
        self.one = 1 % p
        roots = [t for t in range(p) if (t * t + t + 2) % p == 0]
        self.c_raw = roots[0] if roots else None

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return pow(a, self.p - 2, self.p)

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, q):
        if q.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator of {q} vanishes in GF({self.p})")
        return q.numerator * pow(q.denominator, self.p - 2, self.p) % self.p

    def canonical(self, a):
        return a % self.p

    def raw_str(self, a) -> str:
        return str(a)

    def elements(self):
        for t in range(self.p):
            yield FieldElement(self, t)


class KleinExtension(Field):
    """``base[c]/(c^2 + c + 2)``; raw values are pairs ``(a, b)`` for ``a + b*c``."""

    def __init__(self, base: Field):
        if isinstance(base, KleinExtension):
            raise FieldError("extension towers are not supported")
        if base.c_raw is not None:
            raise FieldError(f"t^2+t+2 is reducible over {base}")
        self.base = base
        self.characteristic = base.characteristic
        self.spec = FieldSpec("quadratic-extension", base.characteristic)
        self.zero = (base.zero, base.zero)
        self.one = (base.one, base.zero)
        self.c_raw = (base.zero, base.one)

    def add(self, a, b):
        B = self.base
        return (B.add(a[0], b[0]), B.add(a[1], b[1]))

    def sub(self, a, b):
        B = self.base
        return (B.sub(a[0], b[0]), B.sub(a[1], b[1]))

    def neg(self, a):
        B = self.base
        return (B.neg(a[0]), B.neg(a[1]))

    def mul(self, a, b):
        # (a0 + a1 c)(b0 + b1 c) with c^2 = -c - 2
        B = self.base
        a0b0 = B.mul(a[0], b[0])
        a1b1 = B.mul(a[1], b[1])
        cross = B.add(B.mul(a[0], b[1]), B.mul(a[1], b[0]))
        two = B.from_int(2)
        return (B.sub(a0b0, B.mul(two, a1b1)), B.sub(cross, a1b1))

    def conj(self, a):
        # c -> cbar = -1 - c
        B = self.base
        return (B.sub(a[0], a[1]), B.neg(a[1]))

    def norm(self, a):
        # a * conj(a) lies in the base field
        prod = self.mul(a, self.conj(a))
        return prod[0]

    def inv(self, a):
        if a == self.zero:
            raise ZeroDivisionError(f"division by zero in {self}")
        B = self.base
        n = self.norm(a)
        ninv = B.inv(n)
        ca = self.conj(a)
        return (B.mul(ca[0], ninv), B.mul(ca[1], ninv))

    def from_int(self, n):
        return (self.base.from_int(n), self.base.zero)

    def from_fraction(self, q):
        return (self.base.from_fraction(q), self.base.zero)

    def canonical(self, a):
        return (self.base.canonical(a[0]), self.base.canonical(a[1]))

    def raw_str(self, a) -> str:
        a0, a1 = a
        B = self.base
        if B.is_zero(a1):
            return B.raw_str(a0)
        lead = "c" if a1 == B.one else f"{B.raw_str(a1)}*c"
        if B.is_zero(a0):
            return lead
        return f"{lead}+{B.raw_str(a0)}"

    def elements(self):
        base = list(self.base.elements())
        for b in base:
            for a in base:
                yield FieldElement(self, (a.value, b.value))


@dataclass(frozen=True, eq=False)
class FieldElement:
    field: Field
    value: object

    def _coerce(self, other) -> object:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mixed-field operands: {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field(other).value
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.div(o, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldElement(self.field, self.field.power(self.value, k))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field(other).value
            except ZeroDivisionError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __str__(self) -> str:
        return self.field.raw_str(self.value)

    def __repr__(self) -> str:
        return f"{self} in {self.field}"


QQ = RationalField()

_FIELD_RE = re.compile(r"^\s*(?:(Q|QQ)|GF\((\d+)\))\s*(\[c\])?\s*$")


def make_field(spec: FieldSpec | str) -> Field:
    """Build a field handle from a :class:`FieldSpec` or a declaration string.

    Accepted strings are ``Q``, ``GF(p)``, ``GF(p)[c]`` and ``Q[c]``.  The ``[c]``
    suffix adjoins a root of t^2+t+2, and falls back to the prime field itself
    when the quadratic already splits there.
    """
    if isinstance(spec, str):
        spec = parse_field_spec(spec)
    if spec.kind == "rationals":
        return QQ
    if spec.kind == "prime":
        return PrimeField(spec.p)
    base = QQ if spec.p == 0 else PrimeField(spec.p)
    return KleinExtension(base)


def parse_field_spec(text: str) -> FieldSpec:
    m = _FIELD_RE.match(text)
    if not m:
        raise FieldError(f"cannot parse field declaration {text!r}")
    rational, p, ext = m.groups()
    if rational:
        return FieldSpec("quadratic-extension", 0) if ext else FieldSpec("rationals")
    p = int(p)
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if ext:
        if any((t * t + t + 2) % p == 0 for t in range(p)):
            return FieldSpec("prime", p)
        return FieldSpec("quadratic-extension", p)
    return FieldSpec("prime", p)


def roots_of_klein_quadratic(field: Field) -> list[FieldElement]:
    """All roots of t^2 + t + 2 in ``field``.

    Finite fields are scanned exhaustively; Q has none (negative discriminant);
    the extension over Q has exactly c and -1-c.
    """
    if isinstance(field, KleinExtension):
        if field.characteristic:
            return [e for e in field.elements() if (e * e + e + 2).is_zero()]
        c = field.c
        other = -c - 1
        return [c] if c == other else [c, other]
    if field.characteristic == 0:
        return []
    return [e for e in field.elements() if (e * e + e + 2).is_zero()]
