"""Built-in point configurations: Fermat family, Klein configuration, three-point star."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import permutations
from math import comb

from .fields import Field, FieldElement, make_field
from .groebner import Ideal, exact_quotient
from .poly import Polynomial, PolyRing


class ConfigurationError(ValueError):
    pass


def _field(F: Field | str) -> Field:
    return make_field(F) if isinstance(F, str) else F


def canonical_point(F: Field, coords) -> tuple:
    """Projective normal form: raw coordinates scaled so the first nonzero one is 1."""
    raw = [c.value if isinstance(c, FieldElement) else F(c).value for c in coords]
    lead = next((a for a in raw if not F.is_zero(a)), None)
    if lead is None:
        raise ConfigurationError("the zero vector is not a projective point")
    inv = F.inv(lead)
    return tuple(F.mul(inv, a) for a in raw)


@dataclass
class PointConfiguration:
    name: str
    field: Field
    ring: PolyRing
    points: list
    ideal: Ideal
    lines: list = dc_field(default_factory=list)
    extra: dict = dc_field(default_factory=dict)

    @property
    def generators(self) -> list[Polynomial]:
        return self.ideal.gens

    def point_elements(self) -> list[tuple]:
        return [tuple(self.field.element(a) for a in p) for p in self.points]

    def vanishes(self) -> bool:
        """Every generator vanishes at every point."""
        return all(g.evaluate(p).is_zero() for p in self.point_elements() for g in self.generators)


# ----------------------------------------------------------------------
# Fermat


def roots_of_unity(F: Field, n: int) -> list:
    """Raw n-th roots of unity in a finite field (or ±1 in characteristic zero)."""
    if not F.is_finite():
        cands = [F.one, F.neg(F.one)]
        return sorted({a for a in cands if F.power(a, n) == F.one}, key=str)
    roots = [e.value for e in F.elements() if not e.is_zero() and F.power(e.value, n) == F.one]
    return roots


def fermat(n: int, F: Field | str) -> PointConfiguration:
    F = _field(F)
    if n < 3:
        raise ConfigurationError("Fermat configurations need n >= 3")
    if F.characteristic and n % F.characteristic == 0:
        raise ConfigurationError("characteristic divides n")
    roots = roots_of_unity(F, n)
    if len(roots) < n:
        raise ConfigurationError(f"{F} has only {len(roots)} of the {n} needed n-th roots of 1")
    R = PolyRing(F)
    x, y, z = R.gens()
    gens = [x * (y**n - z**n), y * (z**n - x**n), z * (x**n - y**n)]
    pts = {canonical_point(F, (F.one, a, b)) for a in roots for b in roots}
    pts |= {canonical_point(F, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))}
    lines = [x, y, z]
    for w in roots:
        we = F.element(w)
        lines += [x - y.scale(we), y - z.scale(we), z - x.scale(we)]
    witness = (x**n - y**n) * (y**n - z**n) * (z**n - x**n)
    cfg = PointConfiguration(f"fermat:{n}", F, R, sorted(pts), Ideal(gens, R), lines,
                             {"n": n, "roots": roots, "witness": witness})
    if len(cfg.points) != n * n + 3 or not cfg.vanishes():
        raise ConfigurationError("Fermat point set does not match its ideal")
    return cfg


# ----------------------------------------------------------------------
# star


def star3(F: Field | str) -> PointConfiguration:
    F = _field(F)
    R = PolyRing(F)
    x, y, z = R.gens()
    pts = sorted(canonical_point(F, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    return PointConfiguration("star3", F, R, pts, Ideal([x * y, x * z, y * z], R), [x, y, z],
                              {"witness": x * y * z})


# ----------------------------------------------------------------------
# Klein


@dataclass
class KleinStructure:
    c: FieldElement
    C: tuple
    D: tuple
    P: tuple
    Q: tuple
    gens: tuple

    @property
    def f(self) -> Polynomial:
        return self.gens[0]

    @property
    def g(self) -> Polynomial:
        return self.gens[1]

    @property
    def h(self) -> Polynomial:
        return self.gens[2]

    def check(self) -> bool:
        """Divisibility identities and both syzygies, exactly."""
        R = self.gens[0].ring
        x, y, z = R.gens()
        C1, C2, C3 = self.C
        D1, D2, D3 = self.D
        ok = (C1 - C2 == (x**2 - y**2) * D3 and C2 - C3 == (y**2 - z**2) * D1
              and C3 - C1 == (z**2 - x**2) * D2)
        for col in (self.P, self.Q):
            ok = ok and sum((a * b for a, b in zip(col, self.gens)), R.zero()).is_zero()
        return ok


def klein_structure(F: Field | str, c: FieldElement | None = None) -> KleinStructure:
    """Quartics C_i, quadrics D_i, syzygy columns and generators, without hypothesis checks."""
    F = _field(F)
    c = F.c if c is None else F(c)
    R = PolyRing(F)
    x, y, z = R.gens()

    def k(a: int, b: int) -> FieldElement:
        return c * a + b

    C3 = (x**4).scale(F(4)) + (y**4).scale(F(4)) + (x**2 * y**2).scale(k(3, 9)) \
        + (x**2 * z**2).scale(k(5, -1)) + (y**2 * z**2).scale(k(5, -1)) + (z**4).scale(k(15, 25))
    C1 = C3.apply_symmetry((2, 1, 0))
    C2 = C3.apply_symmetry((0, 2, 1))
    f = x * y * (x**2 - y**2) * C3
    g = y * z * (y**2 - z**2) * C1
    h = z * x * (z**2 - x**2) * C2
    D3 = exact_quotient(C1 - C2, x**2 - y**2)
    D1 = exact_quotient(C2 - C3, y**2 - z**2)
    D2 = exact_quotient(C3 - C1, z**2 - x**2)
    P = (z * D3, x * D1, y * D2)
    Q = (z * C2, x * C2, y * ((y**2 - z**2) * D2 + C3))
    return KleinStructure(c, (C1, C2, C3), (D1, D2, D3), P, Q, (f, g, h))


def klein_points(F: Field, c: FieldElement) -> tuple[list, list]:
    """(quadruple points, triple points) from the permutation orbits."""
    cb = -c - 1
    one = F(1)
    zero = F(0)

    def orbit(base: list) -> set:
        out = set()
        for triple in base:
            for perm in permutations(triple):
                out.add(canonical_point(F, perm))
        return out

    quad = [(one, zero, zero)] + [(one, one * s, zero) for s in (1, -1)]
    quad += [(one, one * s, cb * t) for s in (1, -1) for t in (1, -1)]
    trip = [(c, one * s, zero) for s in (1, -1)]
    trip += [(one, one * s, one * t) for s in (1, -1) for t in (1, -1)]
    trip += [(cb * cb, one * s, one * t) for s in (1, -1) for t in (1, -1)]
    q = orbit(quad)
    t = orbit(trip) - q
    return sorted(q), sorted(t)


def klein_lines(R: PolyRing, c: FieldElement) -> list[Polynomial]:
    F = R.field
    one = F(1)
    zero = F(0)
    base = [(one, zero, zero)] + [(one, one * s, zero) for s in (1, -1)]
    base += [(one, one * s, c * t) for s in (1, -1) for t in (1, -1)]
    seen = set()
    lines = []
    x, y, z = R.gens()
    for triple in base:
        for perm in permutations(triple):
            key = canonical_point(F, perm)
            if key in seen:
                continue
            seen.add(key)
            a, b, cc = (F.element(v) for v in key)
            lines.append(x.scale(a) + y.scale(b) + z.scale(cc))
    return lines


def klein(F: Field | str, c: FieldElement | None = None) -> tuple[PointConfiguration, KleinStructure]:
    F = _field(F)
    if F.characteristic in (2, 7):
        raise ConfigurationError("the Klein generators need characteristic other than 2 and 7")
    if F.c_raw is None and c is None:
        raise ConfigurationError(f"{F} has no root of t^2+t+2; use an extension such as GF(p)[c]")
    ks = klein_structure(F, c)
    quad, trip = klein_points(F, ks.c)
    R = ks.gens[0].ring
    lines = klein_lines(R, ks.c)
    cfg = PointConfiguration("klein", F, R, quad + trip, Ideal(list(ks.gens), R), lines,
                             {"quadruple": quad, "triple": trip, "structure": ks})
    if len(quad) != 21 or len(trip) != 28:
        raise ConfigurationError(f"expected 21 + 28 points, found {len(quad)} + {len(trip)}")
    if not cfg.vanishes() or not ks.check():
        raise ConfigurationError("Klein structure identities failed")
    return cfg, ks


# ----------------------------------------------------------------------
# incidence and witnesses


def incidence(cfg: PointConfiguration) -> dict:
    """Number of configuration lines through each point."""
    if not cfg.lines:
        raise ConfigurationError("configuration has no lines")
    return {p: sum(1 for l in cfg.lines if l.evaluate(pe).is_zero())
            for p, pe in zip(cfg.points, cfg.point_elements())}


def pair_count_identity(cfg: PointConfiguration) -> tuple[int, int]:
    """(sum over points of C(count, 2), C(#lines, 2)); equal when no pair of lines meets off the points."""
    counts = incidence(cfg)
    return sum(comb(k, 2) for k in counts.values()), comb(len(cfg.lines), 2)


def product_of_lines(cfg: PointConfiguration) -> Polynomial:
    if not cfg.lines:
        raise ConfigurationError("configuration has no lines")
    out = cfg.ring.one()
    for l in cfg.lines:
        out = out * l
    return out


def builtin(name: str, F: Field | str) -> PointConfiguration:
    """Resolve ``fermat:<n>``, ``klein`` or ``star3``."""
    name = name.strip()
    if name == "star3":
        return star3(F)
    if name == "klein":
        return klein(F)[0]
    if name.startswith("fermat:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError as exc:
            raise ConfigurationError(f"bad Fermat target {name!r}") from exc
        return fermat(n, F)
    raise ConfigurationError(f"unknown configuration {name!r}")
