"""Exact structural data for the simple root systems.

Every system is realized in the usual orthogonal coordinates (Bourbaki
conventions), with all coordinates ``Fraction``.  Weights live in the
ambient space and torus elements (coweights) live in the same coordinates;
the pairing between them is the plain dot product.  The invariant inner
product on weights is ``scale * dot``, with ``scale`` chosen so that long
roots have squared length 2 (this needs ``scale = 1/2`` for C_n and
``1/3`` for G2).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterator

from orbitbound._linalg import inverse

Vector = tuple[Fraction, ...]

FAMILIES = "ABCDEFG"

# dim G and Coxeter number, used as catalog cross-checks
_DIM_G = {
    "A": lambda n: n * (n + 2),
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "G": lambda n: 14,
    "F": lambda n: 52,
    "E": lambda n: {6: 78, 7: 133, 8: 248}[n],
}
_COXETER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2 * n,
    "C": lambda n: 2 * n,
    "D": lambda n: 2 * n - 2,
    "G": lambda n: 6,
    "F": lambda n: 12,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n],
}
_CENTER_ORDER = {
    "A": lambda n: n + 1,
    "B": lambda n: 2,
    "C": lambda n: 2,
    "D": lambda n: 4,
    "G": lambda n: 1,
    "F": lambda n: 1,
    "E": lambda n: {6: 3, 7: 2, 8: 1}[n],
}


class InvalidTypeError(ValueError):
    """Raised for a family/rank pair that is not a simple root system."""

    def __init__(self, message: str, code: str = "invalid-rank"):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if f not in FAMILIES:
            raise InvalidTypeError(f"unknown family {f!r}", code="invalid-family")
        if not isinstance(n, int) or isinstance(n, bool):
            raise InvalidTypeError(f"rank must be an int, got {n!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "G": n == 2,
            "F": n == 4,
            "E": n in (6, 7, 8),
        }[f]
        if not ok:
            raise InvalidTypeError(f"{f}{n} is not a valid simple type")

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise InvalidTypeError(f"cannot parse type {text!r}", code="invalid-syntax")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def flagged(self) -> bool:
        """D3 is constructible but is really A3."""
        return self.family == "D" and self.rank == 3

    @property
    def group_dim(self) -> int:
        return _DIM_G[self.family](self.rank)

    @property
    def coxeter_number(self) -> int:
        return _COXETER[self.family](self.rank)

    @property
    def center_order(self) -> int:
        return _CENTER_ORDER[self.family](self.rank)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _vec(*xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


def _unit(n: int, i: int, c=1) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return v


def _diff(n: int, i: int, j: int) -> Vector:
    v = _unit(n, i)
    v[j] -= 1
    return tuple(v)


def _e8_simple() -> list[Vector]:
    h = Fraction(1, 2)
    roots = [_vec(h, -h, -h, -h, -h, -h, -h, h), _vec(1, 1, 0, 0, 0, 0, 0, 0)]
    for i in range(6):
        roots.append(_diff(8, i + 1, i))
    return roots


def _simple_roots(t: SimpleType) -> tuple[int, Fraction, list[Vector]]:
    """(ambient dimension, inner product scale, simple roots)."""
    f, n = t.family, t.rank
    if f == "A":
        return n + 1, Fraction(1), [_diff(n + 1, i, i + 1) for i in range(n)]
    if f in "BCD":
        roots = [_diff(n, i, i + 1) for i in range(n - 1)]
        if f == "B":
            roots.append(tuple(_unit(n, n - 1)))
        elif f == "C":
            roots.append(tuple(_unit(n, n - 1, 2)))
        else:
            last = _unit(n, n - 1)
            last[n - 2] = Fraction(1)
            roots.append(tuple(last))
        return n, Fraction(1, 2) if f == "C" else Fraction(1), roots
    if f == "G":
        return 3, Fraction(1, 3), [_vec(1, -1, 0), _vec(-2, 1, 1)]
    if f == "F":
        h = Fraction(1, 2)
        return 4, Fraction(1), [_vec(0, 1, -1, 0), _vec(0, 0, 1, -1), _vec(0, 0, 0, 1), _vec(h, -h, -h, -h)]
    return 8, Fraction(1), _e8_simple()[:n]


def dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _combine(coeffs, basis) -> Vector:
    dim = len(basis[0])
    out = [Fraction(0)] * dim
    for c, b in zip(coeffs, basis):
        if c:
            for k in range(dim):
                out[k] += c * b[k]
    return tuple(out)


def _positive_roots(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """Positive roots in simple-root coordinates, ordered by height.

    Uses root strings: for a root b and simple a_i, b + a_i is a root iff
    q > 0 where p - q = <b, a_i^vee> and p counts how far b - k a_i stays
    a root.
    """
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = list(simple)
    known = set(roots)
    layer = list(simple)
    while layer:
        nxt = []
        for b in layer:
            for i in range(r):
                pairing = sum(b[j] * cartan[i][j] for j in range(r))
                p = 0
                down = list(b)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                q = p - pairing
                if q > 0:
                    up = list(b)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        roots.extend(nxt)
        layer = nxt
    return roots


@dataclass(frozen=True)
class RootSystem:
    """Immutable root datum for one simple type.

    ``cartan[i][j] = <alpha_i^vee, alpha_j>``, so column ``j`` holds the
    Dynkin labels of ``alpha_j``.
    """

    type: SimpleType
    ambient_dim: int
    scale: Fraction
    simple_roots: tuple[Vector, ...]
    cartan: tuple[tuple[int, ...], ...]
    inverse_cartan: tuple[tuple[Fraction, ...], ...]
    positive_root_coeffs: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Vector, ...]
    highest_root: Vector
    marks: tuple[int, ...]
    fundamental_weights: tuple[Vector, ...]
    fundamental_coweights: tuple[Vector, ...]
    weyl_vector: Vector
    simple_coroots: tuple[Vector, ...]
    coroots: tuple[Vector, ...]
    # per simple root, |alpha_i|^2 / 2 scaled to coprime integers
    symmetrizer: tuple[int, ...]
    positive_root_labels: tuple[tuple[int, ...], ...] = field(repr=False)
    positive_coroot_coeffs: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    def inner(self, u, v) -> Fraction:
        return self.scale * dot(u, v)

    def norm2(self, u) -> Fraction:
        return self.inner(u, u)

    def roots(self) -> Iterator[Vector]:
        for a in self.positive_roots:
            yield a
            yield tuple(-x for x in a)

    def weight_from_labels(self, labels) -> Vector:
        return _combine(labels, self.fundamental_weights)

    def labels_from_weight(self, weight) -> tuple[int, ...]:
        out = []
        for c in self.simple_coroots:
            v = dot(weight, c)
            if v.denominator != 1:
                raise ValueError(f"{weight} is not an integral weight")
            out.append(int(v))
        return tuple(out)

    def coweight_from_coroot_coords(self, xi) -> Vector:
        return _combine(xi, self.simple_coroots)

    def coroot_coords(self, x) -> tuple[Fraction, ...]:
        """Coordinates of a coweight in the simple coroot basis
        (equivalently its pairings with the fundamental weights)."""
        return tuple(dot(lam, x) for lam in self.fundamental_weights)

    def simple_root_labels(self, i: int) -> tuple[int, ...]:
        return tuple(self.cartan[k][i] for k in range(self.rank))

    def to_json(self) -> dict:
        """Canonical JSON-ready document; rationals as normalized strings."""

        def fmt(v):
            return [str(x) for x in v]

        order = sorted(range(len(self.positive_roots)),
                       key=lambda k: (sum(self.positive_root_coeffs[k]), self.positive_root_coeffs[k]))
        return {
            "type": str(self.type),
            "ambient_dim": self.ambient_dim,
            "scale": str(self.scale),
            "simple_roots": [fmt(a) for a in self.simple_roots],
            "cartan": [list(row) for row in self.cartan],
            "positive_roots": [fmt(self.positive_roots[k]) for k in order],
            "positive_root_coeffs": [list(self.positive_root_coeffs[k]) for k in order],
            "highest_root": fmt(self.highest_root),
            "marks": list(self.marks),
            "fundamental_weights": [fmt(w) for w in self.fundamental_weights],
            "weyl_vector": fmt(self.weyl_vector),
            "coroots": [fmt(self.coroots[k]) for k in order],
        }


@lru_cache(maxsize=None)
def build_root_system(t: SimpleType) -> RootSystem:
    ambient, scale, simple = _simple_roots(t)
    r = t.rank
    cartan = [[int(2 * dot(simple[i], simple[j]) / dot(simple[i], simple[i])) for j in range(r)]
              for i in range(r)]
    inv = inverse(cartan)
    coeffs = _positive_roots(cartan)
    pos = [_combine(c, simple) for c in coeffs]
    highest_idx = max(range(len(coeffs)), key=lambda k: sum(coeffs[k]))
    marks = coeffs[highest_idx]
    simple_coroots = [tuple(2 * x / dot(a, a) for x in a) for a in simple]
    fund = [_combine([inv[j][i] for j in range(r)], simple) for i in range(r)]
    cofund = [_combine(inv[j], simple_coroots) for j in range(r)]
    rho = _combine([1] * r, fund)
    coroots = [tuple(2 * x / dot(a, a) for x in a) for a in pos]

    half_norms = [dot(a, a) * scale / 2 for a in simple]
    den = 1
    for h in half_norms:
        den = lcm(den, h.denominator)
    sym = [int(h * den) for h in half_norms]
    g = 0
    for s in sym:
        g = gcd(g, s)
    sym = [s // g for s in sym]

    labels = [tuple(sum(c[j] * cartan[i][j] for j in range(r)) for i in range(r)) for c in coeffs]
    coroot_coeffs = []
    for c, a in zip(coeffs, pos):
        na = dot(a, a)
        cc = [c[j] * dot(simple[j], simple[j]) / na for j in range(r)]
        assert all(x.denominator == 1 for x in cc)
        coroot_coeffs.append(tuple(int(x) for x in cc))

    return RootSystem(
        type=t,
        ambient_dim=ambient,
        scale=scale,
        simple_roots=tuple(simple),
        cartan=tuple(tuple(row) for row in cartan),
        inverse_cartan=tuple(tuple(row) for row in inv),
        positive_root_coeffs=tuple(coeffs),
        positive_roots=tuple(pos),
        highest_root=pos[highest_idx],
        marks=tuple(marks),
        fundamental_weights=tuple(fund),
        fundamental_coweights=tuple(cofund),
        weyl_vector=rho,
        simple_coroots=tuple(simple_coroots),
        coroots=tuple(coroots),
        symmetrizer=tuple(sym),
        positive_root_labels=tuple(labels),
        positive_coroot_coeffs=tuple(coroot_coeffs),
    )


def root_system(spec) -> RootSystem:
    """Accept a ``SimpleType``, a string like ``"B3"`` or a RootSystem."""
    if isinstance(spec, RootSystem):
        return spec
    if isinstance(spec, str):
        spec = SimpleType.parse(spec)
    return build_root_system(spec)


@dataclass(frozen=True)
class CenterElement:
    """Central element ``exp(2 pi i c)`` of the simply connected group."""

    index: int  # 0 for the identity, else the minuscule node j (1-based)
    coweight: Vector
    order: int

    @property
    def label(self) -> str:
        return "1" if self.index == 0 else f"z{self.index}"


def center_elements(rs: RootSystem) -> list[CenterElement]:
    """Representatives of P^vee / Q^vee: zero plus the fundamental coweights
    of the mark-one nodes."""
    out = [CenterElement(0, tuple(Fraction(0) for _ in range(rs.ambient_dim)), 1)]
    for j, m in enumerate(rs.marks):
        if m != 1:
            continue
        xi = rs.inverse_cartan[j]
        order = 1
        while any((order * x).denominator != 1 for x in xi):
            order += 1
        out.append(CenterElement(j + 1, rs.fundamental_coweights[j], order))
    return out


def diagram_automorphisms(rs: RootSystem) -> list[tuple[int, ...]]:
    """All index permutations preserving the Cartan matrix (0-based)."""
    r = rs.rank
    a = rs.cartan
    found: list[tuple[int, ...]] = []

    def extend(perm: list[int], used: set[int]):
        k = len(perm)
        if k == r:
            found.append(tuple(perm))
            return
        for c in range(r):
            if c in used:
                continue
            if a[c][c] != a[k][k]:
                continue
            if all(a[perm[i]][c] == a[i][k] and a[c][perm[i]] == a[k][i] for i in range(k)):
                perm.append(c)
                used.add(c)
                extend(perm, used)
                perm.pop()
                used.discard(c)

    extend([], set())
    return sorted(found)


def apply_automorphism(perm, labels) -> tuple[int, ...]:
    """Relabel a highest weight: node ``i`` goes to node ``perm[i]``."""
    out = [0] * len(labels)
    for i, v in enumerate(labels):
        out[perm[i]] = v
    return tuple(out)


def catalog_types(max_rank: int = 8) -> list[SimpleType]:
    """Every simple type up to ``max_rank``, with C from rank 3 and D from 4
    so that no isomorphism class repeats."""
    out = []
    for n in range(1, max_rank + 1):
        out.append(SimpleType("A", n))
    for n in range(2, max_rank + 1):
        out.append(SimpleType("B", n))
    for n in range(3, max_rank + 1):
        out.append(SimpleType("C", n))
    for n in range(4, max_rank + 1):
        out.append(SimpleType("D", n))
    if max_rank >= 2:
        out.append(SimpleType("G", 2))
    if max_rank >= 4:
        out.append(SimpleType("F", 4))
    for n in (6, 7, 8):
        if n <= max_rank:
            out.append(SimpleType("E", n))
    return out
