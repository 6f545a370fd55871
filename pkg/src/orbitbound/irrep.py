"""Irreducible representations: Weyl dimension, Freudenthal weight systems,
Frobenius-Schur type and real dimension.

Internally every weight is a tuple of Dynkin labels (integers in the
fundamental-weight basis); orthogonal coordinates are produced on demand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable

from orbitbound.rootdata import RootSystem, SimpleType, Vector, root_system

DEFAULT_BUDGET = 10**6


class BudgetExceeded(RuntimeError):
    """A representation is too large for the configured enumeration budget."""

    def __init__(self, dimension: int, budget: int, what: str = "weight system"):
        super().__init__(f"{what} of dimension {dimension} exceeds budget {budget}")
        self.dimension = dimension
        self.budget = budget


class FSType(str, Enum):
    REAL = "Real"
    COMPLEX = "Complex"
    QUATERNIONIC = "Quaternionic"


@dataclass(frozen=True)
class HighestWeight:
    type: SimpleType
    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) != self.type.rank:
            raise ValueError(f"{self.type} needs {self.type.rank} labels, got {len(coeffs)}")
        if any((not isinstance(c, int)) or c < 0 for c in coeffs):
            raise ValueError(f"labels must be non-negative integers: {coeffs}")

    @classmethod
    def of(cls, type_, coeffs: Iterable[int]) -> "HighestWeight":
        if isinstance(type_, str):
            type_ = SimpleType.parse(type_)
        return cls(type_, tuple(int(c) for c in coeffs))

    @classmethod
    def parse(cls, type_text: str, hw_text: str) -> "HighestWeight":
        t = SimpleType.parse(type_text)
        parts = [p for p in hw_text.replace(" ", "").split(",") if p != ""]
        try:
            coeffs = tuple(int(p) for p in parts)
        except ValueError:
            raise ValueError(f"cannot parse highest weight {hw_text!r}") from None
        return cls(t, coeffs)

    @property
    def rs(self) -> RootSystem:
        return root_system(self.type)

    def __str__(self) -> str:
        return f"{self.type}({','.join(map(str, self.coefficients))})"


def fundamental(type_, i: int, c: int = 1) -> HighestWeight:
    """``c`` times the ``i``-th fundamental weight (1-based)."""
    t = SimpleType.parse(type_) if isinstance(type_, str) else type_
    coeffs = [0] * t.rank
    coeffs[i - 1] = c
    return HighestWeight(t, tuple(coeffs))


# -- Weyl group action on Dynkin labels ---------------------------------------

def _columns(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    return tuple(rs.simple_root_labels(i) for i in range(rs.rank))


def reflect(rs: RootSystem, labels, i: int) -> tuple[int, ...]:
    v = labels[i]
    if v == 0:
        return tuple(labels)
    col = rs.simple_root_labels(i)
    return tuple(x - v * c for x, c in zip(labels, col))


def dominant_conjugate(rs: RootSystem, labels) -> tuple[int, ...]:
    cols = _columns(rs)
    mu = list(labels)
    r = len(mu)
    while True:
        for i in range(r):
            v = mu[i]
            if v < 0:
                col = cols[i]
                for k in range(r):
                    mu[k] -= v * col[k]
                break
        else:
            return tuple(mu)


def weyl_orbit(rs: RootSystem, labels) -> set[tuple[int, ...]]:
    cols = _columns(rs)
    r = rs.rank
    start = tuple(labels)
    seen = {start}
    stack = [start]
    while stack:
        nu = stack.pop()
        for i in range(r):
            v = nu[i]
            if v:
                col = cols[i]
                w = tuple(nu[k] - v * col[k] for k in range(r))
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return seen


# -- dimension and type --------------------------------------------------------

def _as_hw(hw, coeffs=None) -> HighestWeight:
    if isinstance(hw, HighestWeight):
        return hw
    return HighestWeight.of(hw, coeffs)


def weyl_dim(hw: HighestWeight) -> int:
    """Exact Weyl dimension, prod <lambda+rho, a^vee> / <rho, a^vee>."""
    rs = hw.rs
    lam = hw.coefficients
    num = den = 1
    for cc in rs.positive_coroot_coeffs:
        s = 0
        h = 0
        for c, l in zip(cc, lam):
            if c:
                s += c * (l + 1)
                h += c
        num *= s
        den *= h
    q, rem = divmod(num, den)
    assert rem == 0
    return q


@lru_cache(maxsize=None)
def _two_rho_check(t: SimpleType) -> tuple[int, ...]:
    """Coefficients of 2 rho^vee (sum of positive coroots) on the simple coroots."""
    rs = root_system(t)
    out = [0] * rs.rank
    for cc in rs.positive_coroot_coeffs:
        for j, c in enumerate(cc):
            out[j] += c
    return tuple(out)


def dual_highest_weight(hw: HighestWeight) -> HighestWeight:
    """Highest weight of the dual representation, -w0(lambda)."""
    neg = tuple(-x for x in hw.coefficients)
    return HighestWeight(hw.type, dominant_conjugate(hw.rs, neg))


def fs_type(hw: HighestWeight) -> FSType:
    if dual_highest_weight(hw).coefficients != hw.coefficients:
        return FSType.COMPLEX
    parity = sum(c * l for c, l in zip(_two_rho_check(hw.type), hw.coefficients)) % 2
    return FSType.QUATERNIONIC if parity else FSType.REAL


def real_dim(hw: HighestWeight) -> int:
    d = weyl_dim(hw)
    return d if fs_type(hw) is FSType.REAL else 2 * d


@dataclass(frozen=True)
class IrrepInfo:
    hw: HighestWeight
    dimC: int
    fsType: FSType
    dimR: int


def irrep_info(hw: HighestWeight) -> IrrepInfo:
    d = weyl_dim(hw)
    t = fs_type(hw)
    return IrrepInfo(hw, d, t, d if t is FSType.REAL else 2 * d)


# -- weight systems --------------------------------------------------------------

@dataclass(frozen=True)
class WeightSystem:
    """Weights of an irreducible representation with multiplicities.

    ``multiplicities`` is keyed by Dynkin labels; ``entries`` gives the same
    data in orthogonal coordinates.
    """

    hw: HighestWeight
    multiplicities: dict[tuple[int, ...], int] = field(hash=False, compare=False)
    dominant: dict[tuple[int, ...], int] = field(hash=False, compare=False)

    @property
    def rs(self) -> RootSystem:
        return self.hw.rs

    @property
    def total_dim(self) -> int:
        return sum(self.multiplicities.values())

    @cached_property
    def entries(self) -> dict[Vector, int]:
        rs = self.rs
        return {rs.weight_from_labels(mu): m for mu, m in self.multiplicities.items()}

    def sorted_labels(self) -> list[tuple[int, ...]]:
        return sorted(self.multiplicities)

    def multiplicity(self, labels) -> int:
        return self.multiplicities.get(tuple(labels), 0)

    def to_json(self) -> dict:
        rs = self.rs
        rows = []
        for mu in self.sorted_labels():
            rows.append({
                "labels": list(mu),
                "weight": [str(x) for x in rs.weight_from_labels(mu)],
                "mult": self.multiplicities[mu],
            })
        return {
            "type": str(self.hw.type),
            "hw": list(self.hw.coefficients),
            "dim": str(self.total_dim),
            "dominant": [[list(mu), m] for mu, m in sorted(self.dominant.items())],
            "weights": rows,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "WeightSystem":
        hw = HighestWeight.of(doc["type"], doc["hw"])
        mult = {tuple(r["labels"]): r["mult"] for r in doc["weights"]}
        dom = {tuple(mu): m for mu, m in doc["dominant"]}
        return cls(hw, mult, dom)


def dominant_weights(hw: HighestWeight) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Dominant weights below ``hw`` mapped to their depth vector (the
    simple-root coordinates of ``hw - mu``).  Found by subtracting positive
    roots and keeping dominant results."""
    rs = hw.rs
    lam = hw.coefficients
    r = rs.rank
    found = {lam: (0,) * r}
    stack = [lam]
    roots = list(zip(rs.positive_root_labels, rs.positive_root_coeffs))
    while stack:
        mu = stack.pop()
        depth = found[mu]
        for al, ak in roots:
            nu = tuple(mu[k] - al[k] for k in range(r))
            if min(nu) < 0 or nu in found:
                continue
            found[nu] = tuple(depth[k] + ak[k] for k in range(r))
            stack.append(nu)
    return found


def freudenthal(hw: HighestWeight) -> dict[tuple[int, ...], int]:
    """Multiplicities of the dominant weights by Freudenthal's recursion.

    The inner sums over root strings are memoised per root:
    S_a(nu) = m(nu + a) <nu + a, a> + S_a(nu + a).
    """
    rs = hw.rs
    r = rs.rank
    lam = hw.coefficients
    d = rs.symmetrizer
    dom = dominant_weights(hw)
    order = sorted(dom, key=lambda mu: (sum(dom[mu]), mu))
    mult: dict[tuple[int, ...], int] = {lam: 1}
    cols = _columns(rs)
    conj: dict[tuple[int, ...], tuple[int, ...]] = {}

    def m_of(nu):
        dc = conj.get(nu)
        if dc is None:
            mu = list(nu)
            while True:
                for i in range(r):
                    v = mu[i]
                    if v < 0:
                        col = cols[i]
                        for k in range(r):
                            mu[k] -= v * col[k]
                        break
                else:
                    break
            dc = tuple(mu)
            conj[nu] = dc
        return mult.get(dc, 0)

    roots = [(al, tuple(ak[j] * d[j] for j in range(r))) for al, ak in
             zip(rs.positive_root_labels, rs.positive_root_coeffs)]
    memos: list[dict] = [dict() for _ in roots]
    lam_2rho = [lam[j] + 2 for j in range(r)]

    for mu in order[1:]:
        total = 0
        for (al, akd), memo in zip(roots, memos):
            chain = []
            nu = mu
            while True:
                hit = memo.get(nu)
                if hit is not None:
                    base = hit
                    break
                up = tuple(nu[k] + al[k] for k in range(r))
                m = m_of(up)
                if m == 0:
                    base = 0
                    memo[nu] = 0
                    break
                chain.append((nu, m * sum(akd[k] * up[k] for k in range(r))))
                nu = up
            for nu_, term in reversed(chain):
                base += term
                memo[nu_] = base
            total += memo[mu]
        depth = dom[mu]
        den = sum(depth[j] * d[j] * (lam_2rho[j] + mu[j]) for j in range(r))
        q, rem = divmod(2 * total, den)
        assert rem == 0 and q > 0, (hw, mu, total, den)
        mult[mu] = q
    return {mu: mult[mu] for mu in order}


def weight_system(hw: HighestWeight, budget: int = DEFAULT_BUDGET, cache=None) -> WeightSystem:
    """Full weight system: Freudenthal on dominant weights, then Weyl orbits.

    ``cache`` is an optional object with ``load(hw)`` / ``store(ws)``.
    """
    dim = weyl_dim(hw)
    if dim > budget:
        raise BudgetExceeded(dim, budget)
    if cache is not None:
        hit = cache.load(hw)
        if hit is not None:
            return hit
    dom = freudenthal(hw)
    rs = hw.rs
    full: dict[tuple[int, ...], int] = {}
    for mu, m in dom.items():
        for nu in weyl_orbit(rs, mu):
            full[nu] = m
    ws = WeightSystem(hw, full, dom)
    if cache is not None:
        cache.store(ws)
    return ws


# -- independent Frobenius-Schur oracle ---------------------------------------------

@lru_cache(maxsize=None)
def _signed_rho_orbit(t: SimpleType) -> tuple[tuple[tuple[int, ...], int], ...]:
    """(w(rho) - rho, sign(w)) for every Weyl group element."""
    rs = root_system(t)
    r = rs.rank
    rho = (1,) * r
    seen = {rho: 1}
    stack = [rho]
    while stack:
        nu = stack.pop()
        for i in range(r):
            w = reflect(rs, nu, i)
            if w not in seen:
                seen[w] = -seen[nu]
                stack.append(w)
    return tuple((tuple(a - 1 for a in w), s) for w, s in seen.items())


ORACLE_MAX_DIM = 200


def tensor_square_parity_oracle(hw: HighestWeight, max_dim: int = ORACLE_MAX_DIM) -> FSType:
    """Decide the Frobenius-Schur type by locating the invariant in V (x) V.

    The number of trivial summands of a character chi is
    sum_w sign(w) chi(w rho - rho); we evaluate it for S^2 V and Lambda^2 V
    from the weight multiplicities of V.
    """
    dim = weyl_dim(hw)
    if dim > max_dim:
        raise BudgetExceeded(dim, max_dim, what="tensor-square oracle input")
    ws = weight_system(hw)
    mult = ws.multiplicities
    items = list(mult.items())

    def conv(nu):
        return sum(m * mult.get(tuple(a - b for a, b in zip(nu, mu)), 0) for mu, m in items)

    def adams(nu):
        if any(a % 2 for a in nu):
            return 0
        return mult.get(tuple(a // 2 for a in nu), 0)

    sym = alt = 0
    for nu, sign in _signed_rho_orbit(hw.type):
        c, a = conv(nu), adams(nu)
        sym += sign * (c + a)
        alt += sign * (c - a)
    sym //= 2
    alt //= 2
    assert sym + alt <= 1 and sym >= 0 and alt >= 0
    if sym:
        return FSType.REAL
    if alt:
        return FSType.QUATERNIONIC
    return FSType.COMPLEX
