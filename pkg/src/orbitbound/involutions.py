"""Inner involutions from Cartan polyhedron vertices, their eigenphase
spectra on weight systems, and the nice-involution screen.

An involution is stored as the exponent coweight ``x`` of
``sigma = exp(2 pi i x)``.  A vertex ``v_j`` with mark 1 gives
``x = v_j / 2``, a vertex with mark 2 gives ``x = v_j``; either way
``sigma^2`` is central.  Composing with a central element adds its
coweight representative to ``x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import floor
from typing import Sequence

from orbitbound.irrep import (
    DEFAULT_BUDGET,
    FSType,
    HighestWeight,
    IrrepInfo,
    WeightSystem,
    irrep_info,
    weight_system,
)
from orbitbound.rootdata import (
    CenterElement,
    RootSystem,
    SimpleType,
    Vector,
    center_elements,
    root_system,
)

NICE_SLACK = 4


def frac(q: Fraction) -> Fraction:
    return q - floor(q)


@dataclass(frozen=True)
class CartanVertex:
    index: int  # 1-based node
    vector: Vector
    mark: int


@dataclass(frozen=True)
class Involution:
    x: Vector
    coroot_coords: tuple[Fraction, ...]
    vertex: int
    mark: int
    twist: int = 0  # index of the central element composed in (0 = none)

    @property
    def label(self) -> str:
        base = f"s{self.vertex}"
        return base if self.twist == 0 else f"z{self.twist}*{base}"

    def pairing(self, labels) -> Fraction:
        return sum((l * c for l, c in zip(labels, self.coroot_coords) if l), Fraction(0))


@dataclass(frozen=True)
class InvolutionReport:
    involution: Involution
    fixedDimR: int
    codimR: int
    dimSymmetricQuotient: int
    passesScreen: bool
    spectrum: dict[Fraction, int] = field(compare=False, hash=False, repr=False)

    @property
    def bound(self) -> int:
        return NICE_SLACK + self.dimSymmetricQuotient

    def to_json(self) -> dict:
        return {
            "involution": self.involution.label,
            "vertex": self.involution.vertex,
            "twist": self.involution.twist,
            "x": [str(v) for v in self.involution.x],
            "fixedDimR": self.fixedDimR,
            "codimR": self.codimR,
            "dimSymmetricQuotient": self.dimSymmetricQuotient,
            "bound": self.bound,
            "passesScreen": self.passesScreen,
            "spectrum": {str(k): v for k, v in sorted(self.spectrum.items())},
        }


@dataclass
class ScreeningReport:
    info: IrrepInfo
    reports: list[InvolutionReport]

    @property
    def survivors(self) -> list[InvolutionReport]:
        return [r for r in self.reports if r.passesScreen]

    @property
    def verdict(self) -> str:
        return "inconclusive" if self.survivors else "excluded"

    def survivor_vertices(self) -> list[int]:
        return sorted({r.involution.vertex for r in self.survivors})

    def best(self, vertex: int) -> InvolutionReport:
        """Report with the smallest codimension among the twists of one vertex."""
        cands = [r for r in self.reports if r.involution.vertex == vertex]
        return min(cands, key=lambda r: (r.codimR, r.involution.twist))

    def to_json(self) -> dict:
        hw = self.info.hw
        return {
            "type": str(hw.type),
            "hw": list(hw.coefficients),
            "dimC": str(self.info.dimC),
            "dimR": str(self.info.dimR),
            "fsType": self.info.fsType.value,
            "verdict": self.verdict,
            "survivors": [r.involution.label for r in self.survivors],
            "involutions": [r.to_json() for r in self.reports],
        }


def cartan_vertices(rs: RootSystem) -> list[CartanVertex]:
    """v_j with alpha_i(v_j) = delta_ij / m_j."""
    return [
        CartanVertex(j + 1, tuple(c / m for c in rs.fundamental_coweights[j]), m)
        for j, m in enumerate(rs.marks)
    ]


def _make(rs: RootSystem, x: Vector, vertex: int, mark: int, twist: int = 0) -> Involution:
    return Involution(tuple(x), rs.coroot_coords(x), vertex, mark, twist)


def involution_representatives(rs: RootSystem, twists: bool = False) -> list[Involution]:
    """One involution per vertex with mark 1 or 2; with ``twists`` each is
    also composed with every central element."""
    base = []
    for v in cartan_vertices(rs):
        if v.mark == 1:
            x = tuple(c / 2 for c in v.vector)
        elif v.mark == 2:
            x = v.vector
        else:
            continue
        base.append(_make(rs, x, v.index, v.mark))
    if not twists:
        return base
    out = []
    centre = center_elements(rs)
    for inv in base:
        for z in centre:
            out.append(twist(rs, inv, z))
    return out


def twist(rs: RootSystem, inv: Involution, z: CenterElement) -> Involution:
    x = tuple(a + b for a, b in zip(inv.x, z.coweight))
    return _make(rs, x, inv.vertex, inv.mark, z.index)


def symmetric_quotient_dim(rs: RootSystem, inv: Involution) -> int:
    """dim G/G^sigma: the number of roots with alpha(x) not an integer."""
    n = 0
    for al in rs.positive_root_labels:
        if inv.pairing(al).denominator != 1:
            n += 2
    return n


def phase_spectrum(ws: WeightSystem, inv: Involution) -> dict[Fraction, int]:
    """Eigenphases of sigma on V: phase of weight mu is frac(mu(x))."""
    out: dict[Fraction, int] = {}
    for mu, m in ws.multiplicities.items():
        p = frac(inv.pairing(mu))
        out[p] = out.get(p, 0) + m
    return dict(sorted(out.items()))


def fixed_codim_real(info: IrrepInfo, ws: WeightSystem, inv: Involution) -> InvolutionReport:
    spec = phase_spectrum(ws, inv)
    fixed_c = spec.get(Fraction(0), 0)
    fixed_r = fixed_c if info.fsType is FSType.REAL else 2 * fixed_c
    codim = info.dimR - fixed_r
    quot = symmetric_quotient_dim(ws.rs, inv)
    return InvolutionReport(inv, fixed_r, codim, quot, codim <= NICE_SLACK + quot, spec)


def screen_representation(hw: HighestWeight | IrrepInfo, budget: int = DEFAULT_BUDGET,
                          cache=None) -> ScreeningReport:
    """Run every (vertex involution, central twist) pair through the
    nice-involution inequality codim V^sigma <= 4 + dim G/G^sigma."""
    info = hw if isinstance(hw, IrrepInfo) else irrep_info(hw)
    ws = weight_system(info.hw, budget=budget, cache=cache)
    rs = ws.rs
    reports = [fixed_codim_real(info, ws, inv) for inv in involution_representatives(rs, twists=True)]
    return ScreeningReport(info, reports)


def central_character(ws: WeightSystem, z: CenterElement) -> Fraction:
    """Phase by which ``z`` acts on the irreducible representation."""
    rs = ws.rs
    xi = rs.coroot_coords(z.coweight)
    return frac(sum((l * c for l, c in zip(ws.hw.coefficients, xi)), Fraction(0)))


# -- brute-force oracle on exterior powers ---------------------------------------

class UnsupportedRepresentation(ValueError):
    code = "unsupported-rep"


def exterior_power_hw(t: SimpleType, k: int) -> HighestWeight:
    """Highest weight of Lambda^k of the defining representation when it is
    irreducible (A_n, B_n, D_n for the ranges where that holds)."""
    n = t.rank
    coeffs = [0] * n
    if t.family == "A" and 1 <= k <= n:
        coeffs[k - 1] = 1
    elif t.family == "B" and 1 <= k < n:
        coeffs[k - 1] = 1
    elif t.family == "B" and k == n:
        coeffs[n - 1] = 2
    elif t.family == "D" and 1 <= k <= n - 2:
        coeffs[k - 1] = 1
    elif t.family == "D" and k == n - 1:
        coeffs[n - 2] = coeffs[n - 1] = 1
    else:
        raise UnsupportedRepresentation(f"Lambda^{k} of the defining representation of {t} is not supported")
    return HighestWeight(t, tuple(coeffs))


def defining_phases(rs: RootSystem, x: Sequence[Fraction]) -> list[Fraction]:
    """Eigenphases of exp(2 pi i x) in the defining matrix representation."""
    f = rs.type.family
    if f == "A":
        return [frac(c) for c in x]
    if f == "B":
        return [frac(c) for c in x] + [frac(-c) for c in x] + [Fraction(0)]
    if f == "D":
        return [frac(c) for c in x] + [frac(-c) for c in x]
    raise UnsupportedRepresentation(f"no defining matrix realization for {rs.type}")


MAX_MATRIX = 16


def brute_force_fixed_dim(t: SimpleType, k: int, diagonal: Sequence[Fraction]) -> int:
    """Count basis monomials of Lambda^k C^N fixed by a diagonal element.

    ``diagonal`` lists the eigenphases (in turns) of the element on C^N;
    a monomial e_{i1} ^ ... ^ e_{ik} is fixed when its phases sum to an
    integer.  A sign matrix diag(+-1) is the phase list of 0s and 1/2s.
    """
    if not 1 <= k <= 4 or len(diagonal) > MAX_MATRIX:
        raise UnsupportedRepresentation("brute force limited to k <= 4 and matrices up to 16x16")
    exterior_power_hw(t, k)
    phases = [Fraction(p) for p in diagonal]
    return sum(1 for s in combinations(phases, k) if sum(s).denominator == 1)


def sign_diagonal(minus: int, plus: int) -> list[Fraction]:
    """Phases of diag(-1_minus, 1_plus)."""
    return [Fraction(1, 2)] * minus + [Fraction(0)] * plus


def sign_element(rs: RootSystem, minus: int) -> Involution:
    """The (vertex, twist) representative acting as diag(-1_minus, 1_rest)
    in the defining representation, exactly (no scalar factor)."""
    n = len(defining_phases(rs, [Fraction(0)] * rs.ambient_dim))
    target = sorted(sign_diagonal(minus, n - minus))
    for inv in involution_representatives(rs, twists=True):
        if sorted(defining_phases(rs, inv.x)) == target:
            return inv
    raise UnsupportedRepresentation(f"diag(-1_{minus}, 1_{n - minus}) is not realized in {rs.type}")
