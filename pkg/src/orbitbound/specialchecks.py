"""Two small computations behind the exclusion lemmas.

``scan_eq_la`` solves 2 m |lambda_i|^2 = |alpha_i|^2 for a positive
integer m over every fundamental weight; these are the only candidates
for an irreducible V whose maximal torus has a circle fixing a real
codimension-two subspace.  ``circle_fix_count`` finds the largest number
of weights (with multiplicity) that vanish on a single circle in the torus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from orbitbound._linalg import nullspace, primitive_integer, rank as matrix_rank
from orbitbound.irrep import FSType, HighestWeight, WeightSystem, fs_type, weight_system
from orbitbound.rootdata import RootSystem, SimpleType, catalog_types, root_system


class NotSupported(ValueError):
    code = "not-supported"


# -- fundamental-weight equation -------------------------------------------------------

@dataclass(frozen=True)
class LaSolution:
    type: SimpleType
    index: int  # 1-based node
    m: int
    fsType: FSType

    @property
    def hw(self) -> HighestWeight:
        c = [0] * self.type.rank
        c[self.index - 1] = self.m
        return HighestWeight(self.type, tuple(c))

    def to_json(self) -> dict:
        return {"type": str(self.type), "index": self.index, "m": self.m, "fsType": self.fsType.value}


def scan_types(max_rank: int) -> list[SimpleType]:
    """A from rank 1, B from 2, C from 3, D from 4 and the exceptionals."""
    out = [SimpleType("A", 1)]
    out += [t for t in catalog_types(max_rank) if t != SimpleType("A", 1)]
    return sorted(set(out))


def la_multiplier(rs: RootSystem, i: int, scale: Fraction = Fraction(1)) -> Fraction:
    """The m solving 2 m |lambda_i|^2 = |alpha_i|^2 (0-based i)."""
    lam = rs.fundamental_weights[i]
    al = rs.simple_roots[i]
    return (scale * rs.norm2(al)) / (2 * scale * rs.norm2(lam))


def scan_eq_la(max_rank: int, scale=1) -> list[LaSolution]:
    """Every (type, i) with an integer m, keeping m * lambda_i when it is
    not of quaternionic type (a quaternionic V has -mu != mu vanishing
    together, which the codimension-two argument forbids)."""
    if max_rank < 2:
        raise ValueError("max_rank must be at least 2")
    scale = Fraction(scale)
    if scale <= 0:
        raise ValueError("scale must be positive")
    out = []
    for t in scan_types(max_rank):
        rs = root_system(t)
        for i in range(t.rank):
            m = la_multiplier(rs, i, scale)
            if m.denominator != 1 or m <= 0:
                continue
            sol = LaSolution(t, i + 1, int(m), FSType.REAL)
            ft = fs_type(sol.hw)
            if ft is FSType.QUATERNIONIC:
                continue
            out.append(LaSolution(t, i + 1, int(m), ft))
    return out


def expected_la_solutions(max_rank: int) -> set[tuple[str, int, int]]:
    """The four families: SU(2) adjoint, Lambda^2 C^4, SO(m) vectors, Spin(8) half-spins."""
    exp = {("A1", 1, 2)}
    if max_rank >= 3:
        exp.add(("A3", 2, 1))
    exp |= {(f"B{n}", 1, 1) for n in range(2, max_rank + 1)}
    exp |= {(f"D{n}", 1, 1) for n in range(4, max_rank + 1)}
    if max_rank >= 4:
        exp |= {("D4", 3, 1), ("D4", 4, 1)}
    return exp


def solution_keys(sols) -> set[tuple[str, int, int]]:
    return {(str(s.type), s.index, s.m) for s in sols}


@dataclass(frozen=True)
class AdjointLaCheck:
    solving_types: tuple[str, ...]
    checked: int

    @property
    def passed(self) -> bool:
        return self.solving_types == ("A1",)


def adjoint_la_check(max_rank: int = 8) -> AdjointLaCheck:
    """Types whose adjoint highest weight is a solution of the equation.

    Only SU(2) should appear: for rank >= 2 the adjoint representation is
    never one of the scan's solutions, so 2Ad cannot rely on a torus circle
    of codimension two either.
    """
    sols = solution_keys(scan_eq_la(max_rank))
    hits = []
    types = scan_types(max_rank)
    for t in types:
        rs = root_system(t)
        theta = tuple(rs.positive_root_labels[-1])
        nz = [(i, c) for i, c in enumerate(theta) if c]
        if len(nz) == 1 and (str(t), nz[0][0] + 1, nz[0][1]) in sols:
            hits.append(str(t))
    return AdjointLaCheck(tuple(hits), len(types))


# -- circle counts ------------------------------------------------------------------

MAX_CIRCLE_RANK = 4


@dataclass(frozen=True)
class CircleFixCount:
    hw: HighestWeight
    f: int
    direction: tuple[int, ...]  # coroot coordinates, primitive
    coweight: tuple[Fraction, ...] = field(compare=False)

    def to_json(self) -> dict:
        return {
            "type": str(self.hw.type),
            "hw": list(self.hw.coefficients),
            "f": self.f,
            "direction": list(self.direction),
            "coweight": [str(c) for c in self.coweight],
        }


def vanishing_count(ws: WeightSystem, xi) -> int:
    """Total multiplicity of weights mu with mu(x) = 0, x in coroot coordinates."""
    return sum(m for mu, m in ws.multiplicities.items()
               if sum(a * b for a, b in zip(mu, xi)) == 0)


def reflect_direction(rs: RootSystem, xi, i: int) -> tuple:
    """s_i(x) = x - alpha_i(x) alpha_i^vee, in coroot coordinates."""
    a = sum(x * rs.cartan[k][i] for k, x in enumerate(xi))
    out = list(xi)
    out[i] -= a
    return tuple(out)


def _candidate_directions(ws: WeightSystem) -> set[tuple[int, ...]]:
    r = ws.rs.rank
    # one representative per line through the origin
    lines = sorted({primitive_integer(mu) for mu in ws.multiplicities if any(mu)})
    dirs = {tuple(int(i == k) for i in range(r)) for k in range(r)}
    for subset in combinations(lines, r - 1):
        if r > 1 and matrix_rank(subset) != r - 1:
            continue
        ker = nullspace(list(subset), r)
        dirs.add(primitive_integer(ker[0]))
    return dirs


def circle_fix_count(ws: WeightSystem) -> CircleFixCount:
    """Maximise the vanishing multiplicity over nonzero torus directions.

    An optimal direction's vanishing weights span a subspace of dimension
    at most rank - 1; completing a basis of it with further weights (the
    weights span, V being nontrivial) pins a direction that vanishes on at
    least as much.  So kernels of independent (rank - 1)-subsets suffice.
    """
    rs = ws.rs
    if rs.rank > MAX_CIRCLE_RANK:
        raise NotSupported(f"circle search is limited to rank <= {MAX_CIRCLE_RANK}, got {rs.type}")
    best = None
    for d in sorted(_candidate_directions(ws)):
        c = vanishing_count(ws, d)
        if best is None or c > best[0]:
            best = (c, d)
    f, d = best
    return CircleFixCount(ws.hw, f, d, rs.coweight_from_coroot_coords([Fraction(x) for x in d]))


def collinear_class_count(ws: WeightSystem) -> int:
    """Rank-two shortcut: zero multiplicity plus the heaviest line of weights."""
    if ws.rs.rank != 2:
        raise NotSupported("the collinear shortcut applies to rank two only")
    zero = ws.multiplicities.get((0, 0), 0)
    per_line: dict[tuple[int, ...], int] = {}
    for mu, m in ws.multiplicities.items():
        if any(mu):
            key = primitive_integer(mu)
            per_line[key] = per_line.get(key, 0) + m
    return zero + max(per_line.values(), default=0)


# -- the G2 lemma ---------------------------------------------------------------------

# weights of S^2_0 R^7 in simple-root coordinates (short root first), up to sign
G2_REFERENCE_WEIGHTS = {
    (0, 1): 1, (3, 1): 1, (3, 2): 1, (2, 0): 1, (2, 2): 1, (4, 2): 1,
    (1, 0): 2, (1, 1): 2, (2, 1): 2,
}
G2_ZERO_MULT = 3
G2_DIM = 27
# dim V - a - 1 = dim G - n + f with a = 1 and n >= rank gives f = n + 11 >= 13
G2_REQUIRED_F = 13
G2_F_LIMIT = 9


@dataclass(frozen=True)
class Check:
    name: str
    expected: str
    computed: str
    ok: bool

    def to_json(self) -> dict:
        return {"name": self.name, "expected": self.expected, "computed": self.computed, "ok": self.ok}


@dataclass(frozen=True)
class LemmaVerdict:
    name: str
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_json(self) -> dict:
        return {"lemma": self.name, "verdict": self.verdict, "checks": [c.to_json() for c in self.checks]}


def g2_reference_table(rs: RootSystem) -> dict[tuple[int, ...], int]:
    """The reference weight list expanded by sign and converted to Dynkin labels."""
    cols = [rs.simple_root_labels(i) for i in range(2)]
    out = {(0, 0): G2_ZERO_MULT}
    for (a, b), m in G2_REFERENCE_WEIGHTS.items():
        lab = tuple(a * x + b * y for x, y in zip(*cols))
        out[lab] = m
        out[tuple(-v for v in lab)] = m
    return out


def check_lemma_g2() -> LemmaVerdict:
    hw = HighestWeight.of("G2", (2, 0))
    ws = weight_system(hw)
    table = g2_reference_table(ws.rs)
    cf = circle_fix_count(ws)
    shortcut = collinear_class_count(ws)
    mult1 = sum(1 for m in table.values() if m == 1) // 2
    mult2 = sum(1 for m in table.values() if m == 2) // 2
    checks = (
        Check("dimension", str(G2_DIM), str(ws.total_dim), ws.total_dim == G2_DIM),
        Check("zero multiplicity", str(G2_ZERO_MULT), str(ws.multiplicity((0, 0))),
              ws.multiplicity((0, 0)) == G2_ZERO_MULT),
        Check("weight table", f"{mult1} pairs mult 1, {mult2} pairs mult 2",
              "match" if ws.multiplicities == table else "differs", ws.multiplicities == table),
        Check("f (direction search)", f"<= {G2_F_LIMIT}", str(cf.f), cf.f <= G2_F_LIMIT),
        Check("f (collinear shortcut)", str(cf.f), str(shortcut), shortcut == cf.f),
        Check("contradiction", f"f < {G2_REQUIRED_F}", str(cf.f), cf.f < G2_REQUIRED_F),
    )
    return LemmaVerdict("G2 on S^2_0 R^7 has empty boundary", checks)
