"""Enumerate irreducible representations under the per-group dimension
bound, fold diagram automorphisms, and split the survivors into catalog
examples and non-standard candidates.
"""

from __future__ import annotations

import ast
import json
import operator
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import product
from math import comb, factorial, perm
from typing import Callable, Iterable

from orbitbound.irrep import FSType, HighestWeight, fs_type, real_dim, weyl_dim
from orbitbound.rootdata import (
    RootSystem,
    SimpleType,
    apply_automorphism,
    diagram_automorphisms,
    root_system,
)

CLASSIFICATIONS = ("polar", "toric", "q-toric", "nonstandard-with-boundary")
STANDARD_CLASSES = frozenset(CLASSIFICATIONS[:3])


class NotApplicable(ValueError):
    code = "not-applicable"


def _load(name: str) -> dict:
    return json.loads(resources.files("orbitbound.data").joinpath(name).read_text(encoding="utf-8"))


# -- integer expressions used by the data files ----------------------------------

_BINOPS = {
    ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
    ast.FloorDiv: operator.floordiv, ast.Mod: operator.mod, ast.Pow: operator.pow,
}
_CMPOPS = {
    ast.Eq: operator.eq, ast.NotEq: operator.ne, ast.Lt: operator.lt,
    ast.LtE: operator.le, ast.Gt: operator.gt, ast.GtE: operator.ge,
}


def eval_int_expr(text: str, env: dict[str, int]) -> int | bool:
    """Evaluate a small integer expression (+ - * // % ** and comparisons)."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return node.value
        if isinstance(node, ast.Name) and node.id in env:
            return env[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.Compare) and len(node.ops) == 1 and type(node.ops[0]) in _CMPOPS:
            return _CMPOPS[type(node.ops[0])](ev(node.left), ev(node.comparators[0]))
        raise ValueError(f"unsupported expression: {text!r}")

    return ev(ast.parse(text, mode="eval"))


def matrix_size(t: SimpleType) -> int:
    """N of SU(N), SO(N), Sp(N/2) for the classical families."""
    return {"A": t.rank + 1, "B": 2 * t.rank + 1, "C": 2 * t.rank, "D": 2 * t.rank}.get(t.family, 0)


# -- dimension bounds ----------------------------------------------------------------

@dataclass(frozen=True)
class DimensionBound:
    type: SimpleType
    bound: int


def dimension_bound(type_) -> DimensionBound:
    t = root_system(type_).type
    if t.family == "A" and t.rank == 1:
        raise NotApplicable("SU(2) is resolved externally; see its catalog-only branch")
    best = None
    for rule in _load("bounds.json")["rules"]:
        if rule["family"] != t.family or t.rank < rule["min_rank"]:
            continue
        if "values" in rule:
            if str(t.rank) in rule["values"]:
                best = rule["values"][str(t.rank)]
        else:
            a, b, c = rule["poly"]
            best = a * t.rank ** 2 + b * t.rank + c
    if best is None:
        raise NotApplicable(f"no dimension bound recorded for {t}")
    return DimensionBound(t, best)


# -- catalog -------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    id: str
    type: SimpleType
    hw: HighestWeight
    label: str
    classification: str
    kernel: str
    pig: str
    dimR: int
    note: str = ""

    @property
    def standard(self) -> bool:
        return self.classification in STANDARD_CLASSES

    def to_json(self) -> dict:
        return {
            "id": self.id, "type": str(self.type), "hw": list(self.hw.coefficients),
            "label": self.label, "classification": self.classification,
            "kernel": self.kernel, "pig": self.pig, "dimR": str(self.dimR),
        }


@lru_cache(maxsize=1)
def load_catalog() -> tuple[dict, ...]:
    rows = tuple(_load("table1.json")["rows"])
    for r in rows:
        if r["classification"] not in CLASSIFICATIONS:
            raise ValueError(f"catalog row {r['id']}: unknown classification {r['classification']!r}")
    return rows


def _row_hw(rs: RootSystem, spec) -> tuple[int, ...]:
    if spec == "adjoint":
        return tuple(rs.positive_root_labels[-1])
    c = [0] * rs.rank
    for node, v in spec:
        c[node - 1] += v
    return tuple(c)


def catalog_entries(type_) -> list[CatalogEntry]:
    """Catalog rows instantiated at one type."""
    rs = root_system(type_)
    t = rs.type
    env = {"n": t.rank, "N": matrix_size(t)}
    out = []
    for r in load_catalog():
        if r["family"] != t.family or t.rank < r["min_rank"]:
            continue
        if r["max_rank"] is not None and t.rank > r["max_rank"]:
            continue
        if "when" in r and not eval_int_expr(r["when"], env):
            continue
        hw = HighestWeight(t, _row_hw(rs, r["hw"]))
        out.append(CatalogEntry(r["id"], t, hw, r["label"], r["classification"], r["kernel"],
                                r["pig"], eval_int_expr(r["dimR"], env), r.get("note", "")))
    return out


# -- automorphism folding ----------------------------------------------------------

def canonical_hw(hw: HighestWeight) -> HighestWeight:
    """Lexicographically largest image under the diagram automorphisms."""
    rs = hw.rs
    best = max(apply_automorphism(p, hw.coefficients) for p in diagram_automorphisms(rs))
    return HighestWeight(hw.type, best)


# -- search ------------------------------------------------------------------------

def highest_weights_up_to(type_, limit: int) -> list[HighestWeight]:
    """Every highest weight with complex dimension <= limit.

    Coefficient-wise depth-first search.  Raising one coefficient strictly
    raises the Weyl dimension, so once prefix + (c, 0, ..., 0) is over the
    limit, no completion of that prefix, nor any larger c, can come back.
    """
    t = root_system(type_).type
    r = t.rank
    out: list[HighestWeight] = []

    def rec(prefix: tuple[int, ...]) -> None:
        if len(prefix) == r:
            out.append(HighestWeight(t, prefix))
            return
        pad = (0,) * (r - len(prefix) - 1)
        c = 0
        while weyl_dim(HighestWeight(t, prefix + (c,) + pad)) <= limit:
            rec(prefix + (c,))
            c += 1

    rec(())
    return out


@dataclass(frozen=True)
class Candidate:
    hw: HighestWeight
    dimC: int
    dimR: int
    fsType: FSType
    catalog: CatalogEntry | None = None

    def to_json(self) -> dict:
        d = {
            "hw": list(self.hw.coefficients),
            "dimC": str(self.dimC),
            "dimR": str(self.dimR),
            "fsType": self.fsType.value,
        }
        if self.catalog is not None:
            d["catalog"] = self.catalog.id
            d["label"] = self.catalog.label
            d["classification"] = self.catalog.classification
        return d


@dataclass
class CandidateList:
    type: SimpleType
    bound: int | None
    standard: list[Candidate] = field(default_factory=list)
    nonstandard: list[Candidate] = field(default_factory=list)
    status: str = "enumerated"

    def nonstandard_hws(self) -> set[tuple[int, ...]]:
        return {c.hw.coefficients for c in self.nonstandard}

    def to_json(self) -> dict:
        return {
            "type": str(self.type),
            "bound": None if self.bound is None else str(self.bound),
            "status": self.status,
            "standard": [c.to_json() for c in self.standard],
            "nonstandard": [c.to_json() for c in self.nonstandard],
        }


def _candidate(hw: HighestWeight, entry: CatalogEntry | None = None) -> Candidate:
    return Candidate(hw, weyl_dim(hw), real_dim(hw), fs_type(hw), entry)


def _partition(t: SimpleType, bound: int | None, hws: Iterable[HighestWeight]) -> CandidateList:
    by_hw = {}
    for e in catalog_entries(t):
        by_hw.setdefault(canonical_hw(e.hw).coefficients, e)
    out = CandidateList(t, bound)
    seen = set()
    for hw in hws:
        key = canonical_hw(hw)
        if key.coefficients in seen or not any(key.coefficients):
            continue
        seen.add(key.coefficients)
        entry = by_hw.get(key.coefficients)
        cand = _candidate(key, entry)
        if entry is not None and entry.standard:
            out.standard.append(cand)
        else:
            out.nonstandard.append(cand)
    order = lambda c: (c.dimR, tuple(-x for x in c.hw.coefficients))
    out.standard.sort(key=order)
    out.nonstandard.sort(key=order)
    return out


def enumerate_candidates(type_) -> CandidateList:
    """All non-trivial irreducibles with dimR <= L_G up to diagram automorphism."""
    t = root_system(type_).type
    if t.family == "A" and t.rank == 1:
        out = CandidateList(t, None, status="resolved-externally")
        out.standard = [_candidate(e.hw, e) for e in catalog_entries(t)]
        return out
    bound = dimension_bound(t).bound
    # dimR >= dimC, so searching on dimC <= bound loses nothing
    hws = [hw for hw in highest_weights_up_to(t, bound) if real_dim(hw) <= bound]
    return _partition(t, bound, hws)


def box_edges(type_, limit: int) -> tuple[int, ...]:
    """Per-coordinate maxima: the largest c with dim(c * lambda_i) <= limit."""
    t = root_system(type_).type
    edges = []
    for i in range(t.rank):
        c = 0
        while True:
            coeffs = [0] * t.rank
            coeffs[i] = c + 1
            if weyl_dim(HighestWeight(t, tuple(coeffs))) > limit:
                break
            c += 1
        edges.append(c)
    return tuple(edges)


def brute_force_box(type_) -> CandidateList:
    """Unpruned scan of the coefficient box bounded by ``box_edges``.

    Every admissible weight lies in this box since dim(lambda) >= dim(c_i lambda_i)
    coordinatewise; inside it nothing is skipped.
    """
    t = root_system(type_).type
    bound = dimension_bound(t).bound
    edges = box_edges(t, bound)
    hws = []
    for coeffs in product(*(range(e + 1) for e in edges)):
        hw = HighestWeight(t, coeffs)
        if real_dim(hw) <= bound:
            hws.append(hw)
    return _partition(t, bound, hws)


# -- closed-form families beyond the bound ------------------------------------------

@dataclass(frozen=True)
class ExclusionRow:
    family_id: str
    hw: HighestWeight
    dimC: int
    dimR: int
    formula: int
    formula_kind: str  # "complex" or "real"
    bound: int

    @property
    def formula_agrees(self) -> bool:
        return self.formula == (self.dimC if self.formula_kind == "complex" else self.dimR)

    @property
    def excluded(self) -> bool:
        return self.dimR > self.bound

    def to_json(self) -> dict:
        return {
            "family": self.family_id, "type": str(self.hw.type), "hw": list(self.hw.coefficients),
            "dimC": str(self.dimC), "dimR": str(self.dimR), "formula": str(self.formula),
            "formulaKind": self.formula_kind, "formulaAgrees": self.formula_agrees,
            "bound": str(self.bound), "excluded": self.excluded,
        }


@dataclass(frozen=True)
class ExclusionFamily:
    id: str
    family: str
    min_rank: int
    nodes: Callable[[int], list[tuple[int, int]]]  # rank -> [(1-based node, coeff)]
    formula: Callable[[int], int]  # in the group's natural parameter
    kind: str
    rank_filter: Callable[[int], bool] = lambda r: True


def _su(f):
    return lambda r: f(r + 1)


EXCLUSION_FAMILIES: tuple[ExclusionFamily, ...] = (
    ExclusionFamily("A-ext3", "A", 9, lambda r: [(3, 1)],
                    _su(lambda n: n * (n - 1) * (n - 2) // 3), "real"),
    ExclusionFamily("A-0200", "A", 4, lambda r: [(2, 2)],
                    _su(lambda n: 2 * comb(n, 2) * comb(n + 1, 2) // 3), "real"),
    ExclusionFamily("A-0101", "A", 6, lambda r: [(2, 1), (r - 1, 1)],
                    _su(lambda n: (n - 3) * comb(n, 2) * comb(n + 1, 2) // (n - 1)), "real"),
    # real dimension n(n-2)(n+1); the variant n(n-2)(n+1)^2/(n-1) is not
    # even an integer for most n
    ExclusionFamily("A-1010", "A", 4, lambda r: [(1, 1), (r - 1, 1)],
                    _su(lambda n: n * (n - 2) * (n + 1)), "real"),
    ExclusionFamily("A-middle", "A", 11, lambda r: [((r + 1) // 2, 1)],
                    _su(lambda n: comb(n, n // 2)), "real", lambda r: (r + 1) % 4 == 0),
    ExclusionFamily("B-ext3", "B", 5, lambda r: [(3, 1)],
                    lambda n: n * (2 * n - 1) * (2 * n + 1) // 3, "complex"),
    ExclusionFamily("B-0200", "B", 5, lambda r: [(2, 2)],
                    lambda n: (n - 1) * (n + 1) * (2 * n + 1) * (2 * n + 3) // 3, "complex"),
    ExclusionFamily("B-1001", "B", 5, lambda r: [(1, 1), (r, 1)],
                    lambda n: n * 2 ** (n + 1), "complex"),
    ExclusionFamily("B-0002", "B", 5, lambda r: [(r, 2)],
                    lambda n: comb(2 * n + 1, n), "complex"),
    ExclusionFamily("C-ext3", "C", 4, lambda r: [(3, 1)],
                    lambda n: 2 * n * (2 * n + 1) * (2 * n - 4) // 3, "real"),
    ExclusionFamily("C-1100", "C", 3, lambda r: [(1, 1), (2, 1)],
                    lambda n: 16 * n * (n * n - 1) // 3, "real"),
    ExclusionFamily("C-0001", "C", 5, lambda r: [(r, 1)],
                    lambda n: 2 * perm(2 * n + 1, n - 1) // factorial(n), "complex"),
    ExclusionFamily("D-ext3", "D", 6, lambda r: [(3, 1)],
                    lambda n: 2 * n * (n - 1) * (2 * n - 1) // 3, "real"),
    ExclusionFamily("D-0200", "D", 5, lambda r: [(2, 2)],
                    lambda n: n * (n + 1) * (2 * n - 3) * (2 * n + 1) // 3, "real"),
    ExclusionFamily("D-0020", "D", 5, lambda r: [(r - 1, 2)],
                    lambda n: (1 if n % 2 == 0 else 2) * comb(2 * n - 1, n - 1), "real"),
    ExclusionFamily("D-1100", "D", 5, lambda r: [(1, 1), (2, 1)],
                    lambda n: 8 * n * (n - 1) * (n + 1) // 3, "real"),
    # lambda_{n-1}+lambda_n is Lambda^{n-1} R^{2n}, of dimension
    # binom(2n, n-1) rather than binom(2n, n)
    ExclusionFamily("D-0011", "D", 5, lambda r: [(r - 1, 1), (r, 1)],
                    lambda n: comb(2 * n, n - 1), "real"),
    # R^{2n} tensor a half-spin: of real type only for n = 0 mod 4, so the
    # factor is 2 for n = 2 mod 4 as well as for odd n
    ExclusionFamily("D-1010", "D", 5, lambda r: [(1, 1), (r - 1, 1)],
                    lambda n: (1 if n % 4 == 0 else 2) * (2 * n - 1) * 2 ** (n - 1), "real"),
)



def verify_exclusion_table(family: str, ranks: Iterable[int]) -> list[ExclusionRow]:
    """Evaluate every closed-form family of ``family`` at each rank in its range."""
    if family not in "ABCD":
        raise NotApplicable(f"no closed-form exclusion families for {family}")
    rows = []
    for fam in EXCLUSION_FAMILIES:
        if fam.family != family:
            continue
        for r in ranks:
            if r < fam.min_rank or not fam.rank_filter(r):
                continue
            t = SimpleType(family, r)
            coeffs = [0] * r
            for node, v in fam.nodes(r):
                coeffs[node - 1] += v
            hw = HighestWeight(t, tuple(coeffs))
            rows.append(ExclusionRow(fam.id, hw, weyl_dim(hw), real_dim(hw), fam.formula(r),
                                     fam.kind, dimension_bound(t).bound))
    return rows
