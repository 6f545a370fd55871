"""Report documents, their renderings, and the golden-claim regression."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import comb
from pathlib import Path
from typing import Any, Callable

from orbitbound.enumeration import (
    dimension_bound,
    enumerate_candidates,
    verify_exclusion_table,
)
from orbitbound.involutions import (
    ScreeningReport,
    central_character,
    fixed_codim_real,
    screen_representation,
    sign_element,
)
from orbitbound.irrep import DEFAULT_BUDGET, HighestWeight, fs_type, irrep_info, real_dim, weight_system
from orbitbound.rootdata import center_elements
from orbitbound.specialchecks import (
    adjoint_la_check,
    check_lemma_g2,
    circle_fix_count,
    scan_eq_la,
)

SCHEMA_NAME = "orbitbound-report"
SCHEMA_VERSION = 1
FORMATS = ("json", "csv", "text")
STATUSES = ("match", "mismatch", "flagged-discrepancy")


def render_value(v):
    """Canonical JSON form: rationals as 'p/q', tuples as lists."""
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, dict):
        return {str(render_value(k)): render_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [render_value(x) for x in v]
    raise TypeError(f"cannot render {type(v).__name__}")


def envelope(command: str, payload: dict) -> dict:
    return {"schema": SCHEMA_NAME, "version": SCHEMA_VERSION, "command": command, **payload}


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


# -- engine memo ----------------------------------------------------------------------

class Engine:
    """Memoizes screens and weight systems within one run."""

    def __init__(self, budget: int = DEFAULT_BUDGET, cache=None):
        self.budget = budget
        self.cache = cache
        self._screens: dict[HighestWeight, ScreeningReport] = {}

    def hw(self, type_text: str, coeffs) -> HighestWeight:
        return HighestWeight.of(type_text, coeffs)

    def ws(self, type_text: str, coeffs):
        return weight_system(self.hw(type_text, coeffs), budget=self.budget, cache=self.cache)

    def screen(self, type_text: str, coeffs) -> ScreeningReport:
        hw = self.hw(type_text, coeffs)
        if hw not in self._screens:
            self._screens[hw] = screen_representation(hw, budget=self.budget, cache=self.cache)
        return self._screens[hw]


# -- claim computations ---------------------------------------------------------------

Computer = Callable[[Engine], Any]
CLAIMS: dict[str, Computer] = {}


def claim(cid: str):
    def deco(fn):
        CLAIMS[cid] = fn
        return fn
    return deco


def _fund(rank: int, *nodes: int) -> tuple[int, ...]:
    c = [0] * rank
    for n in nodes:
        c[n - 1] += 1
    return tuple(c)


def _register_dims():
    table = {
        "dim.su3.sym3": ("A2", (3, 0)),
        "dim.su4.110": ("A3", (1, 1, 0)),
        "dim.su7.ext3": ("A6", _fund(6, 3)),
        "dim.su8.ext3": ("A7", _fund(7, 3)),
        "dim.su9.ext3": ("A8", _fund(8, 3)),
        "dim.spin7.ext3": ("B3", (0, 0, 2)),
        "dim.spin7.101": ("B3", (1, 0, 1)),
        "dim.spin9.ext3": ("B4", (0, 0, 1, 0)),
        "dim.g2.sym2": ("G2", (2, 0)),
        "dim.f4.0010": ("F4", (0, 0, 1, 0)),
        "dim.e6.100001": ("E6", (1, 0, 0, 0, 0, 1)),
        "dim.spin10.ext3": ("D5", (0, 0, 1, 0, 0)),
        "dim.spin14.halfspin": ("D7", _fund(7, 7)),
        "dim.spin16.halfspin": ("D8", _fund(8, 8)),
    }
    for cid, (t, c) in table.items():
        CLAIMS[cid] = (lambda t, c: lambda e: real_dim(e.hw(t, c)))(t, c)


_register_dims()


@claim("dim.spin-odd.spin")
def _(e):
    return [[n, real_dim(e.hw(f"B{n}", _fund(n, n)))] for n in range(2, 9)]


@claim("dim.spin-even.halfspin")
def _(e):
    return [[n, real_dim(e.hw(f"D{n}", _fund(n, n)))] for n in range(4, 9)]


@claim("fs.spin-odd.spin")
def _(e):
    return [[n, fs_type(e.hw(f"B{n}", _fund(n, n))).value] for n in range(2, 9)]


@claim("fs.spin-even.halfspin")
def _(e):
    return [[n, fs_type(e.hw(f"D{n}", _fund(n, n))).value] for n in range(4, 9)]


BOUND_TYPES = ([f"A{r}" for r in range(2, 10)] + [f"B{r}" for r in range(2, 9)]
               + [f"C{r}" for r in range(3, 7)] + [f"D{r}" for r in range(4, 9)]
               + ["G2", "F4", "E6", "E7", "E8"])
ENUM_TYPES = [t for t in BOUND_TYPES if t != "B2"]


@claim("bounds")
def _(e):
    return {t: dimension_bound(t).bound for t in BOUND_TYPES}


def _register_enum():
    for t in ENUM_TYPES:
        CLAIMS[f"enum.{t}.nonstandard"] = (lambda t: lambda e: sorted(
            list(c.hw.coefficients) for c in enumerate_candidates(t).nonstandard))(t)


_register_enum()


# involution ledgers

def _untwisted(rep: ScreeningReport):
    return [r for r in rep.reports if r.involution.twist == 0]


def _spectrum(report) -> dict:
    return {k: v for k, v in report.spectrum.items()}


@claim("inv.spin7.spin.s2.fixed")
def _(e):
    rep = e.screen("B3", (0, 0, 1))
    return next(r for r in _untwisted(rep) if r.involution.vertex == 2).spectrum.get(Fraction(0), 0)


@claim("inv.spin7.spin.s1.phases")
def _(e):
    rep = e.screen("B3", (0, 0, 1))
    return _spectrum(next(r for r in _untwisted(rep) if r.involution.vertex == 1))


@claim("inv.spin7.ext3.ledger")
def _(e):
    return [[r.fixedDimR, r.codimR, r.passesScreen] for r in _untwisted(e.screen("B3", (0, 0, 2)))]


@claim("inv.spin7.ext3.quotients")
def _(e):
    return [r.dimSymmetricQuotient for r in _untwisted(e.screen("B3", (0, 0, 2)))]


@claim("inv.spin7.101.s2.fixed")
def _(e):
    return sorted({r.fixedDimR for r in e.screen("B3", (1, 0, 1)).reports if r.involution.vertex == 2})


@claim("inv.spin7.101.zero-vertices")
def _(e):
    return _zero_vertices(e.screen("B3", (1, 0, 1)))


@claim("inv.spin9.quotients")
def _(e):
    return sorted(r.dimSymmetricQuotient for r in _untwisted(e.screen("B4", (0, 0, 1, 0))))


@claim("inv.spin9.ext3.pairs")
def _(e):
    return sorted([r.fixedDimR, r.dimSymmetricQuotient] for r in _untwisted(e.screen("B4", (0, 0, 1, 0))))


def _center_trivial(e, t, c) -> bool:
    ws = e.ws(t, c)
    return all(central_character(ws, z) == 0 for z in center_elements(ws.rs))


@claim("inv.center-trivial")
def _(e):
    return {
        "spin7.ext3": _center_trivial(e, "B3", (0, 0, 2)),
        "spin9.ext3": _center_trivial(e, "B4", (0, 0, 1, 0)),
        "spin10.ext3": _center_trivial(e, "D5", (0, 0, 1, 0, 0)),
    }


def _zero_vertices(rep: ScreeningReport) -> list[int]:
    verts = sorted({r.involution.vertex for r in rep.reports})
    return [v for v in verts if all(r.fixedDimR == 0 for r in rep.reports if r.involution.vertex == v)]


@claim("inv.spin14.order2.codims")
def _(e):
    rep = e.screen("D7", _fund(7, 7))
    return sorted({r.codimR for r in rep.reports
                   if set(r.spectrum) <= {Fraction(0), Fraction(1, 2)}})


@claim("inv.spin14.zero-vertices")
def _(e):
    return _zero_vertices(e.screen("D7", _fund(7, 7)))


@claim("inv.spin14.quotients")
def _(e):
    return [r.dimSymmetricQuotient for r in _untwisted(e.screen("D7", _fund(7, 7)))
            if r.involution.vertex <= 5]


# the half-spin carrying (1/2,...,1/2) is node 4 here, so the pair
# vector (x) that half-spin has highest weight (1,0,0,1)
SPIN8_REP = ("D4", (1, 0, 0, 1))


@claim("inv.spin8.zero-vertices")
def _(e):
    return _zero_vertices(e.screen(*SPIN8_REP))


@claim("inv.spin8.s3.fixed")
def _(e):
    return sorted({r.fixedDimR for r in e.screen(*SPIN8_REP).reports if r.involution.vertex == 3})


@claim("inv.spin8.s2.fixed")
def _(e):
    return sorted({r.fixedDimR for r in e.screen(*SPIN8_REP).reports if r.involution.vertex == 2})


@claim("inv.spin8.bounds")
def _(e):
    rep = e.screen(*SPIN8_REP)
    return [rep.best(v).bound for v in (2, 3)]


@claim("inv.spin10.ext3.codims")
def _(e):
    rep = _untwisted(e.screen("D5", (0, 0, 1, 0, 0)))
    return [r.codimR for r in rep if r.involution.vertex in (2, 3)]


@claim("inv.spin10.ext3.bounds")
def _(e):
    rep = _untwisted(e.screen("D5", (0, 0, 1, 0, 0)))
    return [r.bound for r in rep if r.involution.vertex in (2, 3)]


@claim("inv.spin10.ext3.zero-vertices")
def _(e):
    return _zero_vertices(e.screen("D5", (0, 0, 1, 0, 0)))


def _parity_class(spec: dict) -> str:
    keys = set(spec)
    if keys == {Fraction(0), Fraction(1, 2)} and len(set(spec.values())) == 1:
        return "pm1-equal"
    if keys == {Fraction(1, 4), Fraction(3, 4)} and len(set(spec.values())) == 1:
        return "pmi-equal"
    return "other"


@claim("inv.spin-odd.parity")
def _(e):
    out = []
    for n in range(2, 9):
        rep = e.screen(f"B{n}", _fund(n, n))
        out.append([n, [_parity_class(r.spectrum) for r in _untwisted(rep)]])
    return out


@claim("inv.su3.sym3.min-codim")
def _(e):
    rep = e.screen("A2", (3, 0))
    return [min(r.codimR for r in rep.reports), rep.best(1).bound]


def _sign_ledger(e, t, c, ks):
    hw = e.hw(t, c)
    info = irrep_info(hw)
    ws = e.ws(t, c)
    return [fixed_codim_real(info, ws, sign_element(ws.rs, k)) for k in ks]


@claim("inv.su4.110.nonzero-vertices")
def _(e):
    rep = e.screen("A3", (1, 1, 0))
    return sorted({r.involution.vertex for r in rep.reports if r.fixedDimR})


@claim("inv.su4.110.codim")
def _(e):
    return _sign_ledger(e, "A3", (1, 1, 0), [2])[0].codimR


@claim("inv.su4.110.bound")
def _(e):
    return _sign_ledger(e, "A3", (1, 1, 0), [2])[0].bound


SU7_SIGNS = [6, 2, 4]  # diag(1,-1_6), diag(-1_2,1_5), diag(1_3,-1_4)
SU8_SIGNS = [2, 4, 6]


@claim("inv.su7.ext3.fixed")
def _(e):
    return [r.fixedDimR for r in _sign_ledger(e, "A6", _fund(6, 3), SU7_SIGNS)]


@claim("inv.su7.ext3.codims")
def _(e):
    return [r.codimR for r in _sign_ledger(e, "A6", _fund(6, 3), SU7_SIGNS)]


@claim("inv.su7.ext3.bounds")
def _(e):
    return [r.bound for r in _sign_ledger(e, "A6", _fund(6, 3), SU7_SIGNS)]


@claim("inv.su8.ext3.fixed")
def _(e):
    return [r.fixedDimR for r in _sign_ledger(e, "A7", _fund(7, 3), SU8_SIGNS)]


@claim("inv.su8.ext3.codims")
def _(e):
    return [r.codimR for r in _sign_ledger(e, "A7", _fund(7, 3), SU8_SIGNS)]


@claim("inv.su8.ext3.bounds")
def _(e):
    return [r.bound for r in _sign_ledger(e, "A7", _fund(7, 3), SU8_SIGNS)]


@claim("inv.su8.ext3.fixed-arithmetic")
def _(e):
    # 2 C(6,3) + 6, the expression given for the first fixed dimension, evaluated exactly
    return 2 * comb(6, 3) + 6


SU9_ORDER = [2, 4, 6, 8, 1, 3, 5, 7]


@claim("inv.su9.ext3.codims")
def _(e):
    rep = e.screen("A8", _fund(8, 3))
    return [rep.best(k).codimR for k in SU9_ORDER]


@claim("inv.su9.ext3.bounds")
def _(e):
    rep = e.screen("A8", _fund(8, 3))
    return [rep.best(k).bound for k in SU9_ORDER]


SCREEN_CASES = {
    "su3.sym3": ("A2", (3, 0)),
    "su4.110": ("A3", (1, 1, 0)),
    "su7.ext3": ("A6", _fund(6, 3)),
    "su8.ext3": ("A7", _fund(7, 3)),
    "su9.ext3": ("A8", _fund(8, 3)),
    "spin7.101": ("B3", (1, 0, 1)),
    "spin9.ext3": ("B4", (0, 0, 1, 0)),
    "spin13.spin": ("B6", _fund(6, 6)),
    "spin15.spin": ("B7", _fund(7, 7)),
    "spin17.spin": ("B8", _fund(8, 8)),
    "spin14.halfspin6": ("D7", _fund(7, 6)),
    "spin14.halfspin7": ("D7", _fund(7, 7)),
    "spin8.1010": ("D4", (1, 0, 1, 0)),
    "spin10.ext3": ("D5", (0, 0, 1, 0, 0)),
    "spin7.ext3": ("B3", (0, 0, 2)),
}


def _register_screens():
    for name, (t, c) in SCREEN_CASES.items():
        CLAIMS[f"screen.{name}"] = (lambda t, c: lambda e: e.screen(t, c).verdict)(t, c)


_register_screens()


@claim("screen.spin7.ext3.survivors")
def _(e):
    return e.screen("B3", (0, 0, 2)).survivor_vertices()


# lemmas

@claim("la.solutions")
def _(e):
    return sorted([str(s.type), s.index, s.m] for s in scan_eq_la(8))


@claim("la.adjoint")
def _(e):
    return list(adjoint_la_check(8).solving_types)


@claim("g2.dim")
def _(e):
    return e.ws("G2", (2, 0)).total_dim


@claim("g2.zero-mult")
def _(e):
    return e.ws("G2", (2, 0)).multiplicity((0, 0))


@claim("g2.weight-pairs")
def _(e):
    ws = e.ws("G2", (2, 0))
    by = {}
    for mu, m in ws.multiplicities.items():
        if any(mu):
            by[m] = by.get(m, 0) + 1
    return {str(m): n // 2 for m, n in sorted(by.items())}


@claim("g2.f")
def _(e):
    return circle_fix_count(e.ws("G2", (2, 0))).f


@claim("g2.verdict")
def _(e):
    return check_lemma_g2().verdict


# closed-form exclusions

EXCLUSION_RANKS = {"A": range(2, 13), "B": range(2, 11), "C": range(3, 11), "D": range(4, 11)}


@claim("excl.all-excluded")
def _(e):
    out = {}
    for fam in "ABCD":
        for row in verify_exclusion_table(fam, EXCLUSION_RANKS[fam]):
            out[row.family_id] = out.get(row.family_id, True) and row.excluded
    return dict(sorted(out.items()))


@claim("excl.A-1010.closed-form")
def _(e):
    rows = [r for r in verify_exclusion_table("A", range(4, 8)) if r.family_id == "A-1010"]
    return [r.dimR for r in rows]


@claim("excl.D-0011.closed-form")
def _(e):
    rows = [r for r in verify_exclusion_table("D", range(5, 9)) if r.family_id == "D-0011"]
    return [r.dimR for r in rows]


@claim("excl.D-1010.closed-form")
def _(e):
    rows = [r for r in verify_exclusion_table("D", range(5, 9)) if r.family_id == "D-1010"]
    return [r.dimR for r in rows]


# -- golden comparison ----------------------------------------------------------------

@dataclass(frozen=True)
class PaperClaim:
    id: str
    citation: str
    expected: Any
    computed: Any
    status: str
    engine: Any = None
    note: str = ""

    def to_json(self) -> dict:
        d = {"id": self.id, "citation": self.citation, "expected": self.expected,
             "computed": self.computed, "status": self.status}
        if self.engine is not None:
            d["engine"] = self.engine
        if self.note:
            d["note"] = self.note
        return d


def default_golden_path() -> Path:
    return Path(str(resources.files("orbitbound.data").joinpath("golden.json")))


def load_golden(path: str | Path | None = None) -> dict:
    p = Path(path) if path is not None else default_golden_path()
    return json.loads(p.read_text(encoding="utf-8"))


def evaluate_claim(entry: dict, engine: Engine) -> PaperClaim:
    cid = entry["id"]
    fn = CLAIMS.get(cid)
    if fn is None:
        return PaperClaim(cid, entry.get("citation", ""), entry["expected"], None, "mismatch",
                          note="no computation registered for this claim")
    computed = render_value(fn(engine))
    expected = entry["expected"]
    disc = entry.get("discrepancy")
    if computed == expected:
        status = "match"
    elif disc is not None and computed == disc.get("engine"):
        status = "flagged-discrepancy"
    else:
        status = "mismatch"
    return PaperClaim(cid, entry.get("citation", ""), expected, computed, status,
                      None if disc is None else disc.get("engine"),
                      "" if disc is None else disc.get("note", ""))


def verify_paper(golden: dict | None = None, engine: Engine | None = None) -> list[PaperClaim]:
    golden = golden if golden is not None else load_golden()
    engine = engine or Engine()
    claims = [evaluate_claim(entry, engine) for entry in golden["claims"]]
    return sorted(claims, key=lambda c: c.id)


def claims_document(claims: list[PaperClaim]) -> dict:
    counts = {s: sum(1 for c in claims if c.status == s) for s in STATUSES}
    return envelope("verify-paper", {"summary": counts, "claims": [c.to_json() for c in claims]})


# -- renderings ---------------------------------------------------------------------

def _cell(v) -> str:
    if isinstance(v, str):
        return v
    return json.dumps(v, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_cell(v) for v in r])
    return buf.getvalue()


def to_text(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[_cell(v) for v in r] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def leaf_table(doc: dict) -> tuple[list[str], list[list]] | None:
    """The flat table behind a document, when it has one."""
    cmd = doc["command"]
    if cmd == "verify-paper":
        return (["id", "status", "expected", "computed"],
                [[c["id"], c["status"], c["expected"], c["computed"]] for c in doc["claims"]])
    if cmd == "enumerate":
        rows = []
        for kind in ("standard", "nonstandard"):
            for c in doc[kind]:
                rows.append([kind, c["hw"], c["dimC"], c["dimR"], c["fsType"], c.get("catalog", "")])
        return ["kind", "hw", "dimC", "dimR", "fsType", "catalog"], rows
    if cmd == "screen":
        return (["involution", "fixedDimR", "codimR", "dimSymmetricQuotient", "bound", "passesScreen"],
                [[r["involution"], r["fixedDimR"], r["codimR"], r["dimSymmetricQuotient"], r["bound"],
                  r["passesScreen"]] for r in doc["involutions"]])
    if cmd == "involutions":
        return (["involution", "vertex", "mark", "twist", "x", "dimSymmetricQuotient"],
                [[r["involution"], r["vertex"], r["mark"], r["twist"], r["x"], r["dimSymmetricQuotient"]]
                 for r in doc["involutions"]])
    if cmd == "weights":
        return ["labels", "weight", "mult"], [[w["labels"], w["weight"], w["mult"]] for w in doc["weights"]]
    if cmd == "scan-la":
        return ["type", "index", "m", "fsType"], [[s["type"], s["index"], s["m"], s["fsType"]]
                                                  for s in doc["solutions"]]
    if cmd == "lemma-g2":
        return (["lemma", "name", "expected", "computed", "ok"],
                [[l["lemma"], c["name"], c["expected"], c["computed"], c["ok"]]
                 for l in doc["lemmas"] for c in l["checks"]])
    return None


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(doc)
    table = leaf_table(doc)
    if table is None:
        raise ValueError(f"{doc['command']} has no tabular form; use json")
    header, rows = table
    return to_csv(header, rows) if fmt == "csv" else to_text(header, rows)
