import pytest

from orbitbound.enumeration import (
    CLASSIFICATIONS,
    EXCLUSION_FAMILIES,
    NotApplicable,
    box_edges,
    brute_force_box,
    canonical_hw,
    catalog_entries,
    dimension_bound,
    enumerate_candidates,
    eval_int_expr,
    highest_weights_up_to,
    load_catalog,
    verify_exclusion_table,
)
from orbitbound.irrep import HighestWeight, real_dim, weyl_dim
from orbitbound.rootdata import apply_automorphism, diagram_automorphisms, root_system

ENUM_TYPES = ([f"A{n}" for n in range(2, 10)] + [f"B{n}" for n in range(2, 9)]
              + [f"C{n}" for n in range(3, 7)] + [f"D{n}" for n in range(4, 9)] + ["G2", "F4", "E6", "E7", "E8"])


def nonstandard(t):
    return sorted(c.hw.coefficients for c in enumerate_candidates(t).nonstandard)


# -- bounds ---------------------------------------------------------------------------

@pytest.mark.parametrize("t,b", [
    ("A2", 24), ("A3", 40), ("A5", 84), ("C3", 48), ("C4", 72), ("C5", 102), ("C6", 144), ("C8", 256),
    ("G2", 36), ("F4", 96), ("E6", 132), ("E7", 222), ("E8", 396),
])
def test_bound_values(t, b):
    assert dimension_bound(t).bound == b


@pytest.mark.parametrize("n", range(2, 12))
def test_family_bounds(n):
    assert dimension_bound(f"A{n}").bound == 2 * n * n + 6 * n + 4
    assert dimension_bound(f"B{n}").bound == 4 * n * n + 10 * n + 4
    if n >= 4:
        assert dimension_bound(f"D{n}").bound == 4 * n * n + 6 * n


def test_a1_not_applicable():
    with pytest.raises(NotApplicable) as e:
        dimension_bound("A1")
    assert e.value.code == "not-applicable"
    cl = enumerate_candidates("A1")
    assert cl.status == "resolved-externally" and cl.bound is None
    assert sorted(c.hw.coefficients for c in cl.standard) == [(1,), (2,), (4,)]
    assert cl.nonstandard == []


# -- enumeration ----------------------------------------------------------------------

@pytest.mark.parametrize("t,expected", [
    ("A2", [(3, 0)]),
    ("A6", [(0, 0, 1, 0, 0, 0)]),
    ("G2", [(2, 0)]),
    ("E7", []),
    ("E8", []),
    ("B5", [(0, 0, 0, 0, 1)]),
    ("D4", [(1, 0, 1, 0)]),
])
def test_nonstandard_examples(t, expected):
    assert nonstandard(t) == expected


def test_a3_also_finds_sym3():
    # S^3 C^4 has dimR 2 * 20 = 40, exactly the bound, next to (1,1,0)
    assert nonstandard("A3") == [(1, 1, 0), (3, 0, 0)]
    assert real_dim(HighestWeight.of("A3", (3, 0, 0))) == 40


def test_b5_spin_is_annotated():
    cl = enumerate_candidates("B5")
    (c,) = cl.nonstandard
    assert c.dimR == 64
    assert c.catalog is not None and c.catalog.classification == "nonstandard-with-boundary"


def test_ties_at_the_bound_are_kept():
    cl = enumerate_candidates("A3")
    assert max(c.dimR for c in cl.standard + cl.nonstandard) == 40


@pytest.mark.parametrize("t", ENUM_TYPES)
def test_pruned_search_matches_box(t):
    a, b = enumerate_candidates(t), brute_force_box(t)
    assert a.to_json() == b.to_json()


@pytest.mark.parametrize("t", ["A3", "B3", "C3", "D4", "G2", "A5"])
def test_box_edges_cover_the_search(t):
    edges = box_edges(t, dimension_bound(t).bound)
    for h in highest_weights_up_to(t, dimension_bound(t).bound):
        assert all(c <= e for c, e in zip(h.coefficients, edges))


@pytest.mark.parametrize("t", ENUM_TYPES)
def test_candidate_list_invariants(t):
    cl = enumerate_candidates(t)
    rs = root_system(t)
    auts = diagram_automorphisms(rs)
    emitted = [c.hw.coefficients for c in cl.standard + cl.nonstandard]
    assert len(emitted) == len(set(emitted))
    for c in cl.standard + cl.nonstandard:
        assert c.dimR <= cl.bound and c.dimR == real_dim(c.hw) and c.dimC == weyl_dim(c.hw)
    for coeffs in emitted:
        images = {apply_automorphism(p, coeffs) for p in auts} - {coeffs}
        assert not images & set(emitted)


def test_highest_weights_up_to_is_complete():
    # unpruned count over a generous box
    from itertools import product
    limit = 300
    found = {h.coefficients for h in highest_weights_up_to("B3", limit)}
    box = {c for c in product(range(12), repeat=3) if weyl_dim(HighestWeight.of("B3", c)) <= limit}
    assert found == box


def test_canonical_hw_is_lex_max():
    assert canonical_hw(HighestWeight.of("A4", (0, 0, 1, 2))).coefficients == (2, 1, 0, 0)
    assert canonical_hw(HighestWeight.of("D4", (0, 0, 1, 0))).coefficients == (1, 0, 0, 0)


# -- catalog -------------------------------------------------------------------------

def test_catalog_rows_are_well_formed():
    rows = load_catalog()
    ids = [r["id"] for r in rows]
    assert len(ids) == len(set(ids))
    assert all(r["classification"] in CLASSIFICATIONS for r in rows)


@pytest.mark.parametrize("t", ENUM_TYPES + ["A1"])
def test_catalog_rows_appear_in_enumeration(t):
    cl = enumerate_candidates(t)
    listed = {c.hw.coefficients: c for c in cl.standard + cl.nonstandard}
    for e in catalog_entries(t):
        if cl.bound is not None and e.dimR > cl.bound:
            continue
        key = canonical_hw(e.hw).coefficients
        assert key in listed, e.id
        assert listed[key].dimR == e.dimR == real_dim(e.hw), e.id


@pytest.mark.parametrize("t,label_id", [("C3", "sp3-ext3"), ("C4", "sp4-ext4")])
def test_misprint_annotations(t, label_id):
    (e,) = [e for e in catalog_entries(t) if e.id == label_id]
    assert e.note


def test_eval_int_expr():
    assert eval_int_expr("N*(N-1)//2", {"N": 7}) == 21
    assert eval_int_expr("2**n + 1", {"n": 5}) == 33
    assert eval_int_expr("N % 2 == 0", {"N": 4}) is True
    for bad in ("__import__('os')", "N.real", "[1]", "f(1)", "M + 1"):
        with pytest.raises(ValueError):
            eval_int_expr(bad, {"N": 1})


# -- closed-form families ------------------------------------------------------------

RANKS = {"A": range(2, 13), "B": range(2, 11), "C": range(3, 11), "D": range(4, 11)}


@pytest.mark.parametrize("fam", "ABCD")
def test_exclusion_families(fam):
    rows = verify_exclusion_table(fam, RANKS[fam])
    assert rows
    for r in rows:
        assert r.formula_agrees, r.to_json()
        assert r.excluded, r.to_json()


def test_every_family_is_exercised():
    seen = {r.family_id for fam in "ABCD" for r in verify_exclusion_table(fam, RANKS[fam])}
    assert seen == {f.id for f in EXCLUSION_FAMILIES}


def test_exclusion_examples():
    a = {r.hw.type.rank: r for r in verify_exclusion_table("A", range(5, 13)) if r.family_id == "A-0200"}
    assert set(a) == set(range(5, 13))
    assert all(r.dimR > 2 * n * n + 6 * n + 4 for n, r in a.items())
    b = [r for r in verify_exclusion_table("B", range(5, 11)) if r.family_id == "B-1001"]
    assert [r.dimC for r in b] == [n * 2 ** (n + 1) for n in range(5, 11)]
    d = [r for r in verify_exclusion_table("D", range(5, 11)) if r.family_id == "D-1100"]
    assert [r.dimR for r in d] == [8 * n * (n - 1) * (n + 1) // 3 for n in range(5, 11)]


def test_a1010_meets_the_bound_at_su4():
    (r,) = [r for r in verify_exclusion_table("A", [3]) if r.family_id == "A-1010"] or [None]
    # the family starts where it is strictly over the bound; at SU(4) it is the tie (1,1,0)
    assert r is None
    assert real_dim(HighestWeight.of("A3", (1, 1, 0))) == dimension_bound("A3").bound


def test_exclusion_table_rejects_exceptional():
    with pytest.raises(NotApplicable):
        verify_exclusion_table("G", [2])
