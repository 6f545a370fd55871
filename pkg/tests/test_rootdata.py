from fractions import Fraction

import pytest

from orbitbound.rootdata import (
    InvalidTypeError,
    SimpleType,
    apply_automorphism,
    catalog_types,
    center_elements,
    diagram_automorphisms,
    dot,
    root_system,
)

ALL_TYPES = catalog_types(8) + [SimpleType("C", 2), SimpleType("D", 3)]
IDS = [str(t) for t in ALL_TYPES]

# standard reference tables, typed in independently of the engine
GROUP_DIM = {"A": lambda n: n * (n + 2), "B": lambda n: n * (2 * n + 1), "C": lambda n: n * (2 * n + 1),
             "D": lambda n: n * (2 * n - 1), "G": lambda n: 14, "F": lambda n: 52,
             "E": lambda n: {6: 78, 7: 133, 8: 248}[n]}
COXETER = {"A": lambda n: n + 1, "B": lambda n: 2 * n, "C": lambda n: 2 * n, "D": lambda n: 2 * n - 2,
           "G": lambda n: 6, "F": lambda n: 12, "E": lambda n: {6: 12, 7: 18, 8: 30}[n]}
CENTER = {"A": lambda n: n + 1, "B": lambda n: 2, "C": lambda n: 2, "D": lambda n: 4,
          "G": lambda n: 1, "F": lambda n: 1, "E": lambda n: {6: 3, 7: 2, 8: 1}[n]}


def automorphism_count(t: SimpleType) -> int:
    if t.family == "A":
        return 1 if t.rank == 1 else 2
    if t.family == "D":
        return 6 if t.rank == 4 else 2
    if t == SimpleType("E", 6):
        return 2
    return 1


def vsum(vs, n):
    out = [Fraction(0)] * n
    for v in vs:
        out = [a + b for a, b in zip(out, v)]
    return tuple(out)


@pytest.mark.parametrize("t", ALL_TYPES, ids=IDS)
class TestInvariants:
    def test_highest_root_from_marks(self, t):
        rs = root_system(t)
        combo = vsum([[m * x for x in a] for m, a in zip(rs.marks, rs.simple_roots)], rs.ambient_dim)
        assert combo == tuple(rs.highest_root)

    def test_positive_root_count(self, t):
        rs = root_system(t)
        assert len(rs.positive_roots) == (GROUP_DIM[t.family](t.rank) - t.rank) // 2

    def test_fundamental_weights_dual_to_coroots(self, t):
        rs = root_system(t)
        for i, lam in enumerate(rs.fundamental_weights):
            for j, c in enumerate(rs.simple_coroots):
                assert dot(lam, c) == (1 if i == j else 0)

    def test_positive_roots_are_nonnegative_integer_combinations(self, t):
        rs = root_system(t)
        for coeffs, root in zip(rs.positive_root_coeffs, rs.positive_roots):
            assert all(isinstance(c, int) and c >= 0 for c in coeffs)
            combo = vsum([[c * x for x in a] for c, a in zip(coeffs, rs.simple_roots)], rs.ambient_dim)
            assert combo == tuple(root)

    def test_rho_two_ways(self, t):
        rs = root_system(t)
        half_sum = tuple(x / 2 for x in vsum(rs.positive_roots, rs.ambient_dim))
        assert half_sum == tuple(rs.weyl_vector)
        assert vsum(rs.fundamental_weights, rs.ambient_dim) == tuple(rs.weyl_vector)

    def test_simple_reflections_permute_positive_roots(self, t):
        rs = root_system(t)
        pos = set(map(tuple, rs.positive_roots))
        for a, ac in zip(rs.simple_roots, rs.simple_coroots):
            for b in pos:
                if b == tuple(a):
                    continue
                k = dot(b, ac)
                assert tuple(x - k * y for x, y in zip(b, a)) in pos

    def test_long_roots_have_norm_two(self, t):
        rs = root_system(t)
        assert max(rs.norm2(a) for a in rs.positive_roots) == 2
        assert rs.norm2(rs.highest_root) == 2

    def test_coxeter_number(self, t):
        rs = root_system(t)
        assert 1 + sum(rs.marks) == COXETER[t.family](t.rank) == t.coxeter_number

    def test_center(self, t):
        rs = root_system(t)
        cs = center_elements(rs)
        assert len(cs) == CENTER[t.family](t.rank)
        for z in cs:
            for a in rs.roots():
                assert dot(a, z.coweight).denominator == 1
            # order * c lies in the coroot lattice
            xi = rs.coroot_coords(z.coweight)
            assert all((z.order * x).denominator == 1 for x in xi)

    def test_diagram_automorphisms(self, t):
        rs = root_system(t)
        auts = diagram_automorphisms(rs)
        assert len(auts) == automorphism_count(t)
        for p in auts:
            for i in range(t.rank):
                for j in range(t.rank):
                    assert rs.cartan[p[i]][p[j]] == rs.cartan[i][j]


def test_b3_highest_root_and_marks():
    rs = root_system("B3")
    assert rs.marks == (1, 2, 2)
    assert tuple(rs.highest_root) == (1, 1, 0)


def test_d7_marks():
    rs = root_system("D7")
    assert rs.marks == (1, 2, 2, 2, 2, 1, 1)
    assert tuple(rs.highest_root) == (1, 1, 0, 0, 0, 0, 0)


def test_a1():
    rs = root_system("A1")
    assert len(rs.positive_roots) == 1
    a = rs.positive_roots[0]
    assert rs.norm2(a) == 2
    assert tuple(rs.fundamental_weights[0]) == tuple(x / 2 for x in a)


def test_center_examples():
    assert len(center_elements(root_system("B5"))) == 2
    d7 = center_elements(root_system("D7"))
    assert sorted(z.order for z in d7) == [1, 2, 4, 4]
    assert len(center_elements(root_system("G2"))) == 1


def test_automorphism_examples():
    assert len(diagram_automorphisms(root_system("A3"))) == 2
    assert len(diagram_automorphisms(root_system("D4"))) == 6
    assert len(diagram_automorphisms(root_system("E8"))) == 1
    assert apply_automorphism((2, 1, 0), (1, 0, 0)) == (0, 0, 1)


def test_d3_is_flagged():
    assert SimpleType("D", 3).flagged
    assert not SimpleType("D", 4).flagged


@pytest.mark.parametrize("text", ["A0", "B1", "C1", "D2", "G3", "F2", "E5", "E9", "H3", "", "B", "3B"])
def test_invalid_types_rejected(text):
    with pytest.raises(InvalidTypeError) as e:
        root_system(text)
    assert e.value.code in {"invalid-rank", "invalid-family", "invalid-syntax"}


def test_parse_forms():
    assert SimpleType.parse("b_3") == SimpleType("B", 3)
    assert SimpleType.parse(" E8 ") == SimpleType("E", 8)


def test_serialization_is_canonical():
    doc = root_system("G2").to_json()
    assert doc["type"] == "G2"
    assert doc["marks"] == [3, 2] or doc["marks"] == [2, 3]
    for v in doc["positive_roots"]:
        for x in v:
            assert str(Fraction(x)) == x
    assert root_system("G2").to_json() == doc
