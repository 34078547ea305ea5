import random
from collections import Counter

import pytest
from hypothesis import given, settings
from strategies import partitions

from lltstrip.formula import (
    FormalSum,
    PreconditionError,
    TriangleError,
    apply_commute_swap,
    apply_inductive_relation,
    apply_merge_relation,
    cocharge_pi,
    find_inductive_pair,
    formula_expansion,
    formula_from_graph,
    hall_littlewood_expansion,
    inductive_formal_sum,
    is_labeled_path,
    merge_identity,
    nested_strip,
    normalize_for_induction,
    path_expansion,
    swap_pair,
)
from lltstrip.graph import GraphError, WeightedGraph, build_graph, is_triangle_free
from lltstrip.llt import M_total, brute_force_llt
from lltstrip.qschur import QPoly, SchurExpansion, q
from lltstrip.sampling import embed_pair, random_pair, random_strips
from lltstrip.shapes import HorizontalStrip, Row, ShapeError, parse_strip
from lltstrip.tableaux import enumerate_ssyt_weight, parse_tableau
from oracles import cocharge_oracle, partitions_of, straight_ssyt

TREE_STRIP = "6/5,9/6,7/2,4/0"
TRIANGLE_STRIP = "4/0,5/2,2/0"
TABLEAUX_733 = [
    "1,1,1,1,2,3,3;3,3,3;4,4,4",
    "1,1,1,1,3,3,3;2,3,3;4,4,4",
    "1,1,1,1,3,3,4;2,3,3;3,4,4",
]
ONE_MINUS_Q = QPoly({0: 1, 1: -1})


def two_row_oracle(a: int, b: int, m: int) -> SchurExpansion:
    """sum_k q^min(M, k) s_(a+b-k, k) for a >= b."""
    a, b = max(a, b), min(a, b)
    return SchurExpansion({tuple(p for p in (a + b - k, k) if p): QPoly.monomial(min(m, k)) for k in range(b + 1)})


def hall_littlewood_oracle(lam) -> SchurExpansion:
    """Straight tableaux of weight lam by brute-force filling, cocharge via the charge of the reading word."""
    n = sum(lam)
    target = Counter({k + 1: m for k, m in enumerate(lam)})
    terms = {}
    for shape in partitions_of(n):
        for rows in straight_ssyt(shape, len(lam)):
            if Counter(x for r in rows for x in r) == target:
                terms[shape] = terms.get(shape, QPoly()) + QPoly.monomial(cocharge_oracle(rows))
    return SchurExpansion(terms)


class TestCochargePi:
    def test_three_tableaux(self):
        g = build_graph(parse_strip(TREE_STRIP))
        assert [cocharge_pi(parse_tableau(t), g) for t in TABLEAUX_733] == [5, 5, 6]

    def test_edgeless(self):
        g = WeightedGraph((4, 1, 5, 3))
        for t in TABLEAUX_733:
            assert cocharge_pi(parse_tableau(t), g) == 0

    def test_weight_mismatch(self):
        g = WeightedGraph((4, 1, 5))
        with pytest.raises(GraphError):
            cocharge_pi(parse_tableau(TABLEAUX_733[0]), g)

    def test_max_equals_total_edge_weight(self):
        for s in random_strips(31, 60, max_rows=4, max_cells=3):
            g = build_graph(s)
            if is_triangle_free(g):
                best = max(cocharge_pi(t, g) for t in enumerate_ssyt_weight(g.vertex_weights))
                assert best == g.total_edge_weight


class TestFormula:
    def test_coefficient_of_733(self):
        e = formula_expansion(parse_strip(TREE_STRIP))
        assert e[(7, 3, 3)] == QPoly({5: 2, 6: 1})

    def test_tree_strip_matches_brute_force(self):
        s = parse_strip(TREE_STRIP)
        assert formula_expansion(s) == brute_force_llt(s, 4)

    def test_triangle_refused(self):
        with pytest.raises(TriangleError):
            formula_expansion(parse_strip(TRIANGLE_STRIP))

    @pytest.mark.parametrize("k", [1, 3, 6])
    def test_single_row(self, k):
        assert formula_expansion(HorizontalStrip((Row(k, 0),))) == SchurExpansion.schur((k,))

    def test_random_triangle_free_strips(self):
        checked = 0
        for s in random_strips(32, 120, max_rows=4, max_cells=4):
            if not is_triangle_free(build_graph(s)):
                continue
            e = formula_expansion(s)
            assert e.is_schur_positive()
            assert e == brute_force_llt(s)
            checked += 1
        assert checked > 60

    def test_formula_from_synthetic_graph(self):
        g = WeightedGraph((2, 2), {(1, 2): 1})
        assert formula_from_graph(g) == two_row_oracle(2, 2, 1)


class TestPath:
    def test_two_equal_rows(self):
        expected = SchurExpansion({(4,): 1, (3, 1): q, (2, 2): q * q})
        assert path_expansion(parse_strip("2/0,2/0")) == expected

    def test_single_row(self):
        assert path_expansion(parse_strip("5/2")) == SchurExpansion.schur((3,))

    def test_two_row_formula_exhaustive(self):
        checked = 0
        for a1 in range(1, 5):
            for b2 in range(0, 6):
                for a2 in range(b2 + 1, b2 + 5):
                    s = HorizontalStrip((Row(a1, 0), Row(a2, b2)))
                    g = build_graph(s)
                    if not g.edges:
                        continue
                    (m,) = g.edges.values()
                    expected = two_row_oracle(s[0].size, s[1].size, m)
                    assert path_expansion(s) == formula_expansion(s) == brute_force_llt(s) == expected
                    checked += 1
        assert checked >= 40

    def test_path_equals_formula_on_random_paths(self):
        checked = 0
        for s in random_strips(33, 300, max_rows=4, max_cells=3, min_rows=3):
            if is_labeled_path(build_graph(s)):
                assert path_expansion(s) == formula_expansion(s)
                checked += 1
        assert checked >= 5

    def test_not_a_path(self):
        with pytest.raises(GraphError):
            path_expansion(parse_strip(TREE_STRIP))


class TestHallLittlewood:
    def test_21(self):
        assert hall_littlewood_expansion((2, 1)) == SchurExpansion({(3,): 1, (2, 1): q})

    @pytest.mark.parametrize("n", [1, 4, 7])
    def test_one_row(self, n):
        assert hall_littlewood_expansion((n,)) == SchurExpansion.schur((n,))

    def test_top_degree_321(self):
        assert hall_littlewood_expansion((3, 2, 1)).q_degree == 4
        assert M_total(nested_strip((3, 2, 1))) == 4

    @given(partitions(max_size=6).filter(bool))
    @settings(max_examples=25)
    def test_against_charge_oracle(self, lam):
        assert hall_littlewood_expansion(lam) == hall_littlewood_oracle(lam)

    @given(partitions(max_size=6).filter(bool))
    @settings(max_examples=25)
    def test_equals_nested_strip(self, lam):
        assert hall_littlewood_expansion(lam) == brute_force_llt(nested_strip(lam))

    def test_nested_strip(self):
        assert nested_strip((3, 2, 2)) == parse_strip("3/0,2/0,2/0")


# ---------------------------------------------------------------- rewrite relations


class TestFormalSum:
    def test_zero_terms_dropped(self):
        s = parse_strip("2/0")
        f = FormalSum.of([(s, 1), (s, -1)])
        assert f.terms == {}

    def test_sizes_must_match(self):
        with pytest.raises(ShapeError):
            FormalSum({parse_strip("2/0"): QPoly({0: 1}), parse_strip("3/0"): QPoly({0: 1})})

    def test_arithmetic_and_expand(self):
        a, b = parse_strip("2/0,2/0"), parse_strip("4/0")
        f = FormalSum.of([(a, 1)]) - FormalSum.of([(b, 1)])
        assert f.expand() == SchurExpansion({(3, 1): q, (2, 2): q * q})
        assert f.scale(2).expand() == f.expand() * 2

    def test_append(self):
        f = FormalSum.of([(parse_strip("2/0"), 1)]).append([Row(1, 0)], prepend=[Row(3, 2)])
        assert list(f.terms) == [parse_strip("3/2,2/0,1/0")]


class TestMerge:
    def test_isolated(self):
        s = parse_strip("2/0,4/2")
        lhs, rhs = merge_identity(s, 0)
        assert lhs.expand() == rhs.expand()
        # q G(R,R') + G(R u R') = q G(R u R') + G(R', R)
        assert brute_force_llt(s) * q + brute_force_llt(parse_strip("4/0"), 2) == (
            brute_force_llt(parse_strip("4/0"), 2) * q + brute_force_llt(parse_strip("4/2,2/0"))
        )

    def test_at_q_equals_one(self):
        lhs, rhs = merge_identity(parse_strip("2/0,4/2"), 0)
        assert lhs.expand().at_one() == rhs.expand().at_one()

    def test_with_spectator(self):
        lhs, rhs = merge_identity(parse_strip("2/0,4/2,1/0"), 0)
        assert lhs.expand() == rhs.expand()

    def test_formal_sum_equals_swapped(self):
        s = parse_strip("2/0,4/2")
        assert apply_merge_relation(s, 0).expand() == brute_force_llt(swap_pair(s, 0))

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            apply_merge_relation(parse_strip("2/0,5/3"), 0)
        with pytest.raises(PreconditionError):
            merge_identity(parse_strip("2/0"), 0)

    def test_random_with_spectators(self):
        rng = random.Random(34)
        for _ in range(25):
            p = random_pair(rng, "merge", max_cells=3, window=5)
            s, k = embed_pair(rng, p, rng.randint(0, 2), max_cells=2, window=6)
            lhs, rhs = merge_identity(s, k)
            n = len(s)
            assert lhs.expand(n) == rhs.expand(n)
            assert apply_merge_relation(s, k).expand(n) == brute_force_llt(swap_pair(s, k), n)


class TestCommute:
    def test_nested(self):
        s = parse_strip("5/0,3/1")
        assert brute_force_llt(apply_commute_swap(s, 0)) == brute_force_llt(s)

    def test_separated(self):
        s = parse_strip("2/0,9/6")
        t = apply_commute_swap(s, 0)
        assert t == parse_strip("9/6,2/0") and brute_force_llt(t) == brute_force_llt(s)

    def test_non_commuting_refused(self):
        with pytest.raises(PreconditionError):
            apply_commute_swap(parse_strip("4/0,5/2"), 0)

    def test_random_with_spectators(self):
        rng = random.Random(35)
        for _ in range(25):
            p = random_pair(rng, "commute", max_cells=3, window=5)
            s, k = embed_pair(rng, p, rng.randint(0, 2), max_cells=2, window=6)
            assert brute_force_llt(apply_commute_swap(s, k)) == brute_force_llt(s)


class TestInductive:
    def test_isolated(self):
        s = parse_strip("3/1,2/0")
        first, second = apply_inductive_relation(s, 0)
        assert first == parse_strip("2/0,3/1") and second == parse_strip("3/0,2/1")
        assert brute_force_llt(s) == brute_force_llt(first) * q + brute_force_llt(second) * ONE_MINUS_Q

    def test_at_q_equals_one(self):
        s = parse_strip("3/1,2/0")
        first, _ = apply_inductive_relation(s, 0)
        assert brute_force_llt(s).at_one() == brute_force_llt(first).at_one()

    def test_empty_intersection_dropped(self):
        # contents {2} and {0, 1}: adjacent, no common content
        s = parse_strip("3/2,2/0")
        _, second = apply_inductive_relation(s, 0)
        assert second == parse_strip("3/0")
        assert brute_force_llt(s) == inductive_formal_sum(s, 0).expand(2)

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            apply_inductive_relation(parse_strip("5/0,3/1"), 0)  # commuting
        with pytest.raises(PreconditionError):
            apply_inductive_relation(parse_strip("4/0,5/2"), 0)  # wrong order

    def test_worked_reduction(self):
        s = parse_strip(TREE_STRIP)
        found = normalize_for_induction(s)
        assert found is not None
        strip, k = found
        assert strip == s and k == 2 and find_inductive_pair(s) == 2
        first, second = apply_inductive_relation(strip, k)
        assert first == parse_strip("6/5,9/6,4/0,7/2")
        assert second == parse_strip("6/5,9/6,7/0,4/2")
        g1, g2 = build_graph(first), build_graph(second)
        # the edge of weight 3 drops to 2; the merged and intersected rows carry weights 7 and 2
        assert g1.vertex_weights == (4, 1, 5, 3) and g1.edges == {(1, 3): 2, (2, 3): 1, (3, 4): 2}
        assert g2.vertex_weights == (2, 1, 7, 3) and g2.m(1, 3) == 2
        e = brute_force_llt(s, 4)
        assert e == brute_force_llt(first, 4) * q + brute_force_llt(second, 4) * ONE_MINUS_Q

    def test_random_with_spectators(self):
        rng = random.Random(36)
        for _ in range(25):
            p = random_pair(rng, "inductive", max_cells=3, window=5)
            s, k = embed_pair(rng, p, rng.randint(0, 2), max_cells=2, window=6)
            n = len(s)
            assert brute_force_llt(s, n) == inductive_formal_sum(s, k).expand(n)


class TestNormalization:
    def test_single_row_has_no_pair(self):
        assert normalize_for_induction(parse_strip("5/0")) is None

    def test_rotation_turns_commuting_rows_staggered(self):
        # 5/0 and 3/1 commute, but swaps and rotations reach a staggered pair
        s = parse_strip("5/0,3/1")
        strip, k = normalize_for_induction(s)
        assert brute_force_llt(s) == inductive_formal_sum(strip, k).expand(2)

    def test_rotation_exposes_pair(self):
        # (4/0, 5/2) has l(R') > l(R); a rotation brings 5/2 to the front shifted: (6/3, 4/0)
        strip, k = normalize_for_induction(parse_strip("4/0,5/2"))
        r, rp = strip[k], strip[k + 1]
        assert rp.left < r.left
        assert brute_force_llt(strip) == brute_force_llt(parse_strip("4/0,5/2"))

    def test_random_strips_normalize_to_equivalent(self):
        for s in random_strips(37, 30, max_rows=3, max_cells=3, min_rows=2):
            found = normalize_for_induction(s)
            if found is None:
                continue
            strip, k = found
            assert brute_force_llt(strip) == brute_force_llt(s)
            assert brute_force_llt(s) == inductive_formal_sum(strip, k).expand(len(s))
