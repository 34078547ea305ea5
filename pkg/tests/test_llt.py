from itertools import combinations

import pytest
from hypothesis import given, settings
from strategies import multiskews, strips

from lltstrip.llt import (
    BudgetExceeded,
    M_total,
    MultiskewTableau,
    SymmetryError,
    attack_pairs,
    brute_force_llt,
    default_num_vars,
    enumerate_multiskew_tableaux,
    inversions,
    kappa_rotate,
    llt_monomials,
    max_inversion_tableau,
    symmetrize,
)
from lltstrip.formula import nested_strip
from lltstrip.graph import rows_attack
from lltstrip.qschur import QPoly, SchurExpansion, parse_expansion, product_of_schurs, q
from lltstrip.sampling import random_strips
from lltstrip.shapes import HorizontalStrip, Multiskew, Row, SkewShape, conjugate_multiskew, parse_strip
from lltstrip.tableaux import Tableau
from oracles import (
    attack_pairs_oracle,
    llt_monomials_oracle,
    max_inversions_oracle,
    schur_expansion_to_monomials,
)

WORKED_STRIP = "4/0,5/2,2/0"
WORKED_EXPANSION = (
    "s[4,3,2]: q^5\ns[4,4,1]: q^5\ns[5,2,2]: q^5\ns[5,3,1]: q^4 + q^5\ns[5,4]: 2*q^4\n"
    "s[6,2,1]: 2*q^4\ns[6,3]: 2*q^3 + q^4\ns[7,1,1]: q^3\ns[7,2]: q^2 + 2*q^3\ns[8,1]: q + q^2\ns[9]: 1"
)


def ab(s: HorizontalStrip):
    return [(r.a, r.b) for r in s]


def row_tableau(r: Row, entries) -> Tableau:
    return Tableau((tuple(entries),), (r.b,))


def strip_tableau(s: HorizontalStrip, fillings) -> MultiskewTableau:
    return MultiskewTableau(tuple(row_tableau(r, f) for r, f in zip(s, fillings)))


# ---------------------------------------------------------------- statistics


class TestAttackPairs:
    def test_worked_strip_by_direct_count(self):
        # contents 0..3 / 2..4 / 0..1: pairs (1,2) -> 3, (1,3) -> 4, (2,3) -> 1
        s = parse_strip(WORKED_STRIP)
        assert attack_pairs(s) == attack_pairs_oracle(ab(s)) == 8

    def test_far_rows(self):
        assert attack_pairs(parse_strip("2/0,7/4")) == 0

    def test_single_shape(self):
        assert attack_pairs(Multiskew((SkewShape((3, 2), (1,)),))) == 0

    @given(strips(max_rows=4, max_size=4))
    def test_matches_oracle(self, s):
        assert attack_pairs(s) == attack_pairs_oracle(ab(s))


class TestInversions:
    def test_worked_tableau_T(self):
        s = parse_strip(WORKED_STRIP)
        t = strip_tableau(s, [(3, 3, 3, 3), (1, 1, 1), (2, 2)])
        rep = inversions(t)
        assert rep.total == 5
        assert t.weight() == (3, 2, 4)

    def test_worked_tableau_U(self):
        s = parse_strip(WORKED_STRIP)
        u = strip_tableau(s, [(1, 1, 2, 4), (3, 3, 4), (2, 3)])
        rep = inversions(u)
        assert rep.total == 3
        assert u.weight() == (2, 2, 3, 2)

    def test_constant_tableau(self):
        s = parse_strip(WORKED_STRIP)
        t = strip_tableau(s, [(1,) * 4, (1,) * 3, (1,) * 2])
        assert inversions(t).total == 0

    @given(strips(max_rows=3, max_size=3))
    @settings(max_examples=30)
    def test_total_is_sum_of_pairs(self, s):
        for t in enumerate_multiskew_tableaux(s, 2):
            rep = inversions(t)
            assert rep.total == sum(rep.per_pair.values())
            assert set(rep.per_pair) == set(combinations(range(1, len(s) + 1), 2))


class TestMTotal:
    def test_worked_strip(self):
        assert M_total(parse_strip(WORKED_STRIP)) == 5

    def test_non_attacking(self):
        assert M_total(parse_strip("2/0,9/6")) == 0

    def test_hall_littlewood_nested_strip(self):
        assert M_total(nested_strip((3, 2, 1))) == 4


# ---------------------------------------------------------------- brute force


class TestBruteForce:
    def test_worked_expansion(self):
        assert brute_force_llt(parse_strip(WORKED_STRIP), 3) == parse_expansion(WORKED_EXPANSION)

    def test_single_row(self):
        assert brute_force_llt(parse_strip("3/0")) == SchurExpansion.schur((3,))

    def test_two_equal_rows(self):
        expected = SchurExpansion({(4,): 1, (3, 1): q, (2, 2): q * q})
        assert brute_force_llt(parse_strip("2/0,2/0")) == expected

    @given(strips(max_rows=3, max_size=3, max_left=5))
    @settings(max_examples=40)
    def test_monomials_match_naive_enumeration(self, s):
        n = len(s)
        ours = llt_monomials(s, n)
        oracle = llt_monomials_oracle(ab(s), n)
        assert {w: p.coeffs for w, p in ours.items()} == {w: dict(c) for w, c in oracle.items()}

    @given(strips(max_rows=3, max_size=3, max_left=5))
    @settings(max_examples=30)
    def test_schur_expansion_matches_oracle_kostka(self, s):
        n = len(s) + 1  # one more variable than needed: no information lost
        e = brute_force_llt(s, n)
        terms = {lam: p.coeffs for lam, p in e.terms.items()}
        mono = schur_expansion_to_monomials(terms, n)
        oracle = llt_monomials_oracle(ab(s), n)
        sorted_oracle = {w: dict(c) for w, c in oracle.items() if list(w) == sorted(w, reverse=True)}
        trimmed = {tuple(x for x in w if x): c for w, c in sorted_oracle.items()}
        assert mono == trimmed

    def test_row_count_variables_suffice(self):
        for s in random_strips(5, 15, max_rows=3, max_cells=3):
            assert brute_force_llt(s) == brute_force_llt(s, len(s) + 2)

    def test_general_multiskew(self):
        m = Multiskew((SkewShape((2, 1)), SkewShape((1,))))
        e = brute_force_llt(m)
        assert e.at_one() == product_of_schurs([(2, 1), (1,)])
        assert e.q_degree == M_total(m)

    def test_budget_guard(self):
        with pytest.raises(BudgetExceeded):
            brute_force_llt(parse_strip(WORKED_STRIP), 3, budget=10)

    def test_symmetry_violation_detected(self):
        with pytest.raises(SymmetryError):
            symmetrize({(2, 0): QPoly({0: 1}), (0, 2): QPoly({1: 1})}, 2)
        with pytest.raises(SymmetryError):
            symmetrize({(2, 0): QPoly({0: 1})}, 2)


# ---------------------------------------------------------------- invariants


def exhaustive_max(s: HorizontalStrip) -> int:
    return max_inversions_oracle(ab(s), len(s))


class TestMaxInversion:
    def test_worked_strip_gives_T(self):
        t = max_inversion_tableau(parse_strip(WORKED_STRIP))
        assert [p.rows[0] for p in t.parts] == [(3, 3, 3, 3), (1, 1, 1), (2, 2)]
        assert inversions(t).total == 5

    def test_single_row(self):
        t = max_inversion_tableau(parse_strip("4/1"))
        assert t.parts[0].rows[0] == (1, 1, 1)
        assert inversions(t).total == 0

    def test_random_strips_attain_exhaustive_maximum(self):
        for s in random_strips(11, 30, max_rows=4, max_cells=4):
            t = max_inversion_tableau(s)
            assert all(p.is_semistandard() for p in t.parts)
            assert inversions(t).total == M_total(s) == exhaustive_max(s)

    @given(strips(max_rows=3, max_size=3))
    @settings(max_examples=30)
    def test_no_tableau_exceeds_bound(self, s):
        bound = M_total(s)
        assert all(inversions(t).total <= bound for t in enumerate_multiskew_tableaux(s, 2))

    @given(multiskews(max_shapes=2, max_cells=3))
    @settings(max_examples=25)
    def test_general_shapes_attain_top_degree(self, m):
        t = max_inversion_tableau(m)
        assert all(p.is_semistandard() for p in t.parts)
        assert inversions(t).total == M_total(m) == brute_force_llt(m).q_degree


class TestKappa:
    def test_worked_rotation(self):
        assert kappa_rotate(parse_strip(WORKED_STRIP)) == parse_strip("3/1,4/0,5/2")

    def test_full_cycle_shifts_every_row(self):
        s = parse_strip(WORKED_STRIP)
        r = s
        for _ in range(len(s)):
            r = kappa_rotate(r)
        assert r == HorizontalStrip(tuple(row.shift() for row in s))

    def test_expansion_invariant_on_random_strips(self):
        for s in random_strips(12, 20, max_rows=4, max_cells=3):
            assert brute_force_llt(kappa_rotate(s)) == brute_force_llt(s)

    def test_multiskew_rotation(self):
        m = Multiskew((SkewShape((2, 1)), SkewShape((2,), (1,))))
        k = kappa_rotate(m)
        assert k.shapes[0] == SkewShape((3,), (2,)) and k.shapes[1] == SkewShape((2, 1))
        assert brute_force_llt(k) == brute_force_llt(m)


class TestSymmetries:
    def test_q_equals_one_is_product(self):
        for s in random_strips(13, 25, max_rows=4, max_cells=3):
            assert brute_force_llt(s).at_one() == product_of_schurs([(r.size,) for r in s])

    def test_top_degree_is_M_total(self):
        for s in random_strips(14, 25, max_rows=4, max_cells=3):
            assert brute_force_llt(s).q_degree == M_total(s)

    def test_factorization_over_non_attacking_groups(self):
        checked = 0
        for s in random_strips(15, 200, max_rows=4, max_cells=3, min_rows=2):
            n = len(s)
            # connected components of the attack relation, by repeated relabelling
            comp = list(range(n))
            for _ in range(n):
                for i, j in combinations(range(n), 2):
                    if rows_attack(s[i], s[j]) or rows_attack(s[j], s[i]):
                        comp[i] = comp[j] = min(comp[i], comp[j])
            groups = {}
            for i in range(n):
                groups.setdefault(comp[i], []).append(s[i])
            if len(groups) < 2:
                continue
            checked += 1
            product = SchurExpansion.schur(())
            for rows in groups.values():
                product = product * brute_force_llt(HorizontalStrip(tuple(rows)), n)
            assert brute_force_llt(s) == product
        assert checked >= 10

    def test_omega_min_degree(self):
        # the conjugate tuple needs num_vars = cell count: keep it tiny
        for s in random_strips(16, 15, max_rows=3, max_cells=2):
            g = brute_force_llt(s)
            conj = conjugate_multiskew(s)
            assert g.min_q_degree == attack_pairs(s) - M_total(conj)

    def test_omega_duality(self):
        # G of the conjugate tuple is q^I * omega G(q^-1)
        for s in random_strips(17, 10, max_rows=3, max_cells=2):
            g = brute_force_llt(s, default_num_vars(conjugate_multiskew(s)))
            gc = brute_force_llt(conjugate_multiskew(s))
            total = attack_pairs(s)
            flipped = SchurExpansion(
                {lam: QPoly({total - e: c for e, c in p.coeffs.items()}) for lam, p in g.omega().terms.items()}
            )
            assert gc == flipped
