#!/usr/bin/env python3
"""
Tests for the subalgebra k: generators, closure, standard basis, Serre-type
relations, the adjoint-action identities and the four equivalent conditions
"""
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cartan import DiagramAutomorphism, from_type_string
from src.chevalley import build
from src.decorations import enumerate_cd, from_labels, gamma_violating, in_gamma, is_gsat, make_decoration, ones
from src.errors import InputError
from src.k_subalgebra import (appendix_oracle, build_k, dim_check, dimension_formula, j_words,
                              lowest_weight_check, main_theorem_report, p_coeff, serre_battery,
                              serre_degree, serre_eval, standard_basis, word_label)

SP4_LABELS = ["e_2", "h_2", "b_1", "b_2", "b_(1,2)", "b_(1,1,2)"]
G2_LABELS = ["e_1", "h_1", "b_1", "b_2", "b_(2,1)", "b_(2,2,1)", "b_(2,2,2,1)", "b_(1,2,2,2,1)"]


def _setup(name, X, tau_pairs=None):
    A = from_type_string(name)
    return build(A), from_labels(A, X, tau_pairs)


def test_p_coefficients():
    assert p_coeff(2, 1, 2) == -1
    assert p_coeff(3, 1, 3) == -4
    assert p_coeff(4, 1, 4) == -10
    assert p_coeff(4, 2, 4) == -9
    assert p_coeff(4, 3, 4) == 0


def test_p_coefficients_negative():
    for M in range(1, 5):
        for m in range(0, M + 1):
            for r in range(0, m // 2 + 1):
                assert p_coeff(M, r, m) < 0, (M, r, m)


def test_serre_degree():
    G2 = from_type_string("G2")
    assert serre_degree(G2, 1, 0) == 4
    assert serre_degree(G2, 0, 1) == 2


def test_word_labels():
    A = from_type_string("C2")
    assert word_label(A, (0,)) == "b_1"
    assert word_label(A, (0, 0, 1)) == "b_(1,1,2)"
    assert word_label(A, (1,), "e") == "e_2"


def test_onsager_dimension():
    alg, dec = _setup("A1", [])
    assert build_k(alg, dec).dimension == 1


def test_sp4_basis():
    alg, dec = _setup("C2", [2])
    k = build_k(alg, dec)
    assert k.dimension == 6
    assert k.is_subalgebra
    std = standard_basis(alg, dec, k=k)
    assert std.is_basis
    assert std.labels == SP4_LABELS
    assert dim_check(alg, dec, k)


def test_sp4_relation():
    alg, dec = _setup("C2", [2])
    std = standard_basis(alg, dec)
    vectors = dict(zip(std.labels, std.vectors))
    assert alg.bracket(vectors["h_2"], vectors["b_1"]) == vectors["b_1"]


def test_g2_basis():
    alg, dec = _setup("G2", [1])
    k = build_k(alg, dec)
    assert k.dimension == 8
    assert standard_basis(alg, dec, k=k).labels == G2_LABELS


def test_g2_serre_coefficient():
    alg, dec = _setup("G2", [1])
    for g in (Fraction(1), Fraction(3), Fraction(-2, 5)):
        report = serre_eval(alg, dec, {1: g}, 1, 0)
        assert report.M == 4
        assert report.case == "e_j"
        assert report.rhs == {alg.e((1, 0)): -18 * g ** 2}
        assert report.ok


def test_g2_relation():
    alg, dec = _setup("G2", [1])
    std = standard_basis(alg, dec)
    vectors = dict(zip(std.labels, std.vectors))
    assert alg.bracket(vectors["h_1"], vectors["b_2"]) == vectors["b_2"]


def test_serre_battery_zero_residuals():
    for name, X, pairs in [("C2", [2], None), ("G2", [1], None), ("G2", [2], None), ("B3", [2, 3], None),
                           ("A3", [2], [(1, 3), (3, 1)]), ("A2", [], None), ("B2", [1], None)]:
        alg, dec = _setup(name, X, pairs)
        reports = serre_battery(alg, dec)
        assert all(r.ok for r in reports), (name, X, [r.to_dict(alg.A) for r in reports if not r.ok])


def test_serre_rejects_equal_nodes():
    alg, dec = _setup("A2", [])
    try:
        serre_eval(alg, dec, ones(dec), 0, 0)
        assert False, "expected InputError"
    except InputError:
        pass


def test_dimension_formula_on_gsat():
    for name in ("A2", "B2", "G2", "A3", "C3", "A1xA1"):
        A = from_type_string(name)
        alg = build(A)
        for dec in enumerate_cd(A):
            if is_gsat(dec):
                k = build_k(alg, dec)
                assert k.dimension == dimension_formula(alg, dec), dec.describe()
                assert standard_basis(alg, dec, k=k).is_basis, dec.describe()


def test_lowest_weight():
    for name, X in [("C2", [2]), ("G2", [1]), ("B3", [1, 3])]:
        alg, dec = _setup(name, X)
        assert lowest_weight_check(alg, dec)


def test_j_words_cover_positive_roots():
    alg, dec = _setup("B3", [2])
    words = j_words(alg, dec)
    assert set(words) == set(alg.positive)
    for xi, w in words.items():
        assert len(w) == sum(xi)


def test_main_theorem_negative_control():
    alg, dec = _setup("A2", [2])
    report = main_theorem_report(alg, dec)
    assert report.conditions == {"i": False, "ii": False, "iii": False, "iv": False}
    assert report.agree
    assert report.witness["form"] == "2h_i+h_j"


def test_main_theorem_gamma_witness():
    A = from_type_string("A1xA1")
    alg = build(A)
    dec = make_decoration(A, [], DiagramAutomorphism((1, 0)))
    gamma = {0: Fraction(1), 1: Fraction(2)}
    assert not in_gamma(dec, gamma)
    report = main_theorem_report(alg, dec, gamma)
    assert not any(report.conditions.values())
    assert report.witness["form"] in ("2h_i+h_j", "gamma_j h_i - gamma_i h_j")


def test_main_theorem_battery():
    for name in ("A2", "B2", "G2", "A3", "B3", "A1xA1"):
        A = from_type_string(name)
        alg = build(A)
        for dec in enumerate_cd(A):
            report = main_theorem_report(alg, dec, strict=False)
            assert report.agree, (dec.describe(), report.conditions)
            violating = gamma_violating(dec)
            if violating is not None:
                assert main_theorem_report(alg, dec, violating, strict=False).agree


def test_oracle_white_black_branches():
    alg, dec = _setup("A2", [2])
    gamma = {0: Fraction(3)}
    cases = []
    for m in range(1, 5):
        result = appendix_oracle(alg, dec, gamma, 0, 1, m)
        assert result.identity == "white_i_black_j"
        assert result.ok, m
        cases.append(result.case)
    assert cases == ["otherwise", "cartan", "f_i", "e_j"]


def test_oracle_g2_top_power():
    alg, dec = _setup("G2", [1])
    result = appendix_oracle(alg, dec, {1: Fraction(2)}, 1, 0, 4)
    assert result.case == "e_j" and result.ok


def test_oracle_g2_third_power_off_unit_gamma():
    alg, dec = _setup("G2", [1])
    for g in (Fraction(2), Fraction(-3, 7)):
        result = appendix_oracle(alg, dec, {1: g}, 1, 0, 3)
        assert result.case == "f_i", g
        assert result.residual == {}, (g, result.residual)


def test_oracle_swap_branches():
    A = from_type_string("A1xA1")
    alg = build(A)
    dec = make_decoration(A, [], DiagramAutomorphism((1, 0)))
    gamma = {0: Fraction(2), 1: Fraction(-5)}
    assert appendix_oracle(alg, dec, gamma, 0, 1, 1).case == "cartan"
    assert appendix_oracle(alg, dec, gamma, 0, 1, 2).case == "f_i_e_j"
    for m in (1, 2):
        assert appendix_oracle(alg, dec, gamma, 0, 1, m).ok


def test_oracle_p_sum_branch():
    for name in ("A1xA1", "A2"):
        A = from_type_string(name)
        alg = build(A)
        dec = make_decoration(A, [])
        gamma = {i: Fraction(i + 2) for i in A.index_set}
        for m in (1, 2):
            result = appendix_oracle(alg, dec, gamma, 0, 1, m)
            assert result.case == "p_sum" and result.ok, (name, m)


def test_oracle_black_nodes():
    A = from_type_string("A3")
    alg = build(A)
    dec = from_labels(A, [1, 2, 3], [(1, 3), (3, 1)])
    for i, j in [(0, 1), (1, 0), (1, 2), (2, 1)]:
        for m in (1, 2):
            result = appendix_oracle(alg, dec, {}, i, j, m)
            assert result.identity == "black_i" and result.case == "black_j" and result.ok, (i, j, m)
    alg, dec = _setup("A3", [2])
    gamma = {0: Fraction(7), 2: Fraction(-1, 3)}
    for j in (0, 2):
        for m in (1, 2):
            result = appendix_oracle(alg, dec, gamma, 1, j, m)
            assert result.case == "white_j" and result.ok, (j, m)


def test_oracle_b2_n_plus_x():
    alg, dec = _setup("B2", [2])
    result = appendix_oracle(alg, dec, {0: Fraction(1)}, 0, 1, 2)
    assert result.case == "n_plus_X" and result.ok


if __name__ == "__main__":
    print("Running subalgebra tests...")
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"✓ {name}")
    print("\n✓ All subalgebra tests passed!")
