#!/usr/bin/env python3
"""
Tests for the derived subalgebra, the weak Satake filtration, the center,
the Killing form and the Onsager case
"""
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cartan import DiagramAutomorphism, components, from_type_string
from src.chevalley import build
from src.decorations import ClassLabel, classify, enumerate_cd, from_labels, make_decoration, weak_nodes
from src.errors import InputError
from src.k_structure import (bracket_table, center, center_conjecture_evidence, derived_subalgebra,
                             kprime_basis, kprime_check, onsager_check, onsager_rescaling_check,
                             reductivity_report, weak_node, weak_structure_report)
from src.k_subalgebra import build_k, standard_basis


def _setup(name, X, tau_pairs=None):
    A = from_type_string(name)
    return build(A), from_labels(A, X, tau_pairs)


def test_sp4_is_perfect():
    alg, dec = _setup("C2", [2])
    report = kprime_check(alg, dec)
    assert report["ok"]
    assert report["codimension"] == 0
    assert report["kprime_dimension"] == 6


def test_onsager_codimension_one():
    alg, dec = _setup("A1", [])
    report = kprime_check(alg, dec)
    assert report["ok"] and report["codimension"] == 1
    assert derived_subalgebra(alg, build_k(alg, dec)).dimension == 0
    assert kprime_basis(alg, dec).dimension == 0


def test_kprime_on_gsat_decorations():
    for name in ("A2", "A3", "B2", "C3", "G2", "A1xA1"):
        A = from_type_string(name)
        alg = build(A)
        for dec in enumerate_cd(A):
            if classify(dec) != ClassLabel.COMPATIBLE_ONLY:
                report = kprime_check(alg, dec)
                assert report["ok"], (dec.describe(), report)
                if len(components(A)) == 1:
                    assert report["expected_codimension"] <= 1, dec.describe()


def test_kprime_basis_spans_derived():
    A = from_type_string("A2")
    alg = build(A)
    dec = make_decoration(A, [], DiagramAutomorphism((1, 0)))
    kp = derived_subalgebra(alg, build_k(alg, dec))
    basis = kprime_basis(alg, dec)
    assert basis.dimension == kp.dimension
    assert all(kp.contains(v) for v in basis.basis())


def test_sp4_weak_structure():
    alg, dec = _setup("C2", [2])
    assert weak_node(dec) == 0
    report = weak_structure_report(alg, dec)
    assert report["weak_node"] == 1
    assert report["k_dimension"] == 6
    assert report["filtration_dimensions"] == [3, 1, 0]
    assert report["k_hat_dimension"] == 3
    for key in ("theta_gamma_stable", "theta_gamma_involution", "k_hat_is_fixed_space",
                "ad_b_i_raises_filtration", "k_hat_preserves_filtration", "ideal", "splits"):
        assert report[key], key
    assert report["lower_central_series"] == {"c2_nonzero": True, "c2_in_level_2": True, "c3_zero": True}
    assert report["zero_gamma_dimension"] == 6
    assert report["zero_gamma_filtration_dimensions"] == [3, 1, 0]


def test_weak_structure_small_ranks():
    for name in ("B2", "G2", "B3", "C3"):
        A = from_type_string(name)
        alg = build(A)
        for dec in enumerate_cd(A):
            if classify(dec) != ClassLabel.WEAK_SAT or len(weak_nodes(dec)) != 1:
                continue
            report = weak_structure_report(alg, dec)
            lcs = report["lower_central_series"]
            assert lcs["c2_nonzero"] and lcs["c2_in_level_2"] and lcs["c3_zero"], dec.describe()
            assert report["k_hat_is_fixed_space"], dec.describe()
            assert report["zero_gamma_dimension"] == report["k_dimension"], dec.describe()


def test_weak_node_rejects_other_labels():
    _, dec = _setup("G2", [1])
    try:
        weak_node(dec)
        assert False, "expected InputError"
    except InputError:
        pass


def test_sp4_center():
    alg, dec = _setup("C2", [2])
    k = build_k(alg, dec)
    z = center(alg, k)
    std = standard_basis(alg, dec, k=k)
    top = dict(zip(std.labels, std.vectors))["b_(1,1,2)"]
    assert z.dimension == 1
    assert z.contains(top)
    evidence = center_conjecture_evidence(alg, dec)
    assert evidence["J_even"] == ["b_2", "b_(1,1,2)"]
    assert evidence["single_J_even_generator"]
    assert evidence["center_in_level_2"]


def test_sp4_not_reductive():
    alg, dec = _setup("C2", [2])
    report = reductivity_report(alg, build_k(alg, dec))
    assert not report["is_reductive"]
    assert not report["is_semisimple"]


def test_g2_is_sl3():
    alg, dec = _setup("G2", [1])
    k = build_k(alg, dec)
    report = reductivity_report(alg, k)
    assert report["killing_form_rank"] == 8
    assert report["is_semisimple"]
    assert report["identified_as"] == "sl3"
    assert kprime_check(alg, dec)["codimension"] == 0
    assert center(alg, k).dimension == 0


def test_sat_subalgebra_is_reductive():
    alg, dec = _setup("A2", [])
    report = reductivity_report(alg, build_k(alg, dec))
    assert report["is_semisimple"]
    assert report["identified_as"] == "sl2"


def test_onsager():
    for name in ("A1", "A2", "B2", "G2", "A3"):
        assert onsager_check(build(from_type_string(name))), name


def test_onsager_rescaling():
    alg = build(from_type_string("A2"))
    assert onsager_rescaling_check(alg, {0: Fraction(4), 1: Fraction(9)})
    assert onsager_rescaling_check(alg, {0: Fraction(2), 1: Fraction(1)}) is None


def test_bracket_table():
    alg, dec = _setup("C2", [2])
    rows = bracket_table(alg, dec)
    assert {"x": "h_2", "y": "b_1", "bracket": "1*b_1"} in rows
    alg, dec = _setup("A2", [2])
    try:
        bracket_table(alg, dec)
        assert False, "expected InputError"
    except InputError:
        pass


if __name__ == "__main__":
    print("Running subalgebra structure tests...")
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"✓ {name}")
    print("\n✓ All subalgebra structure tests passed!")
