#!/usr/bin/env python3
"""
Tests for root systems, Weyl group elements, dual Weyl vectors and the Coxeter order
"""
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cartan import from_type_string, identity
from src.coxeter import coxeter_group_order
from src.roots import (apply, dual_weyl_vector, from_word, generate_roots, longest_element, reduced_words,
                       restricted_data, tau0X, weyl_group, zeta)


def test_root_counts():
    for name, count in [("A3", 6), ("B3", 9), ("C3", 9), ("D4", 12), ("G2", 6), ("F4", 24), ("E6", 36)]:
        assert len(generate_roots(from_type_string(name)).positive) == count, name


def test_highest_roots():
    assert generate_roots(from_type_string("G2")).highest_roots() == [(2, 3)]
    assert generate_roots(from_type_string("B2")).highest_roots() == [(1, 2)]
    assert generate_roots(from_type_string("C2")).highest_roots() == [(2, 1)]


def test_root_string():
    R = generate_roots(from_type_string("A2"))
    assert R.root_string((1, 0), (0, 1)) == (0, 1)
    G = generate_roots(from_type_string("G2"))
    assert G.root_string((0, 1), (1, 0)) == (0, 3)


def test_longest_element():
    for name in ("A3", "B3", "G2"):
        A = from_type_string(name)
        w0 = longest_element(A, A.index_set)
        assert w0.length == len(generate_roots(A).positive)
        for i in A.index_set:
            image = apply(w0, tuple(int(k == i) for k in A.index_set))
            assert all(c <= 0 for c in image)


def test_reduced_words_are_distinct():
    A = from_type_string("A3")
    words = reduced_words(A, A.index_set, count=3, seed=0)
    assert len(words) >= 2
    assert len(set(words)) == len(words)
    assert all(len(w) == 6 for w in words)
    w0 = longest_element(A, A.index_set)
    assert all(from_word(A, w) == w0 for w in words)


def test_tau0():
    A3 = from_type_string("A3")
    assert tau0X(A3, A3.index_set).perm == (2, 1, 0)
    B3 = from_type_string("B3")
    assert tau0X(B3, B3.index_set).is_identity()
    D5 = from_type_string("D5")
    assert tau0X(D5, D5.index_set).perm == (0, 1, 2, 4, 3)


def test_dual_weyl_vector():
    C2 = from_type_string("C2")
    rho = dual_weyl_vector(C2, [1])
    assert rho.pairings == (Fraction(-1, 2), Fraction(1))
    B2 = from_type_string("B2")
    assert dual_weyl_vector(B2, [1]).pairings == (Fraction(-1), Fraction(1))
    z = zeta(C2, [1])
    assert z((1, 0)) == -1
    assert z((0, 1)) == 1


def test_weyl_group_orders():
    for name, order in [("A3", 24), ("B3", 48), ("G2", 12), ("F4", 1152)]:
        assert len(weyl_group(from_type_string(name))) == order, name


def test_restricted_multiplicities():
    A = from_type_string("A2")
    data = restricted_data(A, [], identity(A))
    assert sum(data.multiplicities.values()) == 6
    assert len(data.basis) == 2


def test_coxeter_orders():
    assert coxeter_group_order([[1, 3], [3, 1]]) == 6
    assert coxeter_group_order([[1, 6], [6, 1]]) == 12
    assert coxeter_group_order([[1, 3, 2], [3, 1, 4], [2, 4, 1]]) == 48
    assert coxeter_group_order([]) == 1


if __name__ == "__main__":
    print("Running root system tests...")
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"✓ {name}")
    print("\n✓ All root system tests passed!")
