#!/usr/bin/env python3
"""
Worked examples: the weak Satake diagram of type C2 and the non-weak G2 diagram
This script builds both subalgebras, prints their standard bases and writes CSV and image output
"""
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cartan import from_type_string
from src.chevalley import build
from src.decorations import classify, from_labels, ones
from src.k_structure import (bracket_table, center, kprime_check, reductivity_report,
                             weak_structure_report)
from src.k_subalgebra import build_k, serre_eval, standard_basis
from src.reporting import plot_decoration, plot_filename, save_table


def describe(alg, dec):
    """Print and return the headline numbers of one example"""
    k = build_k(alg, dec)
    std = standard_basis(alg, dec, k=k)
    kp = kprime_check(alg, dec)
    red = reductivity_report(alg, k)
    print(f"\n=== {dec.describe()} ({classify(dec).value}) ===")
    print(f"dim g: {alg.dim}")
    print(f"dim k: {k.dimension}")
    print(f"Standard basis: {', '.join(std.labels)}")
    print(f"codim [k,k]: {kp['codimension']}")
    print(f"Killing form rank: {red['killing_form_rank']} of {red['dimension']}")
    if red["identified_as"]:
        print(f"Semisimple, identified as {red['identified_as']}")
    return k


def sp4_example():
    A = from_type_string("C2")
    alg = build(A)
    dec = from_labels(A, [2])
    k = describe(alg, dec)
    weak = weak_structure_report(alg, dec)
    z = center(alg, k)
    print(f"Filtration k(1)_1 > k(1)_2 > k(1)_3: dims {weak['filtration_dimensions']}")
    print(f"dim k_hat: {weak['k_hat_dimension']}, dim center: {z.dimension}")
    print(f"gamma_1 -> 0 keeps dimension: {weak['zero_gamma_dimension'] == weak['k_dimension']}")
    return dec, bracket_table(alg, dec)


def g2_example():
    A = from_type_string("G2")
    alg = build(A)
    dec = from_labels(A, [1])
    describe(alg, dec)
    report = serre_eval(alg, dec, ones(dec), A.index(2), A.index(1))
    print(f"ad(b_2)^{report.M}(b_1): case {report.case}, residual zero: {report.ok}")
    return dec, bracket_table(alg, dec)


def main():
    """Main execution function"""
    print("Building the C2 and G2 examples...")
    outputs = []
    for name, example in (("sp4", sp4_example), ("g2", g2_example)):
        dec, rows = example()
        outputs.append(save_table(rows, f"{name}_brackets.csv"))
        outputs.append(plot_decoration(dec, plot_filename(dec)))

    print("\nExamples completed successfully!")
    for path in outputs:
        print(f"Saved {path}")


if __name__ == "__main__":
    main()
