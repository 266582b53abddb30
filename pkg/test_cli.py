#!/usr/bin/env python3
"""
Tests for the gsat command-line frontend
"""
import contextlib
import io
import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cartan import from_type_string
from src.cli import expand_types, main, parse_tau, parse_x
from src.errors import InputError


def _run(*argv):
    """(exit code, parsed JSON report or None)"""
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(list(argv))
    text = out.getvalue()
    return code, json.loads(text) if text.strip() else None


def test_enumerate_a1():
    code, report = _run("enumerate", "--type", "A1")
    assert code == 0
    assert report["A1"]["total"] == 2
    assert report["A1"]["counts"] == {"Sat": 2}


def test_enumerate_g2_and_a3():
    code, report = _run("enumerate", "--type", "G2,A3")
    assert code == 0
    assert len(report["G2"]["gsat_minus_sat"]) == 2
    assert report["A3"]["gsat_minus_sat"] == []


def test_classify():
    code, report = _run("classify", "--type", "C2", "--X", "2")
    assert code == 0
    assert report["label"] == "WeakSat"
    assert report["weak_nodes"] == [1]
    code, report = _run("classify", "--type", "A3", "--X", "1,2")
    assert code == 0
    assert report["label"] == "NotCompatible"
    assert "reason" in report


def test_table1_families():
    code, report = _run("table1", "--type", "Bn", "--max-rank", "5")
    assert code == 0
    assert report["all_match"]
    assert sorted(report["types"]) == ["B2", "B3", "B4", "B5"]
    code, report = _run("table1", "--type", "F4")
    assert code == 0 and len(report["types"]["F4"]["entries"]) == 2
    code, report = _run("table1", "--type", "An", "--max-rank", "5")
    assert code == 0
    assert all(not entry["entries"] for entry in report["types"].values())


def test_build_k_sp4():
    code, report = _run("build-k", "--type", "C2", "--X", "2", "--gamma", "-3/2")
    assert code == 0
    assert report["k_dimension"] == 6
    assert report["in_gamma"]
    assert report["kprime"]["codimension"] == 0


def test_verify_small():
    code, report = _run("verify", "--type", "A2", "--X", "2", "--tau", "id")
    assert code == 0
    assert report["passed"] and report["failures"] == []


def test_verify_listed_c2():
    code, report = _run("verify", "--type", "C2", "--listed")
    assert code == 0
    decorations = report["types"]["C2"]["decorations"]
    assert [d["label"] for d in decorations] == ["WeakSat"]
    assert report["types"]["C2"]["algebra"]["checks"]["sp4_example"]


def test_verify_reported_diagrams():
    for argv in (("--type", "C2", "--X", "2"), ("--type", "G2", "--X", "1"), ("--type", "A1xA1")):
        code, report = _run("verify", *argv)
        assert code == 0, (argv, report["failures"])


def test_enumerate_component_swaps():
    for name in ("A1xA1", "A2xA2"):
        code, report = _run("enumerate", "--type", name)
        assert code == 0
        assert report[name]["gsat_minus_sat"] == []
        assert any(row["tau"] != "id" for row in report[name]["decorations"])


def test_center_sp4():
    code, report = _run("center", "--type", "C2", "--X", "2")
    assert code == 0
    assert len(report["center_basis"]) == 1
    assert not report["reductivity"]["is_reductive"]


def test_input_errors_exit_2():
    assert _run("enumerate", "--type", "Q3")[0] == 2
    assert _run("build-k", "--type", "A2", "--X", "", "--gamma", "1")[0] == 2
    assert _run("build-k", "--type", "A2", "--X", "", "--gamma", "0,1")[0] == 2
    assert _run("verify", "--type", "A2", "--gamma", "1,1")[0] == 2
    assert _run("classify", "--type", "A2,A3", "--X", "1")[0] == 2


def test_zero_gamma_allowed():
    code, report = _run("build-k", "--type", "C2", "--X", "2", "--gamma", "0", "--allow-zero-gamma")
    assert code == 0
    assert report["k_dimension"] == 6


def test_argparse_errors():
    try:
        with contextlib.redirect_stderr(io.StringIO()):
            main(["nonsense", "--type", "A2"])
        assert False, "expected SystemExit"
    except SystemExit as exc:
        assert exc.code == 2


def test_text_output():
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        assert main(["enumerate", "--type", "A2", "--format", "text"]) == 0
    assert "A2:" in out.getvalue()
    assert "CompatibleOnly" in out.getvalue()


def test_output_is_deterministic():
    first = _run("enumerate", "--type", "B3")
    second = _run("enumerate", "--type", "B3")
    assert first == second


def test_parsers():
    A3 = from_type_string("A3")
    assert parse_tau(A3, "w0").perm == (2, 1, 0)
    assert parse_tau(A3, "1:3,3:1").perm == (2, 1, 0)
    assert parse_x(A3, "none") == []
    assert parse_x(A3, "3,1") == [2, 0]
    assert [str(A) for A in expand_types("Gn,Cn", 3)] == ["G2", "C2", "C3"]
    for bad in ("1:2", "x"):
        try:
            parse_tau(A3, bad)
            assert False, "expected InputError"
        except InputError:
            pass


if __name__ == "__main__":
    print("Running CLI tests...")
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"✓ {name}")
    print("\n✓ All CLI tests passed!")
