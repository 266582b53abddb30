#!/usr/bin/env python3
"""
Tests for report rendering, CSV tables and diagram plots
"""
import json
import os
import sys
import tempfile

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pandas as pd

from src.cartan import from_type_string
from src.decorations import from_labels
from src.reporting import _layout, label_counts, plot_decoration, plot_filename, render, save_table


def test_json_is_sorted():
    text = render({"b": 1, "a": [1, 2]}, "json")
    assert json.loads(text) == {"a": [1, 2], "b": 1}
    assert text.index('"a"') < text.index('"b"')


def test_text_tables():
    text = render({"rows": [{"X": [1], "label": "Sat"}, {"X": [], "label": "WeakSat"}]}, "text")
    assert text.splitlines()[0] == "rows:"
    assert "WeakSat" in text and "[1]" in text


def test_label_counts():
    rows = [{"label": "Sat"}, {"label": "WeakSat"}, {"label": "Sat"}]
    assert label_counts(rows) == {"Sat": 2, "WeakSat": 1}
    assert label_counts([]) == {}


def test_layout_branch_nodes():
    pos = _layout(from_type_string("E6"))
    assert [pos[i][1] for i in (0, 2, 3, 4, 5)] == [0.0] * 5
    assert pos[1] == (pos[3][0], 1.0)
    pos = _layout(from_type_string("A1xA2"))
    assert pos[0][1] != pos[1][1]


def test_plot_and_csv_files():
    cwd = os.getcwd()
    with tempfile.TemporaryDirectory() as tmp:
        os.chdir(tmp)
        try:
            A = from_type_string("C2")
            dec = from_labels(A, [2])
            assert plot_filename(dec) == "C2_X2_id.png"
            path = plot_decoration(dec, plot_filename(dec))
            assert os.path.getsize(path) > 0
            csv = save_table([{"x": "h_2", "y": "b_1", "bracket": "1*b_1"}], "brackets.csv")
            assert list(pd.read_csv(csv).columns) == ["x", "y", "bracket"]
        finally:
            os.chdir(cwd)


if __name__ == "__main__":
    print("Running reporting tests...")
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            fn()
            print(f"✓ {name}")
    print("\n✓ All reporting tests passed!")
