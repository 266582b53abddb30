"""
Report rendering: JSON and text output, CSV summaries and decorated Dynkin diagram plots
"""
import json
import logging
import os

import matplotlib
matplotlib.use('Agg')  # Use non-interactive backend
import matplotlib.pyplot as plt
import networkx as nx
import pandas as pd

from src.cartan import dynkin_graph
from src.config import OUTPUT_DIR, PLOT_DIR

logger = logging.getLogger(__name__)


def to_json(report):
    return json.dumps(report, sort_keys=True, indent=2, default=str)


def _is_table(value):
    return isinstance(value, list) and value and all(isinstance(row, dict) for row in value)


def to_text(report, indent=0):
    """Nested report as indented text; lists of flat rows become pandas tables"""
    pad = "  " * indent
    lines = []
    if isinstance(report, dict):
        for key in sorted(report):
            value = report[key]
            if isinstance(value, dict) or _is_table(value):
                lines.append(f"{pad}{key}:")
                lines.append(to_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {value}")
    elif _is_table(report):
        frame = pd.DataFrame([{k: _cell(v) for k, v in row.items()} for row in report])
        lines.extend(pad + line for line in frame.to_string(index=False).splitlines())
    else:
        lines.append(f"{pad}{report}")
    return "\n".join(lines)


def _cell(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, default=str)
    return value


def render(report, fmt):
    return to_json(report) if fmt == "json" else to_text(report)


def save_table(rows, filename):
    """Write rows to results/<filename> as CSV"""
    os.makedirs(OUTPUT_DIR, exist_ok=True)
    path = os.path.join(OUTPUT_DIR, filename)
    frame = pd.DataFrame([{k: _cell(v) for k, v in row.items()} for row in rows])
    frame.to_csv(path, index=False)
    logger.info("table saved to %s", path)
    return path


def label_counts(rows, key="label"):
    if not rows:
        return {}
    counts = pd.Series([row[key] for row in rows]).value_counts()
    return {str(k): int(v) for k, v in sorted(counts.items())}


def _layout(A):
    """Longest path of each component on a line, the D / E branch node lifted above it"""
    g = dynkin_graph(A).to_undirected()
    pos = {}
    for comp_index, comp in enumerate(nx.connected_components(g)):
        sub = g.subgraph(comp)
        ends = [n for n in sorted(sub) if sub.degree(n) <= 1]
        spine = max((nx.shortest_path(sub, a, b) for a in ends for b in ends if a < b),
                    key=len, default=[min(sub)])
        y = -2.5 * comp_index
        for x, n in enumerate(spine):
            pos[n] = (float(x), y)
        for n in sorted(set(sub) - set(spine)):
            anchor = next(m for m in sub.neighbors(n) if m in pos)
            pos[n] = (pos[anchor][0], y + 1.0)
    return pos


def plot_decoration(dec, filename):
    """Black nodes for X, white otherwise, τ as dashed arcs, arrows towards the short root"""
    A = dec.A
    os.makedirs(PLOT_DIR, exist_ok=True)
    pos = _layout(A)
    fig, ax = plt.subplots(figsize=(1.2 * A.rank + 2, 2.5))
    for i in A.index_set:
        for j in A.index_set:
            if i < j and A.a[i][j]:
                bonds = max(-A.a[i][j], -A.a[j][i])
                (x0, y0), (x1, y1) = pos[i], pos[j]
                for k in range(bonds):
                    shift = (k - (bonds - 1) / 2) * 0.06
                    ax.plot([x0, x1], [y0 + shift, y1 + shift], color='black', linewidth=1)
                if bonds > 1:
                    long_, short = (i, j) if A.d[i] > A.d[j] else (j, i)
                    (lx, ly), (sx, sy) = pos[long_], pos[short]
                    ax.annotate('', xy=((lx + 2 * sx) / 3, (ly + 2 * sy) / 3),
                                xytext=((2 * lx + sx) / 3, (2 * ly + sy) / 3),
                                arrowprops=dict(arrowstyle='->', color='black'))
    for i in A.index_set:
        x, y = pos[i]
        face = 'black' if i in dec.X else 'white'
        ax.scatter([x], [y], s=180, facecolors=face, edgecolors='black', zorder=3)
        ax.text(x, y - 0.35, str(A.nodes[i]), ha='center', va='top', fontsize=9)
    for i, j in enumerate(dec.tau.perm):
        if i < j:
            (x0, y0), (x1, y1) = pos[i], pos[j]
            ax.annotate('', xy=(x1, y1 + 0.15), xytext=(x0, y0 + 0.15),
                        arrowprops=dict(arrowstyle='<->', linestyle='dashed', color='gray',
                                        connectionstyle='arc3,rad=-0.4'))
    ax.set_title(dec.describe())
    ax.set_axis_off()
    ax.margins(0.2)
    path = os.path.join(PLOT_DIR, filename)
    plt.tight_layout()
    plt.savefig(path, dpi=150, bbox_inches='tight')
    plt.close(fig)
    logger.info("plot saved to %s", path)
    return path


def plot_filename(dec):
    x = "".join(str(n) for n in dec.x_labels) or "none"
    tau = "id" if dec.tau.is_identity() else "tau" + "".join(str(dec.A.nodes[p]) for p in dec.tau.perm)
    return f"{dec.A}_X{x}_{tau}.png"
