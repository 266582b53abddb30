"""
Cartan matrices of finite type, symmetrizers, components and diagram automorphisms
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher
from sympy import Matrix

from src.errors import InputError, StructuralError

MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

_TYPE_TOKEN = re.compile(r"^([A-Ga-g])(\d+)$")


@dataclass(frozen=True)
class CartanMatrix:
    """
    Integer generalized Cartan matrix with symmetrizers.

    Internally nodes are 0-based positions; ``nodes`` holds the 1-based
    labels used at every input/output boundary. ``a[i][j] = α_j(h_i)`` and
    ``d[i]·a[i][j] = d[j]·a[j][i]``, with d the smallest positive integers
    per component (short roots get d = 1).
    """
    a: tuple
    d: tuple
    nodes: tuple
    name: str = ""

    @property
    def rank(self):
        return len(self.a)

    @property
    def index_set(self):
        return tuple(range(self.rank))

    def label(self, i):
        return self.nodes[i]

    def index(self, label):
        try:
            return self.nodes.index(label)
        except ValueError:
            raise InputError(f"node {label} not in {list(self.nodes)}")

    def form(self, i, j):
        """(α_i, α_j) = d_i a_ij"""
        return self.d[i] * self.a[i][j]

    def sub(self, subset):
        """Sub-GCM A_X on the given positions (labels preserved)"""
        subset = sorted(subset)
        a = tuple(tuple(self.a[i][j] for j in subset) for i in subset)
        return CartanMatrix(a, tuple(self.d[i] for i in subset),
                            tuple(self.nodes[i] for i in subset))

    def to_dict(self):
        return {"nodes": list(self.nodes), "a": [list(r) for r in self.a], "d": list(self.d)}

    def __str__(self):
        return self.name or f"CartanMatrix(rank {self.rank})"


# --- standard types -----------------------------------------------------------

def _chain(n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for i in range(n - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    return a


def _standard_matrix(letter, n):
    if letter == "A":
        return _chain(n)
    if letter == "B":
        a = _chain(n)
        a[n - 1][n - 2] = -2
        return a
    if letter == "C":
        a = _chain(n)
        a[n - 2][n - 1] = -2
        return a
    if letter == "D":
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
        return a
    if letter == "E":
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
        return a
    if letter == "F":
        a = _chain(4)
        a[2][1] = -2
        return a
    if letter == "G":
        return [[2, -1], [-3, 2]]
    raise InputError(f"unknown type letter {letter!r}")


def _check_rank(letter, n):
    if letter in MIN_RANK:
        if n < MIN_RANK[letter]:
            raise InputError(f"invalid rank {letter}{n}")
    elif letter in EXCEPTIONAL_RANKS:
        if n not in EXCEPTIONAL_RANKS[letter]:
            raise InputError(f"invalid rank {letter}{n}")
    else:
        raise InputError(f"unknown type letter {letter!r}")


def symmetrizer(a):
    """Smallest positive integer symmetrizer per component, by propagation d_j = d_i a_ij / a_ji"""
    n = len(a)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        comp, queue = [start], [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if j != i and a[i][j]:
                    if not a[j][i]:
                        raise InputError("a_ij = 0 must imply a_ji = 0")
                    value = d[i] * a[i][j] / a[j][i]
                    if d[j] is None:
                        d[j] = value
                        comp.append(j)
                        queue.append(j)
                    elif d[j] != value:
                        raise InputError("Cartan matrix is not symmetrizable")
        denom = 1
        for i in comp:
            denom = denom * d[i].denominator // gcd(denom, d[i].denominator)
        ints = [int(d[i] * denom) for i in comp]
        g = 0
        for x in ints:
            g = gcd(g, x)
        for i, x in zip(comp, ints):
            d[i] = x // g
    return tuple(int(x) for x in d)


def is_finite_type(a, d):
    sym = Matrix([[d[i] * a[i][j] for j in range(len(a))] for i in range(len(a))])
    return all(sym[:k, :k].det() > 0 for k in range(1, len(a) + 1))


def from_matrix(a, nodes=None, name=""):
    """Validate an integer matrix and attach symmetrizers"""
    a = tuple(tuple(int(x) for x in row) for row in a)
    n = len(a)
    if any(len(row) != n for row in a):
        raise InputError("Cartan matrix must be square")
    for i in range(n):
        if a[i][i] != 2:
            raise InputError("diagonal entries must be 2")
        for j in range(n):
            if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                raise InputError(f"invalid off-diagonal entries at ({i + 1},{j + 1})")
    d = symmetrizer(a)
    if not is_finite_type(a, d):
        raise InputError("Cartan matrix is not of finite type")
    nodes = tuple(range(1, n + 1)) if nodes is None else tuple(nodes)
    return CartanMatrix(a, d, nodes, name)


def parse_type_string(spec):
    """'A2xB3' -> [('A', 2), ('B', 3)]"""
    if not isinstance(spec, str) or not spec.strip():
        raise InputError("empty type string")
    out = []
    for token in spec.strip().lower().split("x"):
        m = _TYPE_TOKEN.match(token.strip())
        if not m:
            raise InputError(f"cannot parse type {token!r} in {spec!r}")
        letter, n = m.group(1).upper(), int(m.group(2))
        _check_rank(letter, n)
        out.append((letter, n))
    return out


@lru_cache(maxsize=None)
def from_type_string(spec):
    """Standard Cartan matrix with Bourbaki numbering (G2: node 1 long); block diagonal for products"""
    parts = parse_type_string(spec)
    blocks = [_standard_matrix(letter, n) for letter, n in parts]
    size = sum(len(b) for b in blocks)
    a = [[0] * size for _ in range(size)]
    offset = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                a[offset + i][offset + j] = x
        offset += len(b)
    name = "x".join(f"{letter}{n}" for letter, n in parts)
    return from_matrix(a, name=name)


# --- Dynkin graph --------------------------------------------------------------

def dynkin_graph(A):
    g = nx.DiGraph()
    for i in A.index_set:
        g.add_node(i, d=A.d[i])
    for i in A.index_set:
        for j in A.index_set:
            if i != j and A.a[i][j]:
                g.add_edge(i, j, a=A.a[i][j])
    return g


def components(A, subset=None):
    """Connected components of the Dynkin graph (restricted to a subset), sorted"""
    nodes = A.index_set if subset is None else sorted(subset)
    g = dynkin_graph(A).to_undirected().subgraph(nodes)
    return sorted((tuple(sorted(c)) for c in nx.connected_components(g)), key=lambda c: c[0])


@dataclass(frozen=True)
class DiagramAutomorphism:
    """Permutation of node positions preserving the Cartan matrix"""
    perm: tuple

    def __call__(self, i):
        return self.perm[i]

    def is_identity(self):
        return all(i == p for i, p in enumerate(self.perm))

    def is_involution(self):
        return all(self.perm[p] == i for i, p in enumerate(self.perm))

    def compose(self, other):
        """self ∘ other"""
        return DiagramAutomorphism(tuple(self.perm[other.perm[i]] for i in range(len(self.perm))))

    def orbits(self, subset=None):
        nodes = range(len(self.perm)) if subset is None else sorted(subset)
        seen, out = set(), []
        for i in nodes:
            if i in seen:
                continue
            orbit, j = [], i
            while j not in seen:
                seen.add(j)
                orbit.append(j)
                j = self.perm[j]
            out.append(tuple(sorted(orbit)))
        return out

    def pairs(self, A):
        """Explicit label pairs [[i, τ(i)], ...]"""
        return [[A.nodes[i], A.nodes[p]] for i, p in enumerate(self.perm)]


def identity(A):
    return DiagramAutomorphism(tuple(A.index_set))


@lru_cache(maxsize=None)
def automorphism_group(A):
    """All permutations preserving every entry, in lexicographic order of the permutation"""
    g = dynkin_graph(A)
    matcher = DiGraphMatcher(g, g,
                             node_match=lambda x, y: x["d"] == y["d"],
                             edge_match=lambda x, y: x["a"] == y["a"])
    perms = set()
    for mapping in matcher.isomorphisms_iter():
        perm = tuple(mapping[i] for i in A.index_set)
        if all(A.a[perm[i]][perm[j]] == A.a[i][j] for i in A.index_set for j in A.index_set):
            perms.add(perm)
    return tuple(DiagramAutomorphism(p) for p in sorted(perms))


def classify_component(A, component):
    """Cartan type ('B', 3) of an indecomposable sub-diagram given by node positions"""
    sub = A.sub(component)
    n = sub.rank
    degrees = [sum(1 for j in range(n) if j != i and sub.a[i][j]) for i in range(n)]
    products = [sub.a[i][j] * sub.a[j][i] for i in range(n) for j in range(i + 1, n) if sub.a[i][j]]
    if n == 1:
        return ("A", 1)
    if 3 in products:
        return ("G", 2)
    if 2 in products:
        if n == 4 and products.count(2) == 1:
            ends = [i for i in range(n) if degrees[i] == 1]
            doubles = [(i, j) for i in range(n) for j in range(n) if i != j and sub.a[i][j] == -2]
            i, j = doubles[0]
            if i not in ends and j not in ends:
                return ("F", 4)
        if n == 2:
            # B2 lists the long node first, C2 the short one
            return ("B", 2) if sub.d[0] > sub.d[1] else ("C", 2)
        long_ = max(range(n), key=lambda k: sub.d[k])
        count_long = sum(1 for k in range(n) if sub.d[k] == sub.d[long_])
        count_short = n - count_long
        return ("B", n) if count_short == 1 else ("C", n)
    if max(degrees) <= 2:
        return ("A", n)
    branch = degrees.index(3)
    arms = []
    for start in range(n):
        if start != branch and sub.a[branch][start]:
            length, prev, cur = 1, branch, start
            while True:
                nxt = [k for k in range(n) if k not in (prev, cur) and sub.a[cur][k]]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return ("E", n)
    raise StructuralError(f"unrecognized finite type diagram {sub.a}")


CLASSICAL_POSITIVE_ROOTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def positive_root_count(A):
    """Classical |Φ⁺| summed over components"""
    total = 0
    for comp in components(A):
        letter, n = classify_component(A, comp)
        total += CLASSICAL_POSITIVE_ROOTS[letter](n)
    return total
