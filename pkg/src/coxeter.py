"""
Orders of abstract Coxeter groups by Todd-Coxeter coset enumeration

The coset table is a Schreier graph on the cosets of the trivial subgroup.
Vertex labels form a union-find structure: labels[c] <= c, and ``unify``
merges two vertices together with their neighbourhoods. Coxeter generators
are involutions, so each generator is its own inverse and the relators are
(i, i) and (i, j)^m_ij.
"""
import logging

logger = logging.getLogger(__name__)

SENTINEL = -1


class CosetTable:
    def __init__(self, ngens, rels):
        self.ngens = ngens
        self.rels = [tuple(rel) for rel in rels]
        self.labels = []
        self.neighbors = []
        for rel in self.rels:
            for gen in rel:
                assert 0 <= gen < ngens, repr(rel)
        self.start = self.add_vertex()

    def get_label(self, c):
        labels = self.labels
        root = c
        while labels[root] != root:
            root = labels[root]
        while labels[c] != root:
            labels[c], c = root, labels[c]
        return root

    def unify(self, c1, c2):
        labels = self.labels
        neighbors = self.neighbors
        to_unify = [(c1, c2)]
        while to_unify:
            c1, c2 = to_unify.pop()
            c1 = self.get_label(c1)
            c2 = self.get_label(c2)
            if c1 == c2:
                continue
            c1, c2 = min(c1, c2), max(c1, c2)
            labels[c2] = c1
            for d in range(self.ngens):
                n1 = neighbors[c1][d]
                n2 = neighbors[c2][d]
                if n1 == SENTINEL:
                    neighbors[c1][d] = n2
                elif n2 != SENTINEL:
                    to_unify.append((n1, n2))

    def add_vertex(self):
        c = len(self.labels)
        self.labels.append(c)
        self.neighbors.append(self.ngens * [SENTINEL])
        return c

    def follow_step(self, c, d):
        c = self.get_label(c)
        ns = self.neighbors[c]
        if ns[d] == SENTINEL:
            ns[d] = self.add_vertex()
        return self.get_label(ns[d])

    def follow_path(self, c, word):
        c = self.get_label(c)
        for d in reversed(word):
            c = self.follow_step(c, d)
        return c

    def build(self, maxsize=None):
        """Enumerate cosets; returns False when the table outgrows maxsize"""
        to_visit = 0
        while to_visit < len(self.labels):
            c = self.get_label(to_visit)
            if c == to_visit:
                for rel in self.rels:
                    self.unify(self.follow_path(c, rel), c)
            to_visit += 1
            if maxsize and len(self.neighbors) > maxsize:
                return False
        return True

    def __len__(self):
        return sum(1 for c, label in enumerate(self.labels) if c == label)


def coxeter_relators(m):
    """Relators of the Coxeter group with matrix m (m[i][j] = 0 means no relation)"""
    n = len(m)
    rels = [(i, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j]:
                rels.append((i, j) * m[i][j])
    return rels


def coxeter_group_order(m, maxsize=200000):
    """Order of the Coxeter group of m, or None if enumeration exceeds maxsize"""
    n = len(m)
    if n == 0:
        return 1
    table = CosetTable(n, coxeter_relators(m))
    if not table.build(maxsize):
        logger.debug("coset enumeration for %s exceeded %d vertices", m, maxsize)
        return None
    return len(table)
