"""
Exact rational linear algebra on sparse vectors

Vectors are dicts {basis index: Fraction} without zero entries. Echelon
bases are kept in reduced row echelon form so that coordinates of a member
vector can be read off at the pivot columns.
"""
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def unit(k, c=1):
    c = Fraction(c)
    return {k: c} if c else {}


def add(u, v, c=1):
    """Return u + c*v"""
    out = dict(u)
    if not c:
        return out
    for k, x in v.items():
        y = out.get(k, 0) + c * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def sub(u, v):
    return add(u, v, -1)


def scale(v, c):
    c = Fraction(c)
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def combine(terms):
    """Linear combination of (coeff, vector) pairs"""
    out = {}
    for c, v in terms:
        if c:
            out = add(out, v, c)
    return out


def is_zero(v):
    return not v


def max_numerator(v):
    """Largest absolute numerator among the entries (0 for the zero vector)"""
    return max((abs(x.numerator) for x in v.values()), default=0)


def restrict(v, indices):
    return {k: x for k, x in v.items() if k in indices}


class EchelonBasis:
    """
    Incrementally maintained reduced row echelon basis of a subspace.

    ``column_order`` is an optional key giving the pivot preference of each
    coordinate (smaller first); by default the lowest basis index wins.
    With ``track=True`` every row remembers its expression in the vectors
    passed to ``add`` so that coordinates in that original spanning list can
    be recovered.
    """

    def __init__(self, column_order=None, track=False):
        self.column_order = column_order
        self.track = track
        self.rows = {}        # pivot -> row (row[pivot] == 1)
        self.combos = {}      # pivot -> {input tag: coeff}
        self.pivots = []      # insertion order
        self.inputs = []      # vectors that increased the rank

    def __len__(self):
        return len(self.rows)

    @property
    def dimension(self):
        return len(self.rows)

    def _key(self, k):
        if self.column_order is None:
            return k
        return (self.column_order(k), k)

    def reduce(self, v, combo=None):
        """Reduce v against the basis; returns (residual, combo)"""
        v = dict(v)
        combo = dict(combo) if combo is not None else None
        hits = [(p, v[p]) for p in v if p in self.rows]
        for p, c in hits:
            v = add(v, self.rows[p], -c)
            if combo is not None:
                combo = add(combo, self.combos[p], -c)
        return v, combo

    def contains(self, v):
        residual, _ = self.reduce(v)
        return not residual

    def add(self, v, tag=None):
        """Add v to the span; returns True if the dimension grew"""
        tag = len(self.inputs) if tag is None else tag
        combo = {tag: Fraction(1)} if self.track else None
        r, combo = self.reduce(v, combo)
        if not r:
            return False
        p = min(r, key=self._key)
        inv = 1 / r[p]
        r = scale(r, inv)
        if combo is not None:
            combo = scale(combo, inv)
        for q, row in self.rows.items():
            c = row.get(p)
            if c:
                self.rows[q] = add(row, r, -c)
                if combo is not None:
                    self.combos[q] = add(self.combos[q], combo, -c)
        self.rows[p] = r
        if combo is not None:
            self.combos[p] = combo
        self.pivots.append(p)
        self.inputs.append(v)
        return True

    def extend(self, vectors):
        grew = 0
        for v in vectors:
            grew += self.add(v)
        return grew

    def basis(self):
        """Rows sorted by pivot preference"""
        return [self.rows[p] for p in sorted(self.rows, key=self._key)]

    def coordinates(self, v):
        """Coordinates of v w.r.t. ``basis()``, or None if v is not in the span"""
        residual, _ = self.reduce(v)
        if residual:
            return None
        return [v.get(p, Fraction(0)) for p in sorted(self.rows, key=self._key)]

    def input_coordinates(self, v):
        """Coordinates of v in the tracked input vectors (tag -> coeff)"""
        if not self.track:
            raise ValueError("input coordinates need track=True")
        residual, _ = self.reduce(v)
        if residual:
            return None
        out = {}
        for p, c in v.items():
            if p in self.rows and c:
                out = add(out, self.combos[p], c)
        return out

    def copy(self):
        other = EchelonBasis(self.column_order, self.track)
        other.rows = dict(self.rows)
        other.combos = dict(self.combos)
        other.pivots = list(self.pivots)
        other.inputs = list(self.inputs)
        return other


def span(vectors, column_order=None):
    basis = EchelonBasis(column_order)
    basis.extend(vectors)
    return basis


def same_span(us, vs):
    a, b = span(us), span(vs)
    return a.dimension == b.dimension and all(a.contains(v) for v in b.basis())


def intersect_with_coordinates(vectors, indices):
    """Basis of span(vectors) ∩ span{e_k : k in indices}"""
    indices = set(indices)
    basis = span(vectors, column_order=lambda k: 1 if k in indices else 0)
    return [row for row in basis.basis() if all(k in indices for k in row)]


def intersect(us, vs):
    """Basis of span(us) ∩ span(vs) via the Zassenhaus trick"""
    shift = 1 + max([k for v in list(us) + list(vs) for k in v], default=0)
    stacked = []
    for u in us:
        stacked.append(add(u, {k + shift: x for k, x in u.items()}))
    for v in vs:
        stacked.append(dict(v))
    basis = span(stacked)
    out = []
    for row in basis.basis():
        if all(k >= shift for k in row):
            out.append({k - shift: x for k, x in row.items()})
    return span(out).basis()


# --- dense helpers through sympy's exact domain matrices ---------------------

def _to_domain(rows, ncols):
    data = [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in rows]
    if not data:
        data = [[QQ(0)] * ncols]
    return DomainMatrix(data, (len(data), ncols), QQ)


def _to_fraction(x):
    return Fraction(int(x.p), int(x.q)) if hasattr(x, "p") else Fraction(int(x.numerator), int(x.denominator))


def rank(rows, ncols=None):
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    return _to_domain(rows, ncols).rank()


def nullspace(rows, ncols):
    """Basis (list of lists of Fractions) of {x : rows·x = 0}"""
    rows = [list(r) for r in rows]
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    kernel = _to_domain(rows, ncols).nullspace().to_Matrix()
    return [[_to_fraction(kernel[i, j]) for j in range(ncols)] for i in range(kernel.rows)]
