"""
Root systems, Weyl group actions on the root lattice, parabolic longest
elements, dual Weyl vectors and restricted roots
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from src.cartan import classify_component, components, positive_root_count, DiagramAutomorphism
from src.config import WEYL_ORDER_CAP
from src.errors import InputError, StructuralError
from src.linalg import EchelonBasis

logger = logging.getLogger(__name__)


def height(beta):
    return sum(beta)


def is_positive(beta):
    return any(beta) and all(c >= 0 for c in beta)


def simple_root(A, i):
    return tuple(int(k == i) for k in A.index_set)


def pairing(A, beta, i):
    """β(h_i) = Σ_j c_j a_ij"""
    return sum(c * A.a[i][j] for j, c in enumerate(beta) if c)


def inner(A, u, v):
    """W-invariant form (α_i, α_j) = d_i a_ij, exact on rational coordinates"""
    return sum(Fraction(u[i]) * v[j] * A.d[i] * A.a[i][j]
               for i in A.index_set if u[i] for j in A.index_set if v[j])


def reflect(A, beta, i):
    """s_i(β) = β − β(h_i) α_i"""
    p = pairing(A, beta, i)
    out = list(beta)
    out[i] -= p
    return tuple(out)


class RootSystem:
    """
    Positive roots of a finite-type Cartan matrix, generated by reflection
    closure from the simple roots and sorted by height then lexicographically.
    """

    def __init__(self, A):
        self.A = A
        self.positive = self._generate()
        self.index = {beta: k for k, beta in enumerate(self.positive)}
        self._positive_set = set(self.positive)

    def _generate(self):
        A = self.A
        cap = positive_root_count(A)
        found = {simple_root(A, i) for i in A.index_set}
        frontier = list(found)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in A.index_set:
                    gamma = reflect(A, beta, i)
                    if is_positive(gamma) and gamma not in found:
                        found.add(gamma)
                        nxt.append(gamma)
                        if len(found) > cap:
                            raise StructuralError(
                                f"reflection closure exceeded the classical bound {cap} for {A}")
            frontier = nxt
        if len(found) != cap:
            raise StructuralError(f"found {len(found)} positive roots, expected {cap}")
        return sorted(found, key=lambda b: (height(b), tuple(-c for c in b)))

    @property
    def roots(self):
        return self.positive + [tuple(-c for c in b) for b in self.positive]

    def __len__(self):
        return 2 * len(self.positive)

    def is_root(self, beta):
        beta = tuple(beta)
        return beta in self._positive_set or tuple(-c for c in beta) in self._positive_set

    def is_negative_root(self, beta):
        return tuple(-c for c in beta) in self._positive_set

    def is_positive_root(self, beta):
        return tuple(beta) in self._positive_set

    def positive_in(self, X):
        """Φ_X⁺"""
        X = set(X)
        return [b for b in self.positive if all(c == 0 or i in X for i, c in enumerate(b))]

    def highest_roots(self):
        """Highest root of each component"""
        out = []
        for comp in components(self.A):
            roots = self.positive_in(comp)
            out.append(max(roots, key=height))
        return out

    def root_string(self, alpha, beta):
        """(p, q) with β − pα, …, β + qα the α-string through β"""
        p = 0
        while self.is_root(tuple(b - (p + 1) * a for a, b in zip(alpha, beta))):
            p += 1
        q = 0
        while self.is_root(tuple(b + (q + 1) * a for a, b in zip(alpha, beta))):
            q += 1
        return p, q


@lru_cache(maxsize=None)
def generate_roots(A):
    return RootSystem(A)


# --- Weyl group elements -------------------------------------------------------

@dataclass
class WeylElement:
    """Integer matrix acting on root coordinates (columns), with a word s_{w0} s_{w1} …"""
    matrix: np.ndarray
    word: tuple = field(default=())

    def apply(self, beta):
        return tuple(int(x) for x in self.matrix @ np.asarray(beta, dtype=np.int64))

    def __mul__(self, other):
        return WeylElement(self.matrix @ other.matrix, self.word + other.word)

    def key(self):
        return self.matrix.tobytes()

    def __eq__(self, other):
        return isinstance(other, WeylElement) and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash(self.key())

    @property
    def length(self):
        return len(self.word)

    def is_identity(self):
        return np.array_equal(self.matrix, np.eye(len(self.matrix), dtype=np.int64))

    def to_dict(self, A):
        return {"matrix": self.matrix.tolist(), "word": [A.nodes[i] for i in self.word]}


def identity_element(A):
    return WeylElement(np.eye(A.rank, dtype=np.int64), ())


def simple_reflection(A, i):
    m = np.eye(A.rank, dtype=np.int64)
    for j in A.index_set:
        m[i, j] -= A.a[i][j]
    return WeylElement(m, (i,))


def apply(w, beta):
    return w.apply(beta)


def from_word(A, word):
    w = identity_element(A)
    for i in word:
        w = w * simple_reflection(A, i)
    return w


def _parabolic_word(A, X, choose):
    """Grow w by s_i (i ∈ X) while w(α_i) > 0, picking i with ``choose``"""
    w = identity_element(A)
    while True:
        ascents = [i for i in sorted(X) if is_positive(w.apply(simple_root(A, i)))]
        if not ascents:
            return w
        w = w * simple_reflection(A, choose(ascents))


@lru_cache(maxsize=None)
def _longest(A, X):
    return _parabolic_word(A, X, min)


def longest_element(A, X):
    """w_X with the greedy reduced word (smallest ascent first)"""
    return _longest(A, frozenset(X))


def reduced_words(A, X, count=3, seed=0):
    """Distinct reduced words of w_X: smallest-first, largest-first, then seeded random choices"""
    rng = random.Random(seed)
    words = []
    choosers = [min, max] + [rng.choice] * (4 * count)
    for choose in choosers:
        word = _parabolic_word(A, X, choose).word
        if word not in words:
            words.append(word)
        if len(words) >= count:
            break
    return words


def tau0X(A, X):
    """Involution of X induced by −w_X on simple roots (identity off X)"""
    w = longest_element(A, X)
    perm = list(A.index_set)
    for i in X:
        image = tuple(-c for c in w.apply(simple_root(A, i)))
        if sum(image) != 1 or min(image) < 0:
            raise StructuralError(f"-w_X(alpha_{A.nodes[i]}) is not simple")
        k = image.index(1)
        if k not in X:
            raise StructuralError("-w_X moved a simple root of X outside X")
        perm[i] = k
    return DiagramAutomorphism(tuple(perm))


@dataclass(frozen=True)
class DualWeylVector:
    """ρ^∨_X = Σ coeffs[i] h_i and the pairings α_j(ρ^∨_X)"""
    coeffs: tuple
    pairings: tuple

    def value(self, beta):
        """β(ρ^∨_X)"""
        return sum(Fraction(c) * p for c, p in zip(beta, self.pairings))


def coroot(A, beta):
    """β^∨ = Σ c_i (2 d_i / (β,β)) h_i"""
    norm = inner(A, beta, beta)
    return tuple(Fraction(2 * c * A.d[i]) / norm for i, c in enumerate(beta))


@lru_cache(maxsize=None)
def _dual_weyl_vector(A, X):
    R = generate_roots(A)
    total = [Fraction(0)] * A.rank
    for beta in R.positive_in(X):
        for i, c in enumerate(coroot(A, beta)):
            total[i] += c
    coeffs = tuple(c / 2 for c in total)
    pairings = tuple(sum(coeffs[k] * A.a[k][j] for k in A.index_set) for j in A.index_set)
    return DualWeylVector(coeffs, pairings)


def dual_weyl_vector(A, X):
    return _dual_weyl_vector(A, frozenset(X))


def zeta(A, X):
    """The character ζ(β) = (−1)^{β(2ρ^∨_X)}"""
    rho = dual_weyl_vector(A, X)

    def character(beta):
        value = 2 * rho.value(beta)
        if value.denominator != 1:
            raise StructuralError(f"beta(2 rho_X) = {value} is not an integer")
        return -1 if value.numerator % 2 else 1
    return character


def tau_matrix(A, tau):
    p = np.zeros((A.rank, A.rank), dtype=np.int64)
    for i in A.index_set:
        p[tau(i), i] = 1
    return p


def theta_on_roots(A, X, tau):
    """Lattice involution θ = −w_X τ as an integer matrix"""
    return -(longest_element(A, X).matrix @ tau_matrix(A, tau))


def theta_apply(theta, beta):
    return tuple(int(x) for x in theta @ np.asarray(beta, dtype=np.int64))


def orbit_representatives(A, X, tau):
    """I*: smallest node of each τ-orbit on I\\X"""
    rest = [i for i in A.index_set if i not in set(X)]
    return [orbit[0] for orbit in tau.orbits(rest)]


# --- restricted roots --------------------------------------------------------------

@dataclass
class RestrictedData:
    theta: np.ndarray
    projection: tuple            # rows of ½(I − θ) as Fractions
    basis: list                  # integer basis of V^{−θ} (coordinate tuples)
    restricted_roots: list       # distinct nonzero ᾱ, sorted
    multiplicities: dict         # ᾱ -> number of α with that restriction
    heck_generators: dict        # i ∈ I* -> s̃_i


def restrict_root(data_theta, beta):
    image = theta_apply(data_theta, beta)
    return tuple(Fraction(b - t, 2) for b, t in zip(beta, image))


def minus_theta_basis(A, theta):
    basis = EchelonBasis()
    out = []
    ident = np.eye(A.rank, dtype=np.int64)
    for i in A.index_set:
        column = tuple(int(x) for x in (ident - theta)[:, i])
        if basis.add({k: c for k, c in enumerate(column) if c}):
            out.append(column)
    return out


def restricted_data(A, X, tau):
    R = generate_roots(A)
    theta = theta_on_roots(A, X, tau)
    projection = tuple(tuple(Fraction(int(i == j) - int(theta[i, j]), 2) for j in A.index_set)
                       for i in A.index_set)
    counts = {}
    for beta in R.roots:
        bar = restrict_root(theta, beta)
        if any(bar):
            counts[bar] = counts.get(bar, 0) + 1
    generators = {}
    wX = longest_element(A, X)
    for i in orbit_representatives(A, X, tau):
        generators[i] = wX * longest_element(A, set(X) | {i, tau(i)})
    return RestrictedData(theta, projection, minus_theta_basis(A, theta),
                          sorted(counts), counts, generators)


def heck_generators(A, X, tau):
    return restricted_data(A, X, tau).heck_generators


# --- whole Weyl group ------------------------------------------------------------

_WEYL_ORDER = {
    "A": lambda n: factorial(n + 1),
    "B": lambda n: 2 ** n * factorial(n),
    "C": lambda n: 2 ** n * factorial(n),
    "D": lambda n: 2 ** (n - 1) * factorial(n),
    "E": lambda n: {6: 51840, 7: 2903040, 8: 696729600}[n],
    "F": lambda n: 1152,
    "G": lambda n: 12,
}


def weyl_order(A):
    total = 1
    for comp in components(A):
        letter, n = classify_component(A, comp)
        total *= _WEYL_ORDER[letter](n)
    return total


@lru_cache(maxsize=None)
def weyl_group(A, cap=WEYL_ORDER_CAP):
    """All elements of W by breadth-first search on words"""
    order = weyl_order(A)
    if order > cap:
        raise InputError(f"|W({A})| = {order} exceeds the configured cap {cap}")
    logger.debug("enumerating W(%s) of order %d", A, order)
    gens = [simple_reflection(A, i) for i in A.index_set]
    start = identity_element(A)
    seen = {start.key(): start}
    frontier = [start]
    while frontier:
        nxt = []
        for w in frontier:
            for s in gens:
                v = w * s
                k = v.key()
                if k not in seen:
                    seen[k] = v
                    nxt.append(v)
            if len(seen) > order:
                raise StructuralError(f"Weyl group enumeration exceeded |W| = {order}")
        frontier = nxt
    if len(seen) != order:
        raise StructuralError(f"enumerated {len(seen)} Weyl group elements, expected {order}")
    return tuple(seen.values())
