"""
The subalgebra 𝔨 generated by 𝔤_X, 𝔥^θ and b_i = f_i + γ_i θ(f_i)

Lie closure over exact rationals, the standard basis built from bracket
words, the Serre-type relations between the b_i and the four equivalent
conditions for a decoration and parameter choice to be well behaved.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from src.chevalley import chi_gamma, h_theta_basis, theta, zeta_values
from src.decorations import in_gamma, is_gsat, ones, check_gamma
from src.errors import InputError, StructuralError, VerificationFailure
from src.linalg import EchelonBasis, add, combine, intersect_with_coordinates, max_numerator, same_span, scale, unit
from src.roots import height, longest_element, orbit_representatives, simple_root, theta_apply, theta_on_roots

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def p_coeff(M, r, m):
    """Integers p^{(r,m)} for the Serre sum; p^{(0,m)} = −1 and zero for r > m/2"""
    if r > m // 2:
        return 0
    if r == 0:
        return -1
    return p_coeff(M, r, m - 1) + (m - 1) * (M + 1 - m) * p_coeff(M, r - 1, m - 2)


def serre_degree(A, i, j):
    """M_ij = 1 − a_ij"""
    return 1 - A.a[i][j]


# --- generators and closure ---------------------------------------------------------

@dataclass
class KGenerators:
    b: dict           # i -> b_i
    e: dict           # i ∈ X -> e_i
    h_theta: list
    gamma: dict

    def all(self):
        return list(self.e.values()) + list(self.h_theta) + list(self.b.values())


def generators(alg, dec, gamma=None, allow_zero=False):
    """e_i, f_i (i ∈ X), the 𝔥^θ basis and b_i (i ∈ I\\X)"""
    gamma = ones(dec) if gamma is None else check_gamma(dec, gamma, allow_zero)
    A = alg.A
    t = theta(alg, dec)
    b, e = {}, {}
    for i in A.index_set:
        fi = alg.f(simple_root(A, i))
        if i in dec.X:
            b[i] = unit(fi)
            e[i] = unit(alg.e(simple_root(A, i)))
        else:
            b[i] = add(unit(fi), t.column(fi), gamma[i])
    return KGenerators(b, e, h_theta_basis(alg, dec), gamma)


@dataclass
class SubalgebraBasis:
    """Echelonized span; ``labels`` is set when the rows come from named vectors"""
    echelon: EchelonBasis
    labels: list = None
    vectors: list = None
    is_subalgebra: bool = False

    @property
    def dimension(self):
        return self.echelon.dimension

    def basis(self):
        return self.echelon.basis()

    def contains(self, v):
        return self.echelon.contains(v)

    def coordinates(self, v):
        return self.echelon.coordinates(v)

    def __len__(self):
        return self.dimension


def subspace(vectors, labels=None):
    basis = EchelonBasis()
    basis.extend(vectors)
    return SubalgebraBasis(basis, labels, list(vectors) if labels is not None else None)


def lie_closure(alg, gens):
    """Span of all iterated brackets of the generators"""
    basis = EchelonBasis()
    independent = [g for g in gens if basis.add(g)]
    queue = list(independent)
    while queue:
        v = queue.pop()
        for g in independent:
            w = alg.bracket(g, v)
            if w and basis.add(w):
                queue.append(w)
    return SubalgebraBasis(basis)


def certify_closure(alg, sub):
    """Every bracket of basis rows reduces to zero against the basis"""
    rows = sub.basis()
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            if not sub.contains(alg.bracket(rows[a], rows[b])):
                return False
    sub.is_subalgebra = True
    return True


def build_k(alg, dec, gamma=None, allow_zero=False, certify=True):
    gens = generators(alg, dec, gamma, allow_zero)
    sub = lie_closure(alg, gens.all())
    if certify and not certify_closure(alg, sub):
        raise StructuralError("Lie closure is not closed under the bracket")
    logger.debug("k for %s has dimension %d", dec.describe(), sub.dimension)
    return sub


# --- words and the standard basis -----------------------------------------------------

def word_label(A, word, prefix="b"):
    labels = [str(A.nodes[i]) for i in word]
    if len(labels) == 1:
        return f"{prefix}_{labels[0]}"
    return f"{prefix}_({','.join(labels)})"


def j_words(alg, dec):
    """One bracket word per positive root, letters of I\\X tried before those of X"""
    A = alg.A
    priority = [i for i in A.index_set if i not in dec.X] + sorted(dec.X)
    words = {}
    for xi in alg.positive:
        if height(xi) == 1:
            words[xi] = (xi.index(1),)
            continue
        for i in priority:
            rest = list(xi)
            rest[i] -= 1
            rest = tuple(rest)
            if alg.roots.is_positive_root(rest):
                words[xi] = (i,) + words[rest]
                break
    return words


def j_x_words(alg, dec, words=None):
    words = j_words(alg, dec) if words is None else words
    return {xi: w for xi, w in words.items() if all(i in dec.X for i in w)}


def word_vector(alg, letters, word):
    """ad(x_{w1}) ⋯ ad(x_{w(l−1)})(x_{wl}) for letter vectors x"""
    v = letters[word[-1]]
    for i in reversed(word[:-1]):
        v = alg.bracket(letters[i], v)
    return v


def f_letters(alg):
    return {i: unit(alg.f(simple_root(alg.A, i))) for i in alg.A.index_set}


def e_letters(alg):
    return {i: unit(alg.e(simple_root(alg.A, i))) for i in alg.A.index_set}


@dataclass
class StandardBasis:
    blocks: dict               # block name -> list of (label, vector)
    words: dict                # root -> word
    independent: bool
    spans_k: bool
    k_dimension: int
    diagnostic: str = None

    @property
    def is_basis(self):
        return self.independent and self.spans_k

    @property
    def labels(self):
        return [label for block in self.blocks.values() for label, _ in block]

    @property
    def vectors(self):
        return [v for block in self.blocks.values() for _, v in block]

    def as_subalgebra(self):
        return subspace(self.vectors, self.labels)

    def to_dict(self):
        return {"labels": self.labels, "is_basis": self.is_basis, "independent": self.independent,
                "spans_k": self.spans_k, "k_dimension": self.k_dimension, "diagnostic": self.diagnostic}


def standard_basis(alg, dec, gamma=None, k=None):
    """e-words on J_X, h_i (i ∈ X), h_i − h_τ(i) and b-words on J; diagnostic when not direct"""
    A = alg.A
    gens = generators(alg, dec, gamma)
    words = j_words(alg, dec)
    xwords = j_x_words(alg, dec, words)
    elet = e_letters(alg)
    blocks = {
        "n_plus_X": [(word_label(A, w, "e"), word_vector(alg, elet, w)) for w in xwords.values()],
        "h_X": [(f"h_{A.nodes[i]}", unit(alg.h(i))) for i in sorted(dec.X)],
        "h_diff": [],
        "b_words": [(word_label(A, w), word_vector(alg, gens.b, w)) for w in words.values()],
    }
    for i in orbit_representatives(A, dec.X, dec.tau):
        if dec.tau(i) != i:
            blocks["h_diff"].append((f"h_{A.nodes[i]}-h_{A.nodes[dec.tau(i)]}",
                                     {alg.h(i): Fraction(1), alg.h(dec.tau(i)): Fraction(-1)}))
    k = build_k(alg, dec, gens.gamma) if k is None else k
    vectors = [v for block in blocks.values() for _, v in block]
    span = subspace(vectors)
    independent = span.dimension == len(vectors)
    spans_k = span.dimension == k.dimension and all(k.contains(v) for v in span.basis())
    diagnostic = None
    if not (independent and spans_k):
        reasons = []
        if not is_gsat(dec):
            reasons.append("decoration is not generalized Satake")
        if not in_gamma(dec, gens.gamma):
            reasons.append("gamma is outside Gamma")
        diagnostic = (f"standard vectors: {len(vectors)}, independent rank {span.dimension}, "
                      f"dim k {k.dimension}" + (f" ({'; '.join(reasons)})" if reasons else ""))
    return StandardBasis(blocks, words, independent, spans_k, k.dimension, diagnostic)


def lowest_weight_check(alg, dec, gamma=None):
    """π_{−α_w}(b_w) = f_w for every J-word"""
    gens = generators(alg, dec, gamma)
    flet = f_letters(alg)
    for xi, w in j_words(alg, dec).items():
        b = word_vector(alg, gens.b, w)
        f = word_vector(alg, flet, w)
        k = alg.f(xi)
        if not f or b.get(k) != f.get(k):
            return False
    return True


# --- Serre-type relations ----------------------------------------------------------------

def _iterate(alg, x, y, m):
    for _ in range(m):
        y = alg.bracket(x, y)
    return y


def _lattice_data(alg, dec, i):
    lattice = theta_on_roots(alg.A, dec.X, dec.tau)
    return theta_apply(lattice, simple_root(alg.A, i))


def _is_negative_root(alg, beta):
    return alg.roots.is_negative_root(beta)


def serre_case(alg, dec, i, j):
    """The applicable row of the Serre table for ad(b_i)^{M_ij}(b_j)"""
    A = alg.A
    t = _lattice_data(alg, dec, i)
    ai, aj = simple_root(A, i), simple_root(A, j)
    t_ij = tuple(a + b + c for a, b, c in zip(t, ai, aj))
    t_j = tuple(a + c for a, c in zip(t, aj))
    t_i = tuple(a + b for a, b in zip(t, ai))
    a = A.a[i][j]
    zero = tuple(0 for _ in A.index_set)
    j_white = j not in dec.X
    if _is_negative_root(alg, t_ij) and a == -1:
        return "n_plus_X_double"
    if t_ij == zero and a == -3:
        return "e_j"
    if t_ij == zero and a == -1:
        return "h_sum"
    if j_white and _is_negative_root(alg, t_j) and a == 0:
        return "n_plus_X_single"
    if j_white and t_j == zero and a == 0:
        return "h_diff"
    if j_white and t_j == zero and a == -1:
        return "b_i"
    if j_white and t_i == zero:
        return "p_sum"
    return "zero"


def _positive_in_x(alg, dec, v):
    """v lies in 𝔫⁺_X"""
    for k in v:
        if k >= alg.npos or any(c and n not in dec.X for n, c in enumerate(alg.weights[k])):
            return False
    return True


@dataclass
class SerreReport:
    i: int
    j: int
    M: int
    case: str
    lhs: dict
    rhs: dict
    residual: dict
    in_n_plus_X: bool = True
    e_word_expansion: dict = None

    @property
    def ok(self):
        return not self.residual and self.in_n_plus_X

    @property
    def max_residual(self):
        return max_numerator(self.residual)

    def to_dict(self, A):
        return {"i": A.nodes[self.i], "j": A.nodes[self.j], "M": self.M, "case": self.case,
                "residual_zero": not self.residual, "max_residual": self.max_residual,
                "in_n_plus_X": self.in_n_plus_X, "e_word_expansion": self.e_word_expansion}


def _e_word_expansion(alg, dec, v):
    """Coordinates of v in the e-words on J_X, keyed by label"""
    A = alg.A
    elet = e_letters(alg)
    echelon = EchelonBasis(track=True)
    for w in j_x_words(alg, dec).values():
        echelon.add(word_vector(alg, elet, w), tag=word_label(A, w, "e"))
    coords = echelon.input_coordinates(v)
    if coords is None:
        return None
    return {label: str(c) for label, c in sorted(coords.items())}


def serre_eval(alg, dec, gamma, i, j, gens=None):
    """ad(b_i)^{M_ij}(b_j) against the closed form of its Serre-table row"""
    A = alg.A
    if i == j:
        raise InputError("serre_eval needs i != j")
    gens = generators(alg, dec, gamma) if gens is None else gens
    g = gens.gamma
    M = serre_degree(A, i, j)
    lhs = _iterate(alg, gens.b[i], gens.b[j], M)
    case = serre_case(alg, dec, i, j)
    t = theta(alg, dec)
    z = zeta_values(A, dec.X)
    fi, fj = alg.f(simple_root(A, i)), alg.f(simple_root(A, j))
    theta_fi = t.column(fi)
    rhs = {}
    if case == "n_plus_X_double":
        inner = alg.bracket(theta_fi, alg.bracket_basis(fi, fj))
        rhs = scale(inner, (1 + z[i]) * g[i])
    elif case == "e_j":
        rhs = unit(alg.e(simple_root(A, j)), -18 * g[i] ** 2)
    elif case == "h_sum":
        rhs = {alg.h(i): -2 * g[i], alg.h(j): -g[i]}
    elif case == "n_plus_X_single":
        rhs = scale(alg.bracket(theta_fi, unit(fj)), g[i] + z[i] * g[j])
    elif case == "h_diff":
        rhs = combine([(g[j], unit(alg.h(i))), (-g[i], unit(alg.h(j)))])
    elif case == "b_i":
        rhs = scale(gens.b[i], 2 * (g[i] + g[j]))
    elif case == "p_sum":
        rhs = combine((p_coeff(M, r, M) * g[i] ** r, _iterate(alg, gens.b[i], gens.b[j], M - 2 * r))
                      for r in range(1, M // 2 + 1))
    report = SerreReport(i, j, M, case, lhs, rhs, add(lhs, rhs, -1))
    if case.startswith("n_plus_X"):
        report.in_n_plus_X = _positive_in_x(alg, dec, rhs)
        report.e_word_expansion = _e_word_expansion(alg, dec, rhs)
    return report


def serre_battery(alg, dec, gamma=None):
    """serre_eval over all ordered pairs i ≠ j"""
    gens = generators(alg, dec, gamma)
    return [serre_eval(alg, dec, gens.gamma, i, j, gens)
            for i in alg.A.index_set for j in alg.A.index_set if i != j]


# --- the three adjoint-action identities ----------------------------------------------------

@dataclass
class OracleResult:
    identity: str
    case: str
    residual: dict

    @property
    def ok(self):
        return not self.residual


def appendix_oracle(alg, dec, gamma, i, j, m):
    """ad(b_i)^m(b_j) minus its closed form, selected by membership of i and j in X"""
    A = alg.A
    if i == j:
        raise InputError("the adjoint-action identities need i != j")
    gens = generators(alg, dec, gamma)
    g = gens.gamma
    t = theta(alg, dec)
    z = zeta_values(A, dec.X)
    ai, aj = simple_root(A, i), simple_root(A, j)
    fi, fj = alg.f(ai), alg.f(aj)
    lhs = _iterate(alg, gens.b[i], gens.b[j], m)
    F = _iterate(alg, unit(fi), unit(fj), m)
    theta_F = t.apply(F)
    wxa = longest_element(A, dec.X).apply(ai)
    case = "otherwise"
    L = {}
    if i in dec.X:
        identity = "black_i"
        if m < 1:
            raise InputError("m must be at least 1")
        rhs = add(F, theta_F, g[j]) if j not in dec.X else F
        case = "white_j" if j not in dec.X else "black_j"
    elif j in dec.X:
        identity = "white_i_black_j"
        if m < 1:
            raise InputError("m must be at least 1")
        a = A.a[i][j]
        diff = tuple(w - x - y for w, x, y in zip(wxa, ai, aj))
        plus_j = tuple(x + y for x, y in zip(ai, aj))
        if dec.tau(i) == i and m == 2 and alg.roots.is_positive_root(diff):
            case = "n_plus_X"
            L = scale(alg.bracket(t.column(fi), alg.bracket_basis(fi, fj)), (1 + z[i]) * g[i])
        elif dec.tau(i) == i and wxa == plus_j and m == 2:
            case = "cartan"
            L = {alg.h(i): -2 * g[i]}
            L = add(L, unit(alg.h(j)), g[i] * a)
        elif dec.tau(i) == i and wxa == plus_j and m == 3:
            case = "f_i"
            L = scale(add(unit(fi), t.column(fi), -g[i]), -3 * (2 + a) * g[i])
        elif dec.tau(i) == i and wxa == plus_j and m == 4:
            case = "e_j"
            L = unit(alg.e(aj), -6 * a * (2 + a) * g[i] ** 2)
        rhs = add(add(F, theta_F, g[i] ** m), L)
    else:
        identity = "white_i_white_j"
        a = A.a[i][j]
        M = serre_degree(A, i, j)
        diff = tuple(w - x for w, x in zip(wxa, ai))
        if dec.tau(i) == j and m == 1 and alg.roots.is_positive_root(diff):
            case = "n_plus_X"
            L = scale(alg.bracket(t.column(fi), unit(fj)), g[i] + z[i] * g[j])
        elif dec.tau(i) == j and wxa == ai and m == 1:
            case = "cartan"
            L = combine([(g[j], unit(alg.h(i))), (-g[i], unit(alg.h(j)))])
        elif dec.tau(i) == j and wxa == ai and m == 2:
            case = "f_i_e_j"
            L = combine([(2 * (g[j] - a * g[i]), unit(fi)),
                         (-2 * g[i] * (g[i] - a * g[j]), unit(alg.e(aj)))])
        elif dec.tau(i) == i and wxa == ai:
            case = "p_sum"
            L = combine((p_coeff(M, r, m) * g[i] ** r, _iterate(alg, gens.b[i], gens.b[j], m - 2 * r))
                        for r in range(1, m // 2 + 1))
        rhs = add(add(F, theta_F, g[i] ** m * g[j]), L)
    return OracleResult(identity, case, add(lhs, rhs, -1))


# --- the four equivalent conditions ------------------------------------------------------------

def _n_plus_x(alg, dec):
    return [unit(alg.e(xi)) for xi in alg.roots.positive_in(dec.X)]


def _short_words(i, j, M):
    """Words in the letters i, j with at most M copies of i and one j, other than the (M, 1) ones"""
    out = [(i,), (j,)]
    for c in range(1, M):
        for w in set(permutations([i] * c + [j])):
            out.append(w)
    return out


def good_serre_check(alg, dec, gens):
    """ad(b_i)^{M_ij}(b_j) ∈ 𝔫⁺_X ⊕ 𝔥^θ ⊕ span of b-words of weight below λ_ij, for all pairs"""
    A = alg.A
    base = _n_plus_x(alg, dec) + list(gens.h_theta)
    failures = []
    for i in A.index_set:
        for j in A.index_set:
            if i == j:
                continue
            M = serre_degree(A, i, j)
            span = EchelonBasis()
            span.extend(base)
            span.extend(word_vector(alg, gens.b, w) for w in _short_words(i, j, M))
            if not span.contains(_iterate(alg, gens.b[i], gens.b[j], M)):
                failures.append((A.nodes[i], A.nodes[j]))
    return not failures, failures


def dimension_formula(alg, dec):
    """|Φ_X|/2 + |I| − |I*| + |Φ|/2"""
    A = alg.A
    return (len(alg.roots.positive_in(dec.X)) + A.rank
            - len(orbit_representatives(A, dec.X, dec.tau)) + alg.npos)


def dim_check(alg, dec, basis):
    return basis.dimension == dimension_formula(alg, dec)


def intersection_with_cartan(alg, k):
    return intersect_with_coordinates(k.basis(), alg.cartan_indices)


def _cartan_witness(alg, dec, k, gamma):
    """2h_i + h_j or γ_j h_i − γ_i h_j in 𝔨 but outside 𝔥^θ"""
    A = alg.A
    h_theta = EchelonBasis()
    h_theta.extend(h_theta_basis(alg, dec))
    for i in A.index_set:
        for j in A.index_set:
            if i == j:
                continue
            candidates = [("2h_i+h_j", {alg.h(i): Fraction(2), alg.h(j): Fraction(1)})]
            if i not in dec.X and j not in dec.X:
                candidates.append(("gamma_j h_i - gamma_i h_j",
                                   combine([(gamma[j], unit(alg.h(i))), (-gamma[i], unit(alg.h(j)))])))
            for name, v in candidates:
                if v and k.contains(v) and not h_theta.contains(v):
                    return {"form": name, "i": A.nodes[i], "j": A.nodes[j],
                            "vector": {alg.label(n): str(c) for n, c in v.items()}}
    return None


@dataclass
class MainTheoremReport:
    conditions: dict = field(default_factory=dict)
    k_dimension: int = 0
    serre_failures: list = field(default_factory=list)
    witness: dict = None

    @property
    def agree(self):
        return len(set(self.conditions.values())) == 1

    def to_dict(self):
        return {"conditions": dict(self.conditions), "agree": self.agree, "k_dimension": self.k_dimension,
                "serre_failures": [list(p) for p in self.serre_failures], "witness": self.witness}


def main_theorem_report(alg, dec, gamma=None, strict=True):
    """The four equivalent conditions; disagreement raises VerificationFailure when strict"""
    gens = generators(alg, dec, gamma)
    k = build_k(alg, dec, gens.gamma)
    report = MainTheoremReport(k_dimension=k.dimension)
    report.conditions["i"] = bool(is_gsat(dec)) and in_gamma(dec, gens.gamma)
    ok, failures = good_serre_check(alg, dec, gens)
    report.conditions["ii"] = ok
    report.serre_failures = failures
    std = standard_basis(alg, dec, gens.gamma, k)
    report.conditions["iii"] = std.is_basis
    report.conditions["iv"] = same_span(intersection_with_cartan(alg, k), h_theta_basis(alg, dec))
    if not report.conditions["iv"]:
        report.witness = _cartan_witness(alg, dec, k, gens.gamma)
    if strict and not report.agree:
        raise VerificationFailure(f"equivalent conditions disagree for {dec.describe()}", report.to_dict())
    return report


def chi_gamma_labels(alg, dec, gamma):
    """χ_γ on simple roots keyed by node label, for reporting"""
    return {str(alg.A.nodes[i]): str(v) for i, v in chi_gamma(dec, gamma).items()}
