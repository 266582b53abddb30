"""
Structure of 𝔨: derived subalgebra, the filtration attached to a weak
Satake diagram, center, Killing form and the Onsager special case
"""
import logging
from fractions import Fraction
from math import isqrt

from src.chevalley import character_automorphism, chevalley_involution, fixed_space, theta_gamma
from src.decorations import ClassLabel, classify, index_sets, make_decoration, ones, weak_nodes
from src.errors import InputError
from src.k_subalgebra import (SubalgebraBasis, build_k, generators, j_words, standard_basis, subspace,
                              word_label, word_vector)
from src.linalg import EchelonBasis, intersect, intersect_with_coordinates, nullspace, rank, same_span, unit

logger = logging.getLogger(__name__)

SMALL_SEMISIMPLE = {3: "sl2", 6: "sl2+sl2", 8: "sl3"}


def derived_subalgebra(alg, sub):
    """span [𝔨, 𝔨]"""
    rows = sub.basis()
    basis = EchelonBasis()
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            v = alg.bracket(rows[a], rows[b])
            if v:
                basis.add(v)
    return SubalgebraBasis(basis)


def _bracket_span(alg, us, vs):
    basis = EchelonBasis()
    for u in us:
        for v in vs:
            w = alg.bracket(u, v)
            if w:
                basis.add(w)
    return basis


def kprime_check(alg, dec, gamma=None):
    """codim 𝔨′ = |I_diff| + |I_nsf|, with complement h_i − h_τ(i) (i ∈ I_diff) and b_j (j ∈ I_nsf)"""
    k = build_k(alg, dec, gamma)
    kp = derived_subalgebra(alg, k)
    sets = index_sets(dec)
    gens = generators(alg, dec, gamma)
    complement = [{alg.h(i): Fraction(1), alg.h(dec.tau(i)): Fraction(-1)} for i in sets.I_diff]
    complement += [gens.b[j] for j in sets.I_nsf]
    total = EchelonBasis()
    total.extend(kp.basis())
    grew = total.extend(complement)
    expected = len(sets.I_diff) + len(sets.I_nsf)
    codim = k.dimension - kp.dimension
    ok = codim == expected and grew == len(complement) and total.dimension == k.dimension
    return {"k_dimension": k.dimension, "kprime_dimension": kp.dimension, "codimension": codim,
            "expected_codimension": expected, "complement_spans": ok, "ok": ok}


def kprime_basis(alg, dec, gamma=None):
    """Standard basis with the complement elements removed; spans 𝔨′"""
    std = standard_basis(alg, dec, gamma)
    sets = index_sets(dec)
    A = alg.A
    drop = {f"h_{A.nodes[i]}-h_{A.nodes[dec.tau(i)]}" for i in sets.I_diff}
    drop |= {f"b_{A.nodes[j]}" for j in sets.I_nsf}
    kept = [(label, v) for label, v in zip(std.labels, std.vectors) if label not in drop]
    return subspace([v for _, v in kept], [label for label, _ in kept])


# --- weak Satake filtration ----------------------------------------------------------

def weak_node(dec):
    if classify(dec) != ClassLabel.WEAK_SAT:
        raise InputError(f"{dec.describe()} is not a weak Satake diagram")
    nodes = weak_nodes(dec)
    if len(nodes) != 1:
        raise InputError(f"expected a single weak node, found {len(nodes)}")
    return nodes[0]


def _graded_words(alg, dec, gens, i):
    """(α_i-coefficient, b-word vector) for each J-word"""
    return [(xi[i], word_vector(alg, gens.b, w)) for xi, w in j_words(alg, dec).items()]


def _filtration(graded, r):
    return [v for c, v in graded if c >= r]


def _sub_coordinates(alg, i):
    """Basis indices of 𝔤_{I\\{i}}"""
    out = [k for k in range(alg.dim) if not alg.is_cartan(k) and alg.weights[k][i] == 0]
    out += [alg.h(j) for j in alg.A.index_set if j != i]
    return sorted(out)


def weak_structure_report(alg, dec, gamma=None):
    A = alg.A
    i = weak_node(dec)
    gens = generators(alg, dec, gamma)
    k = build_k(alg, dec, gens.gamma)
    graded = _graded_words(alg, dec, gens, i)
    levels = {r: subspace(_filtration(graded, r)) for r in range(0, 5)}
    ideal = levels[1]

    # 𝔨_î and θ_γ on 𝔤_{I\{i}}
    coords = _sub_coordinates(alg, i)
    cset = set(coords)
    k_hat = subspace(intersect_with_coordinates(k.basis(), coords))
    tg = theta_gamma(alg, dec, gens.gamma)
    stable = all(set(tg.column(c)) <= cset for c in coords)
    square = tg @ tg
    involution = all(square.column(c) == unit(c) for c in coords)
    fixed = fixed_space(tg, coords)
    fixed_matches = same_span(fixed, k_hat.basis())

    # ad(b_i) raises the filtration, 𝔨_î preserves it
    raises = True
    for r in range(0, 4):
        for v in _filtration(graded, r):
            if not levels[r + 1].contains(alg.bracket(gens.b[i], v)):
                raises = False
    preserved = all(levels[r].contains(alg.bracket(x, v))
                    for r in (1, 2) for x in k_hat.basis() for v in levels[r].basis())

    # ideal, vector space splitting and lower central series
    is_ideal = all(ideal.contains(alg.bracket(x, v)) for x in k.basis() for v in ideal.basis())
    splitting = EchelonBasis()
    splitting.extend(ideal.basis())
    splitting.extend(k_hat.basis())
    splits = (splitting.dimension == k.dimension == ideal.dimension + k_hat.dimension)
    c2 = _bracket_span(alg, ideal.basis(), ideal.basis())
    c3 = _bracket_span(alg, ideal.basis(), c2.basis())
    c2_in_level2 = all(levels[2].contains(v) for v in c2.basis())
    highest = max(alg.positive, key=sum)

    # γ_i = 0 comparison
    zero_gamma = dict(gens.gamma)
    zero_gamma[i] = Fraction(0)
    k0 = build_k(alg, dec, zero_gamma, allow_zero=True)
    gens0 = generators(alg, dec, zero_gamma, allow_zero=True)
    graded0 = _graded_words(alg, dec, gens0, i)
    graded_dims = [levels[r].dimension for r in range(1, 4)]
    graded_dims0 = [subspace(_filtration(graded0, r)).dimension for r in range(1, 4)]
    return {
        "weak_node": A.nodes[i],
        "k_dimension": k.dimension,
        "filtration_dimensions": graded_dims,
        "k_hat_dimension": k_hat.dimension,
        "theta_gamma_stable": stable,
        "theta_gamma_involution": involution,
        "k_hat_is_fixed_space": fixed_matches,
        "ad_b_i_raises_filtration": raises,
        "k_hat_preserves_filtration": preserved,
        "ideal": is_ideal,
        "splits": splits,
        "lower_central_series": {"c2_nonzero": c2.dimension > 0, "c2_in_level_2": c2_in_level2,
                                 "c3_zero": c3.dimension == 0},
        "highest_root_coefficient": highest[i],
        "zero_gamma_dimension": k0.dimension,
        "zero_gamma_filtration_dimensions": graded_dims0,
        "zero_gamma_structure_constants_match": structure_constants_match(alg, dec, gens.gamma, zero_gamma),
    }


def _standard_vectors(alg, dec, gamma):
    """Standard basis vectors, allowing a zero parameter"""
    A = alg.A
    gens = generators(alg, dec, gamma, allow_zero=True)
    out = [unit(alg.e(xi)) for xi in alg.roots.positive_in(dec.X)]
    out += list(gens.h_theta)
    out += [word_vector(alg, gens.b, w) for w in j_words(alg, dec).values()]
    return out


def structure_constants_match(alg, dec, gamma, other_gamma):
    """Both standard bases are bases with identical structure constants"""
    tables = []
    for g in (gamma, other_gamma):
        vectors = _standard_vectors(alg, dec, g)
        echelon = EchelonBasis(track=True)
        for n, v in enumerate(vectors):
            if not echelon.add(v, tag=n):
                return False
        table = {}
        for a in range(len(vectors)):
            for b in range(a + 1, len(vectors)):
                coords = echelon.input_coordinates(alg.bracket(vectors[a], vectors[b]))
                if coords is None:
                    return False
                table[(a, b)] = coords
        tables.append(table)
    return tables[0] == tables[1]


def bracket_table(alg, dec, gamma=None):
    """Nonzero brackets of standard basis elements, expanded in the standard basis"""
    std = standard_basis(alg, dec, gamma)
    if not std.is_basis:
        raise InputError(f"{dec.describe()} has no standard basis: {std.diagnostic}")
    labels, vectors = std.labels, std.vectors
    echelon = EchelonBasis(track=True)
    for label, v in zip(labels, vectors):
        echelon.add(v, tag=label)
    order = {label: n for n, label in enumerate(labels)}
    rows = []
    for a in range(len(vectors)):
        for b in range(a + 1, len(vectors)):
            coords = echelon.input_coordinates(alg.bracket(vectors[a], vectors[b]))
            if coords:
                terms = " + ".join(f"{c}*{label}" for label, c in sorted(coords.items(), key=lambda t: order[t[0]]))
                rows.append({"x": labels[a], "y": labels[b], "bracket": terms})
    return rows


# --- center, Killing form ----------------------------------------------------------------

def center(alg, sub):
    """Centralizer of 𝔨 in 𝔨"""
    rows = sub.basis()
    n = len(rows)
    if not n:
        return SubalgebraBasis(EchelonBasis())
    brackets = [[alg.bracket(rows[a], rows[b]) for a in range(n)] for b in range(n)]
    system = []
    for b in range(n):
        keys = sorted({k for v in brackets[b] for k in v})
        for k in keys:
            system.append([brackets[b][a].get(k, Fraction(0)) for a in range(n)])
    solutions = nullspace(system, n)
    vectors = []
    for sol in solutions:
        v = {}
        for a, c in enumerate(sol):
            if c:
                for k, x in rows[a].items():
                    v[k] = v.get(k, 0) + c * x
        vectors.append({k: x for k, x in v.items() if x})
    return subspace(vectors)


def center_conjecture_evidence(alg, dec, gamma=None):
    """dim 𝔷, 𝔷 ⊆ 𝔨(i)_2 and whether one J_even-supported vector spans 𝔷; reported, never asserted"""
    k = build_k(alg, dec, gamma)
    z = center(alg, k)
    gens = generators(alg, dec, gamma)
    even_words = [w for xi, w in j_words(alg, dec).items()
                  if all(xi[n] % 2 == 0 for n in alg.A.index_set if n not in dec.X)]
    even_labels = [word_label(alg.A, w) for w in even_words]
    even_span = subspace([word_vector(alg, gens.b, w) for w in even_words])
    report = {"center_dimension": z.dimension, "J_even": even_labels,
              "center_in_J_even_span": all(even_span.contains(v) for v in z.basis()),
              "single_J_even_generator": z.dimension == 1 and even_span.contains(z.basis()[0])}
    if classify(dec) == ClassLabel.WEAK_SAT and len(weak_nodes(dec)) == 1:
        i = weak_nodes(dec)[0]
        level2 = subspace([v for c, v in _graded_words(alg, dec, gens, i) if c >= 2])
        report["center_in_level_2"] = all(level2.contains(v) for v in z.basis())
    return report


def killing_form(alg, sub):
    """Killing form of the subalgebra in its own adjoint representation, on the echelon rows"""
    rows = sub.basis()
    n = len(rows)
    ads = []
    for a in range(n):
        cols = []
        for b in range(n):
            coords = sub.coordinates(alg.bracket(rows[a], rows[b]))
            if coords is None:
                raise InputError("killing_form needs a subalgebra")
            cols.append(coords)
        ads.append([[cols[b][c] for b in range(n)] for c in range(n)])
    form = [[sum(ads[a][r][s] * ads[b][s][r] for r in range(n) for s in range(n)) for b in range(n)]
            for a in range(n)]
    return form


def reductivity_report(alg, sub):
    """Killing rank, semisimplicity and reductivity (𝔨 = 𝔷 ⊕ 𝔨′ with 𝔨′ semisimple)"""
    n = sub.dimension
    form = killing_form(alg, sub)
    krank = rank(form, n) if n else 0
    semisimple = n > 0 and krank == n
    z = center(alg, sub)
    kp = derived_subalgebra(alg, sub)
    kp_semisimple = kp.dimension == 0 or rank(killing_form(alg, kp), kp.dimension) == kp.dimension
    reductive = (not intersect(z.basis(), kp.basis()) and z.dimension + kp.dimension == n and kp_semisimple)
    return {"dimension": n, "killing_form_rank": krank, "is_semisimple": semisimple,
            "is_reductive": reductive, "center_dimension": z.dimension,
            "identified_as": SMALL_SEMISIMPLE.get(n) if semisimple else None}


# --- Onsager case ------------------------------------------------------------------------

def onsager_check(alg):
    """𝔨 for (∅, id) with γ = 1 equals the fixed space of ω"""
    dec = make_decoration(alg.A, ())
    k = build_k(alg, dec)
    fixed = fixed_space(chevalley_involution(alg))
    return same_span(k.basis(), fixed)


def _rational_sqrt(x):
    x = Fraction(x)
    if x <= 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n != x.numerator or d * d != x.denominator:
        return None
    return Fraction(n, d)


def onsager_rescaling_check(alg, gamma):
    """𝔨_γ(∅, id) = Ad(χ_√γ)(𝔨_1(∅, id)); None unless every γ_i is a rational square"""
    dec = make_decoration(alg.A, ())
    roots = {i: _rational_sqrt(g) for i, g in gamma.items()}
    if any(r is None for r in roots.values()):
        return None
    k1 = build_k(alg, dec, ones(dec))
    kg = build_k(alg, dec, gamma)
    chi = character_automorphism(alg, roots)
    return same_span([chi.apply(v) for v in k1.basis()], kg.basis())
