"""Registry of verification checks grouped into suites.

Each check returns ``(ok, detail)``; the report records the identity it
tests next to the outcome, so a failing line says what broke.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import product
from typing import Callable

from . import curves, freeness, isobaric, primitives, qsymm, words, zlattice
from .ncalgebra import (
    NSYMM,
    TWO_NSYMM,
    NCPoly,
    Z,
    _word_coproduct,
    antipode,
    apply_to_slot,
    counit,
    is_primitive,
    mu,
    reverse,
    verschiebung,
    word_bidegree,
)
from .series import binomial_2curve, inv2, is_2curve, mul2, restrict_direction, x_of_s, y_of_t

SUITES = (
    "orders",
    "hopf-axioms",
    "decomposition1",
    "decomposition2",
    "swl",
    "curves",
    "primitives",
    "verschiebung",
    "qsymm",
    "freeness",
)


@dataclass(frozen=True)
class Params:
    max_weight: int = 6
    truncation: int = 3
    seed: int = 0


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    anchor: str
    fn: Callable[[Params], tuple[bool, str]]


REGISTRY: list[Check] = []


def check(suite: str, name: str, anchor: str):
    def wrap(fn):
        REGISTRY.append(Check(suite, name, anchor, fn))
        return fn

    return wrap


def random_poly(rng: random.Random, max_weight: int, nterms: int = 4, host: str = NSYMM) -> NCPoly:
    terms = {}
    for _ in range(nterms):
        n = rng.randint(1, max_weight)
        comps = words.compositions(n)
        w = comps[rng.randrange(len(comps))]
        if host == TWO_NSYMM:
            w = tuple(a if rng.random() < 0.5 else -a for a in w)
        terms[w] = terms.get(w, 0) + rng.randint(-5, 5)
    return NCPoly(terms, host)


def _first_failure(items, pred) -> str | None:
    for it in items:
        if not pred(it):
            return str(it)
    return None


def _result(failure: str | None, ok_detail: str) -> tuple[bool, str]:
    if failure is None:
        return True, ok_detail
    return False, f"fails at {failure}"


# --- orders ------------------------------------------------------------------------------


def _is_total(items, cmp) -> bool:
    ordered = sorted(items, key=cmp_to_key(cmp))
    for i, x in enumerate(ordered):
        for j, y in enumerate(ordered):
            if cmp(x, y) != (i > j) - (i < j):
                return False
    return True


@check("orders", "composition orders are total", "lex and wll are strict total orders on compositions")
def _orders_total(p: Params):
    comps = [a for n in range(1, min(p.max_weight, 6) + 1) for a in words.compositions(n)]
    ok = _is_total(comps, words.lex_cmp) and _is_total(comps, words.wll_cmp)
    return ok, f"{len(comps)} compositions"


@check("orders", "pair orders are total", "wl and swl are strict total orders on coprime pairs")
def _pairs_total(p: Params):
    pairs = words.coprime_pairs(max(p.max_weight, 8))
    ok = _is_total(pairs, words.wl_cmp) and _is_total(pairs, words.swl_cmp)
    return ok, f"{len(pairs)} pairs"


@check("orders", "swl mirror symmetry", "p <_swl q iff swap(q) <_swl swap(p)")
def _swl_mirror(p: Params):
    pairs = words.coprime_pairs(max(p.max_weight, 10))
    sw = lambda q: (q[1], q[0])
    fail = _first_failure(
        product(pairs, pairs), lambda pq: (words.swl_cmp(*pq) < 0) == (words.swl_cmp(sw(pq[1]), sw(pq[0])) < 0)
    )
    return _result(fail, f"{len(pairs)} pairs")


@check("orders", "canonical factorization", "both factors Lyndon, concatenating to alpha")
def _canon(p: Params):
    def ok(a):
        if len(a) < 2:
            return True
        u, v = words.canonical_factorization(a)
        return u + v == a and words.is_lyndon(u) and words.is_lyndon(v)

    lyn = [a for n in range(1, p.max_weight + 1) for a in words.enumerate_lyndon(n)]
    return _result(_first_failure(lyn, ok), f"{len(lyn)} Lyndon words")


@check("orders", "Lyndon counts", "|LYN_n| = 1, 1, 2, 3, 6, 9, 18, 30 for n = 1..8")
def _lyn_counts(p: Params):
    got = [words.lyndon_count(n) for n in range(1, 9)]
    return got == [1, 1, 2, 3, 6, 9, 18, 30], str(got)


# --- Hopf axioms ---------------------------------------------------------------------------


def _hopf_sample(p: Params) -> list[NCPoly]:
    rng = random.Random(p.seed)
    gens = [Z(n) for n in range(1, p.max_weight + 1)]
    return gens + [random_poly(rng, min(p.max_weight, 5)) for _ in range(20)]


@check("hopf-axioms", "coassociativity", "(mu (x) id) mu = (id (x) mu) mu")
def _coassoc(p: Params):
    def ok(x):
        t = mu(x)
        return apply_to_slot(t, 0, _word_coproduct, 2) == apply_to_slot(t, 1, _word_coproduct, 2)

    return _result(_first_failure(_hopf_sample(p), ok), "generators and random sample")


@check("hopf-axioms", "counit", "(eps (x) id) mu = id = (id (x) eps) mu")
def _counit(p: Params):
    def ok(x):
        t = mu(x)
        left = NCPoly({k[1]: c for k, c in t.terms().items() if not k[0]})
        right = NCPoly({k[0]: c for k, c in t.terms().items() if not k[1]})
        return left == x == right

    return _result(_first_failure(_hopf_sample(p), ok), "generators and random sample")


@check("hopf-axioms", "antipode", "m (iota (x) id) mu = eps")
def _antipode(p: Params):
    def ok(x):
        acc = NCPoly.zero()
        for (a, b), c in mu(x).terms().items():
            acc = acc + (antipode(NCPoly({a: c})) * NCPoly({b: 1}))
        return acc == counit(x)

    gens = [Z(n) for n in range(1, p.max_weight + 1)]
    return _result(_first_failure(gens, ok), f"Z_1..Z_{p.max_weight}")


@check("hopf-axioms", "multiplicativity of mu", "mu(pq) = mu(p) mu(q)")
def _mu_mult(p: Params):
    rng = random.Random(p.seed + 1)
    pairs = [(random_poly(rng, min(p.max_weight, 4), 3), random_poly(rng, min(p.max_weight, 4), 3)) for _ in range(15)]
    return _result(_first_failure(pairs, lambda ab: mu(ab[0] * ab[1]) == mu(ab[0]) * mu(ab[1])), "15 random pairs")


@check("hopf-axioms", "Verschiebung composition", "V_r V_s = V_rs")
def _vrs(p: Params):
    top = 2 * p.max_weight
    cases = [(r, s, n) for n in range(1, top + 1) for r in range(1, n + 1) for s in range(1, n + 1)]
    fail = _first_failure(cases, lambda c: verschiebung(c[0], verschiebung(c[1], Z(c[2]))) == verschiebung(c[0] * c[1], Z(c[2])))
    return _result(fail, f"generators up to weight {top}")


@check("hopf-axioms", "reversal", "rho is an involutive anti-automorphism")
def _rho(p: Params):
    rng = random.Random(p.seed + 2)
    pairs = [(random_poly(rng, 4, 3), random_poly(rng, 4, 3)) for _ in range(15)]
    fail = _first_failure(
        pairs, lambda ab: reverse(reverse(ab[0])) == ab[0] and reverse(ab[0] * ab[1]) == reverse(ab[1]) * reverse(ab[0])
    )
    return _result(fail, "15 random pairs")


# --- decompositions ------------------------------------------------------------------------


def _ray_curves_ok(kind: str, p: Params, v_curve: bool) -> tuple[bool, str]:
    W = max(p.max_weight, 2)
    table = isobaric.build_table(kind, W)
    bad = []
    for a, b in words.coprime_pairs(W):
        c = curves.from_series(restrict_direction(isobaric.ray_factor(table, a, b, W), a, b))
        if not curves.is_curve(c) or (v_curve and not curves.is_V_curve(c)):
            bad.append((a, b))
    return _result(str(bad[0]) if bad else None, f"rays with a+b <= {W}")


@check("decomposition1", "reconstruction", "X(s)^-1 Y(t)^-1 X(s) Y(t) = ordered product of ray factors, no pure powers")
def _dec1(p: Params):
    W = max(p.max_weight, 2)
    return isobaric.reconstruct_first_decomposition(W), f"total degree <= {W}"


@check("decomposition1", "leading commutator", "L_uv - [X_u, Y_v] has only words of length >= 3; L_uv has bidegree (u, v)")
def _dec1_lead(p: Params):
    table = isobaric.build_L_table(max(p.max_weight, 2))

    def ok(uv):
        u, v = uv
        rest = table[uv] - isobaric.leading_commutator(u, v)
        return all(len(w) >= 3 for w in rest.terms()) and all(word_bidegree(w) == uv for w in table[uv].terms())

    return _result(_first_failure(sorted(table.entries), ok), f"{len(table.entries)} entries")


@check("decomposition1", "rays are V-curves", "each ray factor of the commutator decomposition is a V-curve")
def _dec1_rays(p: Params):
    return _ray_curves_ok("L_wl", p, True)


@check("decomposition2", "reconstruction", "Z(s)^-1 Z(t)^-1 Z(s+t) = ordered product of ray factors, no pure powers")
def _dec2(p: Params):
    W = max(p.max_weight, 2)
    return isobaric.reconstruct_second_decomposition(W), f"total degree <= {W}"


@check("decomposition2", "leading term", "N_uv - C(u+v, u) Z_{u+v} has only words of length >= 2; N_uv homogeneous")
def _dec2_lead(p: Params):
    table = isobaric.build_N_table(max(p.max_weight, 2))

    def ok(uv):
        u, v = uv
        rest = table[uv] - Z(u + v).scale(math.comb(u + v, u))
        return all(len(w) >= 2 for w in rest.terms()) and table[uv].is_homogeneous(u + v)

    return _result(_first_failure(sorted(table.entries), ok), f"{len(table.entries)} entries")


@check("decomposition2", "first column", "N_{1,n-1} = P_n")
def _dec2_pn(p: Params):
    top = max(p.max_weight, 10)
    rec = isobaric.symbolic_recursion("N_wl")
    fail = _first_failure(range(2, top + 1), lambda n: rec.entry(1, n - 1) == isobaric.newton_P(n))
    return _result(fail, f"n <= {top}")


@check("decomposition2", "rays are curves", "each ray factor of the second decomposition is a curve")
def _dec2_rays(p: Params):
    return _ray_curves_ok("N_wl", p, False)


@check("swl", "reconstruction", "both symmetric-order decompositions reconstruct, no pure powers")
def _swl(p: Params):
    W = max(p.max_weight, 2)
    a, b = isobaric.reconstruct_swl_decompositions(W)
    return a and b, f"L: {a}, N: {b}, total degree <= {W}"


@check("swl", "reversal symmetry", "rho(L~_uv(X, Y)) = L~_vu(Y, X) and rho(N~_uv) = N~_vu")
def _swl_sym(p: Params):
    W = max(p.max_weight, 2)
    return isobaric.check_swl_symmetry(W), f"total degree <= {W}"


# --- curves --------------------------------------------------------------------------------


@check("curves", "first term primitive", "d(1) is primitive for every curve d")
def _d1_prim(p: Params):
    W = max(p.max_weight, 2)
    L = isobaric.build_L_table(W)
    cs = [curves.ray_curve(a, b, L) for a, b in words.coprime_pairs(W)]
    cs += [primitives.build_d(a, 1) for n in range(1, p.max_weight + 1) for a in words.enumerate_lyndon(n)]
    return _result(_first_failure(cs, lambda c: is_primitive(c(1))), f"{len(cs)} curves")


@check("curves", "inverse is antipode", "z(t)^-1 = (1, iota(Z_1), iota(Z_2), ...)")
def _inv_antipode(p: Params):
    z = curves.natural_curve(min(max(p.truncation, 1), 5) + 2)
    return curves.curve_inv(z) == curves.antipode_sequence(z), f"T = {z.bound}"


@check("curves", "substitution composes", "substituting into a substitution equals substituting the composite")
def _subst_comp(p: Params):
    outer = curves.natural_curve(2)
    mid = primitives.over_curve((2,), 2)
    inner = primitives.over_curve((2,), 4)
    lhs = curves.subst_curve(outer, curves.subst_curve(mid, inner))
    rhs = curves.subst_curve(curves.subst_curve(outer, mid), inner)
    return lhs == rhs and curves.is_curve(lhs), "z, c_[2], c_[2]"


@check("curves", "2-curve closure", "products and inverses of 2-curves are 2-curves")
def _two_curves(p: Params):
    W = min(max(p.max_weight, 2), 6)
    xs, yt = x_of_s(W), y_of_t(W)
    ok = is_2curve(mul2(xs, yt)) and is_2curve(inv2(mul2(yt, xs))) and is_2curve(inv2(binomial_2curve(W)))
    return ok, f"W = {W}"


# terms of weight above this make the coproduct comparison slow
TERM_WEIGHT_CAP = 10


@check("curves", "d_alpha are curves", "d_alpha is a curve")
def _d_curves(p: Params):
    lyn = [a for n in range(1, min(p.max_weight, 5) + 1) for a in words.enumerate_lyndon(n)]

    def ok(a):
        step = words.weight(a) // words.g_stat(a)
        T = max(2, min(p.truncation, TERM_WEIGHT_CAP // step))
        return curves.is_curve(primitives.build_d(a, T))

    return _result(_first_failure(lyn, ok), f"T = 2..{p.truncation}, term weight <= {TERM_WEIGHT_CAP} beyond T = 2")


@check("curves", "curves over primitives", "the curve over P_alpha is a curve with first term P_alpha")
def _over(p: Params):
    lyn = [a for n in range(1, min(p.max_weight, 6) + 1) for a in words.enumerate_lyndon(n)]
    T = 2

    def ok(a):
        c = primitives.over_curve(a, T)
        return curves.is_curve(c) and c(1) == primitives.build_P(a)

    return _result(_first_failure(lyn, ok), f"T = {T}")


# --- primitives ----------------------------------------------------------------------------


def _lyndon_upto(n: int):
    return [a for m in range(1, n + 1) for a in words.enumerate_lyndon(m)]


@check("primitives", "primitivity", "mu(P_alpha) = 1 (x) P_alpha + P_alpha (x) 1")
def _prim(p: Params):
    lyn = _lyndon_upto(p.max_weight)
    return _result(_first_failure(lyn, lambda a: is_primitive(primitives.build_P(a))), f"{len(lyn)} Lyndon words")


@check("primitives", "minimal term of P_alpha", "wll-least word of P_alpha is alpha with coefficient g(alpha)")
def _min_P(p: Params):
    lyn = _lyndon_upto(p.max_weight)
    fail = _first_failure(lyn, lambda a: primitives.min_term(primitives.build_P(a)) == (a, words.g_stat(a)))
    return _result(fail, f"{len(lyn)} Lyndon words")


@check("primitives", "minimal term of d_alpha", "wll-least word of d_alpha(i) is (i/g) alpha with coefficient 1")
def _min_d(p: Params):
    cases = [(a, i) for a in _lyndon_upto(min(p.max_weight, 6)) for i in (1, 2)]

    def ok(c):
        a, i = c
        g = words.g_stat(a)
        return primitives.min_term(primitives.d_term(a, i)) == (words.scale(i, words.divide(a, g)), 1)

    return _result(_first_failure(cases, ok), f"{len(cases)} cases")


@check("primitives", "scaling invariance", "d_{r alpha} = d_alpha")
def _scaling(p: Params):
    T = max(p.truncation, 2)
    cases = [(a, r) for a in _lyndon_upto(2) for r in (2, 3)]
    fail = _first_failure(
        cases, lambda c: primitives.build_d(words.scale(c[1], c[0]), T).terms == primitives.build_d(c[0], T).terms
    )
    return _result(fail, f"T = {T}")


@check("primitives", "Newton primitives", "closed form equals recursion; Q_n = rho(P_n); both primitive")
def _newton(p: Params):
    top = max(p.max_weight, 8)

    def ok(n):
        P = isobaric.newton_P(n)
        return P == isobaric.newton_P_closed(n) and isobaric.newton_Q(n) == reverse(P) and is_primitive(P)

    return _result(_first_failure(range(1, top + 1), ok), f"n <= {top}")


@check("primitives", "index table", "index of the Lie span of the P_n = prod k(alpha)/g(alpha) = SNF index")
def _index(p: Params):
    rows = [primitives.index_row(n) for n in range(1, p.max_weight + 1)]
    ok = all(r["snf_index"] == r["product_formula"] for r in rows)
    expected = [1, 1, 2, 6, 576, 69120]
    ok = ok and [r["snf_index"] for r in rows][:6] == expected[: len(rows)]
    return ok, " ".join(str(r["snf_index"]) for r in rows)


@check("primitives", "integral basis", "the P_alpha span the integer kernel of the reduced coproduct")
def _integral(p: Params):
    fail = _first_failure(range(1, p.max_weight + 1), freeness.check_integral_basis)
    return _result(fail, f"weights <= {p.max_weight}")


# --- Verschiebung --------------------------------------------------------------------------


@check("verschiebung", "dichotomy", "V_r(P_alpha) = r P_{alpha/r} if r | g(alpha), else 0")
def _vdich(p: Params):
    cases = [(r, a) for a in _lyndon_upto(p.max_weight) for r in range(1, max(words.weight(a), 6) + 1)]

    def ok(c):
        try:
            primitives.verschiebung_on_P(*c)
            return True
        except AssertionError:
            return False

    return _result(_first_failure(cases, ok), f"{len(cases)} cases")


@check("verschiebung", "image lattice", "V_r Prim_{rn} = r Prim_n, compared by Hermite normal form")
def _vlattice(p: Params):
    cases = [(r, n) for r in range(2, p.max_weight + 1) for n in range(1, p.max_weight + 1) if r * n <= p.max_weight]
    fail = _first_failure(cases, lambda c: freeness.check_verschiebung_lattice(*c))
    return _result(fail, f"{len(cases)} (r, n) pairs")


# --- QSymm ---------------------------------------------------------------------------------


def _comps_upto(n: int):
    return [a for m in range(0, n + 1) for a in words.compositions(m)]


@check("qsymm", "commutative algebra", "the overlapping shuffle is commutative and associative")
def _q_comm(p: Params):
    top = min(p.max_weight, 4)
    cs = _comps_upto(top)
    comm = _first_failure(
        [(a, b) for a in cs for b in cs if sum(a) + sum(b) <= top + 2], lambda ab: qsymm.osh_mul(*ab) == qsymm.osh_mul(ab[1], ab[0])
    )
    rng = random.Random(p.seed + 3)
    small = _comps_upto(min(p.max_weight, 5))
    triples = [tuple(small[rng.randrange(len(small))] for _ in range(3)) for _ in range(20)]
    E = qsymm.QElem.basis

    def assoc(t):
        a, b, c = t
        return (E(a) * E(b)) * E(c) == E(a) * (E(b) * E(c))

    fail = comm or _first_failure(triples, assoc)
    return _result(fail, "exhaustive pairs, random triples")


@check("qsymm", "term count", "the product of lengths m, n has sum_k (m+n-k)!/((m-k)!(n-k)!k!) terms")
def _q_count(p: Params):
    cases = [(m, n) for m in range(4) for n in range(4)]

    def ok(mn):
        m, n = mn
        a, b = tuple(range(1, m + 1)), tuple(range(10, 10 + n))
        return sum(qsymm.osh_mul(a, b).terms().values()) == qsymm.osh_term_count(m, n)

    return _result(_first_failure(cases, ok), "lengths <= 3")


@check("qsymm", "two product descriptions agree", "slot form = matrix form of the overlapping shuffle")
def _q_two(p: Params):
    cs = _comps_upto(p.max_weight)
    pairs = [(a, b) for a in cs for b in cs if sum(a) + sum(b) <= p.max_weight]
    fail = _first_failure(pairs, lambda ab: qsymm.osh_mul(*ab) == qsymm.osh_mul_matrices(list(ab)))
    return _result(fail, f"{len(pairs)} pairs")


@check("qsymm", "Frobenius mod p", "f_p(alpha) = alpha^p mod p")
def _q_fp(p: Params):
    cases = [(q, a) for q in (2, 3) for a in _comps_upto(min(p.max_weight, 4)) if a]
    return _result(_first_failure(cases, lambda c: qsymm.check_fp_power(*c)), f"{len(cases)} cases")


@check("qsymm", "Verschiebung is dual to Frobenius", "<V_r x, beta> = <x, f_r beta>")
def _q_vf(p: Params):
    rng = random.Random(p.seed + 4)
    top = min(p.max_weight, 6)
    bad = None
    for r in (2, 3):
        for n in range(1, top // r + 1):
            for _ in range(5):
                x = NCPoly({words.compositions(r * n)[rng.randrange(2 ** (r * n - 1))]: rng.randint(-3, 3) for _ in range(4)})
                for beta in words.compositions(n):
                    if qsymm.pairing(verschiebung(r, x), qsymm.QElem.basis(beta)) != qsymm.pairing(
                        x, qsymm.QElem.basis(qsymm.frobenius(r, beta))
                    ):
                        bad = bad or (r, beta)
    return _result(None if bad is None else str(bad), f"weights <= {top}")


@check("qsymm", "coproduct is dual to product", "<mu(x), alpha (x) beta> = <x, alpha beta>")
def _q_mu(p: Params):
    top = min(p.max_weight, 5)
    bad = None
    for n in range(1, top + 1):
        for i in range(n + 1):
            for a in words.compositions(i):
                for b in words.compositions(n - i):
                    prod = qsymm.osh_mul(a, b)
                    for gamma in words.compositions(n):
                        x = NCPoly({gamma: 1})
                        if qsymm.pairing_tensor(mu(x), {(a, b): 1}) != qsymm.pairing(x, prod):
                            bad = bad or (gamma, a, b)
    return _result(None if bad is None else str(bad), f"weights <= {top}")


# --- freeness ------------------------------------------------------------------------------


@check("freeness", "coproduct of ordered products", "mu(P^f) = sum_{f1+f2=f} P^f1 (x) P^f2")
def _pf(p: Params):
    fs = [f for n in range(1, min(p.max_weight, 5) + 1) for f in freeness.support_functions(n)]
    return _result(_first_failure(fs, freeness.check_pf_coproduct), f"{len(fs)} support functions")


@check("freeness", "unimodularity", "the P^f of weight n form a Z-basis: |det| = 1")
def _pf_det(p: Params):
    def ok(n):
        try:
            freeness.pf_basis_matrix(n)
            return True
        except AssertionError:
            return False

    return _result(_first_failure(range(1, p.max_weight + 1), ok), f"weights <= {p.max_weight}")


@check("freeness", "reduced coproduct operators", "v_n kills P^g for |g| < n and symmetrizes P^f for |f| = n")
def _vops(p: Params):
    W = min(p.max_weight, 5)
    return freeness.check_v_operators(W, 3), f"weights <= {W}, |f| <= 3"


@check("freeness", "rank series", "(1-t) prod (1-t^n)^beta_n = 1-2t and rank NSymm_n = 2^(n-1)")
def _ranks(p: Params):
    N = max(p.max_weight, 8)
    r = freeness.rank_series_report(N)
    return freeness.rank_series_check(N), f"beta = {r['beta']}"


@check("freeness", "primitive lattice is pure", "the span of the P_alpha is a pure sublattice")
def _pure(p: Params):
    def ok(n):
        return zlattice.is_pure_sublattice(primitives.prim_basis_matrix(n), 2 ** (n - 1))

    return _result(_first_failure(range(1, p.max_weight + 1), ok), f"weights <= {p.max_weight}")


# --- running -------------------------------------------------------------------------------


def checks_for(suite: str) -> list[Check]:
    if suite == "all":
        return [c for s in SUITES for c in REGISTRY if c.suite == s]
    if suite not in SUITES:
        raise KeyError(suite)
    return [c for c in REGISTRY if c.suite == suite]


def run_suite(suite: str, params: Params = Params()) -> dict:
    out = []
    for c in checks_for(suite):
        try:
            ok, detail = c.fn(params)
        except Exception as exc:  # a crash is reported as a failing check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(
            {
                "name": f"{c.suite}/{c.name}",
                "paper_anchor": c.anchor,
                "status": "pass" if ok else "fail",
                "detail": detail,
            }
        )
    return {"suite": suite, "checks": out}


def report_passed(report: dict) -> bool:
    return all(c["status"] == "pass" for c in report["checks"])
