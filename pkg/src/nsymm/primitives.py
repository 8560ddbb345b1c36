"""Lyndon-indexed curves ``d_alpha`` and the primitives ``P_alpha``.

``d_[n]`` is the natural curve.  For a Lyndon word with ``g(alpha) = 1`` and
canonical factorization ``alpha = a1 a2``, ``d_alpha`` is the ray curve of the
first commutator table in direction ``(g(a1), g(a2))`` with ``X`` replaced by
``d_a1`` and ``Y`` by ``d_a2``.  Since ``d_{r alpha} = d_alpha``, every
Lyndon word is first divided by its gcd.

Terms are produced on demand by running the table recursion directly on the
images (substitution is an algebra morphism), which keeps the inner curves
no longer than the entries actually read.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, partial

from . import words, zlattice
from .curves import Curve
from .isobaric import IsobaricRecursion, newton_P
from .ncalgebra import NSYMM, NCPoly, Z, commutator, is_primitive, substitute, verschiebung


def _check_lyndon(alpha) -> tuple[int, ...]:
    alpha = words.composition(alpha)
    if not alpha or not words.is_lyndon(alpha):
        raise ValueError(f"{words.format_composition(alpha)} is not a Lyndon word")
    return alpha


def _reduced(alpha: tuple[int, ...]) -> tuple[int, ...]:
    return words.divide(alpha, words.g_stat(alpha))


@lru_cache(maxsize=None)
def _commutator_recursion(alpha: tuple[int, ...]) -> IsobaricRecursion:
    a1, a2 = words.canonical_factorization(alpha)
    return IsobaricRecursion("L_wl", x=partial(d_term, _reduced(a1)), y=partial(d_term, _reduced(a2)), host=NSYMM)


@lru_cache(maxsize=None)
def d_term(alpha: tuple[int, ...], i: int) -> NCPoly:
    """``d_alpha(i)`` for a Lyndon word ``alpha`` (not validated here)."""
    if i == 0:
        return NCPoly.one(NSYMM)
    alpha = _reduced(alpha)
    if len(alpha) == 1:
        return Z(i)
    a1, a2 = words.canonical_factorization(alpha)
    return _commutator_recursion(alpha).entry(i * words.g_stat(a1), i * words.g_stat(a2))


def build_d(alpha, T: int) -> Curve:
    alpha = _check_lyndon(alpha)
    if T < 1:
        raise ValueError("truncation must be >= 1")
    w = Fraction(words.weight(alpha), words.g_stat(alpha))
    return Curve(NSYMM, tuple(d_term(alpha, i) for i in range(1, T + 1)), w)


@lru_cache(maxsize=None)
def _build_P(alpha: tuple[int, ...]) -> NCPoly:
    g = words.g_stat(alpha)
    p = substitute(newton_P(g), assign_z=partial(d_term, alpha))
    if not p.is_homogeneous(words.weight(alpha)):
        raise AssertionError(f"P_{words.format_composition(alpha)} is not homogeneous")
    if not is_primitive(p):
        raise AssertionError(f"P_{words.format_composition(alpha)} is not primitive")
    return p


def build_P(alpha) -> NCPoly:
    """``P_alpha = P_g(d_alpha)`` with ``g = g(alpha)``."""
    return _build_P(_check_lyndon(alpha))


@lru_cache(maxsize=None)
def _over_recursion(alpha: tuple[int, ...]) -> IsobaricRecursion:
    return IsobaricRecursion("N_wl", x=partial(d_term, alpha), host=NSYMM)


def over_term(alpha: tuple[int, ...], i: int) -> NCPoly:
    g = words.g_stat(alpha)
    if g == 1:
        return d_term(alpha, i)
    return _over_recursion(_reduced(alpha)).entry(i, i * (g - 1))


def over_curve(alpha, T: int) -> Curve:
    """The curve with first term ``P_alpha``: ``d_alpha`` if ``g = 1``, else
    ``N_{i, i(g-1)}(d_alpha)`` in position ``i``."""
    alpha = _check_lyndon(alpha)
    if T < 1:
        raise ValueError("truncation must be >= 1")
    return Curve(NSYMM, tuple(over_term(alpha, i) for i in range(1, T + 1)), Fraction(words.weight(alpha)))


def min_term(p: NCPoly) -> tuple[tuple[int, ...], int]:
    """wll-least word of ``p`` and its coefficient."""
    if not p:
        raise ValueError("the zero polynomial has no minimal term")
    w = min(p.terms(), key=words.wll_key)
    return w, p.coeff(w)


def verschiebung_on_P(r: int, alpha) -> NCPoly:
    """``V_r(P_alpha)``, checked against ``r P_{alpha/r}`` or 0."""
    alpha = _check_lyndon(alpha)
    image = verschiebung(r, build_P(alpha))
    if words.g_stat(alpha) % r == 0:
        expected = build_P(words.divide(alpha, r)).scale(r)
    else:
        expected = NCPoly.zero(NSYMM)
    if image != expected:
        raise AssertionError(f"V_{r}(P_{words.format_composition(alpha)}) breaks the dichotomy")
    return image


def coefficient_row(p: NCPoly, n: int) -> list[int]:
    return [p.coeff(beta) for beta in words.compositions(n)]


def prim_basis_matrix(n: int) -> list[list[int]]:
    """Rows ``P_alpha`` (alpha in LYN_n, wll order) against all compositions of ``n``.

    The square block on Lyndon columns is upper triangular with diagonal
    ``g(alpha)``; this is asserted.
    """
    lyn = words.enumerate_lyndon(n)
    M = [coefficient_row(build_P(a), n) for a in lyn]
    cols = words.compositions(n)
    pos = {beta: j for j, beta in enumerate(cols)}
    for i, a in enumerate(lyn):
        for j, b in enumerate(lyn):
            entry = M[i][pos[b]]
            if j == i and entry != words.g_stat(a):
                raise AssertionError(f"diagonal entry of {words.format_composition(a)} is {entry}")
            if j < i and entry != 0:
                raise AssertionError("Lyndon block is not triangular")
    return M


def lyndon_block(M: list[list[int]], n: int) -> list[list[int]]:
    cols = words.compositions(n)
    idx = [cols.index(a) for a in words.enumerate_lyndon(n)]
    return [[row[j] for j in idx] for row in M]


@lru_cache(maxsize=None)
def _fl_bracket(alpha: tuple[int, ...]) -> NCPoly:
    if len(alpha) == 1:
        return newton_P(alpha[0])
    a1, a2 = words.canonical_factorization(alpha)
    return commutator(_fl_bracket(a1), _fl_bracket(a2))


def fl_bracket(alpha) -> NCPoly:
    """Lyndon bracketing of the Newton primitives ``P_n``."""
    return _fl_bracket(_check_lyndon(alpha))


def fl_matrix(n: int) -> list[list[int]]:
    return [coefficient_row(fl_bracket(a), n) for a in words.enumerate_lyndon(n)]


def change_of_basis(n: int) -> list[list[int]]:
    """Integer ``C`` with ``C * prim_basis_matrix(n) = fl_matrix(n)``."""
    C = zlattice.solve(prim_basis_matrix(n), fl_matrix(n))
    if C is None:
        raise AssertionError(f"Lie brackets of weight {n} leave the span of the P_alpha")
    if any(x.denominator != 1 for row in C for x in row):
        raise AssertionError(f"change of basis in weight {n} is not integral")
    return [[int(x) for x in row] for row in C]


def index_product_formula(n: int) -> int:
    q = math.prod(Fraction(words.k_stat(a), words.g_stat(a)) for a in words.enumerate_lyndon(n))
    if q.denominator != 1:
        raise AssertionError(f"product of k/g over LYN_{n} is not an integer")
    return int(q)


def index_snf(n: int) -> int:
    idx = zlattice.lattice_index(fl_matrix(n), prim_basis_matrix(n))
    if idx == zlattice.INFINITE:
        raise ValueError(f"Lie brackets of weight {n} have lower rank than the primitives")
    return int(idx)


def index_of_FL(n: int) -> int:
    """Index of the Lie span of the ``P_n`` inside the primitives of weight ``n``."""
    if n < 1:
        raise ValueError("weight must be >= 1")
    det = abs(zlattice.determinant(change_of_basis(n)))
    if det == 0:
        raise ValueError(f"Lie brackets of weight {n} have lower rank than the primitives")
    prod = index_product_formula(n)
    snf = index_snf(n)
    if not det == prod == snf:
        raise AssertionError(f"index disagreement in weight {n}: det {det}, product {prod}, snf {snf}")
    return det


def index_row(n: int) -> dict:
    return {
        "n": n,
        "lyndon_count": words.lyndon_count(n),
        "snf_index": index_snf(n),
        "product_formula": index_product_formula(n),
    }
