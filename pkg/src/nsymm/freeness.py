"""Ordered products of curve terms over Lyndon words, and integral-basis checks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Mapping

from . import words, zlattice
from .ncalgebra import NSYMM, NCPoly, Tensor, _word_coproduct, apply_to_slot, mu, tensor, tensor_sum, verschiebung
from .primitives import build_P, coefficient_row, over_term, prim_basis_matrix


@dataclass(frozen=True)
class SupportFunction:
    """Finitely supported map from Lyndon words to positive multiplicities.

    Stored as ``(alpha, f(alpha))`` pairs in wll order of ``alpha``.
    """

    items: tuple[tuple[tuple[int, ...], int], ...]

    @classmethod
    def of(cls, assignment: Mapping[Iterable[int], int] | Iterable[tuple[Iterable[int], int]]) -> "SupportFunction":
        pairs = assignment.items() if isinstance(assignment, Mapping) else assignment
        acc: dict[tuple[int, ...], int] = {}
        for alpha, k in pairs:
            alpha = words.composition(alpha)
            if not words.is_lyndon(alpha):
                raise ValueError(f"{words.format_composition(alpha)} is not a Lyndon word")
            if k < 0:
                raise ValueError("multiplicities are nonnegative")
            acc[alpha] = acc.get(alpha, 0) + int(k)
        return cls(tuple(sorted(((a, k) for a, k in acc.items() if k), key=lambda ak: words.wll_key(ak[0]))))

    @property
    def weight(self) -> int:
        return sum(k * words.weight(a) for a, k in self.items)

    @property
    def size(self) -> int:
        return sum(k for _, k in self.items)

    def __call__(self, alpha) -> int:
        return dict(self.items).get(tuple(alpha), 0)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{words.format_composition(a)}->{k}" for a, k in self.items) + "}"


@lru_cache(maxsize=None)
def support_functions(n: int) -> tuple[SupportFunction, ...]:
    """All support functions of weight ``n`` (``2^(n-1)`` of them for ``n >= 1``)."""
    lyn = [a for m in range(1, n + 1) for a in words.enumerate_lyndon(m)]
    out = []

    def rec(i: int, remaining: int, chosen: list):
        if remaining == 0:
            out.append(SupportFunction(tuple(chosen)))
            return
        if i == len(lyn):
            return
        a = lyn[i]
        wt = words.weight(a)
        for k in range(remaining // wt, -1, -1):
            rec(i + 1, remaining - k * wt, chosen + [(a, k)] if k else chosen)

    rec(0, n, [])
    return tuple(sorted(out, key=lambda f: [(words.wll_key(a), k) for a, k in f.items]))


@lru_cache(maxsize=None)
def p_power_product(f: SupportFunction) -> NCPoly:
    """``P^f``: product of ``c_alpha(f(alpha))`` with factors in wll order of ``alpha``."""
    out = NCPoly.one(NSYMM)
    for a, k in f.items:
        out = out * over_term(a, k)
    return out


def splits(f: SupportFunction):
    """All ``(f1, f2)`` with ``f1 + f2 = f`` pointwise."""
    for ks in product(*(range(k + 1) for _, k in f.items)):
        f1 = SupportFunction(tuple((a, j) for (a, _), j in zip(f.items, ks) if j))
        f2 = SupportFunction(tuple((a, k - j) for (a, k), j in zip(f.items, ks) if k - j))
        yield f1, f2


def check_pf_coproduct(f: SupportFunction) -> bool:
    lhs = mu(p_power_product(f))
    rhs = tensor_sum((tensor(p_power_product(f1), p_power_product(f2)) for f1, f2 in splits(f)), host=NSYMM)
    return lhs == rhs


def pf_basis_matrix(n: int) -> list[list[int]]:
    """Rows ``P^f`` over all support functions of weight ``n``; ``|det| = 1`` is asserted."""
    M = [coefficient_row(p_power_product(f), n) for f in support_functions(n)]
    if len(M) != 2 ** (n - 1):
        raise AssertionError(f"{len(M)} support functions of weight {n}, expected {2 ** (n - 1)}")
    d = zlattice.determinant(M)
    if abs(d) != 1:
        raise AssertionError(f"P^f matrix of weight {n} has determinant {d}")
    return M


def _reduced_split(w):
    return [(parts, c) for parts, c in _word_coproduct(w) if parts[0] and parts[1]]


def v_operator(n: int, p: NCPoly) -> Tensor:
    """``v_1 = id - unit*counit`` and ``v_n = (v_1^(n-2) (x) v_2) v_{n-1}``."""
    if n < 1:
        raise ValueError("v_n needs n >= 1")
    t = Tensor({(w,): c for w, c in p.terms().items() if w}, rank=1, host=p.host)
    for r in range(2, n + 1):
        t = apply_to_slot(t, r - 2, _reduced_split, 2)
    return t


def symmetrized_tensor(f: SupportFunction) -> Tensor:
    """Sum over distinct orderings of ``P_alpha`` repeated ``f(alpha)`` times."""
    letters = [a for a, k in f.items for _ in range(k)]
    return tensor_sum(
        (tensor(*(build_P(a) for a in order)) for order in sorted(set(permutations(letters)))),
        rank=len(letters),
        host=NSYMM,
    )


def check_v_operators(max_weight: int, max_size: int = 3) -> bool:
    """``v_n`` kills ``P^g`` with ``|g| < n`` and sends ``P^f`` with ``|f| = n`` to the symmetrized tensor."""
    for w in range(1, max_weight + 1):
        for f in support_functions(w):
            p = p_power_product(f)
            for n in range(1, max_size + 1):
                t = v_operator(n, p)
                if f.size < n and t:
                    return False
                if f.size == n and t != symmetrized_tensor(f):
                    return False
    return True


# --- generating-function ranks -------------------------------------------------------------


def _poly_mul(a: list[int], b: list[int], N: int) -> list[int]:
    out = [0] * (N + 1)
    for i, x in enumerate(a[: N + 1]):
        if x:
            for j, y in enumerate(b[: N + 1 - i]):
                out[i + j] += x * y
    return out


def _series_inv(a: list[int], N: int) -> list[int]:
    if a[0] != 1:
        raise ValueError("constant term must be 1")
    out = [1] + [0] * N
    for n in range(1, N + 1):
        out[n] = -sum(a[k] * out[n - k] for k in range(1, min(n, len(a) - 1) + 1))
    return out


def lyndon_counts(N: int) -> list[int]:
    """``beta_n = |LYN_n|`` for ``n = 1..N``."""
    return [words.lyndon_count(n) for n in range(1, N + 1)]


def rank_series_report(N: int) -> dict:
    beta = lyndon_counts(N)
    prod = [1] + [0] * N
    for n, b in enumerate(beta, start=1):
        factor = [0] * (N + 1)
        factor[0] = 1
        factor[n] -= 1
        for _ in range(b):
            prod = _poly_mul(prod, factor, N)
    lhs = _poly_mul([1, -1], prod, N)
    target = [1, -2] + [0] * (N - 1) if N >= 1 else [1]
    ranks = _series_inv(prod, N)
    counts = [len(support_functions(n)) for n in range(1, N + 1)] if N <= 10 else None
    return {
        "beta": beta,
        "relation_holds": lhs == target[: N + 1],
        "ranks": ranks[1:],
        "ranks_match": ranks[1:] == [2 ** (n - 1) for n in range(1, N + 1)],
        "support_counts_match": counts is None or counts == [2 ** (n - 1) for n in range(1, N + 1)],
    }


def rank_series_check(N: int) -> bool:
    if N < 1:
        raise ValueError("N must be >= 1")
    r = rank_series_report(N)
    return r["relation_holds"] and r["ranks_match"] and r["support_counts_match"]


# --- the primitive lattice, independently --------------------------------------------------


def reduced_coproduct_matrix(n: int) -> list[list[int]]:
    """Rows ``Z_beta`` (beta of weight ``n``), columns the pairs of nonempty words."""
    cols = [(a, b) for i in range(1, n) for a in words.compositions(i) for b in words.compositions(n - i)]
    pos = {c: j for j, c in enumerate(cols)}
    M = []
    for beta in words.compositions(n):
        row = [0] * len(cols)
        for parts, c in _reduced_split(beta):
            row[pos[parts]] += c
        M.append(row)
    return M


def primitive_lattice(n: int) -> list[list[int]]:
    """Integer kernel of the reduced coproduct on NSymm in weight ``n``, as a HNF basis."""
    if n == 1:
        return [[1]]
    return zlattice.hermite_normal_form(zlattice.left_kernel(reduced_coproduct_matrix(n)))


def check_integral_basis(n: int) -> bool:
    """The ``P_alpha`` of weight ``n`` span exactly the integral primitives of weight ``n``."""
    return zlattice.same_lattice(prim_basis_matrix(n), primitive_lattice(n))


def check_verschiebung_lattice(r: int, n: int) -> bool:
    """``V_r`` maps the primitives of weight ``r n`` onto ``r`` times those of weight ``n``."""
    image = [coefficient_row(verschiebung(r, build_P(a)), n) for a in words.enumerate_lyndon(r * n)]
    scaled = [[r * x for x in row] for row in prim_basis_matrix(n)]
    return zlattice.same_lattice(image, scaled)
