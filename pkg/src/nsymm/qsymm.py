"""Quasisymmetric functions in the composition basis.

The product is the overlapping shuffle, the coproduct is deconcatenation
("cut"), and the pairing with NSymm is ``<Z_alpha, beta> = delta``.
"""

from __future__ import annotations

import math
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from . import words
from .ncalgebra import NSYMM, NCPoly, Tensor

Pair = tuple[tuple[int, ...], tuple[int, ...]]


class QElem:
    """Integer combination of compositions; the empty composition is the unit."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None):
        clean: dict[tuple[int, ...], int] = {}
        for alpha, c in (terms or {}).items():
            alpha = words.composition(alpha)
            clean[alpha] = clean.get(alpha, 0) + int(c)
        self._terms = {a: c for a, c in clean.items() if c}

    @classmethod
    def basis(cls, alpha: Sequence[int]) -> "QElem":
        return cls({tuple(alpha): 1})

    @classmethod
    def one(cls) -> "QElem":
        return cls({(): 1})

    def terms(self) -> Mapping[tuple[int, ...], int]:
        return self._terms

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self._terms.items(), key=lambda kv: words.wll_key(kv[0]))

    def coeff(self, alpha: Sequence[int]) -> int:
        return self._terms.get(tuple(alpha), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, QElem):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "QElem") -> "QElem":
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out.get(a, 0) + c
        return QElem(out)

    def __neg__(self) -> "QElem":
        return self.scale(-1)

    def __sub__(self, other: "QElem") -> "QElem":
        return self + (-other)

    def scale(self, k: int) -> "QElem":
        return QElem({a: k * c for a, c in self._terms.items()})

    def __mul__(self, other: "QElem") -> "QElem":
        out: dict[tuple[int, ...], int] = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                for w, e in osh_mul(a, b).terms().items():
                    out[w] = out.get(w, 0) + c * d * e
        return QElem(out)

    def __pow__(self, n: int) -> "QElem":
        out = QElem.one()
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"QElem({dict(self.items())!r})"

    def __str__(self) -> str:
        return pretty_q(self)

    def to_json(self) -> list[dict]:
        return [{"composition": list(a), "coeff": str(c)} for a, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "QElem":
        out: dict[tuple[int, ...], int] = {}
        for t in data:
            a = words.composition(t["composition"])
            out[a] = out.get(a, 0) + int(t["coeff"])
        return cls(out)


def pretty_q(q: QElem) -> str:
    if not q:
        return "0"
    parts = []
    for i, (a, c) in enumerate(q.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = words.format_composition(a)
        text = body if mag == 1 else f"{mag}{body}"
        parts.append(("-" if sign == "-" else "") + text if i == 0 else f" {sign} {text}")
    return "".join(parts)


def osh_mul(alpha: Sequence[int], beta: Sequence[int]) -> QElem:
    """Overlapping shuffle of two compositions, by slot assignment.

    For each overlap count ``k`` the result has ``m + n - k`` slots; ``alpha``
    fills ``m`` of them in order, ``beta`` fills ``n`` in order, every slot is
    used and exactly ``k`` slots receive a part from both.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    m, n = len(alpha), len(beta)
    out: dict[tuple[int, ...], int] = {}
    for k in range(min(m, n) + 1):
        L = m + n - k
        for a_slots in combinations(range(L), m):
            free = [s for s in range(L) if s not in set(a_slots)]
            for shared in combinations(a_slots, k):
                b_slots = sorted(free + list(shared))
                word = [0] * L
                for s, x in zip(a_slots, alpha):
                    word[s] += x
                for s, x in zip(b_slots, beta):
                    word[s] += x
                w = tuple(word)
                out[w] = out.get(w, 0) + 1
    return QElem(out)


def osh_term_count(m: int, n: int) -> int:
    """``sum_k (m+n-k)! / ((m-k)! (n-k)! k!)``, the number of terms with multiplicity."""
    return sum(
        math.factorial(m + n - k) // (math.factorial(m - k) * math.factorial(n - k) * math.factorial(k))
        for k in range(min(m, n) + 1)
    )


def osh_mul_matrices(alphas: Sequence[Sequence[int]]) -> QElem:
    """k-fold product as a sum over matrices.

    Row ``i`` carries ``alphas[i]`` in order, padded with zeros; no column is
    entirely zero; each matrix contributes its column sums.
    """
    alphas = [tuple(a) for a in alphas]
    if not alphas:
        return QElem.one()
    lens = [len(a) for a in alphas]
    out: dict[tuple[int, ...], int] = {}
    for L in range(max(lens), sum(lens) + 1):
        for placement in product(*(combinations(range(L), n) for n in lens)):
            covered = set()
            for slots in placement:
                covered.update(slots)
            if len(covered) != L:
                continue
            col = [0] * L
            for slots, a in zip(placement, alphas):
                for s, x in zip(slots, a):
                    col[s] += x
            w = tuple(col)
            out[w] = out.get(w, 0) + 1
    return QElem(out)


def osh_mul_iterated(alphas: Sequence[Sequence[int]]) -> QElem:
    out = QElem.one()
    for a in alphas:
        out = out * QElem.basis(a)
    return out


def osh_mul_multi(alphas: Sequence[Sequence[int]]) -> QElem:
    """Matrix form of the k-fold product, checked against iterated two-fold products."""
    result = osh_mul_matrices(alphas)
    if result != osh_mul_iterated(alphas):
        raise AssertionError("matrix and iterated overlapping shuffles disagree")
    return result


def cut_comul(alpha: Sequence[int]) -> dict[Pair, int]:
    alpha = tuple(alpha)
    return {(alpha[:i], alpha[i:]): 1 for i in range(len(alpha) + 1)}


def cut_comul_elem(q: QElem) -> dict[Pair, int]:
    out: dict[Pair, int] = {}
    for a, c in q.terms().items():
        for key, d in cut_comul(a).items():
            out[key] = out.get(key, 0) + c * d
    return {k: v for k, v in out.items() if v}


def frobenius(n: int, alpha: Sequence[int]) -> tuple[int, ...]:
    return words.scale(n, alpha)


def frobenius_elem(n: int, q: QElem) -> QElem:
    return QElem({frobenius(n, a): c for a, c in q.terms().items()})


def pairing(p: NCPoly, q: QElem) -> int:
    if p.host != NSYMM:
        raise ValueError("the pairing is defined on NSymm")
    return sum(c * q.coeff(w) for w, c in p.terms().items())


def pairing_tensor(t: Tensor, q: Mapping[Pair, int]) -> int:
    """Induced pairing of ``NSymm (x) NSymm`` with ``QSymm (x) QSymm``."""
    if t.rank != 2 or t.host != NSYMM:
        raise ValueError("expected a rank 2 tensor over NSymm")
    return sum(c * q.get(key, 0) for key, c in t.terms().items())


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def check_fp_power(p: int, alpha: Sequence[int]) -> bool:
    """``alpha^p - f_p(alpha)`` has every coefficient divisible by ``p``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    rest = QElem.basis(alpha) ** p - QElem.basis(frobenius(p, alpha))
    return all(c % p == 0 for c in rest.terms().values())
