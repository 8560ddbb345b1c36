"""Compositions (words over the positive integers) and their orderings.

A composition is stored as a plain ``tuple`` of positive ints.  The empty
tuple is a valid composition of weight 0.  Comparison helpers return
``-1``, ``0`` or ``1``; sort keys are provided for use with ``sorted``.
"""

from __future__ import annotations

import json
import math
from functools import lru_cache, reduce
from typing import Iterable, Sequence

Composition = tuple  # tuple[int, ...]; every entry >= 1

LT, EQ, GT = -1, 0, 1


def composition(entries: Iterable[int]) -> tuple[int, ...]:
    """Validate and freeze a sequence of parts."""
    out = tuple(int(a) for a in entries)
    for a in out:
        if a < 1:
            raise ValueError(f"composition parts must be >= 1, got {out!r}")
    return out


def weight(alpha: Sequence[int]) -> int:
    return sum(alpha)


def length(alpha: Sequence[int]) -> int:
    return len(alpha)


def g_stat(alpha: Sequence[int]) -> int:
    """gcd of the parts."""
    if not alpha:
        raise ValueError("g is undefined on the empty composition")
    return reduce(math.gcd, alpha)


def k_stat(alpha: Sequence[int]) -> int:
    """Product of the parts."""
    if not alpha:
        raise ValueError("k is undefined on the empty composition")
    return math.prod(alpha)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def lex_cmp(alpha: Sequence[int], beta: Sequence[int]) -> int:
    # a proper prefix is smaller than the longer word
    for a, b in zip(alpha, beta):
        if a != b:
            return _sign(a - b)
    return _sign(len(alpha) - len(beta))


def wll_key(alpha: Sequence[int]) -> tuple:
    """Sort key for weight, then length, then lexicographic order."""
    return (sum(alpha), len(alpha), tuple(alpha))


def wll_cmp(alpha: Sequence[int], beta: Sequence[int]) -> int:
    ka, kb = wll_key(alpha), wll_key(beta)
    return (ka > kb) - (ka < kb)


def is_lyndon(alpha: Sequence[int]) -> bool:
    """True iff ``alpha`` is lexicographically smaller than each proper tail."""
    if not alpha:
        raise ValueError("the Lyndon predicate is undefined on the empty word")
    alpha = tuple(alpha)
    return all(lex_cmp(alpha, alpha[i:]) == LT for i in range(1, len(alpha)))


def canonical_factorization(alpha: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a Lyndon word at its lexicographically smallest proper tail.

    Returns ``(prefix, suffix)``; both are Lyndon and concatenate to ``alpha``.
    """
    alpha = tuple(alpha)
    if len(alpha) < 2:
        raise ValueError(f"canonical factorization needs length >= 2, got {alpha!r}")
    if not is_lyndon(alpha):
        raise ValueError(f"{format_composition(alpha)} is not a Lyndon word")
    cut = 1
    for i in range(2, len(alpha)):
        if lex_cmp(alpha[i:], alpha[cut:]) == LT:
            cut = i
    prefix, suffix = alpha[:cut], alpha[cut:]
    assert is_lyndon(prefix) and is_lyndon(suffix), (prefix, suffix)
    return prefix, suffix


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[tuple[int, ...], ...]:
    """All compositions of ``n`` in wll order (``2**(n-1)`` of them for n >= 1)."""
    if n < 0:
        raise ValueError("weight must be nonnegative")
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return tuple(sorted(out, key=wll_key))


@lru_cache(maxsize=None)
def enumerate_lyndon(n: int) -> tuple[tuple[int, ...], ...]:
    """Lyndon compositions of weight ``n``, sorted by wll order."""
    if n < 1:
        raise ValueError("Lyndon words have positive weight")
    return tuple(a for a in compositions(n) if is_lyndon(a))


def lyndon_count(n: int) -> int:
    return len(enumerate_lyndon(n))


def scale(r: int, alpha: Sequence[int]) -> tuple[int, ...]:
    return tuple(r * a for a in alpha)


def divide(alpha: Sequence[int], r: int) -> tuple[int, ...]:
    if any(a % r for a in alpha):
        raise ValueError(f"{r} does not divide every part of {tuple(alpha)!r}")
    return tuple(a // r for a in alpha)


def format_composition(alpha: Sequence[int]) -> str:
    return "[" + ",".join(str(a) for a in alpha) + "]"


def parse_composition(text: str) -> tuple[int, ...]:
    """Parse the canonical text form ``[a1,a2,...]`` (JSON arrays also work)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"cannot parse composition {text!r}") from exc
    if not isinstance(data, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in data):
        raise ValueError(f"cannot parse composition {text!r}")
    return composition(data)


# --- direction pairs ---------------------------------------------------------


def normalize_pair(u: int, v: int) -> tuple[int, int]:
    if u < 0 or v < 0 or (u, v) == (0, 0):
        raise ValueError(f"invalid bidegree {(u, v)}")
    g = math.gcd(u, v)
    return u // g, v // g


def wl_key(p: tuple[int, int]) -> tuple[int, int]:
    """Weight first, then the first coordinate."""
    u, v = p
    return (u + v, u)


def wl_cmp(p: tuple[int, int], q: tuple[int, int]) -> int:
    kp, kq = wl_key(p), wl_key(q)
    return (kp > kq) - (kp < kq)


def swl_key(p: tuple[int, int]) -> tuple:
    """Sort key of the symmetric ordering on coprime pairs.

    Pairs with ``a > b`` come first in wl order, then ``(1, 1)``, then pairs
    with ``a < b`` in the mirrored order.  ``(1, 0)`` sorts before everything
    and ``(0, 1)`` after everything.
    """
    a, b = p
    if a < 0 or b < 0 or math.gcd(a, b) != 1:
        raise ValueError(f"swl order is only defined on coprime pairs, got {p!r}")
    if b == 0:
        return (-1,)
    if a == 0:
        return (3,)
    if a > b:
        return (0, a + b, a)
    if a == b:
        return (1,)
    return (2, -(a + b), -b)


def swl_cmp(p: tuple[int, int], q: tuple[int, int]) -> int:
    kp, kq = swl_key(p), swl_key(q)
    return (kp > kq) - (kp < kq)


def coprime_pairs(max_weight: int) -> list[tuple[int, int]]:
    """Coprime ``(a, b)`` with ``a, b >= 1`` and ``a + b <= max_weight``."""
    return [(a, n - a) for n in range(2, max_weight + 1) for a in range(1, n) if math.gcd(a, n - a) == 1]
