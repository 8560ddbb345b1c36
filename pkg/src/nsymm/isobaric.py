"""Newton primitives and the bi-isobaric decomposition polynomials.

Four tables share one recursion engine:

* ``L_wl``  -- ``X(s)^-1 Y(t)^-1 X(s) Y(t)`` factored along rays, wl order
* ``N_wl``  -- ``Z(s)^-1 Z(t)^-1 Z(s+t)``, wl order
* ``L_swl`` -- ``X(s)^-1 Y(t) X(s) Y(t)^-1``, swl order
* ``N_swl`` -- ``Z(s)^-1 Z(s+t) Z(t)^-1``, swl order

Every ordered product runs left to right in increasing order of the ray
direction.  Comparing coefficients of ``s^u t^v`` after moving the outer
series to the other side gives

    entry(u,v) = lhs(u,v) - sum left(u0,v0) * F(u1,v1) ... F(uk,vk) * right(u0,v0)

where the ``F`` factors have strictly increasing normalized directions and the
single term ``(u0,v0) = (0,0), k = 1`` is excluded.  The engine is written
against letter *images* so that the same recursion evaluates the tables at
arbitrary curves (substitution is an algebra morphism, so the recursion
commutes with it).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Mapping

from . import words
from .ncalgebra import NSYMM, TWO_NSYMM, NCPoly, X, Y, Z, commutator, reverse, swap_xy
from .series import Series2, inv2, mul2, x_of_s, y_of_t, z_of_s, z_of_t, binomial_2curve

KINDS = ("L_wl", "N_wl", "L_swl", "N_swl")

Images = Callable[[int], NCPoly]


# --- Newton primitives -------------------------------------------------------------------


def newton_P_closed(n: int) -> NCPoly:
    """``sum over compositions (r1..rk) of n of (-1)^(k+1) r_k Z_r1 ... Z_rk``."""
    terms = {alpha: (-1) ** (len(alpha) + 1) * alpha[-1] for alpha in words.compositions(n)}
    return NCPoly(terms)


@lru_cache(maxsize=None)
def newton_P_recursive(n: int) -> NCPoly:
    """``P_n = n Z_n - Z_{n-1} P_1 - ... - Z_1 P_{n-1}``."""
    out = Z(n).scale(n)
    for i in range(1, n):
        out = out - Z(n - i) * newton_P_recursive(i)
    return out


@lru_cache(maxsize=None)
def newton_P(n: int) -> NCPoly:
    if n < 1:
        raise ValueError("Newton primitives are indexed by n >= 1")
    p = newton_P_recursive(n)
    closed = newton_P_closed(n)
    if p != closed:
        raise AssertionError(f"closed form and recursion disagree for P_{n}")
    return p


@lru_cache(maxsize=None)
def newton_Q(n: int) -> NCPoly:
    """``Q_n = n Z_n - Q_1 Z_{n-1} - ... - Q_{n-1} Z_1``."""
    if n < 1:
        raise ValueError("Newton primitives are indexed by n >= 1")
    out = Z(n).scale(n)
    for i in range(1, n):
        out = out - newton_Q(i) * Z(n - i)
    return out


# --- the recursion engine ------------------------------------------------------------------


def direction_key(kind: str) -> Callable[[tuple[int, int]], tuple]:
    return words.wl_key if kind.endswith("_wl") else words.swl_key


class IsobaricRecursion:
    """Lazily memoized table entries ``F_{u,v}`` evaluated at letter images.

    For ``L`` kinds ``x`` and ``y`` give the images of ``X_i`` and ``Y_j``; for
    ``N`` kinds only ``x`` is used (the image of ``Z_i``).  Images at index 0
    are the unit.
    """

    def __init__(self, kind: str, x: Images, y: Images | None = None, host: str | None = None):
        if kind not in KINDS:
            raise ValueError(f"unknown table kind {kind!r}")
        self.kind = kind
        self.host = host or x(1).host
        self._x = x
        self._y = y if y is not None else x
        self._key = direction_key(kind)
        self._entries: dict[tuple[int, int], NCPoly] = {}
        self._tails: dict[tuple, NCPoly] = {}
        self._one = NCPoly.one(self.host)

    def _img_x(self, i: int) -> NCPoly:
        return self._one if i == 0 else self._x(i)

    def _img_y(self, j: int) -> NCPoly:
        return self._one if j == 0 else self._y(j)

    def _lhs(self, u: int, v: int) -> NCPoly:
        if self.kind == "L_wl":
            return self._img_x(u) * self._img_y(v)
        if self.kind == "L_swl":
            return self._img_y(v) * self._img_x(u)
        return self._img_x(u + v).scale(math.comb(u + v, u))

    def _outer(self, u0: int, v0: int) -> tuple[NCPoly, NCPoly]:
        # (left, right) factors flanking the ordered product
        if self.kind == "L_wl":
            return self._img_y(v0) * self._img_x(u0), self._one
        if self.kind == "N_wl":
            return self._img_x(v0) * self._img_x(u0), self._one
        if self.kind == "L_swl":
            return self._img_x(u0), self._img_y(v0)
        return self._img_x(u0), self._img_x(v0)

    def _dir(self, u: int, v: int) -> tuple:
        g = math.gcd(u, v)
        return self._key((u // g, v // g))

    def _tail(self, U: int, V: int, lo: tuple | None, exclude: tuple[int, int] | None = None) -> NCPoly:
        """Sum of ordered products of entries summing to ``(U, V)``, directions > ``lo``."""
        if U == 0 and V == 0:
            return self._one
        if U == 0 or V == 0:
            return NCPoly.zero(self.host)
        memo_key = (U, V, lo)
        if exclude is None and memo_key in self._tails:
            return self._tails[memo_key]
        acc = NCPoly.zero(self.host)
        for u1 in range(1, U + 1):
            for v1 in range(1, V + 1):
                if (u1, v1) == exclude:
                    continue
                ru, rv = U - u1, V - v1
                if (ru == 0) != (rv == 0):
                    continue
                d = self._dir(u1, v1)
                if lo is not None and d <= lo:
                    continue
                rest = self._tail(ru, rv, d)
                if rest:
                    f = self.entry(u1, v1)
                    if f:
                        acc = acc + f * rest
        if exclude is None:
            self._tails[memo_key] = acc
        return acc

    def entry(self, u: int, v: int) -> NCPoly:
        if u < 1 or v < 1:
            raise ValueError(f"table entries need u, v >= 1, got {(u, v)}")
        hit = self._entries.get((u, v))
        if hit is not None:
            return hit
        out = self._lhs(u, v)
        for u0 in range(u + 1):
            for v0 in range(v + 1):
                U, V = u - u0, v - v0
                if (U, V) == (u, v):
                    middle = self._tail(U, V, None, exclude=(u, v))
                else:
                    middle = self._tail(U, V, None)
                if not middle:
                    continue
                left, right = self._outer(u0, v0)
                out = out - left * middle * right
        self._entries[(u, v)] = out
        return out


# --- tables --------------------------------------------------------------------------------


@dataclass(frozen=True)
class IsobaricTable:
    kind: str
    bound: int
    entries: Mapping[tuple[int, int], NCPoly] = field(repr=False)

    def __getitem__(self, uv: tuple[int, int]) -> NCPoly:
        try:
            return self.entries[uv]
        except KeyError:
            raise KeyError(f"{self.kind} table built to weight {self.bound} has no entry {uv}") from None

    def ray(self, a: int, b: int) -> list[NCPoly]:
        """``[F_{a,b}, F_{2a,2b}, ...]`` as far as the table reaches."""
        return [self.entries[(r * a, r * b)] for r in range(1, self.bound // (a + b) + 1)]


def symbolic_recursion(kind: str) -> IsobaricRecursion:
    if kind.startswith("L"):
        return IsobaricRecursion(kind, X, Y, TWO_NSYMM)
    return IsobaricRecursion(kind, Z, None, NSYMM)


@lru_cache(maxsize=None)
def _shared_recursion(kind: str) -> IsobaricRecursion:
    return symbolic_recursion(kind)


def build_table(kind: str, bound: int) -> IsobaricTable:
    if bound < 2:
        raise ValueError("tables need total weight bound >= 2")
    rec = _shared_recursion(kind)
    pairs = sorted(((u, n - u) for n in range(2, bound + 1) for u in range(1, n)), key=words.wl_key)
    return IsobaricTable(kind, bound, {uv: rec.entry(*uv) for uv in pairs})


def build_L_table(bound: int) -> IsobaricTable:
    return build_table("L_wl", bound)


def build_N_table(bound: int) -> IsobaricTable:
    return build_table("N_wl", bound)


def build_swl_tables(bound: int) -> tuple[IsobaricTable, IsobaricTable]:
    return build_table("L_swl", bound), build_table("N_swl", bound)


# --- reconstruction checks -----------------------------------------------------------------


def ray_factor(table: IsobaricTable, a: int, b: int, bound: int) -> Series2:
    """``1 + F_{a,b} s^a t^b + F_{2a,2b} s^{2a} t^{2b} + ...`` truncated at ``bound``."""
    host = TWO_NSYMM if table.kind.startswith("L") else NSYMM
    coeffs = {(0, 0): NCPoly.one(host)}
    for r in range(1, bound // (a + b) + 1):
        coeffs[(r * a, r * b)] = table[(r * a, r * b)]
    return Series2(coeffs, bound, host)


def ordered_product(table: IsobaricTable, bound: int) -> Series2:
    host = TWO_NSYMM if table.kind.startswith("L") else NSYMM
    key = direction_key(table.kind)
    out = Series2({(0, 0): NCPoly.one(host)}, bound, host)
    for a, b in sorted(words.coprime_pairs(bound), key=key):
        out = mul2(out, ray_factor(table, a, b, bound))
    return out


def decomposition_lhs(kind: str, bound: int) -> Series2:
    if kind == "L_wl":
        xs, yt = x_of_s(bound), y_of_t(bound)
        return mul2(mul2(mul2(inv2(xs), inv2(yt)), xs), yt)
    if kind == "L_swl":
        xs, yt = x_of_s(bound), y_of_t(bound)
        return mul2(mul2(mul2(inv2(xs), yt), xs), inv2(yt))
    zs, zt, zst = z_of_s(bound), z_of_t(bound), binomial_2curve(bound)
    if kind == "N_wl":
        return mul2(mul2(inv2(zs), inv2(zt)), zst)
    return mul2(mul2(inv2(zs), zst), inv2(zt))


def has_no_pure_powers(S: Series2) -> bool:
    return all(not S[(i, 0)] and not S[(0, i)] for i in range(1, S.bound + 1))


def reconstruct(kind: str, bound: int) -> bool:
    """Both sides of the decomposition agree up to total degree ``bound``."""
    lhs = decomposition_lhs(kind, bound)
    rhs = ordered_product(build_table(kind, bound), bound)
    return has_no_pure_powers(lhs) and lhs == rhs


def reconstruct_first_decomposition(bound: int) -> bool:
    return reconstruct("L_wl", bound)


def reconstruct_second_decomposition(bound: int) -> bool:
    return reconstruct("N_wl", bound)


def reconstruct_swl_decompositions(bound: int) -> tuple[bool, bool]:
    return reconstruct("L_swl", bound), reconstruct("N_swl", bound)


def check_swl_symmetry(bound: int) -> bool:
    """Reversal maps the swl entry at ``(u,v)`` to the one at ``(v,u)`` (tags swapped for L)."""
    L, N = build_swl_tables(bound)
    for (u, v), p in L.entries.items():
        if reverse(p) != swap_xy(L[(v, u)]):
            return False
    for (u, v), p in N.entries.items():
        if reverse(p) != N[(v, u)]:
            return False
    return True


def leading_commutator(u: int, v: int) -> NCPoly:
    return commutator(X(u), Y(v))
