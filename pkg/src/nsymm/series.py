"""Truncated power series in one or two central variables over NCPoly."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .ncalgebra import NSYMM, TWO_NSYMM, NCPoly, X, Y, Z, mu, poly_from_json, poly_to_json, tensor, tensor_sum


@dataclass(frozen=True)
class Series1:
    """``c_0 + c_1 t + ... + c_T t^T`` with exact coefficients up to ``T``."""

    coeffs: tuple[NCPoly, ...]
    host: str = NSYMM

    def __post_init__(self):
        for c in self.coeffs:
            if c.host != self.host:
                raise ValueError("series coefficient in the wrong host")

    @property
    def bound(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> NCPoly:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        raise IndexError(f"degree {n} beyond truncation {self.bound}")

    @classmethod
    def from_terms(cls, terms: Sequence[NCPoly], host: str = NSYMM) -> "Series1":
        """Series ``1 + terms[0] t + terms[1] t^2 + ...``."""
        return cls((NCPoly.one(host),) + tuple(terms), host)

    def truncate(self, bound: int) -> "Series1":
        return Series1(self.coeffs[: bound + 1], self.host)

    def to_json(self) -> dict:
        return {"bound": self.bound, "coeffs": [{"deg": i, "poly": poly_to_json(c)} for i, c in enumerate(self.coeffs)]}

    @classmethod
    def from_json(cls, data: Mapping, host: str = NSYMM) -> "Series1":
        coeffs = [NCPoly.zero(host)] * (int(data["bound"]) + 1)
        for entry in data["coeffs"]:
            coeffs[int(entry["deg"])] = poly_from_json(entry["poly"], host)
        return cls(tuple(coeffs), host)


def mul1(a: Series1, b: Series1) -> Series1:
    if a.host != b.host:
        raise ValueError("host mismatch")
    bound = min(a.bound, b.bound)
    out = []
    for n in range(bound + 1):
        acc = NCPoly.zero(a.host)
        for i in range(n + 1):
            if a.coeffs[i] and b.coeffs[n - i]:
                acc = acc + a.coeffs[i] * b.coeffs[n - i]
        out.append(acc)
    return Series1(tuple(out), a.host)


def inv1(a: Series1) -> Series1:
    """Two-sided inverse of a series with constant term 1."""
    if a.coeffs[0] != 1:
        raise ValueError("only series with constant term 1 are invertible here")
    out = [NCPoly.one(a.host)]
    for n in range(1, a.bound + 1):
        acc = NCPoly.zero(a.host)
        for i in range(1, n + 1):
            if a.coeffs[i] and out[n - i]:
                acc = acc - a.coeffs[i] * out[n - i]
        out.append(acc)
    return Series1(tuple(out), a.host)


@dataclass(frozen=True)
class Series2:
    """Series in ``s, t`` truncated at total degree ``bound``; missing slots are 0.

    ``slot_weight = (ws, wt)`` optionally records that the coefficient of
    ``s^i t^j`` is homogeneous of weight ``i*ws + j*wt``; it is checked.
    """

    coeffs: Mapping[tuple[int, int], NCPoly]
    bound: int
    host: str = NSYMM
    slot_weight: tuple[int, int] | None = None

    def __post_init__(self):
        clean = {}
        for (i, j), c in self.coeffs.items():
            if i < 0 or j < 0 or i + j > self.bound:
                raise ValueError(f"slot {(i, j)} outside total bound {self.bound}")
            if c.host != self.host:
                raise ValueError("series coefficient in the wrong host")
            if self.slot_weight is not None and c and not c.is_homogeneous(i * self.slot_weight[0] + j * self.slot_weight[1]):
                raise ValueError(f"coefficient at {(i, j)} is not homogeneous of the expected weight")
            if c:
                clean[(i, j)] = c
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, ij: tuple[int, int]) -> NCPoly:
        i, j = ij
        if i + j > self.bound:
            raise IndexError(f"slot {ij} beyond truncation {self.bound}")
        return self.coeffs.get((i, j), NCPoly.zero(self.host))

    def slots(self):
        return [(i, n - i) for n in range(self.bound + 1) for i in range(n, -1, -1)]

    def support(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs, key=lambda ij: (ij[0] + ij[1], -ij[0]))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series2):
            return NotImplemented
        return self.bound == other.bound and self.host == other.host and self.coeffs == other.coeffs

    def truncate(self, bound: int) -> "Series2":
        return Series2({k: v for k, v in self.coeffs.items() if sum(k) <= bound}, bound, self.host)

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "coeffs": [{"deg": [i, j], "poly": poly_to_json(self.coeffs[(i, j)])} for i, j in self.support()],
        }

    @classmethod
    def from_json(cls, data: Mapping, host: str = NSYMM) -> "Series2":
        coeffs = {tuple(e["deg"]): poly_from_json(e["poly"], host) for e in data["coeffs"]}
        return cls(coeffs, int(data["bound"]), host)


def one2(bound: int, host: str = NSYMM) -> Series2:
    return Series2({(0, 0): NCPoly.one(host)}, bound, host)


def mul2(a: Series2, b: Series2) -> Series2:
    if a.host != b.host:
        raise ValueError("host mismatch")
    bound = min(a.bound, b.bound)
    out: dict[tuple[int, int], NCPoly] = {}
    for (i1, j1), c1 in a.coeffs.items():
        for (i2, j2), c2 in b.coeffs.items():
            i, j = i1 + i2, j1 + j2
            if i + j > bound:
                continue
            prod = c1 * c2
            out[(i, j)] = out[(i, j)] + prod if (i, j) in out else prod
    return Series2(out, bound, a.host)


def inv2(a: Series2) -> Series2:
    """Two-sided inverse, solved slot by slot in order of total degree."""
    if a[(0, 0)] != 1:
        raise ValueError("only series with constant term 1 are invertible here")
    out: dict[tuple[int, int], NCPoly] = {(0, 0): NCPoly.one(a.host)}
    rest = [(k, v) for k, v in a.coeffs.items() if k != (0, 0)]
    for n in range(1, a.bound + 1):
        for i in range(n + 1):
            j = n - i
            acc = NCPoly.zero(a.host)
            for (k, l), c in rest:
                prev = out.get((i - k, j - l))
                if prev is not None and k <= i and l <= j:
                    acc = acc - c * prev
            if acc:
                out[(i, j)] = acc
    return Series2(out, a.bound, a.host)


def series_in_s(terms: Callable[[int], NCPoly], bound: int, host: str) -> Series2:
    """``1 + terms(1) s + terms(2) s^2 + ...``."""
    return Series2({(i, 0): (NCPoly.one(host) if i == 0 else terms(i)) for i in range(bound + 1)}, bound, host)


def series_in_t(terms: Callable[[int], NCPoly], bound: int, host: str) -> Series2:
    return Series2({(0, j): (NCPoly.one(host) if j == 0 else terms(j)) for j in range(bound + 1)}, bound, host)


def x_of_s(bound: int) -> Series2:
    return series_in_s(X, bound, TWO_NSYMM)


def y_of_t(bound: int) -> Series2:
    return series_in_t(Y, bound, TWO_NSYMM)


def z_of_s(bound: int) -> Series2:
    return series_in_s(Z, bound, NSYMM)


def z_of_t(bound: int) -> Series2:
    return series_in_t(Z, bound, NSYMM)


def binomial_2curve(bound: int) -> Series2:
    """``Z(s + t)``: the coefficient of ``s^a t^b`` is ``C(a+b, a) Z_{a+b}``."""
    coeffs = {(a, n - a): Z(n).scale(math.comb(n, a)) for n in range(bound + 1) for a in range(n + 1)}
    return Series2(coeffs, bound, NSYMM, slot_weight=(1, 1))


def is_2curve(S: Series2) -> bool:
    """``mu(c(n,m)) = sum c(n1,m1) (x) c(n2,m2)`` at every retained bidegree."""
    if S[(0, 0)] != 1:
        raise ValueError("a 2-curve has constant term 1")
    for n, m in S.slots():
        if (n, m) == (0, 0):
            continue
        rhs = tensor_sum(
            (
                tensor(S[(n1, m1)], S[(n - n1, m - m1)])
                for n1 in range(n + 1)
                for m1 in range(m + 1)
                if S[(n1, m1)] and S[(n - n1, m - m1)]
            ),
            host=S.host,
        )
        if mu(S[(n, m)]) != rhs:
            return False
    return True


def restrict_direction(S: Series2, a: int, b: int) -> Series1:
    """Read off ``c(t)`` from ``S = 1 + c_1 s^a t^b + c_2 s^{2a} t^{2b} + ...``."""
    if math.gcd(a, b) != 1:
        raise ValueError(f"direction {(a, b)} is not coprime")
    for (i, j), c in S.coeffs.items():
        if (i, j) == (0, 0):
            if c != 1:
                raise ValueError("constant term must be 1")
            continue
        r = (i // a) if a else (j // b)
        if (i, j) != (r * a, r * b) or r == 0:
            raise ValueError(f"support off the ray {(a, b)} at bidegree {(i, j)}")
    T = S.bound // (a + b)
    return Series1(tuple(S[(r * a, r * b)] for r in range(T + 1)), S.host)
