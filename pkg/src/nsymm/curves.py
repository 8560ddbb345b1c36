"""Curves (divided power series) in NSymm and 2NSymm."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .ncalgebra import (
    NSYMM,
    TWO_NSYMM,
    NCPoly,
    X,
    Y,
    Z,
    antipode,
    mu,
    poly_from_json,
    poly_to_json,
    substitute,
    tensor,
    tensor_sum,
    verschiebung,
    word_bidegree,
)
from .series import Series1, inv1, mul1


@dataclass(frozen=True)
class Curve:
    """``d(0) = 1, d(1), ..., d(T)``; only ``d(1..T)`` is stored.

    ``ray_weight`` is the weight ``w`` with ``d(i)`` homogeneous of weight
    ``i*w``; it is inferred when omitted and always checked.  ``direction``
    optionally records the bidegree ``(a, b)`` of a 2NSymm ray curve, whose
    ``i``-th term has X-weight ``i*a`` and Y-weight ``i*b``.
    """

    host: str
    terms: tuple[NCPoly, ...]
    ray_weight: Fraction | None = None
    direction: tuple[int, int] | None = None

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        for t in self.terms:
            if t.host != self.host:
                raise ValueError("curve term in the wrong host")
        w = self.ray_weight
        if w is None:
            for i, t in enumerate(self.terms, start=1):
                if t:
                    w = Fraction(max(t.weights()), i)
                    break
        elif not isinstance(w, Fraction):
            w = Fraction(w)
        object.__setattr__(self, "ray_weight", w)
        if w is not None:
            for i, t in enumerate(self.terms, start=1):
                target = i * w
                if t and (target.denominator != 1 or not t.is_homogeneous(int(target))):
                    raise ValueError(f"term {i} is not homogeneous of weight {target}")
        if self.direction is not None:
            a, b = self.direction
            for i, t in enumerate(self.terms, start=1):
                if any(word_bidegree(wd) != (i * a, i * b) for wd in t.terms()):
                    raise ValueError(f"term {i} is not of bidegree {(i * a, i * b)}")

    @property
    def bound(self) -> int:
        return len(self.terms)

    def __call__(self, i: int) -> NCPoly:
        if i == 0:
            return NCPoly.one(self.host)
        if 1 <= i <= len(self.terms):
            return self.terms[i - 1]
        raise IndexError(f"curve term {i} beyond truncation {self.bound}")

    def truncate(self, bound: int) -> "Curve":
        return Curve(self.host, self.terms[:bound], self.ray_weight, self.direction)

    def to_series(self) -> Series1:
        return Series1.from_terms(self.terms, self.host)

    def to_json(self) -> dict:
        w = self.ray_weight
        return {
            "host": self.host,
            "ray_weight": None if w is None else (int(w) if w.denominator == 1 else str(w)),
            "terms": [poly_to_json(t) for t in self.terms],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Curve":
        host = data["host"]
        w = data.get("ray_weight")
        return cls(host, tuple(poly_from_json(t, host) for t in data["terms"]), None if w is None else Fraction(w))


def natural_curve(bound: int) -> Curve:
    """``z = (1, Z_1, Z_2, ...)``."""
    return Curve(NSYMM, tuple(Z(i) for i in range(1, bound + 1)), Fraction(1))


def x_curve(bound: int) -> Curve:
    return Curve(TWO_NSYMM, tuple(X(i) for i in range(1, bound + 1)), Fraction(1), (1, 0))


def y_curve(bound: int) -> Curve:
    return Curve(TWO_NSYMM, tuple(Y(i) for i in range(1, bound + 1)), Fraction(1), (0, 1))


def from_series(s: Series1) -> Curve:
    if s.coeffs[0] != 1:
        raise ValueError("a curve has constant term 1")
    return Curve(s.host, s.coeffs[1:])


def is_curve(d: Curve) -> bool:
    """``mu(d(n)) = sum_{i+j=n} d(i) (x) d(j)`` for every stored ``n``."""
    return first_curve_failure(d) is None


def first_curve_failure(d: Curve) -> int | None:
    for n in range(1, d.bound + 1):
        rhs = tensor_sum((tensor(d(i), d(n - i)) for i in range(n + 1)), host=d.host)
        if mu(d(n)) != rhs:
            return n
    return None


def curve_mul(d1: Curve, d2: Curve) -> Curve:
    return from_series(mul1(d1.to_series(), d2.to_series()))


def curve_inv(d: Curve) -> Curve:
    return from_series(inv1(d.to_series()))


def reparam_power(d: Curve, r: int) -> Curve:
    """The curve ``d(t^r)``: ``r - 1`` zeros between consecutive terms."""
    zero = NCPoly.zero(d.host)
    terms = []
    for i in range(1, d.bound * r + 1):
        terms.append(d(i // r) if i % r == 0 else zero)
    w = None if d.ray_weight is None else d.ray_weight / r
    return Curve(d.host, tuple(terms), w)


def is_V_curve(d: Curve) -> bool:
    """``V_r(d(n)) = d(n/r)`` when ``r | n`` and 0 otherwise, for all ``r >= 2``."""
    for n in range(1, d.bound + 1):
        top = max(n, d(n).max_letter())
        for r in range(2, top + 1):
            expected = d(n // r) if n % r == 0 else NCPoly.zero(d.host)
            if verschiebung(r, d(n)) != expected:
                return False
    return True


def subst_curve(dhat: Curve, d: Curve) -> Curve:
    """Replace ``Z_j`` by ``d(j)`` in every term of the NSymm curve ``dhat``."""
    if dhat.host != NSYMM:
        raise ValueError("the outer curve of a substitution must live in NSymm")
    need = max((t.max_letter() for t in dhat.terms), default=0)
    if need > d.bound:
        raise ValueError(f"inner curve truncated at {d.bound}, substitution needs term {need}")
    terms = tuple(substitute(t, assign_z=d, host=d.host) for t in dhat.terms)
    w = None
    if dhat.ray_weight is not None and d.ray_weight is not None:
        w = dhat.ray_weight * d.ray_weight
    return Curve(d.host, terms, w)


def subst_curve2(c: Curve, d1: Curve, d2: Curve) -> Curve:
    """Replace ``X_i`` by ``d1(i)`` and ``Y_j`` by ``d2(j)`` in the 2NSymm curve ``c``."""
    if c.host != TWO_NSYMM:
        raise ValueError("the outer curve must live in 2NSymm")
    if d1.host != d2.host:
        raise ValueError(f"host mismatch: {d1.host} vs {d2.host}")
    need_x = need_y = 0
    for t in c.terms:
        for w in t.terms():
            for a in w:
                if a > 0:
                    need_x = max(need_x, a)
                else:
                    need_y = max(need_y, -a)
    if need_x > d1.bound or need_y > d2.bound:
        raise ValueError("inner curves are truncated too early for this substitution")
    terms = tuple(substitute(t, assign_x=d1, assign_y=d2, host=d1.host) for t in c.terms)
    w = None
    if c.direction is not None and d1.ray_weight is not None and d2.ray_weight is not None:
        a, b = c.direction
        w = a * d1.ray_weight + b * d2.ray_weight
    return Curve(d1.host, terms, w)


def ray_curve(a: int, b: int, table, bound: int | None = None) -> Curve:
    """``c_{a,b} = (1, F_{a,b}, F_{2a,2b}, ...)`` read from an isobaric table."""
    if a < 1 or b < 1 or math.gcd(a, b) != 1:
        raise ValueError(f"ray direction {(a, b)} must be a coprime pair of positive ints")
    available = table.bound // (a + b)
    if bound is None:
        bound = available
    if bound > available:
        raise ValueError(f"table of weight {table.bound} too small for {bound} terms of ray {(a, b)}")
    terms = tuple(table[(r * a, r * b)] for r in range(1, bound + 1))
    if table.kind.startswith("L"):
        return Curve(TWO_NSYMM, terms, Fraction(a + b), (a, b))
    return Curve(NSYMM, terms, Fraction(a + b))


def antipode_sequence(d: Curve) -> Curve:
    return Curve(d.host, tuple(antipode(t) for t in d.terms))
