"""Integer noncommutative polynomials and the Hopf structure of NSymm / 2NSymm.

Words are tuples of nonzero ints.  In ``NSymm`` a letter ``n > 0`` stands for
``Z_n``.  In ``2NSymm`` the letter ``n > 0`` is ``X_n`` and ``-n`` is ``Y_n``.
``Z_0 = X_0 = Y_0 = 1`` is the empty word and never appears as a letter.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping, NamedTuple

NSYMM = "NSymm"
TWO_NSYMM = "2NSymm"
HOSTS = (NSYMM, TWO_NSYMM)

Word = tuple  # tuple[int, ...]


class Letter(NamedTuple):
    alphabet: str  # "Z", "X" or "Y"
    index: int

    def encode(self) -> int:
        if self.index < 1:
            raise ValueError(f"letter index must be >= 1, got {self.index}")
        if self.alphabet in ("Z", "X"):
            return self.index
        if self.alphabet == "Y":
            return -self.index
        raise ValueError(f"unknown alphabet {self.alphabet!r}")

    @classmethod
    def decode(cls, code: int, host: str) -> "Letter":
        if host == NSYMM:
            return cls("Z", code)
        return cls("X", code) if code > 0 else cls("Y", -code)


def word_weight(word: Iterable[int]) -> int:
    return sum(abs(a) for a in word)


def word_bidegree(word: Iterable[int]) -> tuple[int, int]:
    """(X-weight, Y-weight) of a 2NSymm word."""
    x = y = 0
    for a in word:
        if a > 0:
            x += a
        else:
            y -= a
    return x, y


def word_key(word: Word) -> tuple:
    """wll order on words; X_n sorts before Y_n at equal index."""
    return (word_weight(word), len(word), tuple((abs(a), a < 0) for a in word))


def _check_word(word: Word, host: str) -> None:
    if host == NSYMM:
        if any(a < 1 for a in word):
            raise ValueError(f"invalid NSymm word {word!r}")
    elif any(a == 0 for a in word):
        raise ValueError(f"invalid 2NSymm word {word!r}")


class NCPoly:
    """Finitely supported integer combination of words, immutable."""

    __slots__ = ("host", "_terms", "_hash")

    def __init__(self, terms: Mapping[Word, int] | None = None, host: str = NSYMM):
        if host not in HOSTS:
            raise ValueError(f"unknown host {host!r}")
        clean: dict[Word, int] = {}
        for w, c in (terms or {}).items():
            w = tuple(int(a) for a in w)
            _check_word(w, host)
            c = int(c)
            if c:
                clean[w] = clean.get(w, 0) + c
        self.host = host
        self._terms = {w: c for w, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, host: str) -> "NCPoly":
        # trusted: no zero coefficients, valid words
        p = object.__new__(cls)
        p.host = host
        p._terms = terms
        p._hash = None
        return p

    # --- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, host: str = NSYMM) -> "NCPoly":
        return cls._raw({}, host)

    @classmethod
    def one(cls, host: str = NSYMM) -> "NCPoly":
        return cls._raw({(): 1}, host)

    @classmethod
    def monomial(cls, word: Iterable[int], coeff: int = 1, host: str = NSYMM) -> "NCPoly":
        return cls({tuple(word): coeff}, host)

    # --- inspection ----------------------------------------------------------

    def items(self) -> list[tuple[Word, int]]:
        """Terms in wll order of their words."""
        return sorted(self._terms.items(), key=lambda kv: word_key(kv[0]))

    def terms(self) -> Mapping[Word, int]:
        return dict(self._terms)

    def words(self) -> list[Word]:
        return [w for w, _ in self.items()]

    def coeff(self, word: Iterable[int]) -> int:
        return self._terms.get(tuple(word), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Word, int]]:
        return iter(self.items())

    def is_zero(self) -> bool:
        return not self._terms

    def weights(self) -> set[int]:
        return {word_weight(w) for w in self._terms}

    def is_homogeneous(self, weight: int | None = None) -> bool:
        ws = self.weights()
        if weight is None:
            return len(ws) <= 1
        return ws <= {weight}

    def graded_part(self, n: int) -> "NCPoly":
        return NCPoly._raw({w: c for w, c in self._terms.items() if word_weight(w) == n}, self.host)

    def max_letter(self) -> int:
        return max((abs(a) for w in self._terms for a in w), default=0)

    # --- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            if other.host != self.host:
                raise ValueError(f"host mismatch: {self.host} vs {other.host}")
            return other
        if isinstance(other, int):
            return NCPoly._raw({(): other} if other else {}, self.host)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NCPoly._raw(out, self.host)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly._raw({w: -c for w, c in self._terms.items()}, self.host)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k: int) -> "NCPoly":
        if not k:
            return NCPoly.zero(self.host)
        return NCPoly._raw({w: k * c for w, c in self._terms.items()}, self.host)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Word, int] = {}
        get = out.get
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                out[w] = get(w, 0) + c1 * c2
        return NCPoly._raw({w: c for w, c in out.items() if c}, self.host)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "NCPoly":
        out = NCPoly.one(self.host)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({(): other} if other else {})
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.host == other.host and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.host, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"NCPoly({pretty(self)!r}, host={self.host!r})"

    def __str__(self) -> str:
        return pretty(self)


# --- generators ------------------------------------------------------------------


def Z(n: int) -> NCPoly:
    return NCPoly.one() if n == 0 else NCPoly._raw({(n,): 1}, NSYMM)


def X(n: int) -> NCPoly:
    return NCPoly.one(TWO_NSYMM) if n == 0 else NCPoly._raw({(n,): 1}, TWO_NSYMM)


def Y(n: int) -> NCPoly:
    return NCPoly.one(TWO_NSYMM) if n == 0 else NCPoly._raw({(-n,): 1}, TWO_NSYMM)


def Z_word(alpha: Iterable[int]) -> NCPoly:
    """The monomial ``Z_{a1} Z_{a2} ... Z_{am}``."""
    return NCPoly.monomial(tuple(alpha))


def commutator(p: NCPoly, q: NCPoly) -> NCPoly:
    return p * q - q * p


# --- tensors -----------------------------------------------------------------------


class Tensor:
    """Integer combination of k-tuples of words (an element of ``H^{(x)k}``)."""

    __slots__ = ("host", "rank", "_terms")

    def __init__(self, terms: Mapping[tuple, int] | None = None, rank: int = 2, host: str = NSYMM):
        self.host = host
        self.rank = rank
        clean: dict[tuple, int] = {}
        for key, c in (terms or {}).items():
            if len(key) != rank:
                raise ValueError(f"tensor key {key!r} does not have rank {rank}")
            key = tuple(tuple(w) for w in key)
            clean[key] = clean.get(key, 0) + int(c)
        self._terms = {k: c for k, c in clean.items() if c}

    @classmethod
    def _raw(cls, terms: dict, rank: int, host: str) -> "Tensor":
        t = object.__new__(cls)
        t.host = host
        t.rank = rank
        t._terms = terms
        return t

    def items(self) -> list[tuple[tuple, int]]:
        return sorted(self._terms.items(), key=lambda kv: tuple(word_key(w) for w in kv[0]))

    def terms(self) -> Mapping[tuple, int]:
        return dict(self._terms)

    def coeff(self, key: Iterable[Iterable[int]]) -> int:
        return self._terms.get(tuple(tuple(w) for w in key), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: "Tensor") -> None:
        if not isinstance(other, Tensor) or other.rank != self.rank or other.host != self.host:
            raise ValueError("tensor rank/host mismatch")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return Tensor._raw(out, self.rank, self.host)

    def __neg__(self) -> "Tensor":
        return Tensor._raw({k: -c for k, c in self._terms.items()}, self.rank, self.host)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def scale(self, k: int) -> "Tensor":
        if not k:
            return Tensor._raw({}, self.rank, self.host)
        return Tensor._raw({key: k * c for key, c in self._terms.items()}, self.rank, self.host)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out: dict[tuple, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + c1 * c2
        return Tensor._raw({k: c for k, c in out.items() if c}, self.rank, self.host)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return (self.rank, self.host, self._terms) == (other.rank, other.host, other._terms)

    def __repr__(self) -> str:
        return f"Tensor({pretty_tensor(self)!r})"


def tensor(*polys: NCPoly) -> Tensor:
    """Pure tensor ``p1 (x) p2 (x) ... (x) pk``."""
    host = polys[0].host
    terms: dict[tuple, int] = {(): 1}
    for p in polys:
        if p.host != host:
            raise ValueError("host mismatch in tensor product")
        nxt: dict[tuple, int] = {}
        for k, c in terms.items():
            for w, d in p._terms.items():
                nxt[k + (w,)] = c * d
        terms = nxt
    return Tensor._raw(terms, len(polys), host)


def tensor_sum(parts: Iterable[Tensor], rank: int = 2, host: str = NSYMM) -> Tensor:
    out: dict[tuple, int] = {}
    for t in parts:
        for k, c in t._terms.items():
            out[k] = out.get(k, 0) + c
    return Tensor._raw({k: c for k, c in out.items() if c}, rank, host)


# --- coproduct -----------------------------------------------------------------------


@lru_cache(maxsize=200_000)
def _word_coproduct(word: Word) -> tuple[tuple[tuple[Word, Word], int], ...]:
    acc: dict[tuple[Word, Word], int] = {((), ()): 1}
    for a in word:
        s = 1 if a > 0 else -1
        n = abs(a)
        nxt: dict[tuple[Word, Word], int] = {}
        for (left, right), c in acc.items():
            for i in range(n + 1):
                l2 = left + (s * i,) if i else left
                r2 = right + (s * (n - i),) if i < n else right
                key = (l2, r2)
                nxt[key] = nxt.get(key, 0) + c
        acc = nxt
    return tuple(acc.items())


def mu(p: NCPoly) -> Tensor:
    """Comultiplication, the algebra morphism with ``mu(Z_n) = sum Z_i (x) Z_{n-i}``."""
    out: dict[tuple, int] = {}
    get = out.get
    for w, c in p._terms.items():
        for key, d in _word_coproduct(w):
            out[key] = get(key, 0) + c * d
    return Tensor._raw({k: v for k, v in out.items() if v}, 2, p.host)


def reduced_coproduct(p: NCPoly) -> Tensor:
    """``mu(p) - 1 (x) p - p (x) 1`` (the constant term is treated like any other)."""
    one = NCPoly.one(p.host)
    return mu(p) - tensor(one, p) - tensor(p, one)


def is_primitive(p: NCPoly) -> bool:
    if p.coeff(()) != 0:
        return False
    out: dict[tuple, int] = {}
    get = out.get
    for w, c in p._terms.items():
        for (left, right), d in _word_coproduct(w):
            if left and right:
                out[(left, right)] = get((left, right), 0) + c * d
    return not any(out.values())


def apply_to_slot(t: Tensor, slot: int, fn: Callable[[Word], Iterable[tuple[tuple, int]]], width: int) -> Tensor:
    """Replace slot ``slot`` of every key by the ``width`` words produced by ``fn``."""
    out: dict[tuple, int] = {}
    for key, c in t._terms.items():
        for parts, d in fn(key[slot]):
            k = key[:slot] + tuple(parts) + key[slot + 1 :]
            out[k] = out.get(k, 0) + c * d
    return Tensor._raw({k: v for k, v in out.items() if v}, t.rank + width - 1, t.host)


def iterated_coproduct(k: int, p: NCPoly) -> Tensor:
    """``mu_2 = mu``, ``mu_k = (id^(k-2) (x) mu) mu_{k-1}``."""
    if k < 2:
        raise ValueError("iterated coproduct needs k >= 2")
    t = mu(p)
    for r in range(3, k + 1):
        t = apply_to_slot(t, r - 2, _word_coproduct, 2)
    return t


def counit(p: NCPoly) -> int:
    return p.coeff(())


# --- antipode, Verschiebung, reversal, substitution ------------------------------------


@lru_cache(maxsize=None)
def _antipode_letter(a: int) -> NCPoly:
    host = NSYMM if a > 0 else TWO_NSYMM
    # X letters share positive codes with Z; the host of the caller is patched below
    s, n = (1, a) if a > 0 else (-1, -a)
    gen = lambda i: NCPoly._raw({(s * i,): 1}, host)
    out = -gen(n)
    for i in range(1, n):
        out = out - _antipode_letter(s * i) * gen(n - i)
    return out


def _antipode_letter_in(a: int, host: str) -> NCPoly:
    p = _antipode_letter(a)
    return p if p.host == host else NCPoly._raw(p._terms, host)


def antipode(p: NCPoly) -> NCPoly:
    """Antipode: ``iota(Z_n) = -Z_n - sum_{0<i<n} iota(Z_i) Z_{n-i}``, extended anti-multiplicatively."""
    out = NCPoly.zero(p.host)
    for w, c in p._terms.items():
        term = NCPoly.one(p.host).scale(c)
        for a in reversed(w):
            term = term * _antipode_letter_in(a, p.host)
        out = out + term
    return out


def verschiebung(r: int, p: NCPoly) -> NCPoly:
    """``V_r(Z_n) = Z_{n/r}`` if ``r | n`` else 0, extended multiplicatively."""
    if r < 1:
        raise ValueError("Verschiebung index must be >= 1")
    out: dict[Word, int] = {}
    for w, c in p._terms.items():
        if all(a % r == 0 for a in w):
            v = tuple(a // r for a in w)
            out[v] = out.get(v, 0) + c
    return NCPoly._raw({w: c for w, c in out.items() if c}, p.host)


def reverse(p: NCPoly) -> NCPoly:
    return NCPoly._raw({w[::-1]: c for w, c in p._terms.items()}, p.host)


def swap_xy(p: NCPoly) -> NCPoly:
    """Exchange ``X_n <-> Y_n`` in a 2NSymm polynomial."""
    if p.host != TWO_NSYMM:
        raise ValueError("swap_xy needs a 2NSymm polynomial")
    return NCPoly._raw({tuple(-a for a in w): c for w, c in p._terms.items()}, p.host)


def _lookup(assign, index: int, name: str) -> NCPoly:
    if assign is None:
        raise KeyError(f"no assignment for {name}{index}")
    if callable(assign):
        return assign(index)
    try:
        return assign[index]
    except (KeyError, IndexError):
        raise KeyError(f"no assignment for {name}{index}") from None


def substitute(
    p: NCPoly,
    assign_z=None,
    assign_x=None,
    assign_y=None,
    host: str | None = None,
) -> NCPoly:
    """Algebra morphism sending each letter to the image given by the assignments.

    Assignments are mappings or callables ``index -> NCPoly``.  ``assign_z`` is
    used for NSymm input, ``assign_x``/``assign_y`` for 2NSymm input.  All
    images must share a host; ``host`` is only needed when ``p`` has no letters.
    """
    cache: dict[int, NCPoly] = {}

    def image(a: int) -> NCPoly:
        img = cache.get(a)
        if img is None:
            if p.host == NSYMM:
                img = _lookup(assign_z, a, "Z")
            elif a > 0:
                img = _lookup(assign_x, a, "X")
            else:
                img = _lookup(assign_y, -a, "Y")
            cache[a] = img
        return img

    target = host
    for w in p._terms:
        if w:
            target = image(w[0]).host
            break
    if target is None:
        target = p.host

    def walk(terms: dict[Word, int], depth: int) -> NCPoly:
        # Horner scheme on a trie of suffixes: shares common prefixes
        const = 0
        groups: dict[int, dict[Word, int]] = {}
        for w, c in terms.items():
            if len(w) == depth:
                const += c
            else:
                groups.setdefault(w[depth], {})[w] = c
        out = NCPoly._raw({(): const} if const else {}, target)
        for a, sub in groups.items():
            img = image(a)
            if img.host != target:
                raise ValueError("substitution images live in different hosts")
            out = out + img * walk(sub, depth + 1)
        return out

    return walk(p._terms, 0)


# --- text and JSON -------------------------------------------------------------------


def _letter_name(a: int, host: str) -> str:
    if host == NSYMM:
        return f"Z{a}"
    return f"X{a}" if a > 0 else f"Y{-a}"


def pretty_word(word: Word, host: str = NSYMM) -> str:
    if not word:
        return "1"
    parts = []
    for a, run in itertools.groupby(word):
        n = len(list(run))
        name = _letter_name(a, host)
        parts.append(name if n == 1 else f"{name}^{n}")
    return "*".join(parts)


def pretty(p: NCPoly) -> str:
    """Human-readable form such as ``2*Z2 - Z1^2``."""
    if not p:
        return "0"
    out = []
    for i, (w, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = pretty_word(w, p.host)
        if not w:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}*{body}"
        if i == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


def pretty_tensor(t: Tensor) -> str:
    if not t:
        return "0"
    out = []
    for i, (key, c) in enumerate(t.items()):
        body = " (x) ".join(pretty_word(w, t.host) for w in key)
        mag = abs(c)
        text = body if mag == 1 else f"{mag}*{body}"
        if i == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append(f" {'-' if c < 0 else '+'} {text}")
    return "".join(out)


def word_to_json(word: Word, host: str):
    if host == NSYMM:
        return list(word)
    return [list(Letter.decode(a, host)) for a in word]


def word_from_json(data, host: str) -> Word:
    if host == NSYMM:
        return tuple(int(a) for a in data)
    return tuple(Letter(str(tag), int(i)).encode() for tag, i in data)


def poly_to_json(p: NCPoly) -> list[dict]:
    return [{"word": word_to_json(w, p.host), "coeff": str(c)} for w, c in p.items()]


def poly_from_json(data: list[dict], host: str = NSYMM) -> NCPoly:
    terms: dict[Word, int] = {}
    for t in data:
        w = word_from_json(t["word"], host)
        terms[w] = terms.get(w, 0) + int(t["coeff"])
    return NCPoly(terms, host)
