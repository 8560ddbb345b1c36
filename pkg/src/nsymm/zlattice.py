"""Exact integer linear algebra on row lattices.

Matrices are lists of rows of Python ints.  A matrix stands for the lattice
spanned by its rows.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

IntMatrix = list[list[int]]

INFINITE = math.inf


def _copy(M: Sequence[Sequence[int]]) -> IntMatrix:
    return [[int(x) for x in row] for row in M]


def _ncols(M: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    if M:
        width = len(M[0])
        if any(len(r) != width for r in M):
            raise ValueError("ragged matrix")
        return width
    return ncols or 0


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    if A and len(A[0]) != len(B):
        raise ValueError("shape mismatch in matmul")
    cols = list(zip(*B)) if B else []
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def transpose(M: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(c) for c in zip(*M)]


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Bareiss fraction-free elimination."""
    A = _copy(M)
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def hnf_with_transform(M: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form ``H = U M`` with ``U`` unimodular.

    Pivots are positive, entries above a pivot lie in ``[0, pivot)``, and zero
    rows sit at the bottom.
    """
    H = _copy(M)
    m, n = len(H), _ncols(H)
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][c]))
            H[r], H[p] = H[p], H[r]
            U[r], U[p] = U[p], U[r]
            done = True
            for i in range(r + 1, m):
                q = H[i][c] // H[r][c]
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                if H[i][c]:
                    done = False
            if done:
                break
        if r < m and H[r][c]:
            if H[r][c] < 0:
                H[r] = [-a for a in H[r]]
                U[r] = [-a for a in U[r]]
            for i in range(r):
                q = H[i][c] // H[r][c]
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
    return H, U


def hermite_normal_form(M: Sequence[Sequence[int]]) -> IntMatrix:
    """Canonical basis of the row lattice (zero rows dropped)."""
    H, _ = hnf_with_transform(M)
    return [row for row in H if any(row)]


def rank(M: Sequence[Sequence[int]]) -> int:
    return len(hermite_normal_form(M))


def same_lattice(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> bool:
    return hermite_normal_form(A) == hermite_normal_form(B)


def left_kernel(M: Sequence[Sequence[int]]) -> IntMatrix:
    """Basis of ``{x in Z^m : x M = 0}``; it is saturated in ``Z^m``."""
    H, U = hnf_with_transform(M)
    return [U[i] for i, row in enumerate(H) if not any(row)]


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """``(U, D, V)`` with ``D = U M V`` diagonal, ``d_i | d_{i+1}``, ``d_i >= 0``."""
    D = _copy(M)
    m, n = len(D), _ncols(D)
    U, V = identity(m), identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                q = D[i][t] // p
                if q:
                    add_row(i, t, -q)
                if D[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = D[t][j] // p
                if q:
                    add_col(j, t, -q)
                if D[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and t < n and D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
    if m and n and matmul(matmul(U, M), V) != D:
        raise AssertionError("Smith normal form recomposition failed")
    return U, D, V


def invariant_factors(M: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form."""
    if not M or not M[0]:
        return []
    _, D, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i]]


def solve(B: Sequence[Sequence[int]], F: Sequence[Sequence[int]]) -> list[list[Fraction]] | None:
    """Rational ``C`` with ``C B = F``, or ``None`` when some row of ``F`` is outside the span.

    ``B`` must have linearly independent rows, so that ``C`` is unique.
    """
    m, n = len(B), _ncols(B)
    k = len(F)
    # Gauss-Jordan on [B^T | F^T]: n equations, m unknowns, k right-hand sides
    A = [[Fraction(B[i][j]) for i in range(m)] + [Fraction(F[r][j]) for r in range(k)] for j in range(n)]
    pivots = []
    row = 0
    for col in range(m):
        p = next((i for i in range(row, n) if A[i][col]), None)
        if p is None:
            raise ValueError("solve needs a basis with independent rows")
        A[row], A[p] = A[p], A[row]
        inv = 1 / A[row][col]
        A[row] = [a * inv for a in A[row]]
        for i in range(n):
            if i != row and A[i][col]:
                f = A[i][col]
                A[i] = [a - f * b for a, b in zip(A[i], A[row])]
        pivots.append(row)
        row += 1
    for i in range(row, n):
        if any(A[i][m:]):
            return None
    return [[A[pivots[c]][m + r] for c in range(m)] for r in range(k)]


def solve_integral(B: Sequence[Sequence[int]], F: Sequence[Sequence[int]]) -> IntMatrix:
    """Integer ``C`` with ``C B = F``; raises if ``F`` is not in the row lattice of ``B``."""
    C = solve(B, F)
    if C is None:
        raise ValueError("rows are not in the rational span")
    if any(x.denominator != 1 for row in C for x in row):
        raise ValueError("rows are in the rational span but not in the lattice")
    return [[int(x) for x in row] for row in C]


def lattice_index(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> int | float:
    """Index of the row lattice of ``A`` in that of ``B``; ``INFINITE`` if ranks differ."""
    basis = hermite_normal_form(B)
    if not basis:
        if any(any(r) for r in A):
            raise ValueError("A is not contained in the lattice of B")
        return 1
    C = solve_integral(basis, A) if A else []
    if rank(C) < len(basis):
        return INFINITE
    return math.prod(invariant_factors(C))


def is_pure_sublattice(A: Sequence[Sequence[int]], ambient_rank: int) -> bool:
    """Saturation test: all nonzero invariant factors of ``A`` equal 1."""
    if A and len(A[0]) != ambient_rank:
        raise ValueError("row length differs from the ambient rank")
    return all(d == 1 for d in invariant_factors(A))
