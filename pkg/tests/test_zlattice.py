import math
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import hermite_normal_form as sympy_hnf
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from nsymm import zlattice

matrix_st = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=m, max_size=m))
)


def test_snf_examples():
    assert zlattice.smith_normal_form([[2, 0], [0, 3]])[1] == [[1, 0], [0, 6]]
    assert zlattice.smith_normal_form([[1, 0], [0, 1]])[1] == [[1, 0], [0, 1]]
    assert zlattice.smith_normal_form([[2, 0], [0, 0]])[1] == [[2, 0], [0, 0]]


def test_lattice_index_examples():
    assert zlattice.lattice_index([[2, 0], [0, 2]], [[1, 0], [0, 1]]) == 4
    assert zlattice.lattice_index([[1, 0], [0, 1]], [[1, 0], [0, 1]]) == 1
    assert zlattice.lattice_index([[1, 1], [0, 2]], [[1, 0], [0, 1]]) == 2
    assert zlattice.lattice_index([[1, 0]], [[1, 0], [0, 1]]) == zlattice.INFINITE
    with pytest.raises(ValueError):
        zlattice.lattice_index([[1, 0]], [[2, 0], [0, 1]])
    with pytest.raises(ValueError):
        zlattice.lattice_index([[0, 0, 1]], [[1, 0, 0], [0, 1, 0]])


def test_purity_examples():
    assert zlattice.is_pure_sublattice([[1, 0]], 2)
    assert not zlattice.is_pure_sublattice([[2, 0]], 2)
    assert not zlattice.is_pure_sublattice([[1, 1], [1, -1]], 2)


def test_hnf_example_and_kernel():
    assert zlattice.hermite_normal_form([[4, 6], [2, 3], [6, 9]]) == [[2, 3]]
    K = zlattice.left_kernel([[1, 2], [2, 4], [3, 5]])
    assert len(K) == 1
    assert zlattice.matmul(K, [[1, 2], [2, 4], [3, 5]]) == [[0, 0]]


@settings(max_examples=80, deadline=None)
@given(matrix_st)
def test_snf_recomposition_and_oracle(M):
    U, D, V = zlattice.smith_normal_form(M)
    assert zlattice.matmul(zlattice.matmul(U, M), V) == D
    assert abs(zlattice.determinant(U)) == 1 and abs(zlattice.determinant(V)) == 1
    diag = [D[i][i] for i in range(min(len(M), len(M[0])))]
    assert all(d >= 0 for d in diag)
    nz = [d for d in diag if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    S = sympy_snf(sympy.Matrix(M), domain=sympy.ZZ)
    assert sorted(nz) == sorted(abs(S[i, i]) for i in range(min(S.shape)) if S[i, i])


@settings(max_examples=80, deadline=None)
@given(matrix_st)
def test_hnf_against_sympy(M):
    H = zlattice.hermite_normal_form(M)
    if not H:
        assert zlattice.rank(M) == 0
        return
    # sympy works with column lattices; transpose in and out
    S = sympy_hnf(sympy.Matrix(M).T).T
    ours = sympy.Matrix(H)
    assert ours.rank() == S.rows
    # same row lattice: each basis lies in the other's lattice
    assert zlattice.same_lattice(H, [list(map(int, S.row(i))) for i in range(S.rows)])


@settings(max_examples=60, deadline=None)
@given(matrix_st)
def test_snf_permutation_invariance(M):
    rng = random.Random(len(M) * 31 + len(M[0]))
    rows = M[:]
    rng.shuffle(rows)
    perm = list(range(len(M[0])))
    rng.shuffle(perm)
    P = [[row[j] for j in perm] for row in rows]
    assert zlattice.invariant_factors(M) == zlattice.invariant_factors(P)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_against_sympy(M):
    assert zlattice.determinant(M) == sympy.Matrix(M).det()
    if zlattice.determinant(M):
        assert math.prod(zlattice.invariant_factors(M)) == abs(zlattice.determinant(M))


def test_index_multiplicative_on_nested_triples():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 4)
        C = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        while zlattice.determinant(C) == 0:
            C = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        T1 = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        while zlattice.determinant(T1) == 0:
            T1 = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        T2 = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        while zlattice.determinant(T2) == 0:
            T2 = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        B = zlattice.matmul(T1, C)
        A = zlattice.matmul(T2, B)
        assert zlattice.lattice_index(A, B) * zlattice.lattice_index(B, C) == zlattice.lattice_index(A, C)


def test_left_kernel_is_saturated():
    M = [[2, 4], [1, 2], [3, 6]]
    K = zlattice.left_kernel(M)
    assert zlattice.is_pure_sublattice(K, 3)
    assert zlattice.matmul(K, M) == [[0, 0], [0, 0]]


def test_solve():
    C = zlattice.solve([[1, 0], [1, 2]], [[3, 4]])
    assert C == [[1, 2]]
    assert zlattice.solve([[1, 0]], [[0, 1]]) is None
    with pytest.raises(ValueError):
        zlattice.solve_integral([[2, 0]], [[1, 0]])
