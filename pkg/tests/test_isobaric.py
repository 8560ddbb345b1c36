import math

import pytest

from nsymm import isobaric, words
from nsymm.curves import from_series, is_curve, is_V_curve
from nsymm.ncalgebra import TWO_NSYMM, X, Y, Z, commutator, is_primitive, reverse, substitute, word_bidegree
from nsymm.series import restrict_direction

# frozen small values, checked by hand against the defining recursions
P3 = Z(3).scale(3) - (Z(1) * Z(2)).scale(2) - Z(2) * Z(1) + Z(1) ** 3
Q3 = Z(3).scale(3) - Z(1) * Z(2) - (Z(2) * Z(1)).scale(2) + Z(1) ** 3


def test_newton_small():
    assert isobaric.newton_P(1) == Z(1)
    assert isobaric.newton_P(2) == Z(2).scale(2) - Z(1) ** 2
    assert isobaric.newton_P(3) == P3
    assert isobaric.newton_Q(3) == Q3
    with pytest.raises(ValueError):
        isobaric.newton_P(0)


@pytest.mark.parametrize("n", range(1, 11))
def test_newton_closed_equals_recursive(n):
    assert isobaric.newton_P_closed(n) == isobaric.newton_P_recursive(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_newton_primitive_and_reversal(n):
    assert is_primitive(isobaric.newton_P(n))
    assert is_primitive(isobaric.newton_Q(n))
    assert isobaric.newton_Q(n) == reverse(isobaric.newton_P(n))


def test_first_entries():
    L = isobaric.build_L_table(4)
    assert L[(1, 1)] == commutator(X(1), Y(1))
    assert L[(1, 2)] == commutator(X(1), Y(2)) - Y(1) * commutator(X(1), Y(1))
    N = isobaric.build_N_table(4)
    assert N[(1, 1)] == Z(2).scale(2) - Z(1) ** 2
    assert N[(1, 2)] == P3


def test_table_lookup_error():
    with pytest.raises(KeyError):
        isobaric.build_L_table(3)[(2, 2)]


def test_entries_need_positive_indices():
    with pytest.raises(ValueError):
        isobaric.symbolic_recursion("L_wl").entry(0, 1)
    with pytest.raises(ValueError):
        isobaric.IsobaricRecursion("bogus", Z)


def test_bihomogeneity_and_leading_terms():
    L = isobaric.build_L_table(7)
    N = isobaric.build_N_table(7)
    for (u, v), p in L.entries.items():
        assert all(word_bidegree(w) == (u, v) for w in p.terms())
        rest = p - isobaric.leading_commutator(u, v)
        assert all(len(w) >= 3 for w in rest.terms())
    for (u, v), p in N.entries.items():
        assert p.is_homogeneous(u + v)
        rest = p - Z(u + v).scale(math.comb(u + v, u))
        assert all(len(w) >= 2 for w in rest.terms())


@pytest.mark.parametrize("n", range(2, 11))
def test_n_first_column_is_newton(n):
    assert isobaric.symbolic_recursion("N_wl").entry(1, n - 1) == isobaric.newton_P(n)


@pytest.mark.parametrize("W", range(2, 8))
def test_reconstructions(W):
    assert isobaric.reconstruct_first_decomposition(W)
    assert isobaric.reconstruct_second_decomposition(W)


@pytest.mark.parametrize("W", range(2, 7))
def test_swl_reconstructions_and_symmetry(W):
    assert isobaric.reconstruct_swl_decompositions(W) == (True, True)
    assert isobaric.check_swl_symmetry(W)


def test_lhs_has_no_pure_powers():
    for kind in isobaric.KINDS:
        assert isobaric.has_no_pure_powers(isobaric.decomposition_lhs(kind, 5))


def test_rays_are_curves():
    W = 8
    L = isobaric.build_L_table(W)
    N = isobaric.build_N_table(W)
    for a, b in words.coprime_pairs(6):
        c = from_series(restrict_direction(isobaric.ray_factor(L, a, b, W), a, b))
        assert c.host == TWO_NSYMM
        assert is_curve(c) and is_V_curve(c)
        assert is_curve(from_series(restrict_direction(isobaric.ray_factor(N, a, b, W), a, b)))


def test_n_rays_are_not_v_curves():
    # Z(s+t) itself is not compatible with the Verschiebung maps
    N = isobaric.build_N_table(6)
    c = from_series(restrict_direction(isobaric.ray_factor(N, 1, 1, 6), 1, 1))
    assert is_curve(c) and not is_V_curve(c)


def test_evaluated_recursion_commutes_with_substitution():
    sym = isobaric.build_L_table(6)
    img_x = lambda i: Z(i) * Z(1) + Z(i + 1)
    img_y = lambda j: Z(2 * j)
    rec = isobaric.IsobaricRecursion("L_wl", img_x, img_y)
    for (u, v), p in sym.entries.items():
        if u + v <= 4:
            assert rec.entry(u, v) == substitute(p, assign_x=img_x, assign_y=img_y)
