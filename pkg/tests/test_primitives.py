import pytest

from nsymm import curves, freeness, primitives, words, zlattice
from nsymm.isobaric import newton_P
from nsymm.ncalgebra import NCPoly, Z, commutator, is_primitive, verschiebung


def lyndon_upto(n):
    return [a for m in range(1, n + 1) for a in words.enumerate_lyndon(m)]


def test_small_primitives():
    assert primitives.build_P((1,)) == Z(1)
    assert primitives.build_P((2,)) == Z(2).scale(2) - Z(1) ** 2
    assert primitives.build_P((1, 2)) == Z(1) * Z(2) - Z(2) * Z(1)
    assert primitives.build_P((1, 1, 2)) == commutator(Z(1), commutator(Z(1), Z(2)))


def test_d_examples():
    assert primitives.build_d((1, 2), 1)(1) == Z(1) * Z(2) - Z(2) * Z(1)
    assert primitives.build_d((2, 4), 3).terms == primitives.build_d((1, 2), 3).terms
    assert primitives.build_d((1, 1, 2), 1)(1) == commutator(Z(1), commutator(Z(1), Z(2)))
    assert primitives.build_d((5,), 3).terms == curves.natural_curve(3).terms


def test_d_matches_explicit_substitution():
    from nsymm.isobaric import build_L_table

    z = curves.natural_curve(8)
    L = build_L_table(8)
    explicit = curves.subst_curve2(curves.ray_curve(1, 2, L, 2), z, z)
    assert explicit.terms == primitives.build_d((1, 2), 2).terms
    inner = primitives.build_d((1, 2), 2)
    explicit = curves.subst_curve2(curves.ray_curve(1, 1, L, 2), curves.natural_curve(2), inner)
    assert explicit.terms == primitives.build_d((1, 1, 2), 2).terms


def test_non_lyndon_rejected():
    for bad in ((2, 1), (1, 1), ()):
        with pytest.raises(ValueError):
            primitives.build_P(bad)
        with pytest.raises(ValueError):
            primitives.fl_bracket(bad)
    with pytest.raises(ValueError):
        primitives.build_d((2, 1), 2)


@pytest.mark.parametrize("alpha", lyndon_upto(7), ids=words.format_composition)
def test_primitive_and_triangular(alpha):
    p = primitives.build_P(alpha)
    assert is_primitive(p)
    assert p.is_homogeneous(words.weight(alpha))
    assert primitives.min_term(p) == (alpha, words.g_stat(alpha))
    assert all(words.wll_cmp(w, alpha) >= 0 for w in p.terms())


@pytest.mark.parametrize("alpha", lyndon_upto(6), ids=words.format_composition)
@pytest.mark.parametrize("i", [1, 2])
def test_min_term_of_d(alpha, i):
    g = words.g_stat(alpha)
    assert primitives.min_term(primitives.d_term(alpha, i)) == (words.scale(i, words.divide(alpha, g)), 1)


def test_min_term_examples():
    assert primitives.min_term(primitives.build_P((1, 2))) == ((1, 2), 1)
    assert primitives.min_term(primitives.build_P((2,))) == ((2,), 2)
    assert primitives.min_term(primitives.build_d((1, 2), 2)(2)) == ((2, 4), 1)
    with pytest.raises(ValueError):
        primitives.min_term(NCPoly.zero())


def test_scaling_invariance():
    for alpha in lyndon_upto(2):
        for r in (2, 3):
            assert primitives.build_d(words.scale(r, alpha), 3).terms == primitives.build_d(alpha, 3).terms


def test_over_curve_examples():
    assert primitives.over_curve((1, 2), 2).terms == primitives.build_d((1, 2), 2).terms
    c = primitives.over_curve((2,), 3)
    assert c(1) == Z(2).scale(2) - Z(1) ** 2
    assert curves.is_curve(c)


@pytest.mark.parametrize("alpha", lyndon_upto(5), ids=words.format_composition)
def test_curves_over_primitives(alpha):
    c = primitives.over_curve(alpha, 2)
    assert curves.is_curve(c)
    assert c(1) == primitives.build_P(alpha)
    assert curves.is_curve(primitives.build_d(alpha, 2))


def test_verschiebung_examples():
    assert primitives.verschiebung_on_P(2, (2,)) == Z(1).scale(2)
    assert primitives.verschiebung_on_P(2, (1, 2)) == 0
    assert primitives.verschiebung_on_P(3, (3,)) == Z(1).scale(3)
    assert primitives.verschiebung_on_P(2, (2, 4)) == primitives.build_P((1, 2)).scale(2)


@pytest.mark.parametrize("alpha", lyndon_upto(6), ids=words.format_composition)
def test_verschiebung_dichotomy(alpha):
    for r in range(1, max(words.weight(alpha), 6) + 1):
        image = verschiebung(r, primitives.build_P(alpha))
        if words.g_stat(alpha) % r:
            assert image == 0
        else:
            assert image == primitives.build_P(words.divide(alpha, r)).scale(r)


def test_prim_basis_matrix():
    M2 = primitives.prim_basis_matrix(2)
    assert primitives.lyndon_block(M2, 2) == [[2]]
    M3 = primitives.prim_basis_matrix(3)
    block = primitives.lyndon_block(M3, 3)
    assert [block[i][i] for i in range(2)] == [3, 1]  # wll order puts [3] before [1,2]
    assert zlattice.determinant(primitives.lyndon_block(primitives.prim_basis_matrix(5), 5)) == 5


def test_fl_bracket():
    P1, P2 = newton_P(1), newton_P(2)
    assert primitives.fl_bracket((2,)) == P2
    assert primitives.fl_bracket((1, 2)) == (Z(1) * Z(2) - Z(2) * Z(1)).scale(2)
    assert primitives.fl_bracket((1, 1, 2)) == commutator(P1, commutator(P1, P2))


def test_index_table():
    assert [primitives.index_of_FL(n) for n in range(1, 7)] == [1, 1, 2, 6, 576, 69120]
    assert primitives.index_product_formula(3) == 2


def test_index_weight_seven_agrees():
    row = primitives.index_row(7)
    assert row["snf_index"] == row["product_formula"] == primitives.index_of_FL(7)


@pytest.mark.parametrize("n", range(1, 8))
def test_integral_basis(n):
    assert freeness.check_integral_basis(n)
