import pytest

from nsymm.ncalgebra import NSYMM, TWO_NSYMM, NCPoly, X, Y, Z
from nsymm.series import (
    Series1,
    Series2,
    binomial_2curve,
    inv1,
    inv2,
    is_2curve,
    mul1,
    mul2,
    one2,
    restrict_direction,
    x_of_s,
    y_of_t,
    z_of_s,
    z_of_t,
)


def z_series(T):
    return Series1.from_terms([Z(i) for i in range(1, T + 1)])


def test_inverse_of_z():
    inv = inv1(z_series(3))
    assert inv[1] == -Z(1)
    assert inv[2] == Z(1) ** 2 - Z(2)
    assert mul1(z_series(5), inv1(z_series(5))) == Series1.from_terms([NCPoly.zero()] * 5)
    assert mul1(inv1(z_series(5)), z_series(5)) == Series1.from_terms([NCPoly.zero()] * 5)


def test_double_inverse():
    assert inv1(inv1(z_series(6))) == z_series(6)


def test_inv1_needs_unit_constant():
    with pytest.raises(ValueError):
        inv1(Series1((Z(1).scale(2), Z(1))))


def test_truncation_consistency():
    small = inv1(z_series(3))
    big = inv1(z_series(6))
    assert big.truncate(3) == small


def test_series2_inverse_both_sides():
    W = 5
    for S in (x_of_s(W), mul2(x_of_s(W), y_of_t(W)), binomial_2curve(W)):
        assert mul2(S, inv2(S)) == one2(W, S.host)
        assert mul2(inv2(S), S) == one2(W, S.host)


def test_series2_truncation_consistency():
    a = mul2(mul2(inv2(x_of_s(6)), inv2(y_of_t(6))), mul2(x_of_s(6), y_of_t(6)))
    b = mul2(mul2(inv2(x_of_s(4)), inv2(y_of_t(4))), mul2(x_of_s(4), y_of_t(4)))
    assert a.truncate(4) == b


def test_two_curve_closure():
    W = 6
    xs, yt = x_of_s(W), y_of_t(W)
    assert is_2curve(xs) and is_2curve(yt)
    assert is_2curve(mul2(xs, yt))
    assert is_2curve(inv2(mul2(yt, xs)))
    assert is_2curve(binomial_2curve(W))
    assert is_2curve(inv2(binomial_2curve(W)))
    assert is_2curve(mul2(inv2(z_of_s(W)), mul2(inv2(z_of_t(W)), binomial_2curve(W))))


def test_not_a_two_curve():
    S = Series2({(0, 0): NCPoly.one(), (1, 0): Z(2)}, 2)
    assert not is_2curve(S)


def test_binomial_coefficients():
    S = binomial_2curve(4)
    assert S[(2, 2)] == Z(4).scale(6)
    assert S[(1, 0)] == Z(1)


def test_slot_weight_checked():
    with pytest.raises(ValueError):
        Series2({(1, 0): Z(2)}, 2, NSYMM, slot_weight=(1, 1))
    with pytest.raises(ValueError):
        Series2({(3, 0): Z(3)}, 2)


def test_restrict_direction():
    S = Series2({(0, 0): NCPoly.one(TWO_NSYMM), (1, 2): X(1) * Y(2), (2, 4): X(2) * Y(4)}, 6, TWO_NSYMM)
    c = restrict_direction(S, 1, 2)
    assert c.coeffs == (NCPoly.one(TWO_NSYMM), X(1) * Y(2), X(2) * Y(4))
    bad = Series2({(0, 0): NCPoly.one(TWO_NSYMM), (1, 1): X(1) * Y(1)}, 6, TWO_NSYMM)
    with pytest.raises(ValueError, match=r"\(1, 1\)"):
        restrict_direction(bad, 1, 2)
    with pytest.raises(ValueError):
        restrict_direction(S, 2, 4)


def test_json_round_trips():
    s = inv1(z_series(4))
    assert Series1.from_json(s.to_json()) == s
    S = inv2(binomial_2curve(4))
    assert Series2.from_json(S.to_json()) == S
