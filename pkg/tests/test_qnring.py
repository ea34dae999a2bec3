from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyclotomic.cyclo import phi
from cyclotomic.numth import euler_phi
from cyclotomic.polyq import RatPoly
from cyclotomic.qnring import (
    CapExceeded, NonUnit, QnContext, ZeroInverse, check_cor37, check_lemma34,
    check_theorem33_product, dim_cap, has_subfield, qn_inv, qn_mul, qn_order, qn_reduce,
    roots_of_unity_pm)

SMALL = [n for n in range(1, 21)]
CAPPED = [n for n in range(1, 31) if euler_phi(n) <= 16]


@st.composite
def elements(draw, n=None):
    n = draw(st.sampled_from(SMALL)) if n is None else n
    ctx = QnContext(n)
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=3),
                           min_size=ctx.dim, max_size=ctx.dim))
    return ctx.element(coeffs)


@st.composite
def triples(draw):
    n = draw(st.sampled_from(SMALL))
    return draw(elements(n)), draw(elements(n)), draw(elements(n))


def test_reduce_examples():
    ctx = QnContext(4)
    assert qn_reduce(ctx, RatPoly([0, 0, 1])).rep == RatPoly([-1])
    assert qn_reduce(ctx, phi(4)).rep == RatPoly()
    assert qn_reduce(ctx, RatPoly([3, 2])).rep == RatPoly([3, 2])


def test_context():
    ctx = QnContext(12)
    assert ctx.modulus == phi(12) and ctx.dim == 4
    assert QnContext(1).y == QnContext(1).one


def test_mul_examples():
    ctx = QnContext(4)
    y = ctx.y
    assert qn_mul(y, y) == -1
    assert y * y * y * y == 1
    a = ctx.element([2, Fraction(1, 3)])
    assert a * ctx.one == a
    y3 = QnContext(3).y
    assert (y3 * y3).rep == RatPoly([-1, -1])


def test_context_mismatch():
    with pytest.raises(ValueError):
        QnContext(3).y * QnContext(4).y


def test_inv_examples():
    ctx = QnContext(4)
    assert qn_inv(ctx.y) == -ctx.y
    assert qn_inv(ctx.one) == ctx.one
    ctx3 = QnContext(3)
    assert qn_inv(ctx3.y).rep == RatPoly([-1, -1])
    assert qn_inv(ctx3.y) == ctx3.y * ctx3.y
    with pytest.raises(ZeroInverse):
        qn_inv(ctx.zero)


def test_nonunit_signals_reducible_modulus():
    ctx = QnContext(4)
    # forge a context whose modulus is not irreducible to exercise the guard
    ctx._rmod = RatPoly([-1, 0, 1])
    with pytest.raises(NonUnit):
        qn_inv(ctx.reduce(RatPoly([1, 1])))


def test_order_examples():
    y5 = QnContext(5).y
    assert qn_order(y5, 10) == 5
    assert qn_order(-y5, 12) == 10
    assert qn_order(-y5, 9) is None
    ctx4 = QnContext(4)
    assert qn_order(1 + ctx4.y, 100) is None
    with pytest.raises(ValueError):
        qn_order(ctx4.zero, 5)


@settings(max_examples=60, deadline=None)
@given(triples())
def test_ring_laws(abc):
    a, b, c = abc
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a + b) - b == a


@settings(max_examples=60, deadline=None)
@given(elements())
def test_inverse_property(a):
    if a:
        assert a * qn_inv(a) == 1
        assert a / a == 1


@pytest.mark.parametrize("n", CAPPED)
def test_generator_is_primitive_root(n):
    y = QnContext(n).y
    assert y ** n == 1
    assert all(y ** t != 1 for t in range(1, n))


@pytest.mark.parametrize("n", SMALL)
def test_unit_differences(n):
    ctx = QnContext(n)
    powers = [ctx.y ** r for r in range(n)]
    for r in range(n):
        for s in range(r):
            d = powers[r] - powers[s]
            assert d * qn_inv(d) == 1


def test_lemma34_examples():
    assert check_lemma34(4)
    assert check_lemma34(1)
    assert check_lemma34(12)


def test_theorem33_examples():
    assert check_theorem33_product(4)
    assert check_theorem33_product(2)
    assert check_theorem33_product(15)
    assert check_theorem33_product(1)


def test_cor37_examples():
    rep = check_cor37(4)
    assert (rep.generator_order, rep.expected, rep.holds) == (4, 4, True)
    rep = check_cor37(3)
    assert (rep.generator_order, rep.holds) == (6, True)
    rep = check_cor37(9)
    assert (rep.generator_order, rep.holds) == (18, True)
    with pytest.raises(ValueError):
        check_cor37(1)


@pytest.mark.parametrize("n", CAPPED)
def test_qn_checks_sweep(n):
    assert check_lemma34(n)
    assert check_theorem33_product(n)
    if n >= 2:
        assert check_cor37(n).holds


def test_cap():
    with pytest.raises(CapExceeded):
        check_lemma34(19)
    with pytest.raises(CapExceeded):
        check_theorem33_product(25, cap=16)
    assert check_theorem33_product(19, cap=18)


def test_cap_env_override(monkeypatch):
    assert dim_cap() == 16
    monkeypatch.setenv("CYCLO_QN_DIM_CAP", "4")
    assert dim_cap() == 4
    with pytest.raises(CapExceeded):
        check_lemma34(7)
    monkeypatch.setenv("CYCLO_QN_DIM_CAP", "0")
    with pytest.raises(ValueError):
        dim_cap()


def test_has_subfield():
    assert has_subfield(12, 4)
    assert not has_subfield(12, 8)
    assert has_subfield(12, 12)
    with pytest.raises(ValueError):
        has_subfield(9, 3)


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 11, 13, 15])
def test_odd_pm_powers_count(n):
    assert len(roots_of_unity_pm(n)) == 2 * n
