"""Exact scalar tower: cyclotomic coordinates and parameter polynomials."""
import pytest
from hypothesis import given, settings, strategies as st

from partial_hopf.exact_arith import (
    CycNumber, OrderMismatch, ParamPoly, Rational,
    cyc_invert, cyclotomic_polynomial, divisors, euler_phi, zeta_pow,
)
from partial_hopf.expr import ExprError, parse_poly, parse_scalar

ORDERS = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12]


# -- cyclotomic polynomials -------------------------------------------------

def _int_poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_product_oracle(n):
    # independent oracle: the product of Phi_d over d | n must equal x^n - 1
    prod = [1]
    for d in divisors(n):
        prod = _int_poly_mul(prod, list(cyclotomic_polynomial(d)))
    expected = [-1] + [0] * (n - 1) + [1]
    assert prod == expected


@pytest.mark.parametrize("n,coeffs", [
    (1, (-1, 1)),
    (2, (1, 1)),
    (3, (1, 1, 1)),
    (4, (1, 0, 1)),
    (6, (1, -1, 1)),
    (8, (1, 0, 0, 0, 1)),
    (12, (1, 0, -1, 0, 1)),
])
def test_cyclotomic_known_values(n, coeffs):
    assert cyclotomic_polynomial(n) == coeffs


@pytest.mark.parametrize("n", ORDERS)
def test_degree_is_euler_phi(n):
    assert len(cyclotomic_polynomial(n)) == euler_phi(n) + 1


# -- roots of unity ---------------------------------------------------------

def test_zeta4_squares_to_minus_one():
    z = zeta_pow(4, 1)
    assert z * z == -1


def test_zeta3_canonical_coords():
    # zeta_3^2 = -1 - zeta_3 after reduction mod 1 + x + x^2
    assert zeta_pow(3, 2).coords == (Rational(-1), Rational(-1))


@pytest.mark.parametrize("n", ORDERS)
def test_zeta_power_law(n):
    for a in range(n):
        for b in range(n):
            assert zeta_pow(n, a) * zeta_pow(n, b) == zeta_pow(n, a + b)


@pytest.mark.parametrize("n", ORDERS)
def test_zeta_has_exact_order(n):
    z = zeta_pow(n, 1)
    acc = CycNumber.one(n)
    for k in range(1, n):
        acc = acc * z
        assert acc != 1, "zeta_%d^%d must not be 1" % (n, k)
    assert acc * z == 1


@pytest.mark.parametrize("n", [n for n in ORDERS if n > 1])
def test_geometric_sum_vanishes(n):
    total = CycNumber.zero(n)
    for k in range(n):
        total = total + zeta_pow(n, k)
    assert total.is_zero()


def test_invert_one_plus_zeta3():
    # (1 + zeta)(-zeta) = -zeta - zeta^2 = 1 because 1 + zeta + zeta^2 = 0
    z = zeta_pow(3, 1)
    got = cyc_invert(1 + z)
    assert got == -z
    assert got * (1 + z) == 1


def test_invert_zero_raises():
    with pytest.raises(ZeroDivisionError):
        cyc_invert(CycNumber.zero(4))


def test_order_mismatch_raises():
    with pytest.raises(OrderMismatch):
        zeta_pow(3, 1) + zeta_pow(4, 1)


rationals = st.tuples(st.integers(-9, 9), st.integers(1, 7)).map(
    lambda t: Rational(t[0]) / Rational(t[1]))


def cyc_numbers(order):
    return st.tuples(*[rationals] * euler_phi(order)).map(
        lambda t: CycNumber(order, t))


@st.composite
def order_and_three(draw):
    order = draw(st.sampled_from(ORDERS))
    xs = draw(st.tuples(cyc_numbers(order), cyc_numbers(order),
                        cyc_numbers(order)))
    return (order,) + xs


@settings(max_examples=60, deadline=None)
@given(order_and_three())
def test_field_axioms(data):
    _, a, b, c = data
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    if not a.is_zero():
        assert a * cyc_invert(a) == 1


# -- parameter polynomials --------------------------------------------------

def test_binomial_expansion():
    a = ParamPoly.var(4, "a")
    assert (1 + a) ** 2 == 1 + 2 * a + a * a


def test_eval_alpha_squared_at_zeta4():
    a = ParamPoly.var(4, "a")
    assert (a * a).eval({"a": zeta_pow(4, 1)}) == -1


def test_eval_missing_parameter():
    a = ParamPoly.var(4, "a")
    with pytest.raises(LookupError):
        a.eval({})


def test_subs_partial():
    order = 3
    a, b = ParamPoly.var(order, "a"), ParamPoly.var(order, "b")
    p = a * a * b + 2 * a + 5
    assert p.subs("a", b) == b * b * b + 2 * b + 5
    assert p.subs("a", 0) == ParamPoly.const(order, 5)


def test_linear_split():
    a, b = ParamPoly.var(2, "a"), ParamPoly.var(2, "b")
    p = 3 * a * b + a - 7 * b + 2
    A, B = p.linear_split("a")
    assert A == 3 * b + 1
    assert B == -7 * b + 2
    with pytest.raises(ValueError):
        (a * a).linear_split("a")


def test_divide_by_var():
    a, b = ParamPoly.var(2, "a"), ParamPoly.var(2, "b")
    p = a * a * b + 4 * a
    assert p.divide_by_var("a") == a * b + 4
    with pytest.raises(ValueError):
        (a + b).divide_by_var("a")


def poly_strategy(order):
    mono = st.lists(
        st.tuples(st.sampled_from("abc"), st.integers(1, 3)),
        max_size=2).map(lambda ps: tuple(sorted(dict(ps).items())))
    term = st.tuples(mono, cyc_numbers(order))
    return st.lists(term, max_size=4).map(
        lambda ts: sum((ParamPoly(order, {m: c}) for m, c in ts),
                       ParamPoly.zero(order)))


@st.composite
def poly_pair_with_point(draw):
    order = draw(st.sampled_from([1, 3, 4, 6]))
    p = draw(poly_strategy(order))
    q = draw(poly_strategy(order))
    point = {name: draw(cyc_numbers(order)) for name in "abc"}
    return p, q, point


@settings(max_examples=50, deadline=None)
@given(poly_pair_with_point())
def test_eval_is_ring_homomorphism(data):
    p, q, point = data
    assert (p + q).eval(point) == p.eval(point) + q.eval(point)
    assert (p * q).eval(point) == p.eval(point) * q.eval(point)


@settings(max_examples=50, deadline=None)
@given(poly_pair_with_point())
def test_render_parse_round_trip(data):
    p, _, _ = data
    assert parse_poly(p.render(), p.order) == p


# -- expression parser ------------------------------------------------------

def test_parse_scalar_examples():
    assert parse_scalar("(1+z)/2", 2) == CycNumber.from_rational(2, Rational(0))
    # over order 2, z = zeta_2 = -1, so (1+z)/2 = 0
    assert parse_scalar("(1+z)/2", 4) == (1 + zeta_pow(4, 1)) / 2
    assert parse_scalar("z^-1", 4) == zeta_pow(4, -1)
    assert parse_scalar("3/4", 1).rational_value() == Rational(3) / 4


def test_parse_rejects_unknown_parameter():
    with pytest.raises(ExprError):
        parse_poly("a + b", 4, params={"a"})


def test_parse_rejects_junk():
    with pytest.raises(ExprError):
        parse_poly("1 + $", 4)
    with pytest.raises(ExprError):
        parse_poly("(1", 4)
