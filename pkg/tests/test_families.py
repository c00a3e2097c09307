"""Partial action/coaction families: verification, hand values, negatives."""
import pytest

from partial_hopf.exact_arith import ParamPoly, Rational
from partial_hopf.expr import parse_poly
from partial_hopf.algebras import group_algebra_cyclic, nichols, taft
from partial_hopf.hopf_core import (
    AlgElement, Functional, basis_element, convolution, counit_functional,
)
from partial_hopf.families import (
    ActionFamily, NotADivisor, action_consequence_checks,
    convolution_idempotent, dual_group_action_families,
    dual_group_subgroup_action, group_action_families, group_subgroup_action,
    instance_residual, nichols_action_families, nichols_coaction_families,
    nichols_parametric_action, nichols_parametric_coaction,
    special_value_checks, taft_action_families, taft_coaction_families,
    taft_parametric_action, taft_parametric_coaction, taft_subgroup_action,
    taft_subgroup_coaction, verify_partial_action, verify_partial_coaction,
    verify_symmetric_action, verify_symmetric_coaction,
)


@pytest.mark.parametrize("n", range(2, 6))
def test_taft_action_families_verify(n):
    fams = taft_action_families(n)
    assert len(fams) == len([k for k in range(1, n + 1) if n % k == 0])
    for fam in fams:
        assert verify_partial_action(fam.algebra, fam.functional).ok
        assert verify_symmetric_action(fam.algebra, fam.functional).ok


@pytest.mark.parametrize("n", range(2, 6))
def test_taft_coaction_families_verify(n):
    for fam in taft_coaction_families(n):
        assert verify_partial_coaction(fam.algebra, fam.element).ok
        assert verify_symmetric_coaction(fam.algebra, fam.element).ok


@pytest.mark.parametrize("n", range(2, 5))
def test_nichols_families_verify(n):
    for fam in nichols_action_families(n):
        assert verify_partial_action(fam.algebra, fam.functional).ok
        assert verify_symmetric_action(fam.algebra, fam.functional).ok
    for fam in nichols_coaction_families(n):
        assert verify_partial_coaction(fam.algebra, fam.element).ok
        assert verify_symmetric_coaction(fam.algebra, fam.element).ok


@pytest.mark.parametrize("n", range(1, 9))
def test_group_families_verify(n):
    for fam in group_action_families(n) + dual_group_action_families(n):
        assert verify_partial_action(fam.algebra, fam.functional).ok
        assert verify_symmetric_action(fam.algebra, fam.functional).ok
        assert convolution_idempotent(fam)


def test_family_values_smallest_case():
    fam = taft_parametric_action(2)
    f = fam.functional
    a = ParamPoly.var(2, "a")
    assert f.value_on("1") == ParamPoly.one(2)
    assert f.value_on("g").is_zero()
    assert f.value_on("x") == a
    assert f.value_on("gx") == a


def test_coaction_values_smallest_case():
    fam = taft_parametric_coaction(2)
    z = fam.element
    half = ParamPoly.const(2, Rational(1, 2))
    a = ParamPoly.var(2, "a")
    assert z.coords[0] == half
    assert z.coords[2] == half          # g is index 2 when n = 2
    assert z.coords[1].is_zero()        # no x term
    assert z.coords[3] == -a            # gx coefficient


def test_taft3_coaction_values():
    # nonzero x-part coefficients: (q-1)a/3 on gx, (q^2-1)a/3 on g^2x,
    # -q a^2 on gx^2 (times 1/3)
    fam = taft_parametric_coaction(3)
    z = fam.element
    third = Rational(1, 3)

    def expect(expr):
        return parse_poly(expr, 3, root_symbol="q") * third

    idx = lambda i, j: i * 3 + j
    assert z.coords[idx(0, 1)].is_zero()
    assert z.coords[idx(1, 1)] == expect("(q - 1)*a")
    assert z.coords[idx(2, 1)] == expect("(q^2 - 1)*a")
    assert z.coords[idx(1, 2)] == expect("-3*q*a^2")
    assert z.coords[idx(0, 2)].is_zero()
    assert z.coords[idx(2, 2)].is_zero()


def test_parametric_action_at_zero_is_trivial_subgroup_indicator():
    for n in (2, 3, 4, 6):
        fam = taft_parametric_action(n)
        at0 = fam.at(**{fam.params[0]: 0})
        assert at0 == taft_subgroup_action(n, n).functional


def test_parametric_coaction_at_zero_is_group_average():
    for n in (2, 3, 4):
        fam = taft_parametric_coaction(n)
        z0 = [c.subs(fam.params[0], 0) for c in fam.element.coords]
        assert tuple(z0) == taft_subgroup_coaction(n, 1).element.coords


def test_action_restricts_to_group_algebra_family():
    # group-like values of every taft subgroup action match the kC_n family
    n = 6
    for k in (1, 2, 3, 6):
        f = taft_subgroup_action(n, k).functional
        g = group_subgroup_action(n, k).functional
        for i in range(n):
            assert f.value_on(i * n) == g.value_on(i)


def test_negative_control_not_closed_support():
    H = taft(4)
    coords = [ParamPoly.zero(4)] * H.dim
    coords[0] = ParamPoly.one(4)
    coords[4] = ParamPoly.one(4)        # lam(g) = 1 but lam(g^2) = 0
    rep = verify_partial_action(H, Functional(H, tuple(coords)))
    assert not rep.ok
    assert any(f.where == ("g", "g") for f in rep.failures)


def test_negative_control_grouplike_element_is_not_coaction():
    H = taft(3)
    rep = verify_partial_coaction(H, basis_element(H, "g"))
    assert not rep.ok


def test_negative_control_stray_primitive_term():
    # adding an x term to the smallest parametric coaction must fail
    # (a sign flip would stay inside the family: a is free)
    H = taft(2)
    fam = taft_parametric_coaction(2)
    coords = list(fam.element.coords)
    coords[1] = ParamPoly.one(2)
    rep = verify_partial_coaction(H, AlgElement(H, tuple(coords)))
    assert not rep.ok


def test_instance_residual_zero_for_counit():
    H = nichols(3)
    eps = counit_functional(H)
    for h in range(H.dim):
        for y in range(H.dim):
            assert instance_residual(H, eps.coords, h, y).is_zero()


@pytest.mark.parametrize("n", range(2, 9))
def test_special_values(n):
    rep = special_value_checks(n)
    assert rep.ok, rep.summary()


def test_consequence_checks_all_families():
    for n in (2, 3, 4, 5):
        for fam in taft_action_families(n):
            assert action_consequence_checks(fam).ok
    for n in (2, 3, 4):
        for fam in nichols_action_families(n):
            assert action_consequence_checks(fam).ok


def test_convolution_idempotence_parametric():
    for n in (2, 3, 4, 5):
        assert convolution_idempotent(taft_parametric_action(n))
    for n in (2, 3, 4):
        assert convolution_idempotent(nichols_parametric_action(n))


def test_not_a_divisor():
    with pytest.raises(NotADivisor):
        taft_subgroup_action(6, 4)
    with pytest.raises(NotADivisor):
        taft_subgroup_coaction(4, 3)
    with pytest.raises(NotADivisor):
        dual_group_subgroup_action(6, 5)


def test_nichols_family_values():
    fam = nichols_parametric_action(4)
    f = fam.functional
    assert fam.params == ("a1", "a2", "a3")
    for i in range(1, 4):
        p = ParamPoly.var(2, "a%d" % i)
        assert f.value_on(1 << i) == p
        assert f.value_on((1 << i) | 1) == p
    assert f.value_on("g").is_zero()
    assert f.value_on("x1x2").is_zero()

    z = nichols_parametric_coaction(4).element
    half = ParamPoly.const(2, Rational(1, 2))
    assert z.coords[0] == half and z.coords[1] == half
    for i in range(1, 4):
        assert z.coords[(1 << i) | 1] == -ParamPoly.var(2, "a%d" % i)
        assert z.coords[1 << i].is_zero()


def test_dual_group_value_is_inverse_subgroup_size():
    n = 12
    for d in (1, 2, 3, 4, 6, 12):
        f = dual_group_subgroup_action(n, d).functional
        size = n // d
        for i in range(n):
            want = ParamPoly.const(n, Rational(1, size)) if i % d == 0 \
                else ParamPoly.zero(n)
            assert f.value_on(i) == want


def _group_average(H, indices, denom):
    coords = [ParamPoly.zero(H.order)] * H.dim
    for i in indices:
        coords[i] = ParamPoly.const(H.order, Rational(1, denom))
    return AlgElement(H, tuple(coords))


def test_subgroup_average_is_group_algebra_coaction():
    H = group_algebra_cyclic(6)
    z = _group_average(H, (0, 2, 4), 3)  # (1 + g^2 + g^4)/3
    assert verify_partial_coaction(H, z).ok
    assert verify_symmetric_coaction(H, z).ok


def test_non_subgroup_average_is_not_a_coaction():
    H = group_algebra_cyclic(6)
    z = _group_average(H, (0, 1), 2)  # support {1, g} is not closed
    assert not verify_partial_coaction(H, z).ok


def test_wrongly_scaled_average_fails_counit_normalization():
    H = group_algebra_cyclic(6)
    z = _group_average(H, (0, 2, 4), 2)
    rep = verify_partial_coaction(H, z)
    assert any(f.check == "counit_normalization" for f in rep.failures)
