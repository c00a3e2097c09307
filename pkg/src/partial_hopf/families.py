"""Partial actions and coactions on the base field, and their verifiers.

A partial action of H on its base field is a functional lam with
lam(1) = 1 satisfying, for all h, y in H,

    (A)   lam(h) lam(y)  =  sum  lam(h_1) lam(h_2 y)          ["left"]
    (B)   lam(h) lam(y)  =  sum  lam(h_1 y) lam(h_2)          ["symmetric"]

(B) together with (A) makes the action symmetric.  A partial coaction is an
element z with eps(z) = 1 and

    (C)   z (x) z  =  (z (x) 1) Delta(z)
    (D)   z (x) z  =  Delta(z) (z (x) 1)                      ["symmetric"]

All verifiers sweep every ordered basis pair (resp. the full tensor
identity) and compare exact polynomials in any free parameters, so a pass
is a proof for all parameter values, not a sampled check.

The constructors below build every family of such actions and coactions on
the built-in algebras; the classification solver re-derives them
independently (see classify module).
"""
from __future__ import annotations

from dataclasses import dataclass

from .exact_arith import CycNumber, ParamPoly, Rational, cyc_invert, zeta_pow
from .hopf_core import (
    AlgElement, Functional, HopfData, Report,
    apply_functional, basis_element, comultiply, convolution,
    counit_functional, multiply, tensor_of, unit_element,
)
from .algebras import (
    dual_group_algebra_cyclic, group_algebra_cyclic, nichols, taft,
)
from .qcomb import q_binomial, q_factorial


class NotADivisor(ValueError):
    """Subgroup parameter must divide the group order."""


def _require_divisor(n: int, k: int):
    if k < 1 or n % k != 0:
        raise NotADivisor("%d does not divide %d" % (k, n))


# ---------------------------------------------------------------------------
# residual sweeps
# ---------------------------------------------------------------------------

def instance_residual(H: HopfData, lam, h: int, y: int,
                      symmetric: bool = False) -> ParamPoly:
    """The defect of one (h, y) instance of (A) (or of (B) when symmetric).

    ``lam`` is any object indexable by basis index returning ParamPoly.
    Zero residual means the instance holds identically.
    """
    zero = ParamPoly.zero(H.order)
    lh = lam[h]
    ly = lam[y]
    lhs = zero if (lh.is_zero() or ly.is_zero()) else lh * ly
    rhs = zero
    for c, a, b in H.comult[h]:
        if symmetric:
            outer = lam[b]
            prod_idx = a
        else:
            outer = lam[a]
            prod_idx = b
        if outer.is_zero():
            continue
        row = H.mult.get((prod_idx, y))
        if not row:
            continue
        inner = zero
        for k, ck in row:
            lk = lam[k]
            if not lk.is_zero():
                inner = inner + lk * ck
        if inner.is_zero():
            continue
        rhs = rhs + (outer * inner) * c
    return lhs - rhs


def _check_unital(rep: Report, f: Functional):
    H = f.algebra
    val = apply_functional(f, unit_element(H))
    rep.count()
    if val != ParamPoly.one(H.order):
        rep.fail("unital", ("1",), val.render(), "1")


def verify_partial_action(H: HopfData, f: Functional,
                          symmetric: bool = False) -> Report:
    """Exact verification of (A) (or (B)) over every ordered basis pair."""
    which = "symmetric_action" if symmetric else "partial_action"
    rep = Report("%s(%s)" % (which, H.name))
    if f.algebra is not H:
        raise ValueError("functional lives on %r, not %r" % (f.algebra, H))
    _check_unital(rep, f)
    lam = f.coords
    for h in range(H.dim):
        for y in range(H.dim):
            r = instance_residual(H, lam, h, y, symmetric)
            rep.count()
            if not r.is_zero():
                rep.fail(which, (H.basis[h], H.basis[y]), r.render(), "0")
    return rep


def verify_symmetric_action(H: HopfData, f: Functional) -> Report:
    return verify_partial_action(H, f, symmetric=True)


def verify_partial_coaction(H: HopfData, z: AlgElement,
                            symmetric: bool = False) -> Report:
    """Exact verification of (C) (or (D)); also reports z^2 = z, which the
    coaction law forces."""
    which = "symmetric_coaction" if symmetric else "partial_coaction"
    rep = Report("%s(%s)" % (which, H.name))
    if z.algebra is not H:
        raise ValueError("element lives on %r, not %r" % (z.algebra, H))
    eps = apply_functional(counit_functional(H), z)
    rep.count()
    if eps != ParamPoly.one(H.order):
        rep.fail("counit_normalization", ("eps(z)",), eps.render(), "1")
    dz = comultiply(z)
    z1 = tensor_of(z, unit_element(H))
    zz = tensor_of(z, z)
    prod = (dz * z1) if symmetric else (z1 * dz)
    rep.count()
    diff = zz - prod
    if not diff.is_zero():
        rep.fail(which, ("z",), diff.render(), "0")
    rep.count()
    idem = multiply(z, z) - z
    if not idem.is_zero():
        rep.fail("idempotent", ("z^2 - z",), idem.render(), "0")
    return rep


def verify_symmetric_coaction(H: HopfData, z: AlgElement) -> Report:
    return verify_partial_coaction(H, z, symmetric=True)


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ActionFamily:
    """A (possibly parametric) family of partial actions on the base field."""

    name: str
    algebra: HopfData
    params: tuple
    functional: Functional

    def at(self, **values) -> Functional:
        return self.functional.subs_params(values)


@dataclass(frozen=True)
class CoactionFamily:
    """A (possibly parametric) family of partial coactions."""

    name: str
    algebra: HopfData
    params: tuple
    element: AlgElement


def taft_parametric_action(n: int, param: str = "a") -> ActionFamily:
    """The one-parameter action family on taft(n).

    Nonzero values: lam(g^{n-i mod n} x^j) = q^(i(i+1)/2) (j i)_q (-1)^i a^j.
    """
    H = taft(n)
    q = zeta_pow(n, 1)
    coords = [ParamPoly.zero(n)] * H.dim
    for i in range(n):
        g_exp = (n - i) % n
        for j in range(n):
            c = q_binomial(j, i, q)
            if c.is_zero():
                continue
            c = c * q ** (i * (i + 1) // 2)
            if i % 2:
                c = -c
            coords[g_exp * n + j] = ParamPoly.var(n, param, j) * c
    return ActionFamily("parametric", H, (param,),
                        Functional(H, tuple(coords)))


def taft_subgroup_action(n: int, k: int) -> ActionFamily:
    """The indicator action of the subgroup generated by g^k (k | n):
    1 on that subgroup, 0 on all other basis elements."""
    H = taft(n)
    _require_divisor(n, k)
    one = ParamPoly.one(n)
    coords = [ParamPoly.zero(n)] * H.dim
    for i in range(0, n, k):
        coords[i * n] = one
    name = "counit" if k == 1 else "subgroup<g^%d>" % k
    return ActionFamily(name, H, (), Functional(H, tuple(coords)))


def taft_parametric_coaction(n: int, param: str = "a") -> CoactionFamily:
    """The one-parameter coaction family on taft(n), from the closed-form
    double sum with inverse q-factorial coefficients."""
    H = taft(n)
    q = zeta_pow(n, 1)
    inv_n = CycNumber.from_rational(n, Rational(1) / n)
    coords = [ParamPoly.zero(n)] * H.dim
    for k in range(n):
        coords[k * n] = ParamPoly.const(n, inv_n)
    for k in range(n):
        for j in range(1, n):
            inner = CycNumber.zero(n)
            for i in range(j + 1):
                fact = q_factorial(j - i, q) * q_factorial(i, q)
                assert not fact.is_zero(), "q-factorials below order are units"
                term = q ** (i * (i + 1) // 2 - i * (j + k)) * cyc_invert(fact)
                inner = inner + (-term if i % 2 else term)
            c = inv_n * q ** (j * (j - 1) // 2 + k * j) * inner
            if c.is_zero():
                continue
            coords[k * n + j] = ParamPoly.var(n, param, j) * c
    return CoactionFamily("parametric", H, (param,),
                          AlgElement(H, tuple(coords)))


def taft_subgroup_coaction(n: int, k: int) -> CoactionFamily:
    """z = (1/|N|) sum of the subgroup N generated by g^k (k | n)."""
    H = taft(n)
    _require_divisor(n, k)
    size = n // k
    val = ParamPoly.const(n, Rational(1) / size)
    coords = [ParamPoly.zero(n)] * H.dim
    for i in range(0, n, k):
        coords[i * n] = val
    name = "global" if k == n else "subgroup<g^%d>" % k
    return CoactionFamily(name, H, (), AlgElement(H, tuple(coords)))


def nichols_parametric_action(n: int) -> ActionFamily:
    """lam(1) = 1, lam(x_i) = lam(g x_i) = a_i, zero elsewhere."""
    H = nichols(n)
    coords = [ParamPoly.zero(H.order)] * H.dim
    coords[0] = ParamPoly.one(H.order)
    params = tuple("a%d" % i for i in range(1, n))
    for i in range(1, n):
        p = ParamPoly.var(H.order, "a%d" % i)
        coords[1 << i] = p
        coords[(1 << i) | 1] = p
    return ActionFamily("parametric", H, params, Functional(H, tuple(coords)))


def nichols_counit_action(n: int) -> ActionFamily:
    H = nichols(n)
    return ActionFamily("counit", H, (), counit_functional(H))


def nichols_parametric_coaction(n: int) -> CoactionFamily:
    """z = (1+g)/2 - sum a_i g x_i."""
    H = nichols(n)
    half = ParamPoly.const(H.order, Rational(1) / 2)
    coords = [ParamPoly.zero(H.order)] * H.dim
    coords[0] = half
    coords[1] = half
    params = tuple("a%d" % i for i in range(1, n))
    for i in range(1, n):
        coords[(1 << i) | 1] = -ParamPoly.var(H.order, "a%d" % i)
    return CoactionFamily("parametric", H, params, AlgElement(H, tuple(coords)))


def nichols_global_coaction(n: int) -> CoactionFamily:
    """z = 1, the coaction that is already global."""
    H = nichols(n)
    return CoactionFamily("global", H, (), unit_element(H))


def group_subgroup_action(n: int, d: int) -> ActionFamily:
    """On kC_n: the indicator of the subgroup generated by g^d (d | n)."""
    H = group_algebra_cyclic(n)
    _require_divisor(n, d)
    one = ParamPoly.one(H.order)
    coords = [ParamPoly.zero(H.order)] * H.dim
    for i in range(0, n, d):
        coords[i] = one
    name = "counit" if d == 1 else "subgroup<g^%d>" % d
    return ActionFamily(name, H, (), Functional(H, tuple(coords)))


def dual_group_subgroup_action(n: int, d: int) -> ActionFamily:
    """On (kC_n)^*: value 1/|N| on dual-basis elements indexed by the
    subgroup N generated by g^d, zero elsewhere."""
    H = dual_group_algebra_cyclic(n)
    _require_divisor(n, d)
    size = n // d
    val = ParamPoly.const(H.order, Rational(1) / size)
    coords = [ParamPoly.zero(H.order)] * H.dim
    for i in range(0, n, d):
        coords[i] = val
    name = "uniform" if d == 1 else "subgroup<g^%d>*" % d
    return ActionFamily(name, H, (), Functional(H, tuple(coords)))


# canonical listings -------------------------------------------------------

def taft_action_families(n: int) -> list:
    """All classified action families on taft(n): the counit, one indicator
    per intermediate subgroup, and the one-parameter family (which contains
    the trivial-subgroup indicator at a = 0)."""
    out = [taft_subgroup_action(n, k) for k in range(1, n) if n % k == 0]
    out.append(taft_parametric_action(n))
    return out


def taft_coaction_families(n: int) -> list:
    """All classified coaction families on taft(n).  The parametric family
    contains the full-group average at a = 0, so the closed entries run over
    the proper subgroups (k > 1), including z = 1 at k = n."""
    out = [taft_subgroup_coaction(n, k) for k in range(2, n + 1) if n % k == 0]
    out.append(taft_parametric_coaction(n))
    return out


def nichols_action_families(n: int) -> list:
    return [nichols_counit_action(n), nichols_parametric_action(n)]


def nichols_coaction_families(n: int) -> list:
    return [nichols_global_coaction(n), nichols_parametric_coaction(n)]


def group_action_families(n: int) -> list:
    return [group_subgroup_action(n, d)
            for d in range(1, n + 1) if n % d == 0]


def dual_group_action_families(n: int) -> list:
    return [dual_group_subgroup_action(n, d)
            for d in range(1, n + 1) if n % d == 0]


# ---------------------------------------------------------------------------
# closed-form special values and structural consequences
# ---------------------------------------------------------------------------

def special_value_checks(n: int) -> Report:
    """Closed-form values of the parametric action on taft(n), checked
    symbolically: power row, antidiagonal, last group row, top x-degree."""
    rep = Report("special_values(taft(%d))" % n)
    fam = taft_parametric_action(n)
    H, f = fam.algebra, fam.functional
    q = zeta_pow(n, 1)
    a = ParamPoly.var(n, fam.params[0])

    for j in range(n):
        rep.count()
        want = a ** j
        got = f.value_on(j)
        if got != want:
            rep.fail("power_row", ("x^%d" % j,), got.render(), want.render())

    for i in range(1, n):
        rep.count()
        c = q ** (i * (i + 1) // 2)
        want = a ** i * (-c if i % 2 else c)
        got = f.value_on(((n - i) % n) * n + i)
        if got != want:
            rep.fail("antidiagonal", (i,), got.render(), want.render())

    from .qcomb import q_number
    for j in range(n):
        rep.count()
        want = a ** j * (-(q * q_number(j, q)))
        got = f.value_on((n - 1) * n + j)
        if got != want:
            rep.fail("last_group_row", (j,), got.render(), want.render())

    for i in range(n):
        rep.count()
        want = a ** (n - 1)
        got = f.value_on(i * n + (n - 1))
        if got != want:
            rep.fail("top_x_degree", (i,), got.render(), want.render())
    return rep


def action_consequence_checks(fam: ActionFamily) -> Report:
    """Structural consequences every partial action obeys, checked on a
    family's exact values:

      (i)   lam(g) = 1 for group-like g forces lam(g u) = lam(u) for all u;
      (ii)  a (g,h)-skew-primitive x with lam(g) = lam(h) has lam(x) = 0;
      (iii) lam(x) = 0 and lam(h) = 1 force lam(x u) = 0 for all u.
    """
    H, f = fam.algebra, fam.functional
    rep = Report("consequences(%s/%s)" % (H.name, fam.name))
    one = ParamPoly.one(H.order)
    for g in H.grouplikes:
        if f.coords[g] != one:
            continue
        for u in range(H.dim):
            row = H.mult.get((g, u))
            acc = ParamPoly.zero(H.order)
            if row:
                for k, c in row:
                    acc = acc + f.coords[k] * c
            rep.count()
            if acc != f.coords[u]:
                rep.fail("translation_invariance", (H.basis[g], H.basis[u]),
                         acc.render(), f.coords[u].render())
    for (x, g, h) in H.skew_primitives:
        if f.coords[g] == f.coords[h]:
            rep.count()
            if not f.coords[x].is_zero():
                rep.fail("skew_vanishing", (H.basis[x],),
                         f.coords[x].render(), "0")
        if f.coords[x].is_zero() and f.coords[h] == one:
            for u in range(H.dim):
                row = H.mult.get((x, u))
                acc = ParamPoly.zero(H.order)
                if row:
                    for k, c in row:
                        acc = acc + f.coords[k] * c
                rep.count()
                if not acc.is_zero():
                    rep.fail("skew_annihilation", (H.basis[x], H.basis[u]),
                             acc.render(), "0")
    return rep


def convolution_idempotent(fam: ActionFamily) -> bool:
    """lam * lam = lam in the convolution algebra, exactly in parameters."""
    return convolution(fam.functional, fam.functional) == fam.functional
