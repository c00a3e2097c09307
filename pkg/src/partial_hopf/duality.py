"""Hopf algebra morphisms, self-duality isomorphisms, and transport.

A functional lam on H is literally an element of the dual Hopf algebra H*,
and the partial-action equations for lam on H are the partial-coaction
equations for that element of H*.  When H carries an isomorphism H -> H*,
every partial action on the base field therefore transports to a partial
coaction on H itself; this module builds those isomorphisms in closed form
for the Taft and Nichols families, verifies all morphism axioms exactly,
and performs the transport.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact_arith import CycNumber, ParamPoly, Rational, cyc_invert, zeta_pow
from .hopf_core import (
    AlgElement, HopfData, Report, dual_hopf, unit_element,
)
from .algebras import nichols, taft
from .families import ActionFamily, CoactionFamily
from .qcomb import Verdict, q_factorial


@dataclass(frozen=True)
class HopfMorphism:
    """Linear map given by images of source basis vectors (dense CycNumber
    rows in target coordinates)."""

    source: HopfData
    target: HopfData
    images: tuple

    def apply(self, elt: AlgElement) -> AlgElement:
        if elt.algebra is not self.source:
            raise ValueError("element not in the morphism source")
        T = self.target
        out = [ParamPoly.zero(T.order)] * T.dim
        for i, c in enumerate(elt.coords):
            if c.is_zero():
                continue
            for j, m in enumerate(self.images[i]):
                if not m.is_zero():
                    out[j] = out[j] + c * m
        return AlgElement(T, tuple(out))

    def apply_values(self, values) -> tuple:
        """Map a plain coordinate vector (CycNumber entries)."""
        T = self.target
        out = [CycNumber.zero(T.order)] * T.dim
        for i, c in enumerate(values):
            if c.is_zero():
                continue
            row = self.images[i]
            for j in range(T.dim):
                m = row[j]
                if not m.is_zero():
                    out[j] = out[j] + c * m
        return tuple(out)


def compose(outer: HopfMorphism, inner: HopfMorphism) -> HopfMorphism:
    if inner.target is not outer.source:
        raise ValueError("morphisms do not compose")
    images = tuple(outer.apply_values(row) for row in inner.images)
    return HopfMorphism(inner.source, outer.target, images)


def is_identity(phi: HopfMorphism) -> bool:
    if phi.source.dim != phi.target.dim:
        return False
    one = CycNumber.one(phi.target.order)
    for i, row in enumerate(phi.images):
        for j, c in enumerate(row):
            if c != (one if i == j else CycNumber.zero(phi.target.order)):
                return False
    return True


def invert_morphism(phi: HopfMorphism) -> HopfMorphism:
    """Exact Gaussian elimination; raises ValueError when not bijective."""
    n = phi.source.dim
    if phi.target.dim != n:
        raise ValueError("not a square map")
    order = phi.target.order
    zero, one = CycNumber.zero(order), CycNumber.one(order)
    # rows of the augmented system: images as a matrix M with M[i][j],
    # solving X M = I  (row-vector convention matches apply_values)
    m = [list(row) + [one if k == i else zero for k in range(n)]
         for i, row in enumerate(phi.images)]
    col = 0
    for row in range(n):
        piv = next((r for r in range(row, n) if not m[r][col].is_zero()), None)
        if piv is None:
            raise ValueError("morphism is not invertible")
        m[row], m[piv] = m[piv], m[row]
        inv = cyc_invert(m[row][col])
        m[row] = [v * inv for v in m[row]]
        for r in range(n):
            if r != row and not m[r][col].is_zero():
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        col += 1
    # back out: solution rows give the inverse images in source coordinates
    inv_images = [None] * n
    for r in range(n):
        j = next(c for c in range(n) if not m[r][c].is_zero())
        inv_images[j] = tuple(m[r][n:])
    return HopfMorphism(phi.target, phi.source, tuple(inv_images))


# ---------------------------------------------------------------------------
# morphism verification
# ---------------------------------------------------------------------------

def _sparse(row):
    return {j: c for j, c in enumerate(row) if not c.is_zero()}


def _vec_mul_dict(mult, u: dict, v: dict) -> dict:
    out = {}
    for i, a in u.items():
        for j, b in v.items():
            row = mult.get((i, j))
            if not row:
                continue
            ab = a * b
            for k, c in row:
                s = out.get(k)
                s = ab * c if s is None else s + ab * c
                if s.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = s
    return out


def verify_hopf_morphism(phi: HopfMorphism) -> Report:
    """Checks unit, counit, multiplicativity over all basis pairs, and
    comultiplicativity on every basis vector, all in exact arithmetic."""
    S, T = phi.source, phi.target
    rep = Report("morphism(%s->%s)" % (S.name, T.name))
    imgs = [_sparse(row) for row in phi.images]
    zero = CycNumber.zero(T.order)

    unit_img = {}
    for i, c in S.unit:
        for j, m in imgs[i].items():
            unit_img[j] = unit_img.get(j, zero) + c * m
    want = {i: c for i, c in T.unit}
    rep.count()
    if {k: v for k, v in unit_img.items() if not v.is_zero()} != want:
        rep.fail("unit", (), str(unit_img), str(want))

    for i in range(S.dim):
        acc = zero
        for j, m in imgs[i].items():
            acc = acc + m * T.counit[j]
        rep.count()
        if acc != S.counit[i]:
            rep.fail("counit", (S.basis[i],), str(acc), str(S.counit[i]))

    for i in range(S.dim):
        for j in range(S.dim):
            lhs = {}
            row = S.mult.get((i, j))
            if row:
                for k, c in row:
                    for t, m in imgs[k].items():
                        s = lhs.get(t, zero) + c * m
                        if s.is_zero():
                            lhs.pop(t, None)
                        else:
                            lhs[t] = s
            rhs = _vec_mul_dict(T.mult, imgs[i], imgs[j])
            rep.count()
            if lhs != rhs:
                rep.fail("multiplicative", (S.basis[i], S.basis[j]),
                         str(lhs), str(rhs))

    for i in range(S.dim):
        lhs = {}
        for c, a, b in S.comult[i]:
            for p, u in imgs[a].items():
                cu = c * u
                for qq, v in imgs[b].items():
                    key = (p, qq)
                    s = lhs.get(key, zero) + cu * v
                    if s.is_zero():
                        lhs.pop(key, None)
                    else:
                        lhs[key] = s
        rhs = {}
        for j, m in imgs[i].items():
            for c, p, qq in T.comult[j]:
                key = (p, qq)
                s = rhs.get(key, zero) + m * c
                if s.is_zero():
                    rhs.pop(key, None)
                else:
                    rhs[key] = s
        rep.count()
        if lhs != rhs:
            rep.fail("comultiplicative", (S.basis[i],), str(lhs), str(rhs))
    return rep


# ---------------------------------------------------------------------------
# dual algebras with their character metadata
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def taft_dual(n: int) -> HopfData:
    """Dual of taft(n); its group-likes are the n characters g -> q^k."""
    H = taft(n)
    chars = []
    for k in range(n):
        vec = [CycNumber.zero(n)] * H.dim
        for i in range(n):
            vec[i * n] = zeta_pow(n, i * k)
        chars.append(tuple(vec))
    return dual_hopf(H, grouplike_vectors=tuple(chars))


@lru_cache(maxsize=None)
def nichols_dual(n: int) -> HopfData:
    """Dual of nichols(n); the two characters send g to +1 or -1."""
    H = nichols(n)
    chars = []
    for sign in (1, -1):
        vec = [CycNumber.zero(2)] * H.dim
        vec[0] = CycNumber.one(2)
        vec[1] = CycNumber.from_rational(2, sign)
        chars.append(tuple(vec))
    return dual_hopf(H, grouplike_vectors=tuple(chars))


# ---------------------------------------------------------------------------
# closed-form self-duality isomorphisms
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def taft_to_dual(n: int) -> HopfMorphism:
    """g^i x^j  |->  sum_k (j)!_q q^(-i(k+j) - jk - j(j-1)/2) (g^k x^j)*."""
    H, D = taft(n), taft_dual(n)
    q = zeta_pow(n, 1)
    zero = CycNumber.zero(n)
    images = []
    for i in range(n):
        for j in range(n):
            fact = q_factorial(j, q)
            row = [zero] * H.dim
            for k in range(n):
                e = -i * (k + j) - j * k - j * (j - 1) // 2
                row[k * n + j] = fact * q ** e
            images.append(tuple(row))
    return HopfMorphism(H, D, tuple(images))


@lru_cache(maxsize=None)
def taft_from_dual(n: int) -> HopfMorphism:
    """(g^i x^j)* |-> (1/n) ((j)!_q)^(-1) q^(ij + j(j-1)/2)
                      sum_k q^(k(i+j)) g^k x^j."""
    H, D = taft(n), taft_dual(n)
    q = zeta_pow(n, 1)
    inv_n = CycNumber.from_rational(n, Rational(1) / n)
    zero = CycNumber.zero(n)
    images = []
    for i in range(n):
        for j in range(n):
            c = inv_n * cyc_invert(q_factorial(j, q)) \
                * q ** (i * j + j * (j - 1) // 2)
            row = [zero] * H.dim
            for k in range(n):
                row[k * n + j] = c * q ** (k * (i + j))
            images.append(tuple(row))
    return HopfMorphism(D, H, tuple(images))


def _convolve(H: HopfData, u: tuple, v: tuple) -> tuple:
    """Product in H* of two functionals given by value vectors on H."""
    out = []
    zero = CycNumber.zero(H.order)
    for i in range(H.dim):
        acc = zero
        for c, a, b in H.comult[i]:
            ua, vb = u[a], v[b]
            if not (ua.is_zero() or vb.is_zero()):
                acc = acc + c * ua * vb
        out.append(acc)
    return tuple(out)


@lru_cache(maxsize=None)
def nichols_to_dual(n: int) -> HopfMorphism:
    """Extend g |-> 1* - g*, x_i |-> x_i* - (g x_i)* multiplicatively:
    each monomial maps to the convolution product of its factors."""
    H, D = nichols(n), nichols_dual(n)
    zero, one = CycNumber.zero(2), CycNumber.one(2)
    g_img = [zero] * H.dim
    g_img[0], g_img[1] = one, -one
    x_img = []
    for i in range(1, n):
        vec = [zero] * H.dim
        vec[1 << i] = one
        vec[(1 << i) | 1] = -one
        x_img.append(tuple(vec))
    unit_img = tuple(H.counit)
    images = []
    for m in range(H.dim):
        acc = unit_img
        if m & 1:
            acc = _convolve(H, acc, tuple(g_img))
        for i in range(1, n):
            if m & (1 << i):
                acc = _convolve(H, acc, x_img[i - 1])
        images.append(acc)
    return HopfMorphism(H, D, tuple(images))


@lru_cache(maxsize=None)
def nichols_from_dual(n: int) -> HopfMorphism:
    return invert_morphism(nichols_to_dual(n))


# ---------------------------------------------------------------------------
# transport
# ---------------------------------------------------------------------------

def action_as_dual_element(fam: ActionFamily, dual: HopfData) -> AlgElement:
    """The functional's value vector, read as coordinates in the dual basis."""
    return AlgElement(dual, fam.functional.coords)


def transport(fam: ActionFamily, iso: HopfMorphism) -> CoactionFamily:
    """Partial action on H to partial coaction on H through iso: H -> H*
    (or its inverse H* -> H)."""
    H = fam.algebra
    if iso.source is H:
        back = invert_morphism(iso)
    elif iso.target is H:
        back = iso
    else:
        raise ValueError("isomorphism does not involve the family's algebra")
    lam = AlgElement(back.source, fam.functional.coords)
    z = back.apply(lam)
    return CoactionFamily(fam.name, H, fam.params, z)


def check_character_sum(n: int, k: int, l: int) -> Verdict:
    """(1/n) sum_t (sum_{i<l} q^(ikt)) g^t  =  (l/n) sum_{i<k} g^(il),
    the scalar identity behind subgroup transport (requires n = k l)."""
    if k * l != n:
        raise ValueError("need n = k*l, got %d != %d*%d" % (n, k, l))
    inv_n = CycNumber.from_rational(n, Rational(1) / n)
    lhs = []
    for t in range(n):
        acc = CycNumber.zero(n)
        for i in range(l):
            acc = acc + zeta_pow(n, i * k * t)
        lhs.append(inv_n * acc)
    lval = CycNumber.from_rational(n, Rational(l) / n)
    rhs = [lval if t % l == 0 else CycNumber.zero(n) for t in range(n)]
    ok = lhs == rhs
    return Verdict("character_sum", (n, k, l), "q=zeta_%d" % n, ok,
                   " + ".join(str(c) for c in lhs),
                   " + ".join(str(c) for c in rhs))
