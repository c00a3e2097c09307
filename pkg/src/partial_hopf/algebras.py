"""Built-in Hopf algebras, constructed from closed-form structure constants.

  * taft(n): generated by a group-like g and a (1,g)-skew-primitive x with
    g^n = 1, x^n = 0, xg = q gx at the primitive root q = zeta_n; dim n^2.
  * nichols(n): group-like g with g^2 = 1 and skew-primitives x_1..x_{n-1}
    with x_i^2 = 0, x_i x_j = -x_j x_i, x_i g = -g x_i; dim 2^n.
  * group_algebra_cyclic(n): the cyclic group algebra kC_n.
  * dual_group_algebra_cyclic(n): its dual on the dual basis, whose declared
    group-likes are the n characters g^i -> zeta_n^{ik}.

Antipodes are extended anti-homomorphically from the generators by actual
structure-constant products, not transcribed, so validators exercise real
computations.
"""
from __future__ import annotations

from functools import lru_cache

from .exact_arith import CycNumber, zeta_pow
from .hopf_core import HopfData, dual_hopf
from .qcomb import q_binomial


class InvalidOrder(ValueError):
    """Algebra order outside the constructor's domain."""


def _vec_mul(mult: dict, v1: dict, v2: dict) -> dict:
    out: dict = {}
    for i, c1 in v1.items():
        for j, c2 in v2.items():
            row = mult.get((i, j))
            if not row:
                continue
            c12 = c1 * c2
            for k, c in row:
                prev = out.get(k)
                val = c12 * c if prev is None else prev + c12 * c
                out[k] = val
    return {k: v for k, v in out.items() if not v.is_zero()}


def _tensor_mul(mult: dict, t1: dict, t2: dict) -> dict:
    out: dict = {}
    for (a1, b1), c1 in t1.items():
        for (a2, b2), c2 in t2.items():
            ra = mult.get((a1, a2))
            if not ra:
                continue
            rb = mult.get((b1, b2))
            if not rb:
                continue
            c12 = c1 * c2
            for a, ca in ra:
                for b, cb in rb:
                    key = (a, b)
                    add = c12 * (ca * cb)
                    prev = out.get(key)
                    out[key] = add if prev is None else prev + add
    return {k: v for k, v in out.items() if not v.is_zero()}


@lru_cache(maxsize=None)
def taft(n: int) -> HopfData:
    """The n^2-dimensional algebra on basis g^i x^j at q = zeta_n."""
    if n < 2:
        raise InvalidOrder("taft order must be >= 2, got %d" % n)
    q = zeta_pow(n, 1)
    one = CycNumber.one(n)
    dim = n * n

    def idx(i, j):
        return (i % n) * n + j

    def label(i, j):
        parts = []
        if i:
            parts.append("g" if i == 1 else "g^%d" % i)
        if j:
            parts.append("x" if j == 1 else "x^%d" % j)
        return "".join(parts) or "1"

    basis = tuple(label(i, j) for i in range(n) for j in range(n))

    mult: dict = {}
    for i1 in range(n):
        for j1 in range(n):
            for i2 in range(n):
                for j2 in range(n):
                    if j1 + j2 > n - 1:
                        continue
                    coeff = q ** (j1 * i2)
                    mult[(idx(i1, j1), idx(i2, j2))] = (
                        (idx(i1 + i2, j1 + j2), coeff),)

    comult_rows = []
    for i in range(n):
        for j in range(n):
            row = tuple(
                (q_binomial(j, l, q), idx(i + l, j - l), idx(i, l))
                for l in range(j + 1))
            comult_rows.append(row)

    counit = tuple(
        one if j == 0 else CycNumber.zero(n)
        for i in range(n) for j in range(n))

    # S(g) = g^{n-1}, S(x) = -g^{n-1} x, extended anti-homomorphically:
    # S(g^i x^j) = S(x)^j S(g)^i, computed by real products
    sg = {idx(n - 1, 0): one}
    sx = {idx(n - 1, 1): -one}
    antipode_rows = []
    for i in range(n):
        for j in range(n):
            acc = {0: one}
            for _ in range(j):
                acc = _vec_mul(mult, acc, sx)
            for _ in range(i):
                acc = _vec_mul(mult, acc, sg)
            antipode_rows.append(tuple(sorted(acc.items())))

    return HopfData(
        name="taft(%d)" % n,
        dim=dim,
        order=n,
        basis=basis,
        mult=mult,
        unit=((0, one),),
        comult=tuple(comult_rows),
        counit=counit,
        antipode=tuple(antipode_rows),
        grouplikes=tuple(idx(i, 0) for i in range(n)),
        skew_primitives=tuple(
            (idx(i, 1), idx(i, 0), idx(i + 1, 0)) for i in range(n)),
        basis_degrees=tuple(j for i in range(n) for j in range(n)),
    )


@lru_cache(maxsize=None)
def nichols(n: int) -> HopfData:
    """The 2^n-dimensional algebra on g and anticommuting x_1..x_{n-1}.

    Basis indices are bitmasks: bit 0 is the g exponent, bit i the presence
    of x_i; products are normalized by counting transpositions.
    """
    if n < 2:
        raise InvalidOrder("nichols order must be >= 2, got %d" % n)
    order = 2
    one = CycNumber.one(order)
    dim = 1 << n

    def xbits(m):
        return [i for i in range(1, n) if m >> i & 1]

    def label(m):
        parts = (["g"] if m & 1 else []) + ["x%d" % i for i in xbits(m)]
        return "".join(parts) or "1"

    basis = tuple(label(m) for m in range(dim))

    mult: dict = {}
    for m1 in range(dim):
        s = xbits(m1)
        for m2 in range(dim):
            if (m1 & m2) & ~1:
                continue
            t = xbits(m2)
            # move g^(m2&1) left across the x's of m1, then merge x-blocks
            swaps = (m2 & 1) * len(s)
            swaps += sum(1 for a in s for b in t if a > b)
            coeff = one if swaps % 2 == 0 else -one
            mult[(m1, m2)] = ((m1 ^ m2, coeff),)

    # comultiplication, extended multiplicatively from
    # Delta(g) = g(x)g and Delta(x_i) = x_i(x)1 + g(x)x_i
    dg = {(1, 1): one}
    comult_rows = []
    for m in range(dim):
        acc = {(0, 0): one}
        if m & 1:
            acc = _tensor_mul(mult, acc, dg)
        for i in xbits(m):
            dxi = {(1 << i, 0): one, (1, 1 << i): one}
            acc = _tensor_mul(mult, acc, dxi)
        comult_rows.append(tuple(
            (c, j, k) for (j, k), c in sorted(acc.items())))

    counit = tuple(one if m & ~1 == 0 else CycNumber.zero(order)
                   for m in range(dim))

    # S(g) = g, S(x_i) = -g x_i, anti-homomorphic extension reverses factors
    antipode_rows = []
    for m in range(dim):
        acc = {0: one}
        for i in reversed(xbits(m)):
            acc = _vec_mul(mult, acc, {(1 << i) | 1: -one})
        if m & 1:
            acc = _vec_mul(mult, acc, {1: one})
        antipode_rows.append(tuple(sorted(acc.items())))

    return HopfData(
        name="nichols(%d)" % n,
        dim=dim,
        order=order,
        basis=basis,
        mult=mult,
        unit=((0, one),),
        comult=tuple(comult_rows),
        counit=counit,
        antipode=tuple(antipode_rows),
        grouplikes=(0, 1),
        skew_primitives=tuple((1 << i, 0, 1) for i in range(1, n)),
        basis_degrees=tuple(len(xbits(m)) for m in range(dim)),
    )


@lru_cache(maxsize=None)
def group_algebra_cyclic(n: int) -> HopfData:
    """kC_n: every basis element g^i is group-like; S(g^i) = g^{-i}."""
    if n < 1:
        raise InvalidOrder("cyclic group order must be >= 1, got %d" % n)
    one = CycNumber.one(n)
    basis = tuple("1" if i == 0 else ("g" if i == 1 else "g^%d" % i)
                  for i in range(n))
    mult = {(i, j): (((i + j) % n, one),)
            for i in range(n) for j in range(n)}
    comult = tuple(((one, i, i),) for i in range(n))
    antipode = tuple(((-i % n, one),) for i in range(n))
    return HopfData(
        name="kC_%d" % n,
        dim=n,
        order=n,
        basis=basis,
        mult=mult,
        unit=((0, one),),
        comult=comult,
        counit=(one,) * n,
        antipode=antipode,
        grouplikes=tuple(range(n)),
        skew_primitives=(),
        basis_degrees=(0,) * n,
    )


@lru_cache(maxsize=None)
def dual_group_algebra_cyclic(n: int) -> HopfData:
    """(kC_n)^* on the dual basis; the declared group-likes are the
    characters g^i -> zeta_n^{ik}, one coordinate row per k."""
    H = group_algebra_cyclic(n)
    characters = tuple(
        tuple(zeta_pow(n, i * k) for i in range(n)) for k in range(n))
    return dual_hopf(H, grouplike_vectors=characters)
