"""Exact scalar arithmetic for the Hopf-algebra engine.

Three layers, all exact:

  * ``Rational``  -- arbitrary-precision rationals (gmpy2.mpq, with a
    stdlib ``fractions.Fraction`` fallback).
  * ``CycNumber`` -- elements of Q(zeta_n), stored in canonical coordinates
    modulo the n-th cyclotomic polynomial: a tuple of phi(n) rationals.
  * ``ParamPoly`` -- sparse multivariate polynomials over CycNumber carrying
    free symbolic parameters, so that "for all alpha" claims are discharged
    as exact polynomial identities rather than by sampling.

No floating point appears anywhere in this package.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rational

_RAT_TYPES = (int, type(Rational(0)))

_R0 = Rational(0)
_R1 = Rational(1)


class OrderMismatch(ValueError):
    """Combining scalars defined over different cyclotomic orders."""


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _int_poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # den must be monic; plain synthetic division over the integers
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] -= c * dj
    return out, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (ascending, monic) of the n-th cyclotomic polynomial.

    Computed by exact integer division of x^n - 1 by the product of the
    cyclotomic polynomials of all proper divisors of n.
    """
    if n < 1:
        raise ValueError("order must be a positive integer")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n):
        if d == n:
            continue
        num, rem = _int_poly_divmod(num, list(cyclotomic_polynomial(d)))
        assert not any(rem), "cyclotomic division must be exact"
    return tuple(num)


@lru_cache(maxsize=None)
def _power_coords(n: int, m: int) -> tuple:
    """Canonical coordinates of zeta_n^m (equivalently of x^m mod Phi_n)."""
    phi = euler_phi(n)
    if m < phi:
        return tuple(_R1 if k == m else _R0 for k in range(phi))
    prev = _power_coords(n, m - 1)
    fold = tuple(Rational(-c) for c in cyclotomic_polynomial(n)[:phi])
    shifted = [_R0] + list(prev[:-1])
    top = prev[-1]
    if top:
        shifted = [s + top * f for s, f in zip(shifted, fold)]
    return tuple(shifted)


class CycNumber:
    """An element of Q(zeta_order) in canonical coordinates.

    ``coords[k]`` is the coefficient of zeta^k, 0 <= k < phi(order).  Two
    values are equal iff their orders match and their coordinate tuples are
    identical; there is no other normal form to compare.
    """

    __slots__ = ("order", "coords")

    def __init__(self, order: int, coords: tuple):
        self.order = order
        self.coords = coords

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(order: int) -> "CycNumber":
        return CycNumber(order, (_R0,) * euler_phi(order))

    @staticmethod
    def one(order: int) -> "CycNumber":
        return CycNumber.from_rational(order, 1)

    @staticmethod
    def from_rational(order: int, value) -> "CycNumber":
        v = Rational(value)
        rest = (_R0,) * (euler_phi(order) - 1)
        return CycNumber(order, (v,) + rest)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("not a rational value: %r" % (self,))
        return self.coords[0]

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycNumber):
            if other.order != self.order:
                raise OrderMismatch(
                    "orders %d and %d" % (self.order, other.order))
            return other
        if isinstance(other, _RAT_TYPES):
            return CycNumber.from_rational(self.order, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNumber(self.order,
                         tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.order, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNumber(self.order,
                         tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coords, o.coords
        phi = len(a)
        if phi == 1:
            return CycNumber(self.order, (a[0] * b[0],))
        acc = [_R0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        acc[i + j] += ai * bj
        for m in range(2 * phi - 2, phi - 1, -1):
            c = acc[m]
            if c:
                for k, rk in enumerate(_power_coords(self.order, m)):
                    if rk:
                        acc[k] += c * rk
        return CycNumber(self.order, tuple(acc[:phi]))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * cyc_invert(o)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * cyc_invert(self)

    def __pow__(self, e: int):
        if e < 0:
            return cyc_invert(self) ** (-e)
        result = CycNumber.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, _RAT_TYPES):
            return self.is_rational() and self.coords[0] == other
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self.order == other.order and self.coords == other.coords

    def __hash__(self):
        return hash((self.order, self.coords))

    def __bool__(self):
        return any(self.coords)

    # -- display ----------------------------------------------------------

    def render(self, symbol: str = "z") -> str:
        parts = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            mono = symbol if k == 1 else "%s^%d" % (symbol, k)
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (c, mono))
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "CycNumber(%d, %s)" % (self.order, self.render())


def zeta_pow(order: int, k: int) -> CycNumber:
    """zeta_order^k as a canonical CycNumber (k may be any integer)."""
    return CycNumber(order, _power_coords(order, k % order))


def _rat_poly_divmod(num: list, den: list):
    # division over the rationals; den need not be monic
    num = list(num)
    while den and not den[-1]:
        den = den[:-1]
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    dd = len(den) - 1
    lead = den[-1]
    out = [_R0] * max(0, len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            c = c / lead
            out[i - dd] = c
            for j, dj in enumerate(den):
                num[i - dd + j] -= c * dj
    return out, num[:dd]


def cyc_invert(a: CycNumber) -> CycNumber:
    """Multiplicative inverse in Q(zeta_order), via the extended Euclidean
    algorithm against the cyclotomic polynomial.  Raises ZeroDivisionError
    on zero input."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero in Q(zeta_%d)" % a.order)
    if a.is_rational():
        return CycNumber.from_rational(a.order, _R1 / a.coords[0])
    phi = euler_phi(a.order)
    # extended euclid: r0 = Phi_n, r1 = a; keep only the coefficient of a
    r0 = [Rational(c) for c in cyclotomic_polynomial(a.order)]
    r1 = list(a.coords)
    s0, s1 = [_R0], [_R1]
    while True:
        while r1 and not r1[-1]:
            r1.pop()
        if len(r1) == 1:
            inv = _R1 / r1[0]
            coords = [c * inv for c in s1] + [_R0] * phi
            return CycNumber(a.order, tuple(coords[:phi]))
        q, r = _rat_poly_divmod(r0, r1)
        # s_next = s0 - q*s1
        s_next = list(s0) + [_R0] * max(0, len(q) + len(s1) - 1 - len(s0))
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s1):
                    if sj:
                        s_next[i + j] -= qi * sj
        r0, r1 = r1, r
        s0, s1 = s1, s_next


# ---------------------------------------------------------------------------
# sparse multivariate polynomials over Q(zeta_n)
# ---------------------------------------------------------------------------

def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for name, e in m2:
        d[name] = d.get(name, 0) + e
    return tuple(sorted(d.items()))


class ParamPoly:
    """Sparse multivariate polynomial over Q(zeta_order).

    ``terms`` maps a monomial -- a name-sorted tuple of (parameter, exponent)
    pairs with positive exponents, the empty tuple for the constant term --
    to a nonzero CycNumber coefficient.  Zero coefficients are dropped on
    construction, so two polynomials are equal iff their canonical forms are
    structurally identical.
    """

    __slots__ = ("order", "terms")

    def __init__(self, order: int, terms: dict):
        self.order = order
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(order: int) -> "ParamPoly":
        return ParamPoly(order, {})

    @staticmethod
    def const(order: int, value) -> "ParamPoly":
        if isinstance(value, CycNumber):
            if value.order != order:
                raise OrderMismatch("orders %d and %d" % (order, value.order))
            c = value
        else:
            c = CycNumber.from_rational(order, value)
        return ParamPoly(order, {(): c})

    @staticmethod
    def one(order: int) -> "ParamPoly":
        return ParamPoly.const(order, 1)

    @staticmethod
    def var(order: int, name: str, power: int = 1) -> "ParamPoly":
        if power < 0:
            raise ValueError("parameter powers must be nonnegative")
        if power == 0:
            return ParamPoly.one(order)
        return ParamPoly(order, {((name, power),): CycNumber.one(order)})

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_value(self) -> CycNumber:
        if not self.terms:
            return CycNumber.zero(self.order)
        if not self.is_constant():
            raise ValueError("polynomial is not constant: %s" % self.render())
        return self.terms[()]

    def vars_used(self) -> tuple:
        names = set()
        for m in self.terms:
            for name, _ in m:
                names.add(name)
        return tuple(sorted(names))

    def degree_in(self, name: str) -> int:
        deg = 0
        for m in self.terms:
            for n2, e in m:
                if n2 == name and e > deg:
                    deg = e
        return deg

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ParamPoly):
            if other.order != self.order:
                raise OrderMismatch(
                    "orders %d and %d" % (self.order, other.order))
            return other
        if isinstance(other, (CycNumber,) + _RAT_TYPES):
            return ParamPoly.const(self.order, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        zero = CycNumber.zero(self.order)
        for m, c in o.terms.items():
            terms[m] = terms.get(m, zero) + c
        return ParamPoly(self.order, terms)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly(self.order, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        zero = CycNumber.zero(self.order)
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, zero) + c1 * c2
        return ParamPoly(self.order, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # exact division by a nonzero scalar only
        if isinstance(other, ParamPoly):
            other = other.constant_value()
        if isinstance(other, _RAT_TYPES):
            other = CycNumber.from_rational(self.order, other)
        return self * cyc_invert(other)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers of a polynomial")
        result = ParamPoly.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (CycNumber,) + _RAT_TYPES):
            other = ParamPoly.const(self.order, other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, tuple(sorted(self.terms.items()))))

    def __bool__(self):
        return bool(self.terms)

    # -- evaluation and substitution ---------------------------------------

    def eval(self, assignment: dict) -> CycNumber:
        """Full evaluation; every parameter appearing must be assigned."""
        total = CycNumber.zero(self.order)
        for m, c in self.terms.items():
            acc = c
            for name, e in m:
                if name not in assignment:
                    raise LookupError("no value for parameter %r" % name)
                v = assignment[name]
                if not isinstance(v, CycNumber):
                    v = CycNumber.from_rational(self.order, v)
                acc = acc * v ** e
            total = total + acc
        return total

    def subs(self, name: str, value) -> "ParamPoly":
        """Substitute one parameter by a polynomial (or scalar) value."""
        repl = self._coerce(value)
        if repl is None:
            raise TypeError("cannot substitute %r" % (value,))
        out = ParamPoly.zero(self.order)
        for m, c in self.terms.items():
            e = 0
            rest = []
            for n2, k in m:
                if n2 == name:
                    e = k
                else:
                    rest.append((n2, k))
            term = ParamPoly(self.order, {tuple(rest): c})
            if e:
                term = term * repl ** e
            out = out + term
        return out

    def linear_split(self, name: str):
        """Write self as A*name + B with neither part containing ``name``.

        Raises ValueError when self has degree >= 2 in the parameter.
        """
        a_terms: dict = {}
        b_terms: dict = {}
        for m, c in self.terms.items():
            e = dict(m).get(name, 0)
            if e == 0:
                b_terms[m] = c
            elif e == 1:
                rest = tuple(p for p in m if p[0] != name)
                a_terms[rest] = c
            else:
                raise ValueError("degree %d in %s" % (e, name))
        return ParamPoly(self.order, a_terms), ParamPoly(self.order, b_terms)

    def divide_by_var(self, name: str) -> "ParamPoly":
        """Exact quotient self / name; every monomial must contain ``name``."""
        out: dict = {}
        for m, c in self.terms.items():
            d = dict(m)
            if name not in d:
                raise ValueError("monomial without %s" % name)
            d[name] -= 1
            if d[name] == 0:
                del d[name]
            out[tuple(sorted(d.items()))] = c
        return ParamPoly(self.order, out)

    # -- display ----------------------------------------------------------

    def render(self, symbol: str = "z") -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            vars_str = "*".join(
                name if e == 1 else "%s^%d" % (name, e) for name, e in m)
            if not vars_str:
                cs = c.render(symbol)
                parts.append("(%s)" % cs if " " in cs else cs)
                continue
            if c == 1:
                parts.append(vars_str)
            elif c == -1:
                parts.append("-" + vars_str)
            else:
                cs = c.render(symbol)
                cs = "(%s)" % cs if " " in cs else cs
                parts.append("%s*%s" % (cs, vars_str))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "ParamPoly(%d, %s)" % (self.order, self.render())
