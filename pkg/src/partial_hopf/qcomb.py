"""q-combinatorics over exact scalars.

The same code path serves three kinds of q:

  * a root of unity (CycNumber over Q(zeta_n)),
  * an arbitrary rational (CycNumber of order 1),
  * the generic q: an exact Laurent polynomial in one variable (QLaurent),
    so identities checked "at generic q" are genuine polynomial identities.

q-binomials are computed by the q-Pascal recurrence from the single base
case (0 choose 0) = 1, with value 0 outside 0 <= l <= m.  The recurrence is
the definition; agreement with the factorial quotient (wherever the relevant
q-factorial is nonzero) and the vanishing of (n choose k) at a primitive
n-th root for 0 < k < n are verified properties, not assumptions.
"""
from __future__ import annotations

from dataclasses import dataclass

from .exact_arith import CycNumber, Rational, _RAT_TYPES

_R0 = Rational(0)
_R1 = Rational(1)


class ArityMismatch(ValueError):
    """An identity was given the wrong number of indices."""


class PreconditionViolated(ValueError):
    """Index tuple outside an identity's admissible range."""


class QLaurent:
    """Exact Laurent polynomial in the generic q over the rationals.

    Stored sparsely as exponent -> nonzero rational; exponents may be
    negative, so inverse powers of q need no separate bookkeeping.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict):
        self.coeffs = {e: Rational(c) for e, c in coeffs.items() if c}

    @staticmethod
    def zero() -> "QLaurent":
        return QLaurent({})

    @staticmethod
    def one() -> "QLaurent":
        return QLaurent({0: _R1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def _coerce(self, other):
        if isinstance(other, QLaurent):
            return other
        if isinstance(other, _RAT_TYPES):
            return QLaurent({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in o.coeffs.items():
            out[e] = out.get(e, _R0) + c
        return QLaurent(out)

    __radd__ = __add__

    def __neg__(self):
        return QLaurent({e: -c for e, c in self.coeffs.items()})

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
        for e1, c1 in self.coeffs.items():
            for e2, c2 in o.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, _R0) + c1 * c2
        return QLaurent(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("use q_pow for negative powers")
        result = QLaurent.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, _RAT_TYPES):
            other = QLaurent({0: other})
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def render(self, symbol: str = "q") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if e == 0:
                parts.append(str(c))
                continue
            mono = symbol if e == 1 else "%s^%d" % (symbol, e)
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (c, mono))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return "QLaurent(%s)" % self.render()


def generic_q() -> QLaurent:
    """The generic q itself, as a Laurent polynomial."""
    return QLaurent({1: _R1})


def zero_like(q):
    return CycNumber.zero(q.order) if isinstance(q, CycNumber) else QLaurent.zero()


def one_like(q):
    return CycNumber.one(q.order) if isinstance(q, CycNumber) else QLaurent.one()


def q_pow(q, e: int):
    """q**e for any integer e, staying exact for both scalar kinds."""
    if e >= 0:
        return q ** e
    if isinstance(q, CycNumber):
        return q ** e
    if len(q.coeffs) == 1:
        (k, c), = q.coeffs.items()
        return QLaurent({k * e: c ** e})
    raise ValueError("negative power of a non-monomial Laurent value")


def q_label(q) -> str:
    """Short human-readable description of a q scalar for reports."""
    if isinstance(q, QLaurent):
        return "generic"
    if q.is_rational():
        return "q=%s" % q.coords[0]
    return "q=zeta_%d" % q.order


_NUMBER_MEMO: dict = {}
_FACTORIAL_MEMO: dict = {}
_BINOM_MEMO: dict = {}


def q_number(m: int, q):
    """(m)_q = 1 + q + ... + q^(m-1); (0)_q = 0."""
    if m < 0:
        raise PreconditionViolated("q-number of negative index %d" % m)
    key = (m, q)
    hit = _NUMBER_MEMO.get(key)
    if hit is None:
        acc = zero_like(q)
        for k in range(m):
            acc = acc + q ** k
        hit = _NUMBER_MEMO[key] = acc
    return hit


def q_factorial(m: int, q):
    """(m)_q! = (m)_q (m-1)_q ... (1)_q; (0)_q! = 1."""
    if m < 0:
        raise PreconditionViolated("q-factorial of negative index %d" % m)
    key = (m, q)
    hit = _FACTORIAL_MEMO.get(key)
    if hit is None:
        hit = one_like(q) if m == 0 else q_factorial(m - 1, q) * q_number(m, q)
        _FACTORIAL_MEMO[key] = hit
    return hit


def q_binomial(m: int, l: int, q):
    """Gaussian binomial (m choose l)_q by the q-Pascal recurrence.

    Zero outside 0 <= l <= m.  At any q this equals the specialization of
    the generic Gaussian binomial polynomial, which is what every identity
    in this package is stated for.
    """
    if l < 0 or l > m:
        return zero_like(q)
    if l == 0 or l == m:
        return one_like(q)
    key = (m, l, q)
    hit = _BINOM_MEMO.get(key)
    if hit is None:
        hit = q_binomial(m - 1, l - 1, q) + (q ** l) * q_binomial(m - 1, l, q)
        _BINOM_MEMO[key] = hit
    return hit


@dataclass(frozen=True)
class Verdict:
    """Outcome of one identity instance: exact equality or not."""

    name: str
    indices: tuple
    q_desc: str
    ok: bool
    lhs: str
    rhs: str

    def __str__(self):
        mark = "ok" if self.ok else "FAIL"
        return "%s%s @ %s: %s  [%s == %s]" % (
            self.name, self.indices, self.q_desc, mark, self.lhs, self.rhs)


def _verdict(name, indices, q, lhs, rhs) -> Verdict:
    sym = "q" if isinstance(lhs, QLaurent) else "z"
    return Verdict(name, tuple(indices), q_label(q), lhs == rhs,
                   lhs.render(sym), rhs.render(sym))


PASCAL_VARIANTS = ("a", "b")


def check_pascal(variant: str, i: int, s: int, q) -> Verdict:
    """The two q-Pascal recurrences, valid for every integer s.

    variant "a":  (i s) = (i-1 s-1) + q^s   * (i-1 s)
    variant "b":  (i s) = (i-1 s)   + q^(i-s) * (i-1 s-1)
    """
    if variant not in PASCAL_VARIANTS:
        raise PreconditionViolated("unknown Pascal variant %r" % variant)
    if i < 1:
        raise PreconditionViolated("Pascal check needs i >= 1")
    lhs = q_binomial(i, s, q)
    if variant == "a":
        second = q_binomial(i - 1, s, q)
        rhs = q_binomial(i - 1, s - 1, q)
        if not _is_zero(second):
            rhs = rhs + q_pow(q, s) * second
    else:
        first = q_binomial(i - 1, s - 1, q)
        rhs = q_binomial(i - 1, s, q)
        if not _is_zero(first):
            rhs = rhs + q_pow(q, i - s) * first
    return _verdict("pascal_" + variant, (i, s), q, lhs, rhs)


def _is_zero(v) -> bool:
    return v.is_zero()


def _sign(k: int):
    return 1 if k % 2 == 0 else -1


IDENTITY_ARITY = {
    "alternating_vandermonde": 3,
    "trinomial_revision": 3,
    "four_index_inversion": 4,
    "binomial_inversion": 3,
}


def check_identity(name: str, indices, q) -> Verdict:
    """Check one instance of a named q-binomial identity, exactly.

    Index conventions:
      alternating_vandermonde (i, t, k):
          sum_{s=0}^{i} (i s)(i+t-s, i+k)(-1)^s q^(sk+s(s+1)/2)  ==  (t k)
      trinomial_revision (j, i, l), requires 0 <= l <= i <= j:
          (j l)(j-l, i-l)  ==  (j i)(i l)
      four_index_inversion (i, j, t, s):
          q^(s(i-j)) * sum_{l=0}^{j} (j l)(j+t-l, i+s-l)(l i)
                        (-1)^(i-l) q^((i-l)(i-l+1)/2)  ==  (j i)(t s)
      binomial_inversion (j, t, s):
          q^(-sj) * sum_{l=0}^{j} (j l)(j+t-l, s-l)(-1)^l q^(l(l-1)/2)
                                                           ==  (t s)

    Negative q-powers are cleared by multiplying both sides with the same
    nonnegative q-power, so generic-q checks compare plain polynomials.
    """
    indices = tuple(indices)
    arity = IDENTITY_ARITY.get(name)
    if arity is None:
        raise PreconditionViolated("unknown identity %r" % name)
    if len(indices) != arity:
        raise ArityMismatch(
            "%s expects %d indices, got %d" % (name, arity, len(indices)))
    if any(ix < 0 for ix in indices):
        raise PreconditionViolated("indices must be nonnegative: %r" % (indices,))

    if name == "alternating_vandermonde":
        i, t, k = indices
        acc = zero_like(q)
        for s in range(i + 1):
            term = q_binomial(i, s, q) * q_binomial(i + t - s, i + k, q)
            if _is_zero(term):
                continue
            acc = acc + _sign(s) * term * q ** (s * k + s * (s + 1) // 2)
        return _verdict(name, indices, q, acc, q_binomial(t, k, q))

    if name == "trinomial_revision":
        j, i, l = indices
        if not (l <= i <= j):
            raise PreconditionViolated(
                "trinomial_revision needs l <= i <= j, got %r" % (indices,))
        lhs = q_binomial(j, l, q) * q_binomial(j - l, i - l, q)
        rhs = q_binomial(j, i, q) * q_binomial(i, l, q)
        return _verdict(name, indices, q, lhs, rhs)

    if name == "four_index_inversion":
        i, j, t, s = indices
        acc = zero_like(q)
        for l in range(j + 1):
            term = (q_binomial(j, l, q)
                    * q_binomial(j + t - l, i + s - l, q)
                    * q_binomial(l, i, q))
            if _is_zero(term):
                continue
            d = i - l
            acc = acc + _sign(d) * term * q ** (d * (d + 1) // 2)
        rhs = q_binomial(j, i, q) * q_binomial(t, s, q)
        shift = s * (i - j)
        if shift >= 0:
            lhs = q ** shift * acc
        else:
            lhs = acc
            rhs = q ** (-shift) * rhs
        return _verdict(name, indices, q, lhs, rhs)

    # binomial_inversion
    j, t, s = indices
    acc = zero_like(q)
    for l in range(j + 1):
        term = q_binomial(j, l, q) * q_binomial(j + t - l, s - l, q)
        if _is_zero(term):
            continue
        acc = acc + _sign(l) * term * q ** (l * (l - 1) // 2)
    rhs = q ** (s * j) * q_binomial(t, s, q)
    return _verdict(name, indices, q, acc, rhs)
