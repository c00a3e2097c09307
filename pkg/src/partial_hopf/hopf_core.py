"""Finite-dimensional Hopf algebras presented by structure constants.

A HopfData instance is a plain immutable container: sparse multiplication
and comultiplication tensors, unit and counit, an antipode matrix, and
declared metadata (group-like basis indices, skew-primitive triples, and
group-like elements that are not basis vectors, stored as coordinate
rows).  Nothing is assumed about the data: validators check every axiom
exactly, coefficient by coefficient, and report each failing instance.

Elements and functionals carry ParamPoly coordinates so that families with
free parameters flow through the same arithmetic as concrete elements.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .exact_arith import CycNumber, ParamPoly, _RAT_TYPES
from .expr import parse_scalar


class AlgebraMismatch(ValueError):
    """Mixing elements or functionals of two different algebras."""


@dataclass(frozen=True, eq=False)
class HopfData:
    """Structure constants of one finite-dimensional Hopf algebra.

    mult[(i, j)]   -> tuple of (k, c):       e_i e_j = sum c . e_k
    comult[i]      -> tuple of (c, j, k):    Delta(e_i) = sum c . e_j (x) e_k
    unit           -> tuple of (i, c):       1 = sum c . e_i
    counit[i]      -> CycNumber              eps(e_i)
    antipode[i]    -> tuple of (j, c):       S(e_i) = sum c . e_j
    grouplikes     -> basis indices that are group-like
    grouplike_vectors -> declared group-like elements that are not basis
                      vectors, as dense coordinate tuples
    skew_primitives -> (x, g, h) with Delta(e_x) = e_x (x) e_g + e_h (x) e_x
    basis_degrees  -> optional ordering hint (0 for group part); empty means
                      all zero
    """

    name: str
    dim: int
    order: int
    basis: tuple
    mult: dict
    unit: tuple
    comult: tuple
    counit: tuple
    antipode: tuple
    grouplikes: tuple = ()
    grouplike_vectors: tuple = ()
    skew_primitives: tuple = ()
    basis_degrees: tuple = ()

    def zero_scalar(self) -> CycNumber:
        return CycNumber.zero(self.order)

    def one_scalar(self) -> CycNumber:
        return CycNumber.one(self.order)

    def degree(self, i: int) -> int:
        return self.basis_degrees[i] if self.basis_degrees else 0

    def label_index(self, label: str) -> int:
        try:
            return self.basis.index(label)
        except ValueError:
            raise KeyError("no basis element %r in %s" % (label, self.name))

    def __repr__(self):
        return "<HopfData %s dim=%d order=%d>" % (self.name, self.dim, self.order)


def _same(a, b):
    if a.algebra is not b.algebra:
        raise AlgebraMismatch("%r vs %r" % (a.algebra, b.algebra))


def _as_poly(H: HopfData, v) -> ParamPoly:
    if isinstance(v, ParamPoly):
        if v.order != H.order:
            raise AlgebraMismatch("scalar order %d for %r" % (v.order, H))
        return v
    return ParamPoly.const(H.order, v)


@dataclass(frozen=True, eq=False)
class AlgElement:
    """Element of H with ParamPoly coordinates in the declared basis."""

    algebra: HopfData
    coords: tuple

    @staticmethod
    def from_terms(H: HopfData, terms: dict) -> "AlgElement":
        coords = [ParamPoly.zero(H.order)] * H.dim
        for key, v in terms.items():
            i = key if isinstance(key, int) else H.label_index(key)
            coords[i] = coords[i] + _as_poly(H, v)
        return AlgElement(H, tuple(coords))

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __add__(self, other):
        _same(self, other)
        return AlgElement(self.algebra, tuple(
            a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        _same(self, other)
        return AlgElement(self.algebra, tuple(
            a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgElement(self.algebra, tuple(-a for a in self.coords))

    def scale(self, s) -> "AlgElement":
        p = _as_poly(self.algebra, s)
        return AlgElement(self.algebra, tuple(a * p for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def support(self) -> tuple:
        return tuple(i for i, c in enumerate(self.coords) if not c.is_zero())

    def render(self) -> str:
        parts = []
        for i, c in enumerate(self.coords):
            if c.is_zero():
                continue
            cs = c.render()
            parts.append("(%s)*%s" % (cs, self.algebra.basis[i]))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return "AlgElement(%s: %s)" % (self.algebra.name, self.render())


@dataclass(frozen=True, eq=False)
class Functional:
    """Linear functional on H; coords[i] is the value on basis element i."""

    algebra: HopfData
    coords: tuple

    @staticmethod
    def from_values(H: HopfData, values: dict) -> "Functional":
        coords = [ParamPoly.zero(H.order)] * H.dim
        for key, v in values.items():
            i = key if isinstance(key, int) else H.label_index(key)
            coords[i] = coords[i] + _as_poly(H, v)
        return Functional(H, tuple(coords))

    def __eq__(self, other):
        if not isinstance(other, Functional):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash((id(self.algebra), self.coords))

    def __add__(self, other):
        _same(self, other)
        return Functional(self.algebra, tuple(
            a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        _same(self, other)
        return Functional(self.algebra, tuple(
            a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, s) -> "Functional":
        p = _as_poly(self.algebra, s)
        return Functional(self.algebra, tuple(a * p for a in self.coords))

    def value_on(self, key) -> ParamPoly:
        i = key if isinstance(key, int) else self.algebra.label_index(key)
        return self.coords[i]

    def subs_params(self, assignment: dict) -> "Functional":
        out = []
        for c in self.coords:
            for name, v in assignment.items():
                c = c.subs(name, v)
            out.append(c)
        return Functional(self.algebra, tuple(out))


def basis_element(H: HopfData, key) -> AlgElement:
    i = key if isinstance(key, int) else H.label_index(key)
    coords = [ParamPoly.zero(H.order)] * H.dim
    coords[i] = ParamPoly.one(H.order)
    return AlgElement(H, tuple(coords))


def unit_element(H: HopfData) -> AlgElement:
    coords = [ParamPoly.zero(H.order)] * H.dim
    for i, c in H.unit:
        coords[i] = ParamPoly.const(H.order, c)
    return AlgElement(H, tuple(coords))


def counit_functional(H: HopfData) -> Functional:
    return Functional(H, tuple(
        ParamPoly.const(H.order, c) for c in H.counit))


def element_from_vector(H: HopfData, vector) -> AlgElement:
    """Coordinate tuple (CycNumber or scalar entries) to an element."""
    return AlgElement(H, tuple(_as_poly(H, v) for v in vector))


def multiply(a: AlgElement, b: AlgElement) -> AlgElement:
    _same(a, b)
    H = a.algebra
    out = [ParamPoly.zero(H.order)] * H.dim
    for i, ca in enumerate(a.coords):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b.coords):
            if cb.is_zero():
                continue
            row = H.mult.get((i, j))
            if not row:
                continue
            prod = ca * cb
            for k, c in row:
                out[k] = out[k] + prod * c
    return AlgElement(H, tuple(out))


@dataclass(eq=False)
class TensorSquare:
    """Element of H (x) H, sparse over basis pairs."""

    algebra: HopfData
    terms: dict = field(default_factory=dict)

    def _norm(self) -> dict:
        return {k: v for k, v in self.terms.items() if not v.is_zero()}

    def __eq__(self, other):
        if not isinstance(other, TensorSquare):
            return NotImplemented
        return (self.algebra is other.algebra
                and self._norm() == other._norm())

    def __add__(self, other):
        if self.algebra is not other.algebra:
            raise AlgebraMismatch("tensor addition across algebras")
        out = dict(self.terms)
        zero = ParamPoly.zero(self.algebra.order)
        for k, v in other.terms.items():
            out[k] = out.get(k, zero) + v
        return TensorSquare(self.algebra, out)

    def __sub__(self, other):
        if self.algebra is not other.algebra:
            raise AlgebraMismatch("tensor subtraction across algebras")
        out = dict(self.terms)
        zero = ParamPoly.zero(self.algebra.order)
        for k, v in other.terms.items():
            out[k] = out.get(k, zero) - v
        return TensorSquare(self.algebra, out)

    def __mul__(self, other):
        """Componentwise product (a (x) b)(c (x) d) = ac (x) bd."""
        if self.algebra is not other.algebra:
            raise AlgebraMismatch("tensor product across algebras")
        H = self.algebra
        out: dict = {}
        zero = ParamPoly.zero(H.order)
        for (j1, k1), v1 in self.terms.items():
            if v1.is_zero():
                continue
            for (j2, k2), v2 in other.terms.items():
                if v2.is_zero():
                    continue
                rj = H.mult.get((j1, j2))
                if not rj:
                    continue
                rk = H.mult.get((k1, k2))
                if not rk:
                    continue
                v = v1 * v2
                for a, ca in rj:
                    for b, cb in rk:
                        key = (a, b)
                        out[key] = out.get(key, zero) + v * (ca * cb)
        return TensorSquare(H, out)

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.terms.values())

    def render(self) -> str:
        parts = []
        for (j, k) in sorted(self._norm()):
            v = self.terms[(j, k)]
            parts.append("(%s)*%s(x)%s" % (
                v.render(), self.algebra.basis[j], self.algebra.basis[k]))
        return " + ".join(parts) if parts else "0"


def tensor_of(a: AlgElement, b: AlgElement) -> TensorSquare:
    _same(a, b)
    H = a.algebra
    out: dict = {}
    for i, ca in enumerate(a.coords):
        if ca.is_zero():
            continue
        for j, cb in enumerate(b.coords):
            if cb.is_zero():
                continue
            out[(i, j)] = ca * cb
    return TensorSquare(H, out)


def comultiply(a: AlgElement) -> TensorSquare:
    H = a.algebra
    out: dict = {}
    zero = ParamPoly.zero(H.order)
    for i, ca in enumerate(a.coords):
        if ca.is_zero():
            continue
        for c, j, k in H.comult[i]:
            key = (j, k)
            out[key] = out.get(key, zero) + ca * c
    return TensorSquare(H, out)


def apply_functional(f: Functional, a: AlgElement) -> ParamPoly:
    _same(f, a)
    out = ParamPoly.zero(f.algebra.order)
    for fa, ca in zip(f.coords, a.coords):
        if not fa.is_zero() and not ca.is_zero():
            out = out + fa * ca
    return out


def antipode_apply(a: AlgElement) -> AlgElement:
    H = a.algebra
    out = [ParamPoly.zero(H.order)] * H.dim
    for i, ca in enumerate(a.coords):
        if ca.is_zero():
            continue
        for j, c in H.antipode[i]:
            out[j] = out[j] + ca * c
    return AlgElement(H, tuple(out))


def convolution(f: Functional, g: Functional) -> Functional:
    """(f * g)(h) = sum f(h_1) g(h_2) via the comultiplication tensor."""
    _same(f, g)
    H = f.algebra
    out = []
    for i in range(H.dim):
        acc = ParamPoly.zero(H.order)
        for c, j, k in H.comult[i]:
            fj = f.coords[j]
            if fj.is_zero():
                continue
            gk = g.coords[k]
            if gk.is_zero():
                continue
            acc = acc + (fj * gk) * c
        out.append(acc)
    return Functional(H, tuple(out))


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass
class CheckFailure:
    check: str
    where: tuple
    lhs: str
    rhs: str

    def __str__(self):
        return "%s at %s: %s != %s" % (self.check, self.where, self.lhs, self.rhs)


@dataclass
class Report:
    subject: str
    checks_run: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def count(self, n: int = 1):
        self.checks_run += n

    def fail(self, check: str, where: tuple, lhs: str, rhs: str):
        self.failures.append(CheckFailure(check, where, lhs, rhs))

    def merge(self, other: "Report") -> "Report":
        self.checks_run += other.checks_run
        self.failures.extend(other.failures)
        return self

    def summary(self) -> str:
        state = "ok" if self.ok else "FAILED"
        out = "%s: %s (%d checks)" % (self.subject, state, self.checks_run)
        for f in self.failures[:20]:
            out += "\n  " + str(f)
        if len(self.failures) > 20:
            out += "\n  ... %d more failures" % (len(self.failures) - 20)
        return out


def _cdict_add(acc: dict, key, c):
    prev = acc.get(key)
    acc[key] = c if prev is None else prev + c


def _cdict_iszero(d: dict) -> bool:
    return all(v.is_zero() for v in d.values())


def _cdict_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        prev = out.get(k)
        out[k] = -v if prev is None else prev - v
    return out


def _cdict_str(d: dict, H: HopfData, pair=False) -> str:
    parts = []
    for k in sorted(d):
        v = d[k]
        if v.is_zero():
            continue
        if pair:
            lbl = "%s(x)%s" % (H.basis[k[0]], H.basis[k[1]])
        elif isinstance(k, tuple):
            lbl = "(x)".join(H.basis[i] for i in k)
        else:
            lbl = H.basis[k]
        parts.append("(%s)*%s" % (v.render(), lbl))
    return " + ".join(parts) if parts else "0"


def validate_bialgebra(H: HopfData) -> Report:
    """Exact check of every bialgebra axiom on basis elements."""
    rep = Report("bialgebra(%s)" % H.name)
    dim, mult = H.dim, H.mult
    zero = H.zero_scalar()
    one = H.one_scalar()

    # unit laws
    unit = dict(H.unit)
    for i in range(dim):
        for flip in (False, True):
            acc: dict = {}
            for a, ua in unit.items():
                row = mult.get((a, i) if not flip else (i, a))
                if row:
                    for k, c in row:
                        _cdict_add(acc, k, ua * c)
            _cdict_add(acc, i, -one)
            rep.count()
            if not _cdict_iszero(acc):
                rep.fail("unit_law", (("1*e" if not flip else "e*1"), i),
                         _cdict_str(acc, H), "0")

    # associativity on basis triples
    for i in range(dim):
        for j in range(dim):
            row_ij = mult.get((i, j), ())
            for k in range(dim):
                left: dict = {}
                for m, c in row_ij:
                    row2 = mult.get((m, k))
                    if row2:
                        for t, c2 in row2:
                            _cdict_add(left, t, c * c2)
                right: dict = {}
                for m, c in mult.get((j, k), ()):
                    row2 = mult.get((i, m))
                    if row2:
                        for t, c2 in row2:
                            _cdict_add(right, t, c * c2)
                rep.count()
                diff = _cdict_sub(left, right)
                if not _cdict_iszero(diff):
                    rep.fail("associativity", (i, j, k),
                             _cdict_str(left, H), _cdict_str(right, H))

    # counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta
    for i in range(dim):
        lacc: dict = {}
        racc: dict = {}
        for c, j, k in H.comult[i]:
            ej = H.counit[j]
            if ej:
                _cdict_add(lacc, k, c * ej)
            ek = H.counit[k]
            if ek:
                _cdict_add(racc, j, c * ek)
        _cdict_add(lacc, i, -one)
        _cdict_add(racc, i, -one)
        rep.count(2)
        if not _cdict_iszero(lacc):
            rep.fail("counit_left", (i,), _cdict_str(lacc, H), "0")
        if not _cdict_iszero(racc):
            rep.fail("counit_right", (i,), _cdict_str(racc, H), "0")

    # coassociativity on basis elements
    for i in range(dim):
        left: dict = {}
        right: dict = {}
        for c, j, k in H.comult[i]:
            for c2, a, b in H.comult[j]:
                _cdict_add(left, (a, b, k), c * c2)
            for c2, a, b in H.comult[k]:
                _cdict_add(right, (j, a, b), c * c2)
        rep.count()
        diff = _cdict_sub(left, right)
        if not _cdict_iszero(diff):
            rep.fail("coassociativity", (i,),
                     _cdict_str(left, H), _cdict_str(right, H))

    # Delta is an algebra map on basis pairs
    for i in range(dim):
        ci = H.comult[i]
        for j in range(dim):
            lhs: dict = {}
            for k, c in mult.get((i, j), ()):
                for c2, a, b in H.comult[k]:
                    _cdict_add(lhs, (a, b), c * c2)
            rhs: dict = {}
            for c1, a1, b1 in ci:
                for c2, a2, b2 in H.comult[j]:
                    ra = mult.get((a1, a2))
                    if not ra:
                        continue
                    rb = mult.get((b1, b2))
                    if not rb:
                        continue
                    c12 = c1 * c2
                    for a, ca in ra:
                        for b, cb in rb:
                            _cdict_add(rhs, (a, b), c12 * (ca * cb))
            rep.count()
            diff = _cdict_sub(lhs, rhs)
            if not _cdict_iszero(diff):
                rep.fail("comult_multiplicative", (i, j),
                         _cdict_str(lhs, H, pair=True),
                         _cdict_str(rhs, H, pair=True))

    # eps is an algebra map; Delta(1) = 1 (x) 1; eps(1) = 1
    for i in range(dim):
        for j in range(dim):
            acc = zero
            for k, c in mult.get((i, j), ()):
                ek = H.counit[k]
                if ek:
                    acc = acc + c * ek
            rep.count()
            if acc != H.counit[i] * H.counit[j]:
                rep.fail("counit_multiplicative", (i, j), acc.render(),
                         (H.counit[i] * H.counit[j]).render())
    d1: dict = {}
    for i, ui in H.unit:
        for c, j, k in H.comult[i]:
            _cdict_add(d1, (j, k), ui * c)
    for i, ui in H.unit:
        for j, uj in H.unit:
            _cdict_add(d1, (i, j), -(ui * uj))
    rep.count()
    if not _cdict_iszero(d1):
        rep.fail("comult_of_unit", (), _cdict_str(d1, H, pair=True), "0")
    eps1 = zero
    for i, ui in H.unit:
        eps1 = eps1 + ui * H.counit[i]
    rep.count()
    if eps1 != one:
        rep.fail("counit_of_unit", (), eps1.render(), "1")
    return rep


def validate_antipode(H: HopfData) -> Report:
    """m(S (x) id)Delta = unit . eps = m(id (x) S)Delta, on every basis element."""
    rep = Report("antipode(%s)" % H.name)
    mult = H.mult
    for i in range(H.dim):
        left: dict = {}
        right: dict = {}
        for c, j, k in H.comult[i]:
            for m, cs in H.antipode[j]:
                row = mult.get((m, k))
                if row:
                    for t, c2 in row:
                        _cdict_add(left, t, c * cs * c2)
            for m, cs in H.antipode[k]:
                row = mult.get((j, m))
                if row:
                    for t, c2 in row:
                        _cdict_add(right, t, c * cs * c2)
        target: dict = {}
        ei = H.counit[i]
        for a, ua in H.unit:
            _cdict_add(target, a, ua * ei)
        rep.count(2)
        dl = _cdict_sub(left, target)
        if not _cdict_iszero(dl):
            rep.fail("antipode_left", (i,), _cdict_str(left, H),
                     _cdict_str(target, H))
        dr = _cdict_sub(right, target)
        if not _cdict_iszero(dr):
            rep.fail("antipode_right", (i,), _cdict_str(right, H),
                     _cdict_str(target, H))
    return rep


def validate_metadata(H: HopfData) -> Report:
    """Declared group-likes and skew-primitives must satisfy their defining
    comultiplication shapes."""
    rep = Report("metadata(%s)" % H.name)
    one = H.one_scalar()
    for b in H.grouplikes:
        row: dict = {}
        for c, j, k in H.comult[b]:
            _cdict_add(row, (j, k), c)
        _cdict_add(row, (b, b), -one)
        rep.count(2)
        if not _cdict_iszero(row):
            rep.fail("grouplike_comult", (b,), _cdict_str(row, H, pair=True), "0")
        if H.counit[b] != one:
            rep.fail("grouplike_counit", (b,), H.counit[b].render(), "1")
    for vec in H.grouplike_vectors:
        elt = element_from_vector(H, vec)
        diff = comultiply(elt) - tensor_of(elt, elt)
        rep.count(2)
        if not diff.is_zero():
            rep.fail("grouplike_vector_comult", tuple(
                c.render() for c in vec), diff.render(), "0")
        eps = apply_functional(counit_functional(H), elt)
        if eps != ParamPoly.one(H.order):
            rep.fail("grouplike_vector_counit", (), eps.render(), "1")
    for (x, g, h) in H.skew_primitives:
        row = {}
        for c, j, k in H.comult[x]:
            _cdict_add(row, (j, k), c)
        _cdict_add(row, (x, g), -one)
        _cdict_add(row, (h, x), -one)
        rep.count()
        if not _cdict_iszero(row):
            rep.fail("skew_primitive_comult", (x, g, h),
                     _cdict_str(row, H, pair=True), "0")
    return rep


def validate_all(H: HopfData) -> Report:
    rep = validate_bialgebra(H)
    rep.merge(validate_antipode(H))
    rep.merge(validate_metadata(H))
    rep.subject = "hopf(%s)" % H.name
    return rep


# ---------------------------------------------------------------------------
# duality
# ---------------------------------------------------------------------------

def dual_hopf(H: HopfData, grouplike_vectors: tuple = ()) -> HopfData:
    """The dual Hopf algebra on the dual basis, by transposing tensors.

    Product of functionals is convolution (transpose of comult), coproduct
    is the transpose of mult, unit is the counit, counit is evaluation at 1,
    and the antipode matrix is transposed.  Group-like metadata cannot be
    inferred in general, so the caller declares it: ``grouplike_vectors``
    are coordinate rows in the dual basis (algebra characters of H).
    """
    mult_dual: dict = {}
    for i in range(H.dim):
        for c, j, k in H.comult[i]:
            mult_dual.setdefault((j, k), []).append((i, c))
    mult_dual = {key: tuple(v) for key, v in mult_dual.items()}

    comult_rows: list = [[] for _ in range(H.dim)]
    for (j, k), row in H.mult.items():
        for i, c in row:
            comult_rows[i].append((c, j, k))
    comult_dual = tuple(tuple(sorted(r, key=lambda t: (t[1], t[2])))
                        for r in comult_rows)

    unit_dual = tuple((i, c) for i, c in enumerate(H.counit) if not c.is_zero())
    counit_dual = [H.zero_scalar()] * H.dim
    for i, c in H.unit:
        counit_dual[i] = c

    antipode_rows: list = [[] for _ in range(H.dim)]
    for i in range(H.dim):
        for j, c in H.antipode[i]:
            antipode_rows[j].append((i, c))
    antipode_dual = tuple(tuple(sorted(r)) for r in antipode_rows)

    return HopfData(
        name=H.name + "^*",
        dim=H.dim,
        order=H.order,
        basis=tuple(lbl + "*" for lbl in H.basis),
        mult=mult_dual,
        unit=unit_dual,
        comult=comult_dual,
        counit=tuple(counit_dual),
        antipode=antipode_dual,
        grouplikes=(),
        grouplike_vectors=grouplike_vectors,
        skew_primitives=(),
        basis_degrees=H.basis_degrees,
    )


# ---------------------------------------------------------------------------
# JSON interchange
# ---------------------------------------------------------------------------

class HopfFormatError(ValueError):
    """Structurally malformed algebra description."""


class HopfValidationError(ValueError):
    """Well-formed description that fails the Hopf axioms."""

    def __init__(self, report: Report):
        super().__init__(report.summary())
        self.report = report


def _rc(c: CycNumber) -> str:
    return c.render("z")


def to_json_dict(H: HopfData) -> dict:
    """Serialize; coefficients become exact expressions in z = zeta_order."""
    mult_rows = []
    for (i, j) in sorted(H.mult):
        for k, c in H.mult[(i, j)]:
            if not c.is_zero():
                mult_rows.append([i, j, k, _rc(c)])
    comult_rows = []
    for i, row in enumerate(H.comult):
        for c, j, k in row:
            if not c.is_zero():
                comult_rows.append([i, j, k, _rc(c)])
    unit = [H.zero_scalar()] * H.dim
    for i, c in H.unit:
        unit[i] = c
    antipode = []
    for i in range(H.dim):
        dense = [H.zero_scalar()] * H.dim
        for j, c in H.antipode[i]:
            dense[j] = c
        antipode.append([_rc(c) for c in dense])
    out = {
        "dim": H.dim,
        "order": H.order,
        "basis": list(H.basis),
        "mult": mult_rows,
        "comult": comult_rows,
        "unit": [_rc(c) for c in unit],
        "counit": [_rc(c) for c in H.counit],
        "antipode": antipode,
        "grouplikes": list(H.grouplikes),
        "skew_primitives": [list(t) for t in H.skew_primitives],
    }
    if H.grouplike_vectors:
        out["grouplike_vectors"] = [
            [_rc(c) for c in vec] for vec in H.grouplike_vectors]
    if H.basis_degrees:
        out["basis_degrees"] = list(H.basis_degrees)
    if H.name:
        out["name"] = H.name
    return out


def from_json_dict(data: dict, validate: bool = True) -> HopfData:
    """Parse and (by default) fully validate an algebra description.

    Raises HopfFormatError for structural problems and HopfValidationError
    when the axioms fail on well-formed data.
    """
    try:
        dim = int(data["dim"])
        order = int(data["order"])
        basis = tuple(str(b) for b in data["basis"])
        if len(basis) != dim or dim < 1 or order < 1:
            raise HopfFormatError("basis length / dim / order inconsistent")
        if len(set(basis)) != dim:
            raise HopfFormatError("duplicate basis labels")

        def scal(s):
            return parse_scalar(str(s), order)

        def index(v, what):
            i = int(v)
            if not 0 <= i < dim:
                raise HopfFormatError("%s index %d out of range" % (what, i))
            return i

        mult: dict = {}
        for row in data["mult"]:
            i, j, k, cs = row
            key = (index(i, "mult"), index(j, "mult"))
            mult.setdefault(key, []).append((index(k, "mult"), scal(cs)))
        mult = {k: tuple(v) for k, v in mult.items()}

        comult_rows: list = [[] for _ in range(dim)]
        for row in data["comult"]:
            i, j, k, cs = row
            comult_rows[index(i, "comult")].append(
                (scal(cs), index(j, "comult"), index(k, "comult")))
        comult = tuple(tuple(r) for r in comult_rows)

        unit_dense = [scal(s) for s in data["unit"]]
        counit = [scal(s) for s in data["counit"]]
        if len(unit_dense) != dim or len(counit) != dim:
            raise HopfFormatError("unit/counit length mismatch")
        antipode_rows = []
        if len(data["antipode"]) != dim:
            raise HopfFormatError("antipode must be a dim x dim matrix")
        for arow in data["antipode"]:
            if len(arow) != dim:
                raise HopfFormatError("antipode must be a dim x dim matrix")
            vals = [scal(s) for s in arow]
            antipode_rows.append(tuple(
                (j, c) for j, c in enumerate(vals) if not c.is_zero()))

        grouplikes = tuple(index(i, "grouplike") for i in data["grouplikes"])
        skew = tuple(
            (index(x, "skew"), index(g, "skew"), index(h, "skew"))
            for (x, g, h) in data["skew_primitives"])
        gvecs = tuple(
            tuple(scal(s) for s in vec)
            for vec in data.get("grouplike_vectors", ()))
        for vec in gvecs:
            if len(vec) != dim:
                raise HopfFormatError("grouplike vector length mismatch")
        degrees = tuple(int(d) for d in data.get("basis_degrees", ()))
        if degrees and len(degrees) != dim:
            raise HopfFormatError("basis_degrees length mismatch")
        name = str(data.get("name", "imported"))
    except HopfFormatError:
        raise
    except Exception as exc:
        raise HopfFormatError("malformed algebra description: %s" % exc)

    H = HopfData(
        name=name, dim=dim, order=order, basis=basis, mult=mult,
        unit=tuple((i, c) for i, c in enumerate(unit_dense)
                   if not c.is_zero()),
        comult=comult, counit=tuple(counit), antipode=tuple(antipode_rows),
        grouplikes=grouplikes, grouplike_vectors=gvecs,
        skew_primitives=skew, basis_degrees=degrees)
    if validate:
        rep = validate_all(H)
        if not rep.ok:
            raise HopfValidationError(rep)
    return H
