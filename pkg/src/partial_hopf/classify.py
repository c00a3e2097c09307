"""Classification of base-field partial actions by constraint propagation.

The solver treats the value of the functional on every basis vector as an
unknown polynomial variable, imposes lam(1) = 1, and sweeps all instances
of the partial-action equation over ordered basis pairs.  Three reduction
rules drive it:

  (a) a constraint linear in some unknown with constant leading coefficient
      solves that unknown and substitutes it everywhere;
  (b) a constraint all of whose monomials share an unknown factors as
      u * D and splits the search into u = 0 versus D = 0;
  (c) a nonzero constant constraint kills the branch.

Satisfied instances are pruned permanently: substitution is a ring
homomorphism, so an identically zero residual stays zero under every later
step.  A branch with no pending constraints is a solution; surviving
unknowns are free parameters of the family.

Before the sweep, the solver branches on the support of the functional on
the group-like group G(H).  That step is justified by machine checks, not
by assumption: it verifies as polynomial identities that the residual
instances force v(gamma)^2 = v(gamma) (given lam(1) = 1) and
v(gamma) v(delta) = v(gamma) v(gamma delta), and it enumerates every
subset of G(H) containing 1 exhaustively, confirming that the
multiplicatively closed ones are exactly the cyclic subgroups it branches
over.  Fields have no idempotents besides 0 and 1, so supports of
solutions are closed subsets and the branch list covers all of them.

Every family the solver emits is re-verified with the same exact checkers
used for the hand-built families before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .exact_arith import CycNumber, ParamPoly, cyc_invert, divisors
from .hopf_core import Functional, HopfData, Report
from .families import (
    instance_residual, verify_partial_action, verify_symmetric_action,
)


class ClassificationError(RuntimeError):
    """The solver could not complete a sound, exhaustive classification."""


class NonCyclicGrouplikes(ClassificationError):
    """Group-like branching implemented for cyclic G(H) only."""


class BranchLimitExceeded(ClassificationError):
    """Search exceeded the branch budget."""


def family_count(m: int) -> int:
    """Number of classified action families when G(H) is cyclic of order m:
    one per subgroup, i.e. one per divisor."""
    return len(divisors(m))


def _uname(i: int) -> str:
    return "u%d" % i


# ---------------------------------------------------------------------------
# group-like support branching
# ---------------------------------------------------------------------------

def _grouplike_vectors(H: HopfData) -> list:
    out = []
    one = CycNumber.one(H.order)
    for i in H.grouplikes:
        out.append({i: one})
    for vec in H.grouplike_vectors:
        out.append({i: c for i, c in enumerate(vec) if not c.is_zero()})
    return out


def _vec_product(H: HopfData, u: dict, v: dict) -> dict:
    out: dict = {}
    for i, a in u.items():
        for j, b in v.items():
            row = H.mult.get((i, j))
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


@dataclass(frozen=True)
class GrouplikeStructure:
    vectors: tuple          # sparse coordinate dicts, one per group element
    table: tuple            # table[a][b] = index of product
    identity: int
    generator: int
    subgroup_masks: tuple   # bitmask per divisor d of |G|: members of <gen^d>
    subgroup_divisors: tuple


def _analyze_grouplikes(H: HopfData) -> GrouplikeStructure:
    G = _grouplike_vectors(H)
    m = len(G)
    if m == 0:
        raise ClassificationError("no group-like metadata on %s" % H.name)
    unit = {i: c for i, c in H.unit}
    ident = next((a for a, v in enumerate(G) if v == unit), None)
    if ident is None:
        raise ClassificationError("unit is not among the group-likes")

    table = []
    for a in range(m):
        row = []
        for b in range(m):
            prod = _vec_product(H, G[a], G[b])
            c = next((k for k, v in enumerate(G) if v == prod), None)
            if c is None:
                raise ClassificationError(
                    "group-likes of %s are not closed under product" % H.name)
            row.append(c)
        table.append(tuple(row))
    table = tuple(table)

    gen = None
    for cand in range(m):
        cur, seen = ident, set()
        for _ in range(m):
            cur = table[cur][cand]
            seen.add(cur)
        if len(seen) == m:
            gen = cand
            break
    if gen is None:
        raise NonCyclicGrouplikes(
            "group-like group of %s is not cyclic" % H.name)

    if m > 16:
        raise ClassificationError(
            "exhaustive subgroup audit capped at |G| = 16, got %d" % m)
    closed = []
    for mask in range(1 << m):
        if not (mask >> ident) & 1:
            continue
        members = [a for a in range(m) if (mask >> a) & 1]
        if all((mask >> table[a][b]) & 1 for a in members for b in members):
            closed.append(mask)

    subs, divs = [], []
    for d in divisors(m):
        cur, mask = ident, 1 << ident
        for _ in range(m // d):
            for _ in range(d):
                cur = table[cur][gen]
            mask |= 1 << cur
        subs.append(mask)
        divs.append(d)
    if sorted(closed) != sorted(set(subs)):
        raise ClassificationError(
            "closed support audit mismatch on %s" % H.name)
    return GrouplikeStructure(tuple(G), table, ident, gen,
                              tuple(subs), tuple(divs))


def _check_grouplike_consequences(H: HopfData, gs: GrouplikeStructure):
    """Machine-check, as polynomial identities in fresh unknowns, that the
    instance residuals force the support constraints used for branching."""
    U = [ParamPoly.var(H.order, _uname(i)) for i in range(H.dim)]
    forms = []
    for v in gs.vectors:
        f = ParamPoly.zero(H.order)
        for i, c in v.items():
            f = f + U[i] * c
        forms.append(f)
    m = len(gs.vectors)
    for a in range(m):
        for b in range(m):
            combo = ParamPoly.zero(H.order)
            for i, ca in gs.vectors[a].items():
                for j, cb in gs.vectors[b].items():
                    combo = combo + instance_residual(H, U, i, j) * (ca * cb)
            want = forms[a] * forms[b] - forms[a] * forms[gs.table[a][b]]
            if combo != want:
                raise ClassificationError(
                    "group-like consequence audit failed at (%d, %d)" % (a, b))


# ---------------------------------------------------------------------------
# solver state
# ---------------------------------------------------------------------------

@dataclass
class _State:
    values: list                # ParamPoly per basis index
    pending: list               # (h, y) instances not yet known satisfied
    extra: list                 # additional polynomial constraints == 0
    trace: list = field(default_factory=list)
    label: str = ""


@dataclass(frozen=True)
class SolvedAction:
    """One family found by the solver, re-verified and parameter-renamed."""

    name: str
    algebra: HopfData
    params: tuple
    functional: Functional
    trace: tuple


@dataclass(frozen=True)
class ClassifiedActions:
    algebra: HopfData
    families: tuple
    branches_explored: int

    def count(self) -> int:
        return len(self.families)


def _substitute(st: _State, name: str, value: ParamPoly, why: str):
    st.values = [v if v.is_zero() else v.subs(name, value) for v in st.values]
    st.extra = [c2 for c2 in (c.subs(name, value) for c in st.extra)
                if not c2.is_zero()]
    st.trace.append("%s := %s  [%s]" % (name, value.render("q"), why))


def _try_linear(st: _State, poly: ParamPoly, why: str) -> bool:
    for name in poly.vars_used():
        try:
            A, B = poly.linear_split(name)
        except ValueError:
            continue
        if not A.is_constant():
            continue
        a = A.constant_value()
        if a.is_zero():
            continue
        val = B * (-cyc_invert(a))
        _substitute(st, name, val, why)
        return True
    return False


def _find_split(poly: ParamPoly):
    for name in poly.vars_used():
        try:
            return name, poly.divide_by_var(name)
        except ValueError:
            continue
    return None


def _propagate(H: HopfData, st: _State):
    """Run rules to a fixpoint.  Returns one of
    ("solved",), ("contradiction", where), ("split", var, cofactor),
    ("stuck", leftovers)."""
    while True:
        progressed = False

        # derived constraints: solve linear ones to exhaustion; _substitute
        # rewrites st.extra, so restart the scan after every success
        while True:
            st.extra = [c for c in st.extra if not c.is_zero()]
            bad = next((c for c in st.extra if c.is_constant()), None)
            if bad is not None:
                return ("contradiction",
                        "derived constraint %s" % bad.render("q"))
            for c in st.extra:
                if _try_linear(st, c, "derived constraint"):
                    progressed = True
                    break
            else:
                break

        still = []
        for (h, y) in st.pending:
            r = instance_residual(H, st.values, h, y)
            if r.is_zero():
                continue
            if r.is_constant():
                return ("contradiction",
                        "instance (%s, %s) = %s" % (H.basis[h], H.basis[y],
                                                    r.render("q")))
            if _try_linear(st, r, "instance (%s, %s)"
                           % (H.basis[h], H.basis[y])):
                progressed = True
                still.append((h, y))
            else:
                still.append((h, y))
        st.pending = still

        if progressed:
            continue
        if not st.pending and not st.extra:
            return ("solved",)
        for c in st.extra:
            hit = _find_split(c)
            if hit:
                return ("split", hit[0], hit[1])
        for (h, y) in st.pending:
            r = instance_residual(H, st.values, h, y)
            hit = _find_split(r)
            if hit:
                return ("split", hit[0], hit[1])
        leftovers = [c.render("q") for c in st.extra]
        leftovers += ["(%s, %s)" % (H.basis[h], H.basis[y])
                      for h, y in st.pending]
        return ("stuck", leftovers)


def _promote(H: HopfData, st: _State, name: str) -> SolvedAction:
    """Surviving unknowns become free parameters t1, t2, ...

    Canonical scaling: walking the basis in degree order, the first value
    that is a constant multiple of a lone unrenamed unknown defines that
    parameter outright (the value becomes exactly t_k), which pins the
    normalization instead of leaving it to substitution order."""
    deg = H.basis_degrees or (0,) * H.dim
    values = list(st.values)
    params = []
    done = set()
    for i in sorted(range(H.dim), key=lambda i: (deg[i], i)):
        v = values[i]
        if v.is_constant() or len(v.terms) != 1:
            continue
        (mono, c), = v.terms.items()
        old = mono[0][0]
        if len(mono) != 1 or mono[0][1] != 1 or old in done \
                or not old.startswith("u"):
            continue
        new = "t%d" % (len(params) + 1)
        params.append(new)
        done.add(old)
        repl = ParamPoly.var(H.order, new) * cyc_invert(c)
        values = [w.subs(old, repl) for w in values]
        st.trace.append("free parameter %s scaled into %s = lam(%s)"
                        % (old, new, H.basis[i]))
    leftover = set()
    for v in values:
        leftover.update(x for x in v.vars_used() if x not in params)
    for old in sorted(leftover, key=lambda s: int(s[1:])):
        new = "t%d" % (len(params) + 1)
        params.append(new)
        values = [w.subs(old, ParamPoly.var(H.order, new)) for w in values]
        st.trace.append("free parameter %s renamed %s" % (old, new))
    f = Functional(H, tuple(values))
    return SolvedAction(name, H, tuple(params), f, tuple(st.trace))


def classify_base_field_actions(H: HopfData, branch_limit: int = 64,
                                subgroup_branching: bool = True
                                ) -> ClassifiedActions:
    """Classify all partial actions of H on its base field.

    Exhaustive over the branch tree described in the module docstring;
    raises ClassificationError when soundness cannot be established.
    """
    deg = H.basis_degrees or (0,) * H.dim
    pairs = sorted(((h, y) for h in range(H.dim) for y in range(H.dim)),
                   key=lambda p: (deg[p[0]] + deg[p[1]], p))
    unit = {i: c for i, c in H.unit}

    def fresh() -> _State:
        values = [ParamPoly.var(H.order, _uname(i)) for i in range(H.dim)]
        st = _State(values, list(pairs), [], [], "")
        norm = ParamPoly.const(H.order, -1)
        for i, c in unit.items():
            norm = norm + values[i] * c
        st.extra.append(norm)
        st.trace.append("normalization lam(1) = 1")
        return st

    stack = []
    if subgroup_branching:
        gs = _analyze_grouplikes(H)
        _check_grouplike_consequences(H, gs)
        for mask, d in zip(gs.subgroup_masks, gs.subgroup_divisors):
            st = fresh()
            st.label = "support=<gen^%d>" % d
            st.trace.append("group-like support branch <gen^%d>" % d)
            for a, vec in enumerate(gs.vectors):
                form = ParamPoly.zero(H.order)
                for i, c in vec.items():
                    form = form + st.values[i] * c
                if (mask >> a) & 1:
                    form = form - ParamPoly.one(H.order)
                st.extra.append(form)
            stack.append(st)
    else:
        stack.append(fresh())

    solutions = []
    seen = set()
    explored = 0
    while stack:
        explored += 1
        if explored > branch_limit:
            raise BranchLimitExceeded("more than %d branches" % branch_limit)
        st = stack.pop()
        out = _propagate(H, st)
        if out[0] == "contradiction":
            st.trace.append("contradiction: %s" % out[1])
            continue
        if out[0] == "stuck":
            raise ClassificationError(
                "solver stuck on %s (%s): %s"
                % (H.name, st.label, "; ".join(out[1])))
        if out[0] == "split":
            _, var, cof = out
            zero_side = _State(list(st.values), list(st.pending),
                               list(st.extra), list(st.trace), st.label)
            _substitute(zero_side, var, ParamPoly.zero(H.order),
                        "split, vanishing side")
            other = _State(list(st.values), list(st.pending),
                           list(st.extra) + [cof], list(st.trace), st.label)
            other.trace.append("split, cofactor side: %s = 0" % cof.render("q"))
            stack.append(zero_side)
            stack.append(other)
            continue
        sol = _promote(H, st, "family%d" % (len(solutions) + 1))
        key = tuple(v.render() for v in sol.functional.coords)
        if key in seen:
            continue
        seen.add(key)
        solutions.append(sol)

    for sol in solutions:
        rep = verify_partial_action(H, sol.functional)
        rep.merge(verify_symmetric_action(H, sol.functional))
        if not rep.ok:
            raise ClassificationError(
                "solver emitted an invalid family on %s: %s"
                % (H.name, rep.summary()))

    solutions.sort(key=lambda s: (len(s.params),
                                  tuple(v.render() for v in s.functional.coords)))
    renamed = [SolvedAction("family%d" % (i + 1), s.algebra, s.params,
                            s.functional, s.trace)
               for i, s in enumerate(solutions)]
    return ClassifiedActions(H, tuple(renamed), explored)
