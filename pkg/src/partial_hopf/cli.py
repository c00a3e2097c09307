"""Command-line interface.

Subcommands:
  validate    structure checks for the built-in Hopf algebras
  actions     closed partial-action families, verified symbolically
  coactions   closed partial-coaction families, verified symbolically
  classify    re-derive the action families by constraint propagation
  identities  q-binomial and root-of-unity identity sweeps
  duality     dual-basis isomorphisms and transport of actions to coactions
  export      write a built-in algebra in the JSON interchange format
  import      read a JSON algebra back and validate it

Exit status is 0 when every check passes, 1 when a mathematical check
fails, and 2 for usage or input errors.  `--output json` emits one stable
JSON document on stdout instead of the text report.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from multiprocessing import Pool

from .algebras import (
    InvalidOrder, dual_group_algebra_cyclic, group_algebra_cyclic, nichols,
    taft,
)
from .classify import ClassificationError, classify_base_field_actions
from .duality import (
    check_character_sum, compose, is_identity, nichols_from_dual,
    nichols_to_dual, taft_from_dual, taft_to_dual, transport,
    verify_hopf_morphism,
)
from .exact_arith import CycNumber, Rational, divisors, zeta_pow
from .families import (
    NotADivisor, dual_group_action_families, group_action_families,
    nichols_action_families, nichols_coaction_families,
    nichols_counit_action, nichols_global_coaction,
    nichols_parametric_action, nichols_parametric_coaction,
    taft_action_families, taft_coaction_families, taft_parametric_action,
    taft_parametric_coaction, taft_subgroup_action, taft_subgroup_coaction,
    verify_partial_action, verify_partial_coaction, verify_symmetric_action,
    verify_symmetric_coaction,
)
from .hopf_core import (
    HopfFormatError, HopfValidationError, from_json_dict, to_json_dict,
    validate_all,
)
from .qcomb import PASCAL_VARIANTS, check_identity, check_pascal, generic_q
from .reference_tables import reference_checks

_BUILDERS = {
    "taft": taft,
    "nichols": nichols,
    "group": group_algebra_cyclic,
    "dualgroup": dual_group_algebra_cyclic,
}

_VALIDATE_RANGE = {
    "taft": (2, 8), "nichols": (2, 6), "group": (1, 12), "dualgroup": (1, 12),
}
_FAMILY_RANGE = {
    "taft": (2, 6), "nichols": (2, 5), "group": (1, 12), "dualgroup": (1, 12),
}
_CLASSIFY_RANGE = {
    "taft": (2, 8), "nichols": (2, 5), "group": (1, 12), "dualgroup": (1, 12),
}
_DUALITY_RANGE = {"taft": (2, 6), "nichols": (2, 5)}

_ACTION_LISTS = {
    "taft": taft_action_families,
    "nichols": nichols_action_families,
    "group": group_action_families,
    "dualgroup": dual_group_action_families,
}
_COACTION_LISTS = {
    "taft": taft_coaction_families,
    "nichols": nichols_coaction_families,
}


def _orders(args, ranges) -> list:
    lo, hi = ranges[args.algebra]
    if args.n is not None:
        return [args.n]
    if args.max is not None:
        hi = args.max
    if hi < lo:
        raise InvalidOrder("--max %d is below the smallest order %d for %s"
                           % (hi, lo, args.algebra))
    return list(range(lo, hi + 1))


def _values(coords, basis) -> dict:
    out = {}
    for label, c in zip(basis, coords):
        if not c.is_zero():
            out[label] = c.render("q")
    return out


def _emit(args, doc, lines) -> int:
    if args.output == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return 0 if doc["ok"] else 1


def cmd_validate(args) -> int:
    build = _BUILDERS[args.algebra]
    results, lines, ok = [], [], True
    for n in _orders(args, _VALIDATE_RANGE):
        H = build(n)
        rep = validate_all(H)
        ok = ok and rep.ok
        results.append({"algebra": args.algebra, "n": n, "dim": H.dim,
                        "ok": rep.ok, "checks": rep.checks_run,
                        "failures": [str(f) for f in rep.failures]})
        lines.append(rep.summary())
    doc = {"command": "validate", "ok": ok, "results": results}
    return _emit(args, doc, lines)


def _reference_section(results, lines) -> bool:
    ok = True
    for name, diffs in reference_checks():
        results.append({"table": name, "mismatches": diffs})
        if diffs:
            ok = False
            lines.append("reference table %s: MISMATCH" % name)
            lines.extend("  " + d for d in diffs)
        else:
            lines.append("reference table %s: match" % name)
    return ok


def cmd_actions(args) -> int:
    listing = _ACTION_LISTS[args.algebra]
    results, lines, ok = [], [], True
    for n in _orders(args, _FAMILY_RANGE):
        fams = listing(n)
        lines.append("%s(%d): %d action families" % (args.algebra, n,
                                                     len(fams)))
        for fam in fams:
            H = fam.algebra
            rep = verify_partial_action(H, fam.functional)
            srep = verify_symmetric_action(H, fam.functional)
            good = rep.ok and srep.ok
            ok = ok and good
            vals = _values(fam.functional.coords, H.basis)
            results.append({
                "algebra": args.algebra, "n": n, "family": fam.name,
                "params": list(fam.params), "values": vals, "verified": good,
                "checks": rep.checks_run + srep.checks_run,
            })
            lines.append("  %s [params: %s] %s" % (
                fam.name, ", ".join(fam.params) or "none",
                "ok" if good else "FAILED"))
            for f in rep.failures + srep.failures:
                lines.append("    " + str(f))
            for label, expr in vals.items():
                lines.append("    %s: %s" % (label, expr))
    doc = {"command": "actions", "ok": ok, "results": results}
    if args.paper_examples:
        refs = []
        doc["reference_tables"] = refs
        doc["ok"] = _reference_section(refs, lines) and doc["ok"]
    return _emit(args, doc, lines)


def cmd_coactions(args) -> int:
    listing = _COACTION_LISTS[args.algebra]
    results, lines, ok = [], [], True
    for n in _orders(args, _FAMILY_RANGE):
        fams = listing(n)
        lines.append("%s(%d): %d coaction families" % (args.algebra, n,
                                                       len(fams)))
        for fam in fams:
            H = fam.algebra
            rep = verify_partial_coaction(H, fam.element)
            srep = verify_symmetric_coaction(H, fam.element)
            good = rep.ok and srep.ok
            ok = ok and good
            vals = _values(fam.element.coords, H.basis)
            results.append({
                "algebra": args.algebra, "n": n, "family": fam.name,
                "params": list(fam.params), "values": vals, "verified": good,
                "checks": rep.checks_run + srep.checks_run,
            })
            lines.append("  %s [params: %s] %s" % (
                fam.name, ", ".join(fam.params) or "none",
                "ok" if good else "FAILED"))
            for f in rep.failures + srep.failures:
                lines.append("    " + str(f))
            for label, expr in vals.items():
                lines.append("    %s: %s" % (label, expr))
    doc = {"command": "coactions", "ok": ok, "results": results}
    if args.paper_examples:
        refs = []
        doc["reference_tables"] = refs
        doc["ok"] = _reference_section(refs, lines) and doc["ok"]
    return _emit(args, doc, lines)


def cmd_classify(args) -> int:
    build = _BUILDERS[args.algebra]
    results, lines, ok = [], [], True
    for n in _orders(args, _CLASSIFY_RANGE):
        H = build(n)
        out = classify_base_field_actions(H)
        lines.append("%s(%d): %d families in %d branches (exhaustive)"
                     % (args.algebra, n, len(out.families),
                        out.branches_explored))
        fams = []
        for fam in out.families:
            vals = _values(fam.functional.coords, H.basis)
            fams.append({"family": fam.name, "params": list(fam.params),
                         "values": vals, "trace": list(fam.trace)})
            lines.append("  %s [params: %s]" % (
                fam.name, ", ".join(fam.params) or "none"))
            for label, expr in vals.items():
                lines.append("    %s: %s" % (label, expr))
            lines.append("    trace:")
            for step in fam.trace:
                lines.append("      " + step)
        results.append({"algebra": args.algebra, "n": n,
                        "branches": out.branches_explored,
                        "exhaustive": True, "families": fams})
    doc = {"command": "classify", "ok": ok, "results": results}
    return _emit(args, doc, lines)


def _taft_transport_pairs(n):
    pairs = []
    for k in divisors(n):
        if k < n:
            pairs.append((taft_subgroup_action(n, k),
                          taft_subgroup_coaction(n, n // k)))
    pairs.append((taft_parametric_action(n), taft_parametric_coaction(n)))
    return pairs


def _nichols_transport_pairs(n):
    return [(nichols_counit_action(n), nichols_global_coaction(n)),
            (nichols_parametric_action(n), nichols_parametric_coaction(n))]


def cmd_duality(args) -> int:
    results, lines, ok = [], [], True
    for n in _orders(args, _DUALITY_RANGE):
        if args.algebra == "taft":
            iso, inv = taft_to_dual(n), taft_from_dual(n)
            pairs = _taft_transport_pairs(n)
        else:
            iso, inv = nichols_to_dual(n), nichols_from_dual(n)
            pairs = _nichols_transport_pairs(n)
        lines.append("%s(%d):" % (args.algebra, n))
        checks = []
        for tag, phi in (("to-dual morphism", iso), ("from-dual morphism",
                                                     inv)):
            rep = verify_hopf_morphism(phi)
            ok = ok and rep.ok
            checks.append({"check": tag, "ok": rep.ok,
                           "failures": [str(f) for f in rep.failures]})
            lines.append("  %s: %s (%d checks)" % (
                tag, "ok" if rep.ok else "FAILED", rep.checks_run))
        round_trip = (is_identity(compose(inv, iso))
                      and is_identity(compose(iso, inv)))
        ok = ok and round_trip
        checks.append({"check": "round trip identity", "ok": round_trip})
        lines.append("  round trip identity: %s"
                     % ("ok" if round_trip else "FAILED"))
        for act, expected in pairs:
            z = transport(act, inv)
            match = z.element.coords == expected.element.coords
            ok = ok and match
            vals = _values(z.element.coords, z.algebra.basis)
            checks.append({"check": "transport %s -> %s"
                           % (act.name, expected.name), "ok": match,
                           "values": vals})
            lines.append("  phi(%s) -> %s: %s"
                         % (act.name, expected.name,
                            "match" if match else "MISMATCH"))
            for label, expr in vals.items():
                lines.append("    %s: %s" % (label, expr))
        results.append({"algebra": args.algebra, "n": n, "checks": checks})
    doc = {"command": "duality", "ok": ok, "results": results}
    return _emit(args, doc, lines)


def _build_q(qspec):
    if qspec[0] == "generic":
        return generic_q()
    if qspec[0] == "rat":
        return CycNumber.from_rational(1, Rational(qspec[1], qspec[2]))
    return zeta_pow(qspec[1], 1)


def _run_identity_item(item):
    kind = item[0]
    if kind == "pascal":
        _, variant, i, s, qspec = item
        v = check_pascal(variant, i, s, _build_q(qspec))
    elif kind == "identity":
        _, name, indices, qspec = item
        v = check_identity(name, indices, _build_q(qspec))
    else:
        _, n, k, l = item
        v = check_character_sum(n, k, l)
    return (v.name, v.ok, "" if v.ok else str(v))


def identity_sweep_items(max_index: int, root_cap: int) -> list:
    """Deterministic work list for the identity sweep.

    Items are plain tuples so they cross process boundaries; the scalar
    for each instance is rebuilt inside the worker from its description.
    """
    qspecs = [("generic",), ("rat", 2, 1), ("rat", 3, 1), ("rat", 5, 7)]
    qspecs += [("zeta", m) for m in range(2, root_cap + 1)]
    items = []
    for qspec in qspecs:
        for variant in PASCAL_VARIANTS:
            for i in range(1, max_index + 5):
                for s in range(-2, max_index + 7):
                    items.append(("pascal", variant, i, s, qspec))
        bound = max_index + 1
        for i in range(bound):
            for t in range(bound):
                for k in range(bound):
                    items.append(("identity", "alternating_vandermonde",
                                  (i, t, k), qspec))
        for j in range(max_index + 3):
            for i in range(j + 1):
                for l in range(i + 1):
                    items.append(("identity", "trinomial_revision",
                                  (j, i, l), qspec))
        for i in range(max_index):
            for j in range(max_index):
                for t in range(max_index):
                    for s in range(max_index):
                        items.append(("identity", "four_index_inversion",
                                      (i, j, t, s), qspec))
        for j in range(max_index):
            for t in range(max_index):
                for s in range(max_index):
                    items.append(("identity", "binomial_inversion",
                                  (j, t, s), qspec))
    for m in range(1, 2 * max_index + 1):
        for k in divisors(m):
            items.append(("charsum", m, k, m // k))
    return items


def run_identity_sweep(max_index: int, root_cap: int, jobs: int):
    """Run the sweep, returning (per-suite counts, failure strings)."""
    items = identity_sweep_items(max_index, root_cap)
    if jobs > 1:
        with Pool(processes=jobs) as pool:
            outcomes = pool.map(_run_identity_item, items,
                                chunksize=max(1, len(items) // (8 * jobs)))
    else:
        outcomes = [_run_identity_item(item) for item in items]
    counts: dict = {}
    failures = []
    for name, good, detail in outcomes:
        total, bad = counts.get(name, (0, 0))
        counts[name] = (total + 1, bad + (0 if good else 1))
        if not good:
            failures.append(detail)
    return counts, failures


def cmd_identities(args) -> int:
    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get("PARTIAL_HOPF_JOBS", "1"))
    max_index = args.max if args.max is not None else 6
    root_cap = args.n if args.n is not None else 8
    counts, failures = run_identity_sweep(max_index, root_cap, jobs)
    results, lines = [], []
    for name in sorted(counts):
        total, bad = counts[name]
        results.append({"suite": name, "instances": total, "failed": bad})
        lines.append("%s: %d instances %s"
                     % (name, total, "ok" if bad == 0 else "%d FAILED" % bad))
    ok = not failures
    lines.extend("  " + f for f in failures[:50])
    grand = sum(t for t, _ in counts.values())
    lines.append("%s (%d instances, %d q-specs)"
                 % ("all identity suites pass" if ok
                    else "identity sweep FAILED", grand, 3 + root_cap))
    doc = {"command": "identities", "ok": ok, "results": results,
           "failures": failures}
    return _emit(args, doc, lines)


def cmd_export(args) -> int:
    H = _BUILDERS[args.algebra](args.n)
    text = json.dumps(to_json_dict(H), indent=2, sort_keys=True)
    if args.path in (None, "-"):
        print(text)
    else:
        with open(args.path, "w") as fh:
            fh.write(text + "\n")
    return 0


def cmd_import(args) -> int:
    if args.path == "-":
        data = json.load(sys.stdin)
    else:
        with open(args.path) as fh:
            data = json.load(fh)
    H = from_json_dict(data)
    doc = {"command": "import", "ok": True,
           "results": [{"name": H.name, "dim": H.dim, "order": H.order}]}
    lines = ["%s: dim %d, scalar ring of order %d, valid"
             % (H.name, H.dim, H.order)]
    return _emit(args, doc, lines)


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="partial-hopf",
        description="Exact verification and classification of partial "
                    "(co)actions of finite-dimensional Hopf algebras on "
                    "their base field.")
    sub = p.add_subparsers(dest="command", required=True)

    def algebra_cmd(name, func, helptext, algebras, with_n=True):
        q = sub.add_parser(name, help=helptext)
        q.add_argument("algebra", choices=algebras)
        if with_n:
            q.add_argument("n", type=int, nargs="?", default=None,
                           help="single order (default: a standard sweep)")
            q.add_argument("--max", type=int, default=None,
                           help="upper bound of the sweep when n is omitted")
        q.add_argument("--output", choices=("text", "json"), default="text")
        q.set_defaults(func=func)
        return q

    all_algebras = tuple(_BUILDERS)
    self_dual = ("taft", "nichols")

    algebra_cmd("validate", cmd_validate,
                "run the Hopf axiom checks on built-in algebras",
                all_algebras)
    q = algebra_cmd("actions", cmd_actions,
                    "list and verify the partial-action families",
                    all_algebras)
    q.add_argument("--paper-examples", action="store_true",
                   help="also diff the embedded reference tables")
    q = algebra_cmd("coactions", cmd_coactions,
                    "list and verify the partial-coaction families",
                    self_dual)
    q.add_argument("--paper-examples", action="store_true",
                   help="also diff the embedded reference tables")
    algebra_cmd("classify", cmd_classify,
                "re-derive the action families from the axioms",
                all_algebras)
    algebra_cmd("duality", cmd_duality,
                "verify dual-basis isomorphisms and transport families",
                self_dual)

    q = sub.add_parser("identities",
                       help="sweep the q-binomial and character-sum "
                            "identities")
    q.add_argument("--n", type=int, default=None,
                   help="largest root-of-unity order to test (default 8)")
    q.add_argument("--max", type=int, default=None,
                   help="index bound for the sweeps (default 6)")
    q.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: PARTIAL_HOPF_JOBS or 1)")
    q.add_argument("--output", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_identities)

    q = sub.add_parser("export", help="write an algebra as JSON")
    q.add_argument("algebra", choices=all_algebras)
    q.add_argument("n", type=int)
    q.add_argument("path", nargs="?", default=None,
                   help="output file (default: stdout)")
    q.set_defaults(func=cmd_export)

    q = sub.add_parser("import", help="read and validate a JSON algebra")
    q.add_argument("path", help="input file, or - for stdin")
    q.add_argument("--output", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_import)
    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except (InvalidOrder, NotADivisor, HopfFormatError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print("error: invalid JSON input: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except HopfValidationError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except ClassificationError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
