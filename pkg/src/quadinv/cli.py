"""Command-line boundary: invariants, classification, verification, mining.

Exit codes: 0 on success, 1 when a verdict is negative or a suite fails,
2 on usage or input errors (the diagnostic names the offending field).
All machine output is JSON behind the ``--json`` flag.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cohomology import CohomClass, cohom_from_json, serialize_places
from .composition import algebra_from_json, e_invariant, pfister_form
from .forms import diagonalize, form_from_json, invariants, isometric, total_sw
from .jordan import (
    jordan_from_json,
    jordan_isomorphic,
    trace_form_formula,
    trace_gram_oracle,
    v_invariants_json,
)
from .mine import collision_search
from .suites import run_suite, suite_names, default_params


class InputError(ValueError):
    """A malformed CLI value; carries the field name for the diagnostic."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def _parse_json_arg(field: str, text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(field, f"invalid JSON ({exc.msg})") from exc


def _parse_form(field: str, text: str):
    data = _parse_json_arg(field, text)
    try:
        return form_from_json(data)
    except ValueError as exc:
        raise InputError(field, str(exc)) from exc


def _parse_jordan(field: str, text: str):
    data = _parse_json_arg(field, text)
    try:
        return jordan_from_json(data)
    except ValueError as exc:
        raise InputError(field, str(exc)) from exc


def _parse_mus(field: str, text: str) -> list[int]:
    data = _parse_json_arg(field, text)
    if isinstance(data, dict):
        try:
            return [mu.rep for mu in algebra_from_json(data).slots]
        except ValueError as exc:
            raise InputError(field, str(exc)) from exc
    if not isinstance(data, list) or not all(isinstance(x, int) and x != 0 for x in data):
        raise InputError(field, f"expected a list of nonzero integers, got {data!r}")
    if len(data) > 3:
        raise InputError(field, "at most 3 slots (dimension 8)")
    return data


def _class_text(c: CohomClass) -> str:
    """Compact text for a homogeneous class: a bit, an integer, or places."""
    degrees = c.degrees
    if not degrees:
        return "0"
    d = degrees[0]
    comp = c.component(d)
    if d == 1:
        return str(comp)
    if d == 2:
        return "[" + ",".join(serialize_places(comp)) + "]"
    return "1"


def _emit(args, payload: dict, human: list[str]):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in human:
            print(line)


# -- subcommands ------------------------------------------------------------


def _cmd_sw(args) -> int:
    q = _parse_form("form", args.form)
    sw = total_sw(q)
    payload = {"form": q.to_list(), "w": [c.to_json() for c in sw]}
    human = [f"w{i} = {_class_text(c)}" for i, c in enumerate(sw)]
    _emit(args, payload, human)
    return 0


def _cmd_classify(args) -> int:
    q = _parse_form("form", args.form)
    inv = invariants(q)
    payload = {"form": q.to_list(), "invariants": inv.to_json()}
    human = [
        f"dim = {inv.dim}",
        f"det = {inv.det}",
        f"signature = ({inv.signature[0]},{inv.signature[1]})",
        "hasse = {" + ", ".join(f"{v}: {s:+d}" for v, s in inv.hasse) + "}",
    ]
    code = 0
    if args.form2 is not None:
        q2 = _parse_form("form2", args.form2)
        inv2 = invariants(q2)
        verdict = isometric(q, q2)
        payload["form2"] = q2.to_list()
        payload["invariants2"] = inv2.to_json()
        payload["isometric"] = verdict
        human.append(f"isometric: {'true' if verdict else 'false'}")
        code = 0 if verdict else 1
    _emit(args, payload, human)
    return code


def _cmd_pfister(args) -> int:
    mus = _parse_mus("mus", args.mus)
    q = pfister_form(mus)
    e = e_invariant(mus)
    payload = {"mu": mus, "form": q.to_list(), "e": e.to_json()}
    human = [f"form = {q.to_list()}", f"e = {_class_text(e)}"]
    _emit(args, payload, human)
    return 0


def _cmd_jordan_invariants(args) -> int:
    J = _parse_jordan("jordan", args.jordan)
    tagged = v_invariants_json(J)
    payload = {"jordan": J.to_json(), "v": tagged}
    human = [
        f"v{i} (degree {entry['degree']}) = {_class_text(cohom_from_json(entry['class']))}"
        for i, entry in enumerate(tagged)
    ]
    _emit(args, payload, human)
    return 0


def _cmd_jordan_isomorphic(args) -> int:
    J = _parse_jordan("jordan", args.jordan)
    J2 = _parse_jordan("jordan2", args.jordan2)
    try:
        verdict = jordan_isomorphic(J, J2)
    except ValueError as exc:
        raise InputError("jordan2", str(exc)) from exc
    _emit(
        args,
        {"jordan": J.to_json(), "jordan2": J2.to_json(), "isomorphic": verdict},
        [f"isomorphic: {'true' if verdict else 'false'}"],
    )
    return 0 if verdict else 1


def _cmd_jordan_trace(args) -> int:
    J = _parse_jordan("jordan", args.jordan)
    formula = trace_form_formula(J)
    payload = {"jordan": J.to_json(), "trace_form": formula.to_list()}
    human = [f"trace form = {formula.to_list()}"]
    code = 0
    if args.oracle:
        gram = trace_gram_oracle(J)
        diag = diagonalize(gram)
        agree = isometric(diag, formula)
        payload["oracle_diagonal"] = diag.to_list()
        payload["oracle_agrees"] = agree
        human.append(f"oracle diagonal = {diag.to_list()}")
        human.append(f"oracle agrees: {'true' if agree else 'false'}")
        code = 0 if agree else 1
    _emit(args, payload, human)
    return code


def _cmd_verify(args) -> int:
    if args.all:
        names = suite_names()
    elif args.suite:
        if args.suite not in suite_names():
            raise InputError("suite", f"unknown suite {args.suite!r}; known: {', '.join(suite_names())}")
        names = [args.suite]
    else:
        raise InputError("suite", "name a suite or pass --all")
    reports = []
    worst = 0
    for name in names:
        report = run_suite(name, seed=args.seed)
        reports.append(report)
        status = "PASS" if report.passed else "FAIL"
        if not args.json:
            print(
                f"{status} {name}: {report.cases} cases, "
                f"{len(report.failures)} failures ({report.elapsed:.2f}s)"
            )
            for failure in report.failures[:5]:
                print(f"  failure: {json.dumps(failure, sort_keys=True)}")
        if not report.passed:
            worst = 1
    if args.json:
        print(json.dumps([r.to_json() for r in reports], sort_keys=True))
    return worst


def _cmd_mine(args) -> int:
    try:
        certificates = collision_search(args.r, args.n, args.bound)
    except ValueError as exc:
        raise InputError("mine", str(exc)) from exc
    payload = {
        "r": args.r,
        "n": args.n,
        "bound": args.bound,
        "collisions": [c.to_json() for c in certificates],
    }
    human = [
        f"searched rank {args.r}, degree {args.n}, entry bound {args.bound}: "
        f"{len(certificates)} collision certificate(s)"
    ]
    for c in certificates:
        human.append(json.dumps(c.to_json(), sort_keys=True))
    _emit(args, payload, human)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadinv",
        description="Mod-2 cohomological invariants of forms and Jordan algebras over Q.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sw", help="total Stiefel-Whitney classes of a form")
    p.add_argument("form", help='diagonal form as JSON, e.g. "[-1,-1,-1]"')
    p.set_defaults(fn=_cmd_sw)

    p = sub.add_parser("classify", help="form invariants; isometry with two forms")
    p.add_argument("form")
    p.add_argument("form2", nargs="?", default=None)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("pfister", help="Pfister expansion and its invariant")
    p.add_argument("mus", help='slot list as JSON, e.g. "[-1,-1]"')
    p.set_defaults(fn=_cmd_pfister)

    jordan = sub.add_parser("jordan", help="reduced Jordan algebra operations")
    jsub = jordan.add_subparsers(dest="jordan_command", required=True)

    p = jsub.add_parser("invariants", help="the invariant vector v_0..v_m")
    p.add_argument("jordan", help='e.g. \'{"r":2,"mu":[-1,-1],"q":[1,1,1]}\'')
    p.set_defaults(fn=_cmd_jordan_invariants)

    p = jsub.add_parser("isomorphic", help="decide isomorphism of two algebras")
    p.add_argument("jordan")
    p.add_argument("jordan2")
    p.set_defaults(fn=_cmd_jordan_isomorphic)

    p = jsub.add_parser("trace", help="quadratic trace form (optionally vs the element oracle)")
    p.add_argument("jordan")
    p.add_argument("--oracle", action="store_true", help="cross-check with the Gram oracle")
    p.set_defaults(fn=_cmd_jordan_trace)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", nargs="?", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--all", action="store_true", help="run every suite in the manifest")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("mine", help="exhaustive invariant-collision search")
    p.add_argument("--r", type=int, required=True, help="rank of the coordinate algebra")
    p.add_argument("--n", type=int, required=True, help="odd degree >= 3")
    p.add_argument("--bound", type=int, default=7, help="largest prime allowed in entries")
    p.set_defaults(fn=_cmd_mine)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
