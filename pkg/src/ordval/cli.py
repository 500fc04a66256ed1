"""``ordval`` command line.

Exit codes: 0 success, 1 a check found violations, 2 malformed input,
3 input outside an operation's domain.
"""
from __future__ import annotations

import argparse
import json
import sys

from ._errors import ParseError, PreconditionError
from .classify import classify_report
from .defval import (
    GroupCut, member_As, member_Ds, member_Os, os_violation_witness, phi_holds, phi_witness,
    verify_violation,
)
from .dsl import parse_cut, parse_element, parse_field, parse_group_expr, parse_series_expr
from .groups import (
    find_nondense_witness, g_member, is_closed_in_hull, is_dense_in_hull, is_densely_ordered,
    is_discretely_ordered, is_immediate_in_hull, is_limit_point, is_regular, least_element_above,
)
from .sampling import DEFAULT_SEED
from .series import trunc_inverse, trunc_sqrt

GROUP_PREDICATES = {
    "densely_ordered": is_densely_ordered,
    "discretely_ordered": is_discretely_ordered,
    "regular": is_regular,
    "dense_in_hull": is_dense_in_hull,
    "immediate_in_hull": is_immediate_in_hull,
    "closed_in_hull": is_closed_in_hull,
}
ELEMENT_PREDICATES = {"member": g_member, "limit_point": is_limit_point}
SERIES_PREDICATES = {"phi": None, "in_O": member_Os, "in_D": member_Ds, "in_A": member_As}
WITNESSES = ("nondense", "violation", "phi", "inverse", "sqrt", "least_above")


def _bool(b):
    return "true" if b else "false"


def _emit(pairs, fmt):
    if fmt == "json":
        sys.stdout.write(json.dumps(dict(pairs), indent=2) + "\n")
    else:
        sys.stdout.write("".join(f"{k}: {v}\n" for k, v in pairs))


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise PreconditionError(f"--{n} is required here")


def _context(args):
    _need(args, "coeff", "group")
    return parse_field(args.coeff), parse_group_expr(args.group)


def cmd_classify_group(args):
    report = classify_report(None, parse_group_expr(args.expr), args.prime_bound)
    sys.stdout.write(report.to_json() if args.format == "json" else report.render())
    return 0


def cmd_classify_field(args):
    k, G = _context(args)
    report = classify_report(k, G, args.prime_bound)
    sys.stdout.write(report.to_json() if args.format == "json" else report.render())
    return 0


def cmd_predicate(args):
    name = args.name.replace("-", "_")
    if name in GROUP_PREDICATES:
        _need(args, "group")
        value = GROUP_PREDICATES[name](parse_group_expr(args.group))
    elif name in ELEMENT_PREDICATES:
        _need(args, "group", "at")
        value = ELEMENT_PREDICATES[name](parse_element(args.at), parse_group_expr(args.group))
    elif name in SERIES_PREDICATES:
        k, G = _context(args)
        _need(args, "at")
        x = parse_series_expr(args.at, k, G)
        if name == "phi":
            value = phi_holds(x)
        else:
            _need(args, "cut")
            value = SERIES_PREDICATES[name](x, parse_cut(args.cut, k, G))
    else:
        known = [*GROUP_PREDICATES, *ELEMENT_PREDICATES, *SERIES_PREDICATES]
        raise PreconditionError(f"unknown predicate {args.name!r}; choose from {', '.join(known)}")
    _emit([(name, _bool(value))], args.format)
    return 0


def cmd_witness(args):
    kind = args.kind.replace("-", "_")
    if kind == "nondense":
        _need(args, "group")
        _emit([("g0", str(find_nondense_witness(parse_group_expr(args.group))))], args.format)
        return 0
    if kind == "least_above":
        _need(args, "group", "at")
        g = least_element_above(parse_group_expr(args.group), parse_element(args.at))
        if g is None:
            raise PreconditionError(f"no least element above {args.at}")
        _emit([("least_above", str(g))], args.format)
        return 0
    k, G = _context(args)
    _need(args, "at")
    x = parse_series_expr(args.at, k, G)
    if kind == "violation":
        _need(args, "cut")
        cut = parse_cut(args.cut, k, G)
        w = os_violation_witness(x, cut)
        pairs = [("cut", str(cut)), ("multiplier", str(w.multiplier))]
        if not isinstance(cut, GroupCut):
            pairs.append(("shift", str(w.shift)))
        pairs.append(("verified", _bool(verify_violation(x, cut, w))))
    elif kind in ("phi", "inverse", "sqrt"):
        fn = {"phi": phi_witness, "inverse": trunc_inverse, "sqrt": trunc_sqrt}[kind]
        r = fn(x, args.terms)
        pairs = [("terms", str(r.terms)), ("guarantee", str(r.guarantee)),
                 ("remainder_above", str(r.remainder_bound))]
    else:
        raise PreconditionError(f"unknown witness {args.kind!r}; choose from {', '.join(WITNESSES)}")
    _emit(pairs, args.format)
    return 0


def cmd_check(args):
    from .checks import run_suite
    res = run_suite(args.suite, args.trials, args.seed)
    if args.format == "json":
        sys.stdout.write(json.dumps({"suite": res.name, "trials": res.trials, "seed": res.seed,
                                     "checks": res.checks, "violations": res.violations}, indent=2) + "\n")
    else:
        sys.stdout.write(res.render())
    return 0 if res.ok else 1


def cmd_parse(args):
    kind = args.kind
    if kind == "group":
        out = str(parse_group_expr(args.expr))
    elif kind == "element":
        out = str(parse_element(args.expr))
    elif kind == "field":
        out = str(parse_field(args.expr))
    elif kind == "series":
        k, G = _context(args)
        out = str(parse_series_expr(args.expr, k, G))
    else:
        k, G = _context(args)
        out = str(parse_cut(args.expr, k, G))
    _emit([(kind, out)], args.format)
    return 0


def _seed(text):
    return int(text, 0)


def build_parser():
    p = argparse.ArgumentParser(prog="ordval", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--coeff", help="coefficient field: Q, Q(sqrt(d)), RC(...)")
        sp.add_argument("--group", help="group expression")
        sp.add_argument("--at", help="element or series literal")
        sp.add_argument("--cut", help="discrete, group-limit, residue[(d)], sqrt(d) or an element")
        sp.add_argument("--prime-bound", type=int, default=50)
        sp.add_argument("--terms", type=int, default=3, help="terms for truncated expansions")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("classify-group", help="classification report for a group")
    sp.add_argument("expr")
    common(sp)
    sp.set_defaults(fn=cmd_classify_group)

    sp = sub.add_parser("classify-field", help="classification report for k<<G>>")
    common(sp)
    sp.set_defaults(fn=cmd_classify_field)

    sp = sub.add_parser("predicate", help="evaluate a named predicate")
    sp.add_argument("name")
    common(sp)
    sp.set_defaults(fn=cmd_predicate)

    sp = sub.add_parser("witness", help="construct and verify a witness")
    sp.add_argument("kind", help=", ".join(WITNESSES))
    common(sp)
    sp.set_defaults(fn=cmd_witness)

    sp = sub.add_parser("check", help="run a seeded property suite")
    sp.add_argument("--suite", required=True)
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=_seed, default=None,
                    help=f"defaults to $ORDVAL_SEED, else {DEFAULT_SEED:#x}")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("parse", help="parse and print in canonical form")
    sp.add_argument("expr")
    sp.add_argument("--kind", choices=("group", "element", "field", "series", "cut"), default="group")
    common(sp)
    sp.set_defaults(fn=cmd_parse)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.fn(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except PreconditionError as e:
        print(f"unsupported input: {e}", file=sys.stderr)
        return 3
    except (ZeroDivisionError, ValueError) as e:
        print(f"unsupported input: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
