"""Deterministic command-line front end.

Subcommands: schur, semisimple, defect0, avalue, basicset, basicset-gpn,
verify.  Multipartitions are written as JSON arrays of arrays, e.g.
``[[2],[],[1,1]]``; rationals print as ``a/b`` in lowest terms.

Exit codes: 0 success, 1 computation-precondition failure, 2 parse or
flag failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .basicset import assemble_basic_set, assemble_basic_set_gpn
from .combinatorics import (
    ChargeData,
    Multipartition,
    a_value_combinatorial,
    a_value_hook_formula,
    enumerate_multipartitions,
    multipartition_from_obj,
    multipartition_to_json,
    multipartition_to_obj,
)
from .errors import DomainError, InexactDivisionError
from .schur import (
    CycloSpec,
    a_value_via_valuation,
    ariki_poly,
    is_defect_zero,
    is_semisimple,
    schur_cancellation_free,
    schur_gim,
    schur_mathas,
    spec_map_for,
)
from .exactalg import specialise
from .verify import SUITES, run_suites


class FlagError(Exception):
    """A structurally invalid flag combination (exit code 2)."""


def _lambda_arg(text: str) -> Multipartition:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise argparse.ArgumentTypeError(f"bad multipartition literal: {exc}")
    try:
        return multipartition_from_obj(obj)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _int_list_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {exc}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ariki",
        description="Exact Schur elements, a-values and canonical basic sets "
        "for Ariki-Koike algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", help="evaluate a Schur element")
    p.add_argument("--lambda", dest="lam", type=_lambda_arg, required=True)
    p.add_argument("--formula", choices=["cancel", "mathas", "gim", "all"], default="cancel")
    p.add_argument("--symbol-size", type=int, default=None, help="L for the gim formula")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("semisimple", help="semisimplicity of a specialised algebra")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--charges", type=_int_list_arg, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("defect0", help="defect-0 classification")
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--v", type=_int_list_arg, required=True)
    p.add_argument("--lambda", dest="lam", type=_lambda_arg, default=None)
    p.add_argument("--all", action="store_true", help="classify every multipartition of rank n")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("avalue", help="a-value by one or all three routes")
    p.add_argument("--lambda", dest="lam", type=_lambda_arg, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--charges", type=_int_list_arg, required=True)
    p.add_argument("--method", choices=["combinatorial", "hooks", "valuation", "all"], default="all")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("basicset", help="canonical basic set for G(l,1,n)")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--charges", type=_int_list_arg, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("basicset-gpn", help="orbit-labelled basic set for G(l,p,n)")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--charges", type=_int_list_arg, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument(
        "--suite",
        action="append",
        choices=sorted(SUITES) + ["all"],
        default=None,
        help="may be given repeatedly; defaults to all",
    )
    p.add_argument("--max-l", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _cmd_schur(args) -> int:
    lam = args.lam
    L = args.symbol_size
    values = {}
    if args.formula in ("cancel", "all"):
        values["cancel"] = schur_cancellation_free(lam)
    if args.formula in ("mathas", "all"):
        values["mathas"] = schur_mathas(lam)
    if args.formula in ("gim", "all"):
        values["gim"] = schur_gim(lam, L if L is not None else lam.length)
    rendered = {name: v.render() for name, v in values.items()}
    if args.formula != "all":
        if args.json:
            print(json.dumps({"value": rendered[args.formula]}))
        else:
            print(rendered[args.formula])
        return 0
    agree = len({r for r in rendered.values()}) == 1
    if args.json:
        print(json.dumps({**rendered, "agree": agree}))
    else:
        for name in ("cancel", "mathas", "gim"):
            print(f"{name}: {rendered[name]}")
        print("AGREE" if agree else "DISAGREE")
    return 0 if agree else 1


def _cmd_semisimple(args) -> int:
    if len(args.charges) != args.l:
        raise FlagError(f"expected {args.l} charges, got {len(args.charges)}")
    spec = CycloSpec(args.e, args.k, args.r, args.charges)
    verdict = is_semisimple(spec, args.l, args.n)
    theta_p = specialise(ariki_poly(args.l, args.n), spec_map_for(spec, args.l))
    text = "SEMISIMPLE" if verdict else "NOT SEMISIMPLE"
    if args.json:
        print(json.dumps({"verdict": text, "thetaP": theta_p.render(), "conductor": theta_p.n}))
    else:
        print(text)
    return 0


def _cmd_defect0(args) -> int:
    v = args.v
    if args.all == (args.lam is not None):
        raise FlagError("exactly one of --lambda and --all is required")
    if args.lam is not None:
        lam = args.lam
        if args.l is not None and args.l != lam.level:
            raise FlagError(f"--l {args.l} contradicts a level-{lam.level} multipartition")
        if len(v) != lam.level:
            raise FlagError(f"expected {lam.level} charges in --v, got {len(v)}")
        verdict = is_defect_zero(lam, args.e, v)
        if args.json:
            print(json.dumps({"defect0": verdict}))
        else:
            print("DEFECT0" if verdict else "NOT DEFECT0")
        return 0
    l = args.l if args.l is not None else len(v)
    if len(v) != l:
        raise FlagError(f"expected {l} charges in --v, got {len(v)}")
    if args.n is None:
        raise FlagError("--all requires --n")
    hits = [
        lam
        for lam in enumerate_multipartitions(l, args.n)
        if is_defect_zero(lam, args.e, v)
    ]
    if args.json:
        print(json.dumps({"elements": [multipartition_to_obj(x) for x in hits]}))
    else:
        for x in hits:
            print(multipartition_to_json(x))
    return 0


def _cmd_avalue(args) -> int:
    lam = args.lam
    if len(args.charges) != lam.level:
        raise FlagError(f"expected {lam.level} charges, got {len(args.charges)}")
    charge = ChargeData(args.r, args.charges)
    routes = {
        "combinatorial": lambda: a_value_combinatorial(lam, charge),
        "hooks": lambda: a_value_hook_formula(lam, charge),
        "valuation": lambda: Fraction(a_value_via_valuation(lam, charge)),
    }
    if args.method != "all":
        value = routes[args.method]()
        if args.json:
            print(json.dumps({"value": str(value)}))
        else:
            print(value)
        return 0
    values = {name: fn() for name, fn in routes.items()}
    agree = len(set(values.values())) == 1
    if args.json:
        print(json.dumps({**{k: str(v) for k, v in values.items()}, "agree": agree}))
    else:
        for name in ("combinatorial", "hooks", "valuation"):
            print(f"{name}: {values[name]}")
        print("AGREE" if agree else "DISAGREE")
    return 0 if agree else 1


def _params_obj(spec: CycloSpec, l: int, n: int, p: int | None = None) -> dict:
    obj = {"l": l, "n": n, "e": spec.e, "k": spec.k, "r": spec.r, "charges": list(spec.charges)}
    if p is not None:
        obj["p"] = p
    return obj


def _cmd_basicset(args) -> int:
    if len(args.charges) != args.l:
        raise FlagError(f"expected {args.l} charges, got {len(args.charges)}")
    spec = CycloSpec(args.e, args.k, args.r, args.charges)
    bs = assemble_basic_set(spec, args.l, args.n)
    for diag in bs.diagnostics:
        print(f"warning: {diag}", file=sys.stderr)
    if args.json:
        print(
            json.dumps(
                {
                    "params": _params_obj(spec, args.l, args.n),
                    "elements": [multipartition_to_obj(x) for x in bs.elements],
                }
            )
        )
    else:
        for x in bs.elements:
            print(multipartition_to_json(x))
    return 0


def _cmd_basicset_gpn(args) -> int:
    d = args.l // args.p if args.p and args.l % args.p == 0 else None
    if d is not None and len(args.charges) not in (d, args.l):
        raise FlagError(f"expected {d} or {args.l} charges, got {len(args.charges)}")
    spec = CycloSpec(args.e, args.k, args.r, args.charges)
    orbits = assemble_basic_set_gpn(spec, args.l, args.p, args.n)
    if args.json:
        print(
            json.dumps(
                {
                    "orbits": [
                        {
                            "representative": multipartition_to_obj(o.representative),
                            "orbitSize": o.orbit_size,
                            "stabilizerSize": o.stabilizer_size,
                        }
                        for o in orbits
                    ]
                }
            )
        )
    else:
        for o in orbits:
            labels = " ".join(o.labels)
            print(
                f"{multipartition_to_json(o.representative)} "
                f"orbitSize={o.orbit_size} stabilizerSize={o.stabilizer_size} labels={labels}"
            )
    return 0


def _cmd_verify(args) -> int:
    names = args.suite or ["all"]
    results = run_suites(names, max_l=args.max_l, max_n=args.max_n, jobs=args.jobs)
    for res in results:
        print(res.line())
    return 0 if all(r.passed for r in results) else 1


_HANDLERS = {
    "schur": _cmd_schur,
    "semisimple": _cmd_semisimple,
    "defect0": _cmd_defect0,
    "avalue": _cmd_avalue,
    "basicset": _cmd_basicset,
    "basicset-gpn": _cmd_basicset_gpn,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except FlagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InexactDivisionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
