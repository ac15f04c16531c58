"""Command-line front end.

Exit codes: 0 success / verification passed, 1 a verification check failed,
2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as cat
from .exact_matrix import parse_int_matrix
from .lambda_module import ModulePresentation, cyclic_class, fitting_generators, is_trivial
from .laurent import format_poly
from .seifert import SeifertError, alexander_class, knottedness_certificate, validate_seifert

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="knotproj", description="Alexander-module certificates for spun knots.")
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    for name, help_ in (("alex", "canonical Alexander class"), ("cert", "knottedness certificate")):
        s = sub.add_parser(name, parents=[fmt], help=help_)
        s.add_argument("--matrix", required=True, help='Seifert matrix, e.g. "1,1;0,-1" ("" for 0x0)')
        s.add_argument("--q", type=int, default=None, help="middle dimension; knot dimension is 2q-1 (default 3)")

    s = sub.add_parser("module", parents=[fmt], help="triviality of a square Lambda-module presentation")
    s.add_argument("--presentation", required=True, help='e.g. "t-1" or "t-1,t;-1,-t+1"')

    s = sub.add_parser("catalog", parents=[fmt], help="list the catalogued constructions")
    s.add_argument("action", choices=("list",))
    s.add_argument("--n", type=int, default=None, help="spin every entry up to this dimension")

    s = sub.add_parser("verify", parents=[fmt], help="run a theorem verification")
    s.add_argument("--theorem", type=int, choices=(1, 2, 3), required=True)
    s.add_argument("--n", type=int, default=None)
    return p


def _seifert(args):
    if args.q is None:
        if args.format == "json":
            raise UsageError("--q is required with --format json")
        args.q = 3
    try:
        A = parse_int_matrix(args.matrix)
        return validate_seifert(A, args.q)
    except (ValueError, SeifertError) as exc:
        raise UsageError(str(exc)) from None


def cmd_alex(args, out):
    S = _seifert(args)
    cls = alexander_class(S)
    if args.format == "json":
        out.write(json.dumps({"q": S.q, "alexander_class": str(cls)}) + "\n")
    else:
        out.write(f"{cls}\n")
    return EXIT_OK


def cmd_cert(args, out):
    S = _seifert(args)
    cert = knottedness_certificate(S)
    if args.format == "json":
        payload = {"verdict": cert.verdict.value, "evidence": str(cert.evidence), "narrative": cert.narrative}
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(f"{cert.verdict.value}\nevidence: {cert.evidence}\n{cert.narrative}\n")
    return EXIT_OK


def cmd_module(args, out):
    try:
        M = ModulePresentation.parse(args.presentation)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    trivial = is_trivial(M)
    gen = fitting_generators(M, 0)[0] if M.size else None
    cls = cyclic_class(M)
    if args.format == "json":
        out.write(
            json.dumps(
                {
                    "trivial": trivial,
                    "fitting0": format_poly(gen) if gen is not None else "1",
                    "order_class": str(cls),
                }
            )
            + "\n"
        )
    else:
        out.write(f"{'trivial' if trivial else 'nontrivial'}\n")
        out.write(f"Fitting_0 generator: {format_poly(gen) if gen is not None else '1'}\n")
    return EXIT_OK


def cmd_catalog(args, out):
    entries = cat.catalog(args.n)
    if args.format == "json":
        out.write(json.dumps([cat.descriptor_to_dict(K) for K in entries], sort_keys=True, indent=2) + "\n")
        return EXIT_OK
    for K in entries:
        try:
            alg = str(K.alexander())
        except cat.NoAlgebraicData:
            alg = "-"
        out.write(
            f"{K.name}: n={K.n} mu={K.mu} singular={K.singular_kind.value} "
            f"underlying={K.underlying.value} class={alg}\n"
        )
        for key, note in K.provenance:
            out.write(f"    {key}: {note}\n")
    return EXIT_OK


def cmd_verify(args, out):
    if args.theorem == 2 and args.n is not None:
        raise UsageError("theorem 2 is checked at the base dimension; --n is not accepted")
    if args.n is not None and args.n < 5:
        raise UsageError(f"--n must be at least 5, got {args.n}")
    report = cat.verify(args.theorem, args.n)
    if args.format == "json":
        out.write(json.dumps(report.to_dict(), indent=2) + "\n")
    else:
        out.write(report.to_text() + "\n")
    return EXIT_OK if report.overall else EXIT_FAIL


COMMANDS = {
    "alex": cmd_alex,
    "cert": cmd_cert,
    "module": cmd_module,
    "catalog": cmd_catalog,
    "verify": cmd_verify,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"knotproj {args.command}: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
