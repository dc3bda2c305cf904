"""Command-line interface: ``python -m cyclic_covers <subcommand> ...``.

The JSON result goes to standard output and a one-line summary to standard
error.  Exit status 0 means every checked property held, 2 means a
falsification was found, and 1 is any operational error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .census import census, report_json
from .cover import cyclic_cover, deck_transform
from .equiv import DEFAULT_CAP, equivalent_bruteforce, equivalent_structured, invariants
from .errors import CoverError, Falsification, NoRootOfUnity
from .fields import parse_field
from .galois import enumerate_galois, structure_normalize
from .hypersurface import DEFAULT_POINT_CAP, Hypersurface, smoothness_certificate
from .poly import parse
from .projlin import ProjectivePoint
from .recovery import recover_branch

_VAR = re.compile(r"x(\d+)")


def _nvars(text: str, given: int | None) -> int:
    if given is not None:
        return given
    found = [int(m) for m in _VAR.findall(text)]
    return max(found) + 1 if found else 1


def _read_poly(args, text_attr="poly", file_attr="poly_file"):
    text = getattr(args, text_attr, None)
    path = getattr(args, file_attr, None)
    if path:
        with open(path, encoding="utf-8") as fh:
            text = fh.read().strip()
    if not text:
        raise SystemExit(f"--{text_attr.replace('_', '-')} or --{file_attr.replace('_', '-')} is required")
    return text


def _hypersurface(args, field, text):
    F = parse(text, _nvars(text, args.nvars), field)
    return Hypersurface(F, allow_char_dividing_degree=getattr(args, "allow_char_dividing_degree", False))


def cmd_parse(args, field):
    text = _read_poly(args)
    F = parse(text, _nvars(text, args.nvars), field)
    out = {"poly": F.to_text(), "nvars": F.nvars, "degree": F.degree, "field": field.spec_text()}
    if not F.is_zero() and field.is_finite:
        X = Hypersurface(F, allow_char_dividing_degree=True)
        out["canonical"] = X.equation.to_text()
        out["smoothness"] = smoothness_certificate(X, args.k_max, args.cap).to_json()
    return out, f"parsed degree {F.degree} form in {F.nvars} variables", 0


def cmd_cover(args, field):
    Y = _hypersurface(args, field, _read_poly(args))
    C = cyclic_cover(Y)
    out = {"cover_poly": C.equation.to_text(), "new_var": f"x{C.nvars - 1}"}
    try:
        out["deck"] = deck_transform(C).to_json()
    except NoRootOfUnity as exc:
        out["unavailable_reason"] = str(exc)
    return out, f"cover {C}", 0


def cmd_galois(args, field):
    X = _hypersurface(args, field, _read_poly(args))
    report = enumerate_galois(X, args.ext_max, args.cap)
    code = 0 if report.bound_respected else 2
    return report.to_json(), f"{report.delta_lower_bound} outer Galois point(s), bound {report.bound}", code


def cmd_normalize(args, field):
    X = _hypersurface(args, field, _read_poly(args))
    points = enumerate_galois(X, 1, args.cap).rational_points()
    if not points:
        return {"error": "no rational outer Galois point; nothing to normalise"}, "no Galois point", 1
    form = structure_normalize(X, points)
    return form.to_json(), f"r = {form.r}", 0


def cmd_recover(args, field):
    H = _hypersurface(args, field, _read_poly(args))
    hint = ProjectivePoint.parse(field, args.hint) if args.hint else None
    rec = recover_branch(H, hint=hint, ext_max=args.ext_max, cap=args.cap)
    return rec.to_json(), f"branch {rec.branch}", 0


def cmd_equiv(args, field):
    t1 = _read_poly(args, "poly1", "poly1_file")
    t2 = _read_poly(args, "poly2", "poly2_file")
    n = args.nvars if args.nvars is not None else max(_nvars(t1, None), _nvars(t2, None))
    flag = args.allow_char_dividing_degree
    X1 = Hypersurface(parse(t1, n, field), allow_char_dividing_degree=flag)
    X2 = Hypersurface(parse(t2, n, field), allow_char_dividing_degree=flag)
    if args.mode == "brute":
        T = equivalent_bruteforce(X1, X2, args.cap)
        out = {
            "verdict": "equivalent" if T is not None else "inequivalent",
            "witness": T.to_json() if T is not None else None,
            "invariants": {"X1": invariants(X1), "X2": invariants(X2)},
            "scanned": "full GL scan" if T is None else "stopped at first witness",
        }
        return out, out["verdict"], 0
    verdict = equivalent_structured(X1, X2, args.cap)
    return verdict.to_json(), f"{verdict.verdict}: {verdict.reason}", 0


def cmd_census(args, field):
    report = census(field, args.degree, args.n, args.trials, args.seed, args.ext_max, args.cap)
    code = 2 if report["falsification"] else 0
    summary = (f"retained {report['retained']}, round trips passed {report['round_trip_pass']}, "
               f"delta histogram {report['delta_histogram']}, failures {len(report['failures'])}")
    return report, summary, code


COMMANDS = {
    "parse": cmd_parse,
    "cover": cmd_cover,
    "galois": cmd_galois,
    "normalize": cmd_normalize,
    "recover": cmd_recover,
    "equiv": cmd_equiv,
    "census": cmd_census,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", required=True, help="p:7, ext:7^2 or Q")
    common.add_argument("--poly")
    common.add_argument("--poly-file")
    common.add_argument("--nvars", type=int, help="number of variables (default: highest index + 1)")
    common.add_argument("--ext-max", type=int, default=1)
    common.add_argument("--cap", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="compact JSON on one line")
    common.add_argument("--allow-char-dividing-degree", action="store_true")

    parser = argparse.ArgumentParser(prog="cyclic-covers", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("parse", parents=[common])
    p.add_argument("--k-max", type=int, default=2)
    sub.add_parser("cover", parents=[common])
    sub.add_parser("galois", parents=[common])
    sub.add_parser("normalize", parents=[common])
    p = sub.add_parser("recover", parents=[common])
    p.add_argument("--hint", help='point such as "0,0,0,1"')
    p = sub.add_parser("equiv", parents=[common])
    p.add_argument("--poly1")
    p.add_argument("--poly2")
    p.add_argument("--poly1-file")
    p.add_argument("--poly2-file")
    p.add_argument("--mode", choices=("brute", "structured"), default="structured")
    p = sub.add_parser("census", parents=[common])
    p.add_argument("--degree", "-d", type=int, default=3)
    p.add_argument("-n", type=int, default=1, help="base hypersurface lives in P^(n+1)")
    p.add_argument("--trials", type=int, default=50)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.cap is None:
        args.cap = DEFAULT_CAP if args.command == "equiv" else DEFAULT_POINT_CAP
    try:
        field = parse_field(args.field)
        out, summary, code = COMMANDS[args.command](args, field)
    except Falsification as exc:
        out = {"falsification": type(exc).__name__, "message": str(exc), "reproduction": exc.bundle}
        summary, code = f"FALSIFICATION: {exc}", 2
    except (CoverError, ValueError, OSError) as exc:
        out = {"error": type(exc).__name__, "message": str(exc)}
        summary, code = f"error: {exc}", 1
    if args.command == "census" and "params" in out and not args.json:
        text = report_json(out)
    else:
        text = json.dumps(out, sort_keys=True, separators=(",", ":") if args.json else None,
                          indent=None if args.json else 2)
    print(text)
    print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
