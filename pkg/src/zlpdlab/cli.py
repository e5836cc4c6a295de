"""Command-line front end.

Exit codes: 0 when every asserted property holds, 2 when a mathematical
check fails (the report says which), 1 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra as alg
from .bilinear import (Exhaustive, Randomized, cube_vanishing_space, default_strategy,
                       first_violation, is_zlpd, verify_corollary_simple,
                       verify_theorem_main)
from .cohom import H2_KEY, h2_dimension, verify_corollary_cohom
from .derivmod import verify_corollary_derivations
from .docformat import load_map, resolve_algebra
from .errors import (BlockUnclassifiable, HypothesesNotMet, MissingUnit, NotJordan,
                     UnsupportedCharacteristic, ZlpdError)
from .exactfield import FieldSpec
from .jordanhom import classify_map, decompose, verify_theorem_jordan
from .report import jsonable

EXIT_OK, EXIT_INPUT, EXIT_FLAGGED = 0, 1, 2

# raised when the input is fine but a mathematical expectation fails
_MATH_ERRORS = (NotJordan, HypothesesNotMet, BlockUnclassifiable, AssertionError)


class InputError(ZlpdError):
    pass


def _field(text):
    if text is None:
        return None
    try:
        return FieldSpec.from_name(text)
    except (ValueError, ZlpdError) as exc:
        raise InputError(f"bad --field {text!r}: {exc}") from exc


def _strategy(args, A):
    if args.strategy == "exhaustive":
        return Exhaustive(args.budget)
    if args.strategy == "randomized":
        return Randomized(args.seed, args.samples, args.stall)
    s = default_strategy(A, args.budget)
    if isinstance(s, Randomized):
        return Randomized(args.seed, args.samples, args.stall)
    return s


def _strategy_meta(s):
    if isinstance(s, Exhaustive):
        return {"name": "exhaustive", "budget": s.budget}
    return {"name": "randomized", "seed": s.seed, "samples": s.samples,
            "stall": s.stall_limit, "box": s.box}


def _load(ref, args):
    return resolve_algebra(ref, None, _field(args.field))


# -- analyze -----------------------------------------------------------------

def analyze(A, args) -> tuple[dict, int]:
    core = alg.lie_core(A)
    report = {
        "dims": {
            "A": A.dim,
            "commutators": core.commutators.dim,
            "L": core.L.dim,
            "algL": core.algL.dim,
            "center": alg.center(A).dim,
        },
        "field": str(A.field),
        "generates": core.generates,
    }
    flagged = []
    try:
        report["dims"]["radical"] = alg.radical(A).dim
    except (MissingUnit, UnsupportedCharacteristic) as exc:
        report["dims"]["radical"] = None
        report["radical_reason"] = str(exc)
    try:
        simple = alg.is_simple(A)
    except (MissingUnit, UnsupportedCharacteristic) as exc:
        simple = None
        report["simple_reason"] = str(exc)
    report["simple"] = simple

    strategy = _strategy(args, A)
    z = is_zlpd(A, strategy)
    report["zlpd"] = dict(z.to_dict(), strategy=_strategy_meta(strategy))
    h2 = h2_dimension(A)
    report[H2_KEY] = h2

    space = cube_vanishing_space(A)
    report["cube_vanishing_dim"] = space.dim
    if A.field.characteristic == 2:
        report["theorem_main"] = "skipped"
        report["theorem_main_reason"] = "characteristic 2"
    else:
        tm = verify_theorem_main(A)
        report["theorem_main"] = "pass" if tm.passed else "fail"
        if not tm.passed:
            report["theorem_main_failures"] = tm.failures
            flagged.append("cyclic identity fails on Alg(L) for a cube-vanishing form")
    bad = first_violation(A, space)
    if bad is None:
        report["full_space_violation"] = None
    else:
        v, phi = bad
        report["full_space_violation"] = {
            "x": A.format(v.x), "y": A.format(v.y), "u": A.format(v.u),
            "value": A.field.fmt(v.value), "form": [[A.field.fmt(c) for c in r] for r in phi.m],
        }

    if simple is alg.Verdict.CertifiedYes and A.field.characteristic != 2:
        if h2 == 0 and z.verdict is alg.Verdict.CertifiedNo:
            flagged.append("simple with trivial H2 but zLpd certified false")
        if bad is not None:
            flagged.append("simple algebra violates the cyclic identity on A")
    report["flagged"] = flagged
    return report, EXIT_FLAGGED if flagged else EXIT_OK


def cmd_analyze(args):
    results = []
    code = EXIT_OK
    for ref in args.refs:
        A = _load(ref, args)
        rep, c = analyze(A, args)
        rep["input"] = ref
        results.append(rep)
        code = max(code, c)
    return results[0] if len(results) == 1 else results, code


# -- verify ------------------------------------------------------------------

def cmd_verify(args):
    thm = args.theorem
    if thm == "jordan":
        if not args.map:
            raise InputError("verify jordan needs --map")
        J, blocks = load_map(args.map, _field(args.field))
        if blocks is None:
            raise InputError("map document needs \"target_blocks\" for verify jordan")
        rep = verify_theorem_jordan(J.source, blocks, J)
    else:
        if args.ref is None:
            raise InputError(f"verify {thm} needs an algebra reference")
        A = _load(args.ref, args)
        if thm == "main":
            rep = verify_theorem_main(A)
        elif thm == "simple":
            rep = verify_corollary_simple(A)
        elif thm == "derivations":
            rep = verify_corollary_derivations(A, _strategy(args, A))
        else:
            rep = verify_corollary_cohom(A, _strategy(args, A))
    return rep.to_dict(), EXIT_OK if rep.passed else EXIT_FLAGGED


# -- decompose ---------------------------------------------------------------

def cmd_decompose(args):
    J, blocks = load_map(args.map, _field(args.field))
    if blocks is None:
        raise InputError("map document needs \"target_blocks\" to decompose")
    dec = decompose(J, blocks, force=args.force)
    out = dec.to_dict()
    out["flags"] = sorted(classify_map(J))
    out["dims"] = {"U": dec.U.dim, "V": dec.V.dim, "U0": dec.U0.dim, "V0": dec.V0.dim,
                   "kerJ": dec.kerJ.dim}
    return out, EXIT_OK


# -- output ------------------------------------------------------------------

def _text_lines(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                yield f"{pad}{k}:"
                yield from _text_lines(v, indent + 1)
            else:
                yield f"{pad}{k}: {_scalar_text(v)}"
    elif isinstance(obj, list):
        for item in obj:
            if isinstance(item, (dict, list)) and not _flat_list(item):
                yield f"{pad}-"
                yield from _text_lines(item, indent + 1)
            else:
                yield f"{pad}- {_scalar_text(item)}"
    else:
        yield pad + _scalar_text(obj)


def _flat_list(v):
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _flat_list(x)
                                       for x in v)


def _scalar_text(v):
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar_text(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    return str(v)


def render(obj, fmt: str) -> str:
    data = jsonable(obj)
    if fmt == "json":
        return json.dumps(data, sort_keys=True, indent=2)
    return "\n".join(_text_lines(data))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="field for builtin algebras, e.g. Q or GF5")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--strategy", choices=("auto", "exhaustive", "randomized"),
                        default="auto")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=2000)
    common.add_argument("--stall", type=int, default=25)
    common.add_argument("--budget", type=lambda s: int(float(s)), default=10 ** 6)

    p = argparse.ArgumentParser(prog="zlpdlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="summarize an algebra")
    a.add_argument("refs", nargs="+", metavar="REF",
                   help="builtin:NAME or path to an algebra document")
    a.set_defaults(run=cmd_analyze)

    v = sub.add_parser("verify", parents=[common], help="check one theorem on an input")
    v.add_argument("theorem", choices=("main", "simple", "derivations", "cohomology", "jordan"))
    v.add_argument("ref", nargs="?", metavar="REF")
    v.add_argument("--map", help="map document (for jordan)")
    v.set_defaults(run=cmd_verify)

    d = sub.add_parser("decompose", parents=[common], help="split a Jordan map into H + K")
    d.add_argument("map", metavar="MAP")
    d.add_argument("--force", action="store_true",
                   help="decompose even if the source is not generated by its Lie core")
    d.set_defaults(run=cmd_decompose)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    fmt = args.format
    try:
        result, code = args.run(args)
    except _MATH_ERRORS as exc:
        result, code = _error_doc(exc), EXIT_FLAGGED
    except (ZlpdError, ValueError, OSError) as exc:
        result, code = _error_doc(exc), EXIT_INPUT
    if isinstance(result, dict) and "error" in result:
        err = result["error"]
        print(f"zlpdlab: {err['type']}: {err['message']}", file=sys.stderr)
    print(render(result, fmt))
    return code


def _error_doc(exc) -> dict:
    err = {"type": type(exc).__name__, "message": str(exc)}
    if getattr(exc, "triple", None) is not None:
        err["triple"] = list(exc.triple)
    if getattr(exc, "index", None) is not None:
        err["block_index"] = exc.index
    return {"error": err}


if __name__ == "__main__":
    sys.exit(main())
