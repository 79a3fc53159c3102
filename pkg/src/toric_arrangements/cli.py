"""Command-line front end: JSON documents in, JSON documents out.

Exit status: 0 on success, 1 on validation errors, 2 when a property
check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .arrangements import SubsetCollection, ValidationError, build_KI, r_min
from .fans import build_fan, orbit_limit, primitive_sets, r_sigma
from .mapspace import MapTuple, in_E, in_hol, stabilize
from .polyprod import lemma63_counterexample
from .sampling import SEED_ENV, default_seed
from .stability import D, Dstar, StabilityParams, WindowError, band_scan_report
from .verify import Limits, verify_all

EXIT_OK, EXIT_INVALID, EXIT_PROPERTY = 0, 1, 2

SUBCOMMANDS = (
    "kcomplex", "fan", "primitive", "rsigma", "rmin", "stabdim", "bandscan",
    "holcheck", "stabilize", "orbitlimit", "lemma63", "verify-all",
)


class PropertyFailure(Exception):
    def __init__(self, doc: dict):
        super().__init__("property check failed")
        self.doc = doc


def _read_input(path: str | None) -> Any:
    if path is None:
        raise ValidationError("this subcommand needs --input PATH or --input -")
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON input: {exc}") from exc


def _collection(args) -> SubsetCollection:
    return SubsetCollection.from_json(_read_input(args.input))


def _pretty(doc: dict) -> str:
    lines = []
    for key, value in doc.items():
        if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            lines.append(f"{key}:")
            lines.extend(f"  {json.dumps(v, sort_keys=True)}" for v in value)
        else:
            lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
    return "\n".join(lines) + "\n"


def _emit(doc: dict, args) -> None:
    text = _pretty(doc) if args.pretty else json.dumps(doc, sort_keys=True) + "\n"
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_kcomplex(args) -> dict:
    return build_KI(_collection(args)).to_json()


def _cmd_fan(args) -> dict:
    return build_fan(build_KI(_collection(args))).to_json()


def _cmd_primitive(args) -> dict:
    I = _collection(args)
    return {"n": I.n, "primitive": [list(p) for p in primitive_sets(build_fan(build_KI(I)))]}


def _cmd_rsigma(args) -> dict:
    I = _collection(args)
    return {"r_sigma": r_sigma(build_fan(build_KI(I)))}


def _cmd_rmin(args) -> dict:
    return {"r_min": r_min(_collection(args))}


def _params(args) -> StabilityParams:
    if args.r_min is None or args.d is None:
        raise ValidationError("--r-min and --d are required")
    n = args.n if args.n is not None else args.r_min
    return StabilityParams(n, args.r_min, args.d)


def _cmd_stabdim(args) -> dict:
    p = _params(args)
    doc = {"D": D(p)}
    if args.n is not None:
        doc["Dstar"] = Dstar(p.d, p.n)
    return doc


def _cmd_bandscan(args) -> dict:
    p = _params(args)
    if args.mode == "projective" and args.n is None:
        p = StabilityParams(p.r_min, p.r_min, p.d)
    try:
        report = band_scan_report(p, args.mode, seed=args.seed_column)
    except WindowError as exc:
        raise PropertyFailure({"error": str(exc)}) from exc
    doc = report.to_json(include_cells=not args.summary)
    # the sharp seed is exploratory and is not expected to match the closed form
    if args.seed_column == "threshold" and not report.agree:
        raise PropertyFailure(doc)
    return doc


def _cmd_holcheck(args) -> dict:
    doc = _read_input(args.input)
    if not isinstance(doc, dict) or "map" not in doc or "I" not in doc:
        raise ValidationError('holcheck input needs {"n", "I", "map": {...}}')
    I = SubsetCollection.from_json(doc)
    F = MapTuple.from_json(doc["map"])
    out = {"in_hol": in_hol(F, I)}
    if F.form == "roots":
        out["in_E"] = in_E(F, I)
        if out["in_E"] != out["in_hol"]:
            raise PropertyFailure(out)
    return out


def _cmd_stabilize(args) -> dict:
    doc = _read_input(args.input)
    if isinstance(doc, dict) and "map" in doc:
        F = MapTuple.from_json(doc["map"])
        shifts = doc.get("shift_points")
    else:
        F, shifts = MapTuple.from_json(doc), None
    return stabilize(F, shifts).to_json()


def _cmd_orbitlimit(args) -> dict:
    if args.u is None or args.n is None:
        raise ValidationError("orbitlimit needs --n and --u")
    try:
        u = [int(x) for x in args.u.split(",")] if args.u.strip() else []
    except ValueError as exc:
        raise ValidationError(f"--u must be comma-separated integers: {exc}") from exc
    return {"n": args.n, "u": u, "sigma": list(orbit_limit(u, args.n))}


def _cmd_lemma63(args) -> dict:
    I = _collection(args)
    bad = lemma63_counterexample(I)
    doc = {"n": I.n, "holds": bad is None, "first_failure": bad.to_bits() if bad else None}
    if bad is not None:
        raise PropertyFailure(doc)
    return doc


def _cmd_verify_all(args) -> dict:
    if args.n_max is None and args.d_max is None and args.samples is None:
        lim = Limits(seed=args.seed)
    else:
        defaults = Limits()
        lim = Limits(
            n_max=defaults.n_max if args.n_max is None else args.n_max,
            d_max=defaults.d_max if args.d_max is None else args.d_max,
            seed=args.seed,
            samples=defaults.samples if args.samples is None else args.samples,
        )
    report = verify_all(lim)
    if not report["passed"]:
        raise PropertyFailure(report)
    return report


HANDLERS = {
    "kcomplex": _cmd_kcomplex,
    "fan": _cmd_fan,
    "primitive": _cmd_primitive,
    "rsigma": _cmd_rsigma,
    "rmin": _cmd_rmin,
    "stabdim": _cmd_stabdim,
    "bandscan": _cmd_bandscan,
    "holcheck": _cmd_holcheck,
    "stabilize": _cmd_stabilize,
    "orbitlimit": _cmd_orbitlimit,
    "lemma63": _cmd_lemma63,
    "verify-all": _cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="input JSON document path, or - for stdin")
    common.add_argument("--output", "-o", help="output path, or - for stdout (default)")
    common.add_argument("--pretty", action="store_true", help="human-readable output")
    common.add_argument("--seed", type=int, default=None,
                        help=f"seed for randomized suites (default: ${SEED_ENV} or {default_seed()})")

    parser = argparse.ArgumentParser(prog="toric-arr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name in ("stabdim", "bandscan"):
            sp.add_argument("--r-min", type=int)
            sp.add_argument("--d", type=int)
            sp.add_argument("--n", type=int)
        if name == "bandscan":
            sp.add_argument("--mode", choices=("general", "projective"), default="general")
            sp.add_argument("--seed-column", choices=("threshold", "sharp"), default="threshold",
                            help="where the unmatched cells of column d+1 start")
            sp.add_argument("--summary", action="store_true", help="omit the cell list")
        if name == "orbitlimit":
            sp.add_argument("--n", type=int)
            sp.add_argument("--u", help="comma-separated integers, length n-1")
        if name == "verify-all":
            sp.add_argument("--n-max", type=int)
            sp.add_argument("--d-max", type=int)
            sp.add_argument("--samples", type=int)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc = HANDLERS[args.command](args)
    except PropertyFailure as exc:
        _emit(exc.doc, args)
        return EXIT_PROPERTY
    except (ValueError, OSError, KeyError, TypeError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, args)
        return EXIT_INVALID
    _emit(doc, args)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
