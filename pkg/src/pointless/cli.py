"""Command-line interface: ``construct``, ``verify``, ``census`` and ``bounds``.

Exit codes: 0 success, 2 invalid arguments or malformed input, 3 no curve
found, 4 a document's claims disagree with recomputation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .census import CensusCapError, count_pointless
from .constructions import (
    ConstructionCertificate,
    NotFoundError,
    construct_pointless,
    genus_bound,
    replay,
)
from .finite_field import FieldError, is_prime_power
from .hyperelliptic import ModelError, count_points, hasse_weil_min_genus, is_smooth, model_from_json

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_FOUND = 3
EXIT_MISMATCH = 4


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _k_list(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        ks = sorted({int(part) for part in text.split(",") if part.strip()})
    except ValueError as exc:
        raise UsageError(f"--k expects a comma-separated list of integers, got {text!r}") from exc
    if any(k < 1 for k in ks):
        raise UsageError("--k values must be >= 1")
    return ks


def _verification(model, ks: list[int]) -> dict:
    return {
        "smooth": is_smooth(model),
        "genus": model.genus,
        "n1": count_points(model, 1),
        "nk": {str(k): count_points(model, k) for k in ks} if ks else None,
    }


def curve_document(model, cert: ConstructionCertificate, ks: list[int] | None = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "curve": model.to_json(),
        "certificate": cert.to_json(),
        "verification": _verification(model, ks or []),
    }


def _render_text(doc: dict, model) -> str:
    cert = doc["certificate"]
    ver = doc["verification"]
    lines = [
        f"field    GF({model.q})  modulus {model.field.modulus}",
        f"curve    {model}",
        f"genus    {ver['genus']}",
        f"smooth   {ver['smooth']}",
        f"N_1      {ver['n1']}",
        f"branch   {cert['branch']}",
    ]
    for key, value in cert["params"].items():
        lines.append(f"  {key} = {value}")
    if cert["s_value"] is not None:
        lines.append(f"s_value  {cert['s_value']}")
    if cert["twist"] is not None:
        lines.append(f"twist    {cert['twist']}")
    lines.append(f"guaranteed {cert['guaranteed']}")
    return "\n".join(lines) + "\n"


def cmd_construct(args) -> int:
    if not is_prime_power(args.q):
        raise UsageError(f"q = {args.q} is not a prime power")
    if args.g < 0:
        raise UsageError("genus must be nonnegative")
    try:
        model, cert = construct_pointless(args.q, args.g)
    except NotFoundError as exc:
        print(f"not found: {exc}", file=sys.stderr)
        print(f"hasse_weil_min_genus({args.q}, 1) = {exc.hasse_weil_floor}; "
              f"genus_bound({args.q}) = {exc.genus_bound}", file=sys.stderr)
        return EXIT_NOT_FOUND
    doc = curve_document(model, cert, _k_list(args.k))
    text = _dumps(doc) if args.format == "json" else _render_text(doc, model)
    _emit(text, args.out)
    return EXIT_OK


def _load(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise UsageError(f"{path}: expected a JSON object")
    return data


def cmd_verify(args) -> int:
    data = _load(args.path)
    is_document = "curve" in data
    curve = data["curve"] if is_document else data
    if is_document and data.get("schema_version") != SCHEMA_VERSION:
        raise UsageError(f"unsupported schema_version {data.get('schema_version')!r}")
    try:
        model, claimed_genus = model_from_json(curve)
        cert = None
        if is_document and data.get("certificate") is not None:
            cert = ConstructionCertificate.from_json(model.field, data["certificate"])
    except (ModelError, FieldError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed curve document: {exc}") from exc

    claims = (data.get("verification") or {}) if is_document else {}
    ks = _k_list(args.k)
    if not ks and claims.get("nk"):
        ks = _k_list(",".join(claims["nk"]))
    try:
        got = _verification(model, ks)
    except FieldError as exc:
        raise UsageError(str(exc)) from exc

    problems = []
    if claimed_genus is not None and claimed_genus != model.genus:
        problems.append(f"curve claims genus {claimed_genus}, degrees give {model.genus}")
    for key in ("smooth", "genus", "n1"):
        if key in claims and claims[key] != got[key]:
            problems.append(f"{key}: claimed {claims[key]}, recomputed {got[key]}")
    for k, n in (claims.get("nk") or {}).items():
        if got["nk"] and k in got["nk"] and got["nk"][k] != n:
            problems.append(f"N_{k}: claimed {n}, recomputed {got['nk'][k]}")
    if cert is not None:
        try:
            rebuilt = replay(model.q, model.genus, cert)
            if rebuilt.to_json() != model.to_json():
                problems.append("certificate replay does not reproduce the curve")
        except (KeyError, ValueError, TypeError) as exc:
            problems.append(f"certificate replay failed: {exc}")

    sys.stdout.write(_dumps(got))
    for line in problems:
        print(f"mismatch: {line}", file=sys.stderr)
    return EXIT_MISMATCH if problems else EXIT_OK


def cmd_census(args) -> int:
    if not is_prime_power(args.q):
        raise UsageError(f"q = {args.q} is not a prime power")
    if args.g < 0 or args.jobs < 1:
        raise UsageError("--g must be >= 0 and --jobs >= 1")
    try:
        report = count_pointless(args.q, args.g, jobs=args.jobs, prefilter=not args.no_prefilter)
    except CensusCapError as exc:
        raise UsageError(str(exc)) from exc
    sys.stdout.write(_dumps(report.to_json()))
    return EXIT_OK


def bounds_rows(q_max: int) -> list[tuple[int, int, int]]:
    return [(q, hasse_weil_min_genus(q, 1), genus_bound(q))
            for q in range(2, q_max + 1) if is_prime_power(q)]


def cmd_bounds(args) -> int:
    if args.q_max < 2 or args.q_max > 1 << 20:
        raise UsageError("--q-max must lie in 2..2^20")
    rows = bounds_rows(args.q_max)
    out = ["q\thasse_weil_min_genus\tgenus_bound"]
    out += [f"{q}\t{hw}\t{gq}" for q, hw, gq in rows]
    sys.stdout.write("\n".join(out) + "\n")
    if args.plot:
        from .plotting import plot_bounds

        plot_bounds(rows, args.plot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pointless", description="Pointless hyperelliptic curves over finite fields.")
    parser.add_argument("-v", "--verbose", action="store_true", help="more logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a pointless curve of genus g over GF(q)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.add_argument("--k", help="also record N_k for these comma-separated k")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="recompute and check a curve document")
    p.add_argument("path")
    p.add_argument("--k", help="comma-separated extension degrees to count, e.g. 1,2")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="count smooth pointless models of genus g over GF(q)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--no-prefilter", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("bounds", help="tabulate the genus bounds for prime powers up to q-max")
    p.add_argument("--q-max", type=int, required=True)
    p.add_argument("--plot", help="also save a figure to this path")
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
