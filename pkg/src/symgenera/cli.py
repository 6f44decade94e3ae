"""Command-line front end.

    symgenera series --bundled --order 4
    symgenera series --poly "1 + y*x*z^2" --kind hodge --order 3 --json
    symgenera config-series --profile my_profiles.json
    symgenera signature 1 3 --order 6
    symgenera invariant --poly "1 + y + y^2" --kind chi_y -n 2
    symgenera specialize --poly "1 - y*z - x*z + y*x*z^2"
    symgenera oracle-check dims.json --max-n 3
    symgenera adams "y + 2*x^-1*z" --vars yxz --order 4
    symgenera characters 5

Exit status: 0 on success, 2 for bad input, 3 when two independent
computations disagree (a bug).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Sequence

from .errors import ConsistencyError, InputError
from .formats import (
    bundled_profiles_path,
    csv_rows,
    load_graded_dims,
    load_profiles,
    series_to_json,
)
from .genera import (
    POLY_KINDS,
    GenusProfile,
    configuration_series,
    invariant_of_configuration_space,
    invariant_of_symmetric_product,
    signature_series,
    specialization_bridge,
    symmetric_series,
)
from .graded import VirtualGradedDims, alt_power_brute, sym_power_brute
from .laurent import LaurentPoly, VariableSet, format_scalar
from .parse import parse_poly
from .prelambda import lambda_series, sigma_series
from .series import DEFAULT_ORDER, TruncatedSeries
from .symgroup import character_table

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CONSISTENCY = 3


def _fmt(c) -> str:
    return str(c) if isinstance(c, LaurentPoly) else format_scalar(c)


def _resolve_profiles(args) -> tuple[list[GenusProfile], int]:
    sources = sum(bool(x) for x in (args.profile, args.bundled, args.poly is not None))
    if sources != 1:
        raise InputError("give exactly one of --profile FILE, --bundled or --poly EXPR")
    if args.poly is not None:
        kind = args.kind
        if kind in POLY_KINDS:
            vars_ = VariableSet.parse(args.vars) if args.vars else POLY_KINDS[kind]
            data = parse_poly(args.poly, vars_)
            if data.variables != POLY_KINDS[kind]:
                data = data.change_variables(POLY_KINDS[kind])
        elif kind == "euler":
            value = parse_poly(args.poly, VariableSet(())).to_scalar()
            if getattr(value, "denominator", 1) != 1:
                raise InputError(f"Euler characteristic {value} is not an integer")
            data = int(value)
        else:
            raise InputError("use the 'signature' command for signature inputs")
        profile = GenusProfile(args.name, kind, data)
        order = DEFAULT_ORDER
        profiles = [profile]
    else:
        path = bundled_profiles_path() if args.bundled else args.profile
        profiles, order = load_profiles(path)
    if getattr(args, "order", None) is not None:
        order = args.order
    return profiles, order


def _emit_series(args, out, blocks: list[tuple[GenusProfile, str, TruncatedSeries]]):
    if args.json:
        docs = [series_to_json(s, name=p.name, kind=p.kind, series=what) for p, what, s in blocks]
        json.dump(docs, out, indent=2, sort_keys=False)
        out.write("\n")
        return
    if args.csv:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["profile", "n", "monomial", "coefficient"])
        for p, _, s in blocks:
            writer.writerows(csv_rows(p.name, s))
        return
    for i, (p, what, s) in enumerate(blocks):
        if i:
            out.write("\n")
        out.write(f"# {p.name} [{p.kind}] {what}, order {s.order}\n")
        width = max(1, len(str(s.order)))
        out.write(f"{'n'.rjust(width)}  coefficient\n")
        for n, c in enumerate(s.coeffs):
            out.write(f"{str(n).rjust(width)}  {_fmt(c)}\n")


def cmd_series(args, out):
    profiles, order = _resolve_profiles(args)
    blocks = [(p, "symmetric products", symmetric_series(p, order)) for p in profiles]
    _emit_series(args, out, blocks)


def cmd_config_series(args, out):
    profiles, order = _resolve_profiles(args)
    blocks = [(p, "configuration spaces", configuration_series(p, order)) for p in profiles]
    _emit_series(args, out, blocks)


def cmd_signature(args, out):
    order = args.order if args.order is not None else DEFAULT_ORDER
    blocks = []
    if args.sigma is not None or args.chi is not None:
        if args.sigma is None or args.chi is None or args.profile or args.bundled or args.poly is not None:
            raise InputError("give SIGMA and CHI together, or a profile source instead")
        p = GenusProfile(args.name, "signature", (args.sigma, args.chi))
        blocks.append((p, "signature of symmetric products", signature_series(args.sigma, args.chi, order)))
    else:
        profiles, file_order = _resolve_profiles(args)
        order = args.order if args.order is not None else file_order
        for p in profiles:
            if p.kind == "signature":
                s = signature_series(*p.data, order)
            elif p.kind in ("hodge", "e", "chi_y"):
                derived = specialization_bridge(p)
                if derived.signature is None:
                    raise InputError(f"{p.name!r}: sigma and chi have different parity")
                s = signature_series(*derived.signature, order, chi_y=derived.chi_y)
                p = GenusProfile(p.name, "signature", derived.signature, p.compact_support)
            else:
                raise InputError(f"{p.name!r}: a {p.kind} profile does not determine the signature")
            blocks.append((p, "signature of symmetric products", s))
    _emit_series(args, out, blocks)


def cmd_invariant(args, out):
    profiles, _ = _resolve_profiles(args)
    fn = invariant_of_configuration_space if args.configuration else invariant_of_symmetric_product
    results = [(p, fn(p, args.n)) for p in profiles]
    if args.json:
        json.dump([{"name": p.name, "kind": p.kind, "n": args.n, "value": _fmt(v)} for p, v in results], out, indent=2)
        out.write("\n")
        return
    for p, v in results:
        out.write(f"{p.name}\t{args.n}\t{_fmt(v)}\n")


def cmd_specialize(args, out):
    profiles, _ = _resolve_profiles(args)
    reports = []
    for p in profiles:
        derived = specialization_bridge(p)
        reports.append(
            {
                "name": p.name,
                "e": None if derived.e is None else str(derived.e.data),
                "chi_y": str(derived.chi_y.data),
                "betti": None if derived.betti is None else str(derived.betti.data),
                "euler": derived.euler,
                "arithmetic_genus": derived.arithmetic_genus,
                "signature": None if derived.signature is None else derived.signature[0],
            }
        )
    if args.json:
        json.dump(reports, out, indent=2)
        out.write("\n")
        return
    for i, rep in enumerate(reports):
        if i:
            out.write("\n")
        out.write(f"# {rep['name']}\n")
        for key in ("e", "chi_y", "betti", "euler", "arithmetic_genus", "signature"):
            value = rep[key]
            out.write(f"{key:<17}{'-' if value is None else value}\n")


def cmd_oracle_check(args, out) -> int:
    V = load_graded_dims(args.file)
    h = V.hodge_poly()
    N = args.max_n
    sigma = sigma_series(h, N)
    lam = lambda_series(h, N)
    failures = 0
    lines = []
    for n in range(N + 1):
        for label, brute_fn, series in (("sym", sym_power_brute, sigma), ("alt", alt_power_brute, lam)):
            brute = brute_fn(V, n)
            from_series = VirtualGradedDims.from_hodge_poly(series[n])
            for deg in sorted(set(brute.degrees()) | set(from_series.degrees())):
                ok = brute[deg] == from_series[deg]
                failures += not ok
                lines.append(
                    f"{'PASS' if ok else 'FAIL'} {label} n={n} (p,q,k)={deg} brute={brute[deg]} series={from_series[deg]}"
                )
            if not brute and not from_series:
                lines.append(f"PASS {label} n={n} (zero space)")
    for line in lines:
        out.write(line + "\n")
    out.write(f"{len(lines) - failures} passed, {failures} failed\n")
    return EXIT_CONSISTENCY if failures else EXIT_OK


def cmd_adams(args, out):
    vars_ = VariableSet.parse(args.vars or "yxz")
    p = parse_poly(args.poly, vars_)
    order = args.order if args.order is not None else DEFAULT_ORDER
    values = [p.adams(r) for r in range(1, order + 1)]
    if args.json:
        json.dump({"poly": str(p), "vars": list(vars_.names), "adams": [str(v) for v in values]}, out, indent=2)
        out.write("\n")
        return
    width = len(str(order))
    for r, v in enumerate(values, start=1):
        out.write(f"Psi_{str(r).ljust(width)}  {v}\n")


def _plabel(mu) -> str:
    if not mu:
        return "()"
    return ",".join(map(str, mu))


def cmd_characters(args, out):
    if args.n < 0:
        raise InputError("n must be nonnegative")
    rows, cols, table = character_table(args.n)
    if args.json:
        json.dump(
            {"n": args.n, "rows": [list(r) for r in rows], "columns": [list(c) for c in cols], "table": [list(t) for t in table]},
            out,
        )
        out.write("\n")
        return
    if args.csv:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["lambda"] + [_plabel(c) for c in cols])
        for lam, vals in zip(rows, table):
            writer.writerow([_plabel(lam)] + list(vals))
        return
    header = ["lambda\\mu"] + [_plabel(c) for c in cols]
    body = [[_plabel(lam)] + [str(v) for v in vals] for lam, vals in zip(rows, table)]
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    for r in [header] + body:
        out.write("  ".join([r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]).rstrip() + "\n")


def _add_profile_source(p: argparse.ArgumentParser):
    p.add_argument("--profile", metavar="FILE", help="profile file (JSON)")
    p.add_argument("--bundled", action="store_true", help="use the bundled profile set")
    p.add_argument("--poly", metavar="EXPR", help="inline polynomial, e.g. '1 + y*x*z^2'")
    p.add_argument("--kind", default="hodge", choices=["hodge", "e", "chi_y", "betti", "euler"])
    p.add_argument("--name", default="X", help="name for an inline profile")
    p.add_argument("--vars", help="variables of the inline polynomial (default: by kind)")


def _add_output(p: argparse.ArgumentParser, order=True):
    if order:
        p.add_argument("--order", type=int, help=f"truncation order (default {DEFAULT_ORDER} or the file's 'order')")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="machine-readable JSON output")
    g.add_argument("--csv", action="store_true", help="flat CSV output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symgenera", description="Generating series for genera of symmetric products."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", help="series over symmetric products")
    _add_profile_source(p)
    _add_output(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("config-series", help="series over configuration spaces of distinct points")
    _add_profile_source(p)
    _add_output(p)
    p.set_defaults(func=cmd_config_series)

    p = sub.add_parser("signature", help="signature series from (sigma, chi) or from profiles")
    p.add_argument("sigma", type=int, nargs="?")
    p.add_argument("chi", type=int, nargs="?")
    _add_profile_source(p)
    _add_output(p)
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("invariant", help="invariant of the n-th symmetric product")
    _add_profile_source(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--configuration", action="store_true", help="configuration space instead")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("specialize", help="derive e, chi_y, Betti, Euler, arithmetic genus, signature")
    _add_profile_source(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("oracle-check", help="brute-force powers of a graded space vs series")
    p.add_argument("file", help="graded dims JSON")
    p.add_argument("--max-n", type=int, default=3)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("adams", help="Adams operations Psi_1..Psi_N of a polynomial")
    p.add_argument("poly")
    p.add_argument("--vars", default="yxz")
    _add_output(p)
    p.set_defaults(func=cmd_adams)

    p = sub.add_parser("characters", help="character table of S_n")
    p.add_argument("n", type=int)
    _add_output(p, order=False)
    p.set_defaults(func=cmd_characters)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    """Run one command; returns the exit status instead of exiting."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    func: Callable = args.func
    buf = io.StringIO()
    try:
        status = func(args, buf)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ConsistencyError as exc:
        err.write(f"internal consistency failure: {exc}\n")
        return EXIT_CONSISTENCY
    out.write(buf.getvalue())
    return status or EXIT_OK


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


__all__ = ["build_parser", "main", "run"]
