"""JSON forms: profile files, graded-dimension tables and emitted series.

Profile file::

    {"order": 4,
     "profiles": [
        {"name": "P1", "kind": "hodge", "poly": "1 + y*x*z^2", "compact_support": false},
        {"name": "pt", "kind": "euler", "chi": 1},
        {"name": "P2", "kind": "signature", "sigma": 1, "chi": 3}]}

Graded dims: a list of ``{"p", "q", "k", "dim"}`` records, optionally wrapped
as ``{"dims": [...]}``.

Rational coefficients are written as ``"p/q"`` strings so nothing is lost.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Iterable

from .errors import InputError
from .genera import POLY_KINDS, GenusProfile
from .graded import GradedDims
from .laurent import LaurentPoly, VariableSet, format_scalar
from .parse import parse_poly
from .series import DEFAULT_ORDER, TruncatedSeries


def _read_json(source) -> Any:
    if isinstance(source, (dict, list)):
        return source
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {source}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON ({exc})") from exc


def _int_field(rec, key, name):
    value = rec.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"profile {name!r}: field {key!r} must be an integer, got {value!r}")
    return value


def profile_from_record(rec: dict) -> GenusProfile:
    if not isinstance(rec, dict):
        raise InputError(f"profile entry must be an object, got {rec!r}")
    name = str(rec.get("name", ""))
    kind = rec.get("kind")
    cs = bool(rec.get("compact_support", False))
    label = str(rec.get("label", ""))
    if kind in POLY_KINDS:
        poly = rec.get("poly")
        if isinstance(poly, int) and not isinstance(poly, bool):
            poly = str(poly)
        if not isinstance(poly, str):
            raise InputError(f"profile {name!r}: {kind} profiles need a 'poly' expression")
        return GenusProfile(name, kind, parse_poly(poly, POLY_KINDS[kind]), cs, label)
    if kind == "euler":
        if "chi" in rec:
            chi = _int_field(rec, "chi", name)
        else:
            poly = rec.get("poly")
            if poly is None:
                raise InputError(f"profile {name!r}: euler profiles need 'chi' or 'poly'")
            value = parse_poly(str(poly), VariableSet(())).to_scalar()
            if getattr(value, "denominator", 1) != 1:
                raise InputError(f"profile {name!r}: Euler characteristic {value} is not an integer")
            chi = int(value)
        return GenusProfile(name, "euler", chi, cs, label)
    if kind == "signature":
        return GenusProfile(name, "signature", (_int_field(rec, "sigma", name), _int_field(rec, "chi", name)), cs, label)
    raise InputError(f"profile {name!r}: unknown kind {kind!r}")


def profile_to_record(profile: GenusProfile) -> dict:
    rec: dict[str, Any] = {"name": profile.name, "kind": profile.kind}
    if profile.kind in POLY_KINDS:
        rec["poly"] = str(profile.data)
    elif profile.kind == "euler":
        rec["chi"] = profile.data
    else:
        rec["sigma"], rec["chi"] = profile.data
    rec["compact_support"] = profile.compact_support
    if profile.label:
        rec["label"] = profile.label
    return rec


def load_profiles(source) -> tuple[list[GenusProfile], int]:
    """Parse a profile file (path or already-decoded dict) into (profiles, order)."""
    doc = _read_json(source)
    if not isinstance(doc, dict) or not isinstance(doc.get("profiles"), list):
        raise InputError("profile file must be an object with a 'profiles' list")
    order = doc.get("order", DEFAULT_ORDER)
    if isinstance(order, bool) or not isinstance(order, int) or order < 0:
        raise InputError(f"'order' must be a nonnegative integer, got {order!r}")
    return [profile_from_record(rec) for rec in doc["profiles"]], order


def bundled_profiles_path() -> Path:
    return Path(str(resources.files("symgenera") / "data" / "profiles.json"))


def load_graded_dims(source) -> GradedDims:
    doc = _read_json(source)
    if isinstance(doc, dict):
        doc = doc.get("dims")
    if not isinstance(doc, list):
        raise InputError("graded dims must be a list of {p, q, k, dim} records")
    return GradedDims.from_records(doc)


def _coeff_to_json(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _coeff_from_json(v):
    if isinstance(v, bool):
        raise InputError(f"bad coefficient {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return Fraction(v)
        except ValueError:
            pass
    raise InputError(f"bad coefficient {v!r}")


def series_to_json(series: TruncatedSeries, /, **meta) -> dict:
    coeffs = []
    for n, c in enumerate(series.coeffs):
        if isinstance(c, LaurentPoly):
            terms = [{"exponents": list(e), "coeff": _coeff_to_json(a)} for e, a in c.terms()]
            coeffs.append({"n": n, "text": str(c), "terms": terms})
        else:
            coeffs.append({"n": n, "text": format_scalar(c), "value": _coeff_to_json(c)})
    doc = dict(meta)
    doc["order"] = series.order
    doc["vars"] = None if series.ring is None else list(series.ring.names)
    doc["coefficients"] = coeffs
    return doc


def series_from_json(doc: dict) -> TruncatedSeries:
    try:
        order = doc["order"]
        names = doc["vars"]
        entries = doc["coefficients"]
    except (KeyError, TypeError) as exc:
        raise InputError("series JSON needs 'order', 'vars' and 'coefficients'") from exc
    ring = None if names is None else VariableSet(tuple(names))
    coeffs: list = [0] * (order + 1)
    for entry in entries:
        n = entry["n"]
        if ring is None:
            coeffs[n] = _coeff_from_json(entry["value"])
        else:
            coeffs[n] = LaurentPoly(ring, {tuple(t["exponents"]): _coeff_from_json(t["coeff"]) for t in entry["terms"]})
    return TruncatedSeries(coeffs, order, ring)


def csv_rows(name: str, series: TruncatedSeries) -> Iterable[tuple[str, int, str, str]]:
    """(profile, n, monomial, coefficient) rows, one per nonzero term."""
    for n, c in enumerate(series.coeffs):
        if isinstance(c, LaurentPoly):
            for e, a in c.terms():
                mono = LaurentPoly.monomial(c.variables, e)
                yield name, n, str(mono), format_scalar(a)
        elif c:
            yield name, n, "1", format_scalar(c)
