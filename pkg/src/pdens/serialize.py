"""Wire formats: exact rational strings, sequence and fingerprint documents.

Rationals travel as reduced "numerator/denominator" strings ("n" shorthand
when the denominator is 1).  Serialization is canonical (fixed key order,
two-space indent, trailing newline) so re-parsing and re-serializing a
document is byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .density import Fingerprint
from .pwl import PiecewiseLinear
from .sequence import PeriodicSequence, new_sequence


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(raw) -> Fraction:
    if isinstance(raw, bool) or isinstance(raw, float):
        raise ValueError(f"rationals must be strings or integers, got {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse rational {raw!r}: {exc}") from None
    raise ValueError(f"rationals must be strings or integers, got {raw!r}")


def sequence_to_doc(seq: PeriodicSequence) -> dict:
    return {
        "period": format_rational(seq.period),
        "motif": [format_rational(p) for p in seq.motif],
    }


def sequence_from_doc(doc) -> PeriodicSequence:
    if not isinstance(doc, dict):
        raise ValueError("sequence document must be a JSON object")
    try:
        period = doc["period"]
        motif = doc["motif"]
    except KeyError as exc:
        raise ValueError(f"sequence document is missing key {exc}") from None
    if not isinstance(motif, list):
        raise ValueError("motif must be a list of rationals")
    return new_sequence(parse_rational(period), [parse_rational(p) for p in motif])


def load_sequence_file(path) -> PeriodicSequence:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return sequence_from_doc(doc)


def _corners_payload(f: PiecewiseLinear, axis_scale: Fraction) -> list[list[str]]:
    scaled = f if axis_scale == 1 else f.scale_axes(axis_scale)
    return [[format_rational(x), format_rational(y)] for x, y in scaled.corners]


def fingerprint_to_doc(fp: Fingerprint, *, axis_scale: Fraction | int = 1) -> dict:
    """axis_scale multiplies both axes (use the period for raw-unit output);
    areas pick up the square of the scale."""
    scale = Fraction(axis_scale)
    return {
        "motif_size": fp.motif_size,
        "period": format_rational(fp.period),
        "functions": [
            {"k": k, "corners": _corners_payload(f, scale)}
            for k, f in enumerate(fp.functions)
        ],
        "rho": [format_rational(a * scale * scale) for a in fp.areas],
    }


def fingerprint_from_doc(doc) -> Fingerprint:
    if not isinstance(doc, dict):
        raise ValueError("fingerprint document must be a JSON object")
    try:
        size = doc["motif_size"]
        period = doc["period"]
        functions = doc["functions"]
        rho = doc["rho"]
    except KeyError as exc:
        raise ValueError(f"fingerprint document is missing key {exc}") from None
    if not isinstance(size, int) or isinstance(size, bool):
        raise ValueError("motif_size must be an integer")
    parsed: list[PiecewiseLinear] = []
    for entry in functions:
        if entry.get("k") != len(parsed):
            raise ValueError("function entries must cover k = 0, 1, ... in order")
        corners = [(parse_rational(x), parse_rational(y)) for x, y in entry["corners"]]
        parsed.append(PiecewiseLinear.from_corners(corners))
    return Fingerprint(
        motif_size=size,
        period=parse_rational(period),
        functions=tuple(parsed),
        areas=tuple(parse_rational(r) for r in rho),
    )


def dumps_canonical(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def corners_csv(entries: list[tuple[int, PiecewiseLinear]], *, axis_scale: Fraction | int = 1) -> str:
    """One row per corner: k, x_num, x_den, y_num, y_den."""
    scale = Fraction(axis_scale)
    lines = ["k,x_num,x_den,y_num,y_den"]
    for k, f in entries:
        scaled = f if scale == 1 else f.scale_axes(scale)
        for x, y in scaled.corners:
            lines.append(f"{k},{x.numerator},{x.denominator},{y.numerator},{y.denominator}")
    return "\n".join(lines) + "\n"


def areas_csv(areas: list[tuple[int, Fraction]]) -> str:
    lines = ["k,rho_num,rho_den"]
    for k, a in areas:
        lines.append(f"{k},{a.numerator},{a.denominator}")
    return "\n".join(lines) + "\n"
