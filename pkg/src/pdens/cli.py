"""Command line front end.

Exit codes: 0 success (or equal), 1 honest mismatch (unequal fingerprints,
failed oracle check, non-invertible reconstruction input), 2 usage or
file/parse errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import coverage, density, reconstruct, serialize
from .errors import InconsistentFunctionError, NotGenericError


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple[str, ...]
    k_max: int | None
    primitive_reduce: bool
    rescale: bool
    output_format: str
    out_path: str | None
    seed: int | None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        k_max = getattr(args, "k_max", None)
        if k_max is not None and k_max < 0:
            raise ValueError("--k-max must be >= 0")
        return cls(
            command=args.command,
            inputs=tuple(getattr(args, "inputs", ())),
            k_max=k_max,
            primitive_reduce=not getattr(args, "no_primitive_reduce", False),
            rescale=not getattr(args, "no_rescale", False),
            output_format=getattr(args, "format", "json"),
            out_path=getattr(args, "out", None),
            seed=getattr(args, "seed", None),
        )


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_text(text)


def _prepared(cfg: RunConfig, path: str):
    seq = serialize.load_sequence_file(path)
    work = seq.primitive_reduce() if cfg.primitive_reduce else seq
    unit = work.scale_to_unit()
    ks = range((cfg.k_max if cfg.k_max is not None else unit.motif_size // 2) + 1)
    scale = Fraction(1) if cfg.rescale else work.period
    return work, unit, list(ks), scale


def cmd_compute(cfg: RunConfig) -> int:
    work, unit, ks, scale = _prepared(cfg, cfg.inputs[0])
    entries = [(k, density.density_function(unit, k)) for k in ks]
    if cfg.output_format == "csv":
        _emit(serialize.corners_csv(entries, axis_scale=scale), cfg.out_path)
        return 0
    if cfg.output_format == "svg":
        return _render(cfg, unit, entries, scale)
    fp = density.Fingerprint(
        motif_size=unit.motif_size,
        period=work.period,
        functions=tuple(f for _, f in entries),
        areas=tuple(density.density_area(unit, k) for k in ks),
    )
    _emit(serialize.dumps_canonical(serialize.fingerprint_to_doc(fp, axis_scale=scale)), cfg.out_path)
    return 0


def cmd_compare(cfg: RunConfig) -> int:
    fps = [
        density.fingerprint(serialize.load_sequence_file(p), reduce_primitive=cfg.primitive_reduce)
        for p in cfg.inputs
    ]
    diff = density.fingerprint_diff(fps[0], fps[1], compare_period=not cfg.rescale)
    if diff is None:
        print("fingerprints equal")
        return 0
    print(f"fingerprints differ: {diff}")
    return 1


def cmd_rho(cfg: RunConfig) -> int:
    work, unit, ks, scale = _prepared(cfg, cfg.inputs[0])
    areas = [(k, density.density_area(unit, k) * scale * scale) for k in ks]
    if cfg.output_format == "csv":
        _emit(serialize.areas_csv(areas), cfg.out_path)
        return 0
    doc = {
        "motif_size": unit.motif_size,
        "period": serialize.format_rational(work.period),
        "rho": [serialize.format_rational(a) for _, a in areas],
    }
    _emit(serialize.dumps_canonical(doc), cfg.out_path)
    return 0


def cmd_oracle_check(cfg: RunConfig) -> int:
    seq = serialize.load_sequence_file(cfg.inputs[0])
    unit = seq.scale_to_unit()
    extra = []
    if cfg.seed is not None:
        rng = random.Random(cfg.seed)
        for _ in range(8):
            den = rng.randint(1, 60)
            extra.append(Fraction(rng.randint(0, 2 * den), den))
    k_max = cfg.k_max if cfg.k_max is not None else unit.motif_size
    report = coverage.verify_densities(unit, k_max=k_max, extra_radii=extra)
    print(
        f"checked {report.comparisons} values (k = 0..{report.k_max}, "
        f"{report.radii_checked} radii)"
    )
    if report.ok:
        print("closed forms agree with the coverage sweep")
        return 0
    for k, t, predicted, measured in report.mismatches:
        print(f"mismatch at k={k}, t={t}: closed form {predicted}, sweep {measured}")
    return 1


def cmd_reconstruct(cfg: RunConfig) -> int:
    path = cfg.inputs[0]
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    fp = serialize.fingerprint_from_doc(doc)
    if len(fp.functions) < 2:
        raise ValueError("fingerprint stores no k = 1 function to invert")
    try:
        result = reconstruct.reconstruct_from_first_density(fp.functions[1], fp.motif_size)
    except (NotGenericError, InconsistentFunctionError) as exc:
        print(f"reconstruction failed: {exc}", file=sys.stderr)
        return 1
    _emit(serialize.dumps_canonical(serialize.sequence_to_doc(result.sequence)), cfg.out_path)
    return 0


def _render(cfg: RunConfig, unit, entries, scale: Fraction) -> int:
    from . import plotting

    if scale != 1:
        entries = [(k, f.scale_axes(scale)) for k, f in entries]
        labels = {"x_label": "radius", "y_label": "covered length in cell"}
    else:
        labels = {"x_label": "radius", "y_label": "fraction of cell"}
    title = f"coverage densities, m = {unit.motif_size}"
    if cfg.out_path is None:
        sys.stdout.write(plotting.render_density_svg_text(entries, title=title, **labels))
        return 0
    plotting.render_density_figure(entries, cfg.out_path, title=title, **labels)
    companion = Path(cfg.out_path).with_suffix(".csv")
    companion.write_text(serialize.corners_csv(entries))
    return 0


def cmd_plot(cfg: RunConfig) -> int:
    work, unit, ks, scale = _prepared(cfg, cfg.inputs[0])
    entries = [(k, density.density_function(unit, k)) for k in ks]
    return _render(cfg, unit, entries, scale)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdens",
        description="Exact coverage-density fingerprints of periodic point sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def seq_flags(p, *, formats=None):
        p.add_argument("--k-max", type=int, default=None, help="largest k to report")
        p.add_argument("--no-primitive-reduce", action="store_true",
                       help="keep a non-primitive period as given")
        p.add_argument("--no-rescale", action="store_true",
                       help="report in raw cell units instead of unit period")
        if formats:
            p.add_argument("--format", choices=formats, default="json")
        p.add_argument("--out", default=None, help="write output to this file")

    p = sub.add_parser("compute", help="density fingerprint of one sequence")
    p.add_argument("inputs", nargs=1, metavar="SEQ")
    seq_flags(p, formats=("json", "csv", "svg"))
    p.set_defaults(handler=cmd_compute)

    p = sub.add_parser("compare", help="compare two sequence fingerprints")
    # Tuple metavars on required positionals crash argparse's
    # missing-argument message, so both operands share one name.
    p.add_argument("inputs", nargs=2, metavar="SEQ")
    p.add_argument("--no-primitive-reduce", action="store_true")
    p.add_argument("--no-rescale", action="store_true")
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("rho", help="areas under the density functions")
    p.add_argument("inputs", nargs=1, metavar="SEQ")
    seq_flags(p, formats=("json", "csv"))
    p.set_defaults(handler=cmd_rho)

    p = sub.add_parser("oracle-check", help="check closed forms against the coverage sweep")
    p.add_argument("inputs", nargs=1, metavar="SEQ")
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument("--seed", type=int, default=None,
                   help="seed for extra random radii beyond the critical grid")
    p.set_defaults(handler=cmd_oracle_check)

    p = sub.add_parser("reconstruct", help="rebuild a generic sequence from a fingerprint's k=1 entry")
    p.add_argument("inputs", nargs=1, metavar="FINGERPRINT")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=cmd_reconstruct)

    p = sub.add_parser("plot", help="render the density functions as an SVG figure")
    p.add_argument("inputs", nargs=1, metavar="SEQ")
    seq_flags(p)
    p.set_defaults(handler=cmd_plot)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return args.handler(cfg)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
