"""First-principles coverage measurement (the check against closed forms).

For a radius t, every sequence point contributes the closed interval
[p - t, p + t].  Unrolling the finitely many translates that touch one
period cell and sweeping their endpoints yields the exact measure covered
with each multiplicity.  No closed-form shortcut is used here on purpose:
this module is deliberately slow and simple so it can referee the fast
constructions in density.py.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import density
from .errors import NegativeKError, NegativeRadiusError
from .sequence import PeriodicSequence


@dataclass(frozen=True)
class CoverageProfile:
    """Exact cell fraction covered with each multiplicity at one radius."""

    radius: Fraction
    measures: dict[int, Fraction]


def coverage_profile(seq: PeriodicSequence, radius) -> CoverageProfile:
    """Endpoint sweep over one period cell, in the sequence's own units."""
    t = Fraction(radius)
    if t < 0:
        raise NegativeRadiusError(f"radius must be >= 0, got {t}")
    period = seq.period
    deltas: dict[Fraction, int] = {}
    for p in seq.motif:
        n_lo = math.ceil((-t - p) / period)
        n_hi = math.floor((period + t - p) / period)
        for n in range(n_lo, n_hi + 1):
            a = max(Fraction(0), p + n * period - t)
            b = min(period, p + n * period + t)
            if b > a:
                deltas[a] = deltas.get(a, 0) + 1
                deltas[b] = deltas.get(b, 0) - 1
    measures: dict[int, Fraction] = {}
    depth = 0
    prev = Fraction(0)
    for x in sorted(deltas):
        if x > prev:
            measures[depth] = measures.get(depth, Fraction(0)) + (x - prev)
            prev = x
        depth += deltas[x]
    if prev < period:
        measures[depth] = measures.get(depth, Fraction(0)) + (period - prev)
    top = max(measures)
    full = {k: measures.get(k, Fraction(0)) / period for k in range(top + 1)}
    return CoverageProfile(t, full)


def coverage_fraction(seq: PeriodicSequence, k: int, radius) -> Fraction:
    """Measured fraction covered exactly k-fold (the value density.py predicts)."""
    if k < 0:
        raise NegativeKError(f"k must be >= 0, got {k}")
    return coverage_profile(seq, radius).measures.get(k, Fraction(0))


def critical_radii(seq: PeriodicSequence, k: int) -> tuple[Fraction, ...]:
    """Unit-scale sampling grid for k: closed-form corner x's plus midpoints.

    The grid comes from the construction under test; the values compared at
    each grid point come from the sweep alone.
    """
    xs = sorted({x for x, _ in density.density_function(seq, k).corners} | {Fraction(0)})
    mids = [(a + b) / 2 for a, b in zip(xs, xs[1:])]
    return tuple(sorted(set(xs) | set(mids)))


@dataclass(frozen=True)
class VerificationReport:
    motif_size: int
    k_max: int
    radii_checked: int
    comparisons: int
    mismatches: tuple[tuple[int, Fraction, Fraction, Fraction], ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_densities(
    seq: PeriodicSequence,
    k_max: int | None = None,
    extra_radii=(),
    density_fn=None,
) -> VerificationReport:
    """Compare closed-form values against the sweep at every critical radius.

    One profile per radius settles all k at once (the profile carries every
    multiplicity anyway).  density_fn is swappable so a corrupted construction
    can be shown to trip the check.
    """
    unit = seq.scale_to_unit()
    m = unit.motif_size
    if k_max is None:
        k_max = m
    fn = density_fn if density_fn is not None else density.density_function
    functions = {k: fn(unit, k) for k in range(k_max + 1)}
    grid: set[Fraction] = {Fraction(r) for r in extra_radii}
    for k in range(k_max + 1):
        xs = sorted({x for x, _ in functions[k].corners} | {Fraction(0)})
        grid.update(xs)
        grid.update((a + b) / 2 for a, b in zip(xs, xs[1:]))
    mismatches = []
    for t in sorted(grid):
        profile = coverage_profile(unit, t)
        for k in range(k_max + 1):
            predicted = functions[k].value_at(t)
            measured = profile.measures.get(k, Fraction(0))
            if predicted != measured:
                mismatches.append((k, t, predicted, measured))
    return VerificationReport(
        motif_size=m,
        k_max=k_max,
        radii_checked=len(grid),
        comparisons=len(grid) * (k_max + 1),
        mismatches=tuple(mismatches),
    )
