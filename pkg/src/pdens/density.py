"""Closed-form density functions of a periodic sequence.

The k-fold density function maps radius t to the fraction of one period cell
covered by exactly k of the closed intervals [p - t, p + t] around sequence
points.  On the unit-period scale every such function is piecewise linear:

* k = 0: corners (0, 1) then (d/2, 1 - sum(smaller gaps) - remaining*d) over
  the sorted gaps d, reaching 0 at half the largest gap.
* 1 <= k <= m: the sum of m trapezoids, one per gap window: the i-th has
  outer gaps (d_{i-1}, d_{i+k-1}) around the span s = d_i + ... + d_{i+k-2}
  (cyclic indices, empty span for k = 1).
* k > m: the k - m fold repeats half a period later, so the function is the
  reduced one shifted right by a half period per wrap (a multiplicity that
  high forces some single orbit to cover a point multiple times, which is
  impossible at smaller radii, so the shifted function is exact everywhere).

The fingerprint stores k = 0 .. floor(m/2); the mirror identity
f_{m-k}(1/2 - t) = f_k(t) recovers the rest, which symmetry_report checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import KOutOfRangeError, NegativeKError
from .pwl import PiecewiseLinear, TrapezoidTriple
from .sequence import GapVector, PeriodicSequence

HALF = Fraction(1, 2)


def trapezoid_triples(seq: PeriodicSequence, k: int) -> tuple[TrapezoidTriple, ...]:
    """The m trapezoid triples (left gap, span, right gap) for 1 <= k <= m.

    Expressed in the sequence's own length units (scale-agnostic).
    """
    g = seq.gaps()
    m = len(g)
    if not 1 <= k <= m:
        raise KOutOfRangeError(f"k must lie in 1..{m}, got {k}")
    pref = [Fraction(0)]
    for v in g:
        pref.append(pref[-1] + v)
    total = pref[m]
    out = []
    for i in range(m):
        end = i + k - 1
        span = pref[end] - pref[i] if end <= m else total - pref[i] + pref[end - m]
        out.append(TrapezoidTriple(g[i - 1], span, g[(i + k - 1) % m]))
    return tuple(out)


def _density_zero(gaps: GapVector) -> PiecewiseLinear:
    m = len(gaps)
    corners: list[tuple[Fraction, Fraction]] = [(Fraction(0), Fraction(1))]
    eaten = Fraction(0)
    for i, d in enumerate(sorted(gaps)):
        corners.append((d / 2, 1 - eaten - (m - i) * d))
        eaten += d
    return PiecewiseLinear.from_corners(corners)


def _sum_trapezoids(gaps: GapVector, k: int) -> PiecewiseLinear:
    """Event sweep over the gaps' common denominator.

    Each trapezoid contributes four slope-change events (+2, -2, -2, +2 at
    twice its corner x); accumulating them over integer coordinates yields
    the canonical corner list directly and exactly.
    """
    denom = lcm(*(d.denominator for d in gaps))
    ig = [d.numerator * (denom // d.denominator) for d in gaps]
    m = len(ig)
    pref = [0]
    for v in ig:
        pref.append(pref[-1] + v)
    total = pref[m]
    events: dict[int, int] = {}
    for i in range(m):
        end = i + k - 1
        span = pref[end] - pref[i] if end <= m else total - pref[i] + pref[end - m]
        left, right = ig[i - 1], ig[(i + k - 1) % m]
        lo, hi = (left, right) if left <= right else (right, left)
        for x, ds in ((span, 2), (span + lo, -2), (span + hi, -2), (span + left + right, 2)):
            events[x] = events.get(x, 0) + ds
    xs = sorted(x for x, ds in events.items() if ds != 0)
    corner_den = 2 * denom
    corners = []
    slope = 0
    y = 0
    prev = 0
    for x in xs:
        y += slope * (x - prev)
        corners.append((Fraction(x, corner_den), Fraction(y, corner_den)))
        slope += events[x]
        prev = x
    return PiecewiseLinear(tuple(corners))


def density_function(seq: PeriodicSequence, k: int) -> PiecewiseLinear:
    """The k-fold coverage density of seq, on the unit-period scale."""
    if k < 0:
        raise NegativeKError(f"k must be >= 0, got {k}")
    unit = seq.scale_to_unit()
    m = unit.motif_size
    if k == 0:
        return _density_zero(unit.gaps())
    if k <= m:
        return _sum_trapezoids(unit.gaps(), k)
    reduced = (k - 1) % m + 1
    wraps = (k - reduced) // m
    return density_function(unit, reduced).shift_right(Fraction(wraps, 2))


def density_area(seq: PeriodicSequence, k: int) -> Fraction:
    """Area under the k-fold density: quarter sum of squared gaps for k = 0,
    half the sum of k-apart gap products otherwise (indices cyclic).

    Sums run over integer numerators against the gaps' common denominator;
    one Fraction at the end keeps this cheap for large motifs.
    """
    if k < 0:
        raise NegativeKError(f"k must be >= 0, got {k}")
    g = seq.scale_to_unit().gaps()
    m = len(g)
    denom = lcm(*(d.denominator for d in g))
    ig = [d.numerator * (denom // d.denominator) for d in g]
    if k == 0:
        return Fraction(sum(v * v for v in ig), 4 * denom * denom)
    return Fraction(sum(ig[i - 1] * ig[(i + k - 1) % m] for i in range(m)), 2 * denom * denom)


@dataclass(frozen=True)
class DensityReport:
    """Everything the CLI reports about one multiplicity k."""

    k: int
    density: PiecewiseLinear
    area: Fraction
    triples: tuple[TrapezoidTriple, ...]


def density_report(seq: PeriodicSequence, k: int) -> DensityReport:
    unit = seq.scale_to_unit()
    triples = trapezoid_triples(unit, k) if 1 <= k <= unit.motif_size else ()
    return DensityReport(k, density_function(unit, k), density_area(unit, k), triples)


@dataclass(frozen=True)
class Fingerprint:
    """Stored head of the density family: k = 0 .. floor(m/2).

    period is the (possibly primitive-reduced) raw period, kept so reports
    can present corners in original length units.
    """

    motif_size: int
    period: Fraction
    functions: tuple[PiecewiseLinear, ...]
    areas: tuple[Fraction, ...]


def fingerprint(seq: PeriodicSequence, *, reduce_primitive: bool = True) -> Fingerprint:
    if reduce_primitive:
        seq = seq.primitive_reduce()
    unit = seq.scale_to_unit()
    m = unit.motif_size
    ks = range(m // 2 + 1)
    return Fingerprint(
        motif_size=m,
        period=seq.period,
        functions=tuple(density_function(unit, k) for k in ks),
        areas=tuple(density_area(unit, k) for k in ks),
    )


def fingerprint_diff(
    a: Fingerprint, b: Fingerprint, *, compare_period: bool = False
) -> str | None:
    """None when equal, else a one-line description of the first difference."""
    if a.motif_size != b.motif_size:
        return f"motif sizes differ: {a.motif_size} vs {b.motif_size}"
    if compare_period and a.period != b.period:
        return f"periods differ: {a.period} vs {b.period}"
    for k, (fa, fb) in enumerate(zip(a.functions, b.functions)):
        if fa == fb:
            continue
        for i, (ca, cb) in enumerate(zip(fa.corners, fb.corners)):
            if ca != cb:
                return f"k={k}: corner {i} differs: {ca} vs {cb}"
        n = min(len(fa.corners), len(fb.corners))
        return f"k={k}: corner {n} differs: corner counts {len(fa.corners)} vs {len(fb.corners)}"
    return None


def fingerprints_equal(
    a: PeriodicSequence,
    b: PeriodicSequence,
    *,
    reduce_primitive: bool = True,
    rescale: bool = True,
) -> bool:
    fa = fingerprint(a, reduce_primitive=reduce_primitive)
    fb = fingerprint(b, reduce_primitive=reduce_primitive)
    return fingerprint_diff(fa, fb, compare_period=not rescale) is None


def symmetry_report(seq: PeriodicSequence) -> tuple[tuple[int, bool], ...]:
    """Check f_{m-k}(1/2 - t) = f_k(t) for k = 0 .. floor(m/2).

    The k = 0 partner f_m keeps climbing past the half period, so it is
    clipped to [0, 1/2] before reflecting (the identity lives there).
    """
    unit = seq.scale_to_unit()
    m = unit.motif_size
    out = []
    for k in range(m // 2 + 1):
        mirrored = density_function(unit, m - k).clip_above(HALF).reflect_about(HALF)
        out.append((k, mirrored == density_function(unit, k)))
    return tuple(out)
