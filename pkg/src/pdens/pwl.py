"""Exact piecewise linear functions on [0, +inf).

A function is stored as a canonical corner list: strictly increasing rational
x, nonnegative rational y.  Between corners the value interpolates linearly;
outside the corner range it is 0 (so a first corner with y > 0 encodes a jump
up from 0, and the value drops back to 0 just after the last corner).
Canonical form makes equality a plain tuple comparison: corners are sorted,
deduplicated, collinear interiors merged, and redundant zero corners stripped.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .errors import InconsistentCornerError, SupportExceedsReflectionError

Corner = tuple[Fraction, Fraction]


def _canonical(corners: list[Corner]) -> tuple[Corner, ...]:
    corners.sort(key=lambda c: c[0])
    out: list[Corner] = []
    for x, y in corners:
        if x < 0 or y < 0:
            raise InconsistentCornerError(f"corner ({x}, {y}) outside the first quadrant")
        if out and out[-1][0] == x:
            if out[-1][1] != y:
                raise InconsistentCornerError(
                    f"corners share x = {x} with different values {out[-1][1]} and {y}"
                )
            continue
        out.append((x, y))

    def strip_zeros(cs: list[Corner]) -> list[Corner]:
        while len(cs) >= 2 and cs[0][1] == 0 and cs[1][1] == 0:
            cs.pop(0)
        while len(cs) >= 2 and cs[-1][1] == 0 and cs[-2][1] == 0:
            cs.pop()
        if len(cs) == 1 and cs[0][1] == 0:
            cs.pop()
        return cs

    out = strip_zeros(out)
    merged: list[Corner] = []
    for c in out:
        while len(merged) >= 2:
            (x0, y0), (x1, y1) = merged[-2], merged[-1]
            # drop the middle corner when it lies on the chord to c
            if (y1 - y0) * (c[0] - x0) == (c[1] - y0) * (x1 - x0):
                merged.pop()
            else:
                break
        merged.append(c)
    return tuple(strip_zeros(merged))


@dataclass(frozen=True)
class PiecewiseLinear:
    corners: tuple[Corner, ...]

    @classmethod
    def from_corners(cls, corners: Iterable[tuple]) -> PiecewiseLinear:
        cs = [(Fraction(x), Fraction(y)) for x, y in corners]
        return cls(_canonical(cs))

    @classmethod
    def zero(cls) -> PiecewiseLinear:
        return cls(())

    def is_zero(self) -> bool:
        return not self.corners

    def value_at(self, t) -> Fraction:
        t = Fraction(t)
        cs = self.corners
        if not cs or t < cs[0][0] or t > cs[-1][0]:
            return Fraction(0)
        i = bisect_right([c[0] for c in cs], t) - 1
        x0, y0 = cs[i]
        if t == x0 or i + 1 == len(cs):
            return y0
        x1, y1 = cs[i + 1]
        return y0 + (y1 - y0) * (t - x0) / (x1 - x0)

    def __add__(self, other: PiecewiseLinear) -> PiecewiseLinear:
        return sum_functions([self, other])

    def integral(self) -> Fraction:
        total = Fraction(0)
        cs = self.corners
        for (x0, y0), (x1, y1) in zip(cs, cs[1:]):
            total += (y0 + y1) * (x1 - x0) / 2
        return total

    def shift_right(self, offset) -> PiecewiseLinear:
        offset = Fraction(offset)
        if offset < 0:
            raise InconsistentCornerError("shift_right needs a nonnegative offset")
        return PiecewiseLinear(tuple((x + offset, y) for x, y in self.corners))

    def shift_left(self, offset) -> PiecewiseLinear:
        """t -> value at (t + offset); whatever lay below the offset is cropped."""
        offset = Fraction(offset)
        cs = [(x - offset, y) for x, y in self.corners if x > offset]
        cs.insert(0, (Fraction(0), self.value_at(offset)))
        return PiecewiseLinear(_canonical(cs))

    def clip_above(self, cutoff) -> PiecewiseLinear:
        """Zero the function beyond the cutoff, keeping the boundary value."""
        cutoff = Fraction(cutoff)
        cs = [(x, y) for x, y in self.corners if x < cutoff]
        cs.append((cutoff, self.value_at(cutoff)))
        return PiecewiseLinear(_canonical(cs))

    def reflect_about(self, axis) -> PiecewiseLinear:
        axis = Fraction(axis)
        cs = self.corners
        if cs and cs[-1][0] > axis:
            raise SupportExceedsReflectionError(
                f"support reaches {cs[-1][0]}, beyond the reflection axis {axis}"
            )
        return PiecewiseLinear(_canonical([(axis - x, y) for x, y in cs]))

    def scale_axes(self, factor) -> PiecewiseLinear:
        """Scale both axes by factor > 0 (unit-cell values to raw-cell values)."""
        factor = Fraction(factor)
        if factor <= 0:
            raise InconsistentCornerError("axis scale factor must be positive")
        return PiecewiseLinear(tuple((x * factor, y * factor) for x, y in self.corners))


def sum_functions(functions: Iterable[PiecewiseLinear]) -> PiecewiseLinear:
    """Exact pointwise sum.

    The corner-list form cannot carry a jump in the interior of the combined
    support, so inputs whose jump (first corner with y > 0, or nonzero last
    value) would land strictly inside another input's support are rejected.
    """
    fs = [f for f in functions if f.corners]
    if not fs:
        return PiecewiseLinear.zero()
    if len(fs) == 1:
        return fs[0]
    lo = min(f.corners[0][0] for f in fs)
    hi = max(f.corners[-1][0] for f in fs)
    for f in fs:
        if f.corners[0][1] > 0 and f.corners[0][0] > lo:
            raise InconsistentCornerError("sum would hide a jump inside its support")
        if f.corners[-1][1] > 0 and f.corners[-1][0] < hi:
            raise InconsistentCornerError("sum would hide a drop inside its support")
    xs = sorted({x for f in fs for x, _ in f.corners})
    corners = [(x, sum((f.value_at(x) for f in fs), Fraction(0))) for x in xs]
    return PiecewiseLinear(_canonical(corners))


class TrapezoidTriple(NamedTuple):
    """(left gap, spanned length, right gap) describing one trapezoid.

    The outer entries are swappable: they enter only through min, max and sum.
    """

    left: Fraction
    span: Fraction
    right: Fraction

    def normalized(self) -> TrapezoidTriple:
        lo, hi = sorted((self.left, self.right))
        return TrapezoidTriple(lo, self.span, hi)


def trapezoid(triple: TrapezoidTriple) -> PiecewiseLinear:
    """Trapezoid with gradient +2 up to height min(left, right), then -2 down.

    Corners: (span/2, 0), ((min+span)/2, d), ((max+span)/2, d),
    ((left+span+right)/2, 0) with d = min(left, right).  Collapses to a
    triangle when left == right.
    """
    left, span, right = (Fraction(v) for v in triple)
    if left <= 0 or right <= 0 or span < 0:
        raise InconsistentCornerError(f"invalid trapezoid triple {triple}")
    lo, hi = min(left, right), max(left, right)
    return PiecewiseLinear.from_corners(
        [
            (span / 2, 0),
            ((lo + span) / 2, lo),
            ((hi + span) / 2, lo),
            ((left + span + right) / 2, 0),
        ]
    )
