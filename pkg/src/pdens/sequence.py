"""Periodic point sequences on the line.

A sequence is a finite motif of points inside one period cell, repeated with
a fixed period: ``{p_1, ..., p_m} + period * Z``.  All coordinates are exact
``fractions.Fraction`` values.  The cyclic vector of consecutive gaps
``d_i = p_{i+1} - p_i`` (wrapping via ``p_1 + period``) drives every density
computation, so most operations here are really gap-vector operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DuplicatePointError, EmptyMotifError, NonPositivePeriodError

# A cyclic vector of positive gaps; rotations describe the same cycle.
GapVector = tuple[Fraction, ...]


@dataclass(frozen=True)
class PeriodicSequence:
    """Immutable periodic sequence with motif sorted inside [0, period)."""

    period: Fraction
    motif: tuple[Fraction, ...]

    @property
    def motif_size(self) -> int:
        return len(self.motif)

    def gaps(self) -> GapVector:
        """Cyclic consecutive-gap vector; sums to the period."""
        cached = self.__dict__.get("_gaps")
        if cached is None:
            pts = self.motif
            out = [pts[i + 1] - pts[i] for i in range(len(pts) - 1)]
            out.append(pts[0] + self.period - pts[-1])
            cached = tuple(out)
            object.__setattr__(self, "_gaps", cached)
        return cached

    def scale_to_unit(self) -> PeriodicSequence:
        """Rescale so the period is 1 (divides every coordinate by the period)."""
        if self.period == 1:
            return self
        p = self.period
        return PeriodicSequence(Fraction(1), tuple(x / p for x in self.motif))

    def primitive_reduce(self) -> PeriodicSequence:
        """Re-express over the smallest true period.

        The represented point set in R is unchanged: if the gap vector is
        invariant under rotation by q (q | m), the set already repeats with
        period equal to the sum of the first q gaps.
        """
        g = self.gaps()
        m = len(g)
        for q in range(1, m):
            if m % q != 0:
                continue
            if all(g[i] == g[(i + q) % m] for i in range(m)):
                new_period = sum(g[:q], Fraction(0))
                return new_sequence(new_period, self.motif[:q])
        return self

    def is_generic(self) -> bool:
        """True when all gaps are pairwise distinct."""
        g = self.gaps()
        return len(set(g)) == len(g)

    def canonical_isometry_form(self) -> GapVector:
        """Lexicographically least gap vector over rotations and reversal.

        Translations rotate the gap cycle and reflections reverse it, so two
        unit-period sequences are isometric exactly when these forms match.
        Computed on the unit-scaled sequence so periods cancel.
        """
        g = self.scale_to_unit().gaps()
        m = len(g)
        rev = tuple(reversed(g))
        best = min(g[i:] + g[:i] for i in range(m))
        best_rev = min(rev[i:] + rev[:i] for i in range(m))
        return min(best, best_rev)

    def translate(self, offset: Fraction) -> PeriodicSequence:
        """Same point set shifted by offset (reduced into the cell)."""
        return new_sequence(self.period, [x + offset for x in self.motif])

    def reflect(self) -> PeriodicSequence:
        """Mirror image x -> -x, reduced into the cell."""
        return new_sequence(self.period, [-x for x in self.motif])


def new_sequence(period: Fraction | int, points) -> PeriodicSequence:
    """Validate and normalize a motif: reduce mod period, sort.

    Raises NonPositivePeriodError, EmptyMotifError, or DuplicatePointError
    (two points coinciding mod period signal an ill-formed motif).
    """
    period = Fraction(period)
    if period <= 0:
        raise NonPositivePeriodError(f"period must be positive, got {period}")
    pts = [Fraction(p) % period for p in points]
    if not pts:
        raise EmptyMotifError("motif needs at least one point")
    pts.sort()
    for a, b in zip(pts, pts[1:]):
        if a == b:
            raise DuplicatePointError(f"points coincide at {a} (mod {period})")
    return PeriodicSequence(period, tuple(pts))
