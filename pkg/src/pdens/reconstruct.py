"""Rebuild a generic sequence from its 1-fold density function.

The 1-fold density of a unit-period sequence is the sum of one trapezoid per
point, built from the pair of gaps flanking that point.  Its slope-change
measure is therefore readable gap by gap: every gap d contributes -4 at d/2
(it flanks two points), and every cyclically adjacent pair sum contributes
+2 at half the sum.  Reconstruction inverts that:

1. read (x, slope change / 2) off the corners; z < -2 means a tied gap, so
   the sequence was not generic;
2. decide which corners carry a gap (z <= -1 forces one; z >= 1 may hide a
   gap under pair sums), constrained by the gap count m and gap total 1;
3. walk the pair sums into a single cycle through all m gaps;
4. verify the rebuilt sequence reproduces the input exactly.

Steps 2 and 3 backtrack deterministically (sorted choice order), so the
output is a pure function of the input.  A gap whose -4 is exactly cancelled
by two colliding pair sums leaves no corner at all; such inputs (never seen
at random) fail step 3 and are reported as inconsistent rather than guessed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from . import density
from .errors import InconsistentFunctionError, NotGenericError
from .pwl import PiecewiseLinear
from .sequence import PeriodicSequence, new_sequence


@dataclass(frozen=True)
class ReconstructionResult:
    sequence: PeriodicSequence
    pairs: tuple[tuple[Fraction, Fraction], ...]


def _slope_changes(f: PiecewiseLinear, m: int) -> list[tuple[Fraction, int]]:
    cs = f.corners
    if not cs or cs[0] != (0, 0) or cs[-1][1] != 0:
        raise InconsistentFunctionError("function must rise from (0, 0) and return to 0")
    slopes = [(y1 - y0) / (x1 - x0) for (x0, y0), (x1, y1) in zip(cs, cs[1:])]
    slopes.append(Fraction(0))
    if slopes[0] != 2 * m:
        raise InconsistentFunctionError(
            f"initial gradient {slopes[0]} does not match 2m = {2 * m}"
        )
    out = []
    for (x, _), before, after in zip(cs[1:], slopes, slopes[1:]):
        w = after - before
        if w.denominator != 1 or w.numerator % 2:
            raise InconsistentFunctionError(f"slope change {w} at {x} is not an even integer")
        out.append((x, int(w) // 2))
    return out


def _assign_gaps(points: list[tuple[Fraction, int]], m: int):
    """Yield gap index sets: z <= -1 forces a gap, z >= 1 may hide one."""
    forced = []
    optional = []
    for i, (x, z) in enumerate(points):
        if z < -2:
            raise NotGenericError(f"slope drops by {-2 * z} at {x}: tied gaps")
        if z in (-1, -2):
            forced.append(i)
        else:
            optional.append(i)
    need = m - len(forced)
    if need < 0:
        raise InconsistentFunctionError("more forced gaps than the motif size allows")
    base = sum((2 * points[i][0] for i in forced), Fraction(0))

    def search(pos: int, left: int, total: Fraction):
        if total > 1:
            return
        if left == 0:
            if total == 1:
                yield []
            return
        if len(optional) - pos < left:
            return
        i = optional[pos]
        for chosen in search(pos + 1, left - 1, total + 2 * points[i][0]):
            yield [i] + chosen
        yield from search(pos + 1, left, total)

    for extra in search(0, need, base):
        yield sorted(forced + extra)


def _walk_cycle(gaps: list[Fraction], sums: Counter) -> list[Fraction] | None:
    """Arrange the gaps in a cycle whose adjacent sums match the multiset."""
    m = len(gaps)
    gap_set = set(gaps)
    start = min(gaps)
    path = [start]
    used = {start}

    def step() -> bool:
        v = path[-1]
        if len(path) == m:
            closing = v + path[0]
            return sums[closing] == 1 and sum(sums.values()) == 1
        for s in sorted(x for x, c in sums.items() if c > 0):
            u = s - v
            if u not in gap_set or u in used:
                continue
            sums[s] -= 1
            path.append(u)
            used.add(u)
            if step():
                return True
            sums[s] += 1
            path.pop()
            used.remove(u)
        return False

    if m == 1:
        return path if sums == Counter({2 * start: 1}) else None
    return path if step() else None


def reconstruct_from_first_density(f: PiecewiseLinear, m: int) -> ReconstructionResult:
    """Invert the 1-fold density of a generic unit-period sequence of m points."""
    if m < 1:
        raise InconsistentFunctionError(f"motif size must be >= 1, got {m}")
    points = _slope_changes(f, m)
    if sum(z for _, z in points) != -m:
        raise InconsistentFunctionError("slope changes do not balance a closed support")
    for idx_set in _assign_gaps(points, m):
        chosen = set(idx_set)
        gaps = [2 * points[i][0] for i in idx_set]
        sums = Counter()
        for i, (x, z) in enumerate(points):
            count = z + (2 if i in chosen else 0)
            if count < 0:
                break
            if count:
                sums[2 * x] = count
        else:
            if sum(sums.values()) != m:
                continue
            cycle = _walk_cycle(gaps, sums)
            if cycle is None:
                continue
            pts = [Fraction(0)]
            for d in cycle[:-1]:
                pts.append(pts[-1] + d)
            seq = new_sequence(1, pts)
            if density.density_function(seq, 1) != f:
                continue
            pairs = tuple((cycle[i - 1], cycle[i]) for i in range(m))
            return ReconstructionResult(seq, pairs)
    raise InconsistentFunctionError(
        "no generic sequence has this function as its 1-fold density"
    )


def verify_completeness(seq: PeriodicSequence) -> ReconstructionResult:
    """Round-trip check: rebuild seq from its own 1-fold density.

    Raises NotGenericError for tied gaps, InconsistentFunctionError when the
    rebuilt sequence is not isometric to the input (which would disprove the
    construction, so it doubles as a self test).
    """
    unit = seq.scale_to_unit()
    if not unit.is_generic():
        raise NotGenericError("sequence has tied gaps; its 1-fold density is not invertible here")
    result = reconstruct_from_first_density(density.density_function(unit, 1), unit.motif_size)
    if result.sequence.canonical_isometry_form() != unit.canonical_isometry_form():
        raise InconsistentFunctionError("round trip produced a non-isometric sequence")
    return result
