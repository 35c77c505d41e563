"""Diagram family generators and recognizers.

Families: key diagrams (rows left-justified), lock diagrams (rows
right-justified to a common wall), skew diagrams (rows shifted by the longer
rows below and by empty rows), and checkered diagrams.  Recognizers cover
generalized skew diagrams, the lock subfamily whose ghost capacity a snow
variant computes, and the column-partition certificate that bounds ghost
capacity by the flake count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagram import Diagram, Position, flat, key_closure, restrict_columns
from .snow import snow

WeakComposition = Sequence[int]


def _check_composition(alpha: WeakComposition) -> tuple[int, ...]:
    parts = tuple(alpha)
    for a in parts:
        if not isinstance(a, int) or isinstance(a, bool) or a < 0:
            raise ValueError(f"composition parts must be integers >= 0, got {a!r}")
    return parts


def key_diagram(alpha: WeakComposition) -> Diagram:
    """Row i holds cells in columns 1..alpha_i."""
    parts = _check_composition(alpha)
    return Diagram.of((i, j) for i, a in enumerate(parts, 1) for j in range(1, a + 1))


def lock_diagram(alpha: WeakComposition) -> Diagram:
    """Row i holds cells in columns N-alpha_i+1..N where N = max(alpha)."""
    parts = _check_composition(alpha)
    n = max(parts, default=0)
    return Diagram.of(
        (i, j) for i, a in enumerate(parts, 1) for j in range(n - a + 1, n + 1)
    )


def skew_diagram(alpha: WeakComposition) -> Diagram:
    """Left-justified rows, shifted so each nonzero row clears the previous one.

    Row j (alpha_j > 0) starts one column right per empty row below it, plus a
    cumulative shift of max(alpha_i - z, 0) whenever the previous nonzero row i
    is longer (z = number of empty rows strictly between i and j).
    """
    parts = _check_composition(alpha)
    nonzero = [j for j, a in enumerate(parts, 1) if a > 0]
    cells: set[Position] = set()
    shift = 0
    prev = None
    for j in nonzero:
        if prev is not None and parts[prev - 1] > parts[j - 1]:
            zeros_between = sum(1 for t in range(prev + 1, j) if parts[t - 1] == 0)
            shift += max(parts[prev - 1] - zeros_between, 0)
        zeros_before = sum(1 for t in range(1, j) if parts[t - 1] == 0)
        start = 1 + shift + zeros_before
        cells.update((j, start + t) for t in range(parts[j - 1]))
        prev = j
    return Diagram.of(cells)


def checkered_diagram(n: int, parity: str) -> Diagram:
    """Cells of the n-by-n board whose row+column sum has the given parity."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if parity not in ("even", "odd"):
        raise ValueError(f'parity must be "even" or "odd", got {parity!r}')
    want = 0 if parity == "even" else 1
    return Diagram.of(
        (r, c)
        for r in range(1, n + 1)
        for c in range(1, n + 1)
        if (r + c) % 2 == want
    )


def is_key(diagram: Diagram) -> bool:
    """True when the diagram is ghost-free with every row a prefix 1..k."""
    if diagram.ghosts:
        return False
    for r in diagram.nonempty_rows():
        cols = [c for _, c in diagram.row_positions(r)]
        if cols != list(range(1, len(cols) + 1)):
            return False
    return True


def is_lock(diagram: Diagram) -> bool:
    """True when ghost-free with every row right-justified against max column."""
    if diagram.ghosts:
        return False
    if not diagram.plains:
        return True
    n = diagram.max_col
    for r in diagram.nonempty_rows():
        cols = [c for _, c in diagram.row_positions(r)]
        if cols != list(range(n - len(cols) + 1, n + 1)):
            return False
    return True


def _lock_parts(diagram: Diagram) -> tuple[int, ...]:
    """The composition alpha with lock_diagram(alpha) == diagram."""
    if not is_lock(diagram):
        raise ValueError("diagram is not a lock diagram")
    counts = [0] * diagram.max_row
    for r, _ in diagram.plains:
        counts[r - 1] += 1
    return tuple(counts)


@dataclass(frozen=True)
class GenSkewCheck:
    """Outcome of the generalized-skew test; falsy with a witness on failure."""

    ok: bool
    violation: tuple[int, int] | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_generalized_skew(diagram: Diagram) -> GenSkewCheck:
    """Each row an unbroken run of cells; both row endpoints weakly increase upward."""
    if diagram.ghosts:
        return GenSkewCheck(False, None, "diagram contains ghost cells")
    rows = diagram.nonempty_rows()
    ends: list[tuple[int, int, int]] = []
    for r in rows:
        cols = [c for _, c in diagram.row_positions(r)]
        lo, hi = cols[0], cols[-1]
        if cols != list(range(lo, hi + 1)):
            return GenSkewCheck(False, (r, r), "row has a gap between its endpoints")
        ends.append((r, lo, hi))
    for (r1, lo1, hi1), (r2, lo2, hi2) in zip(ends, ends[1:]):
        if lo1 > lo2:
            return GenSkewCheck(False, (r1, r2), "left endpoints decrease upward")
        if hi1 > hi2:
            return GenSkewCheck(False, (r1, r2), "right endpoints decrease upward")
    return GenSkewCheck(True)


def lockmain_qualifies(diagram: Diagram) -> bool:
    """At most one high row (r_i > i) may lack a dark cloud in the snow diagram.

    Input must be a lock diagram.
    """
    if not is_lock(diagram):
        raise ValueError("lockmain_qualifies requires a lock diagram")
    rows = diagram.nonempty_rows()
    high = [r for i, r in enumerate(rows, 1) if r > i]
    cloud_rows = {r for r, _ in snow(diagram).dark}
    cloudless = [r for r in high if r not in cloud_rows]
    return len(cloudless) <= 1


@dataclass(frozen=True)
class PartitionReport:
    """Outcome of the column-partition certificate check."""

    ok: bool
    failing_clause: str | None = None
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_column_partition(
    diagram: Diagram, blocks: Sequence[Iterable[int]]
) -> PartitionReport:
    """Check the three clauses that make a column partition certify MaxG <= sf.

    (a) each block restricts-and-flattens to a key diagram, or to a generalized
        skew diagram whose dark clouds survive the key closure unchanged;
    (b) a column has a dark cloud within its block iff it has one in the whole
        diagram;
    (c) a block cloud sits weakly above the whole-diagram cloud in its column,
        with cells of the diagram filling every position between the two.
    """
    if diagram.ghosts:
        raise ValueError("verify_column_partition requires a ghost-free diagram")
    block_sets = [frozenset(b) for b in blocks]
    counted: list[int] = []
    for b in block_sets:
        counted.extend(b)
    if sorted(counted) != diagram.nonempty_columns():
        raise ValueError("blocks must partition the nonempty columns exactly")

    whole = snow(diagram)
    whole_dark_by_col: dict[int, int] = {c: r for r, c in whole.dark}

    for i, block in enumerate(block_sets):
        res = restrict_columns(diagram, block)
        part = snow(res)
        part_dark_by_col: dict[int, int] = {c: r for r, c in part.dark}

        flattened = flat(res)
        if not is_key(flattened):
            gs = is_generalized_skew(flattened)
            if not gs:
                return PartitionReport(
                    False, "a", f"block {i + 1}: flattened restriction is neither key "
                    f"nor generalized skew ({gs.reason})"
                )
            if snow(key_closure(flattened)).dark != snow(flattened).dark:
                return PartitionReport(
                    False, "a", f"block {i + 1}: dark clouds change under key closure"
                )

        for c in sorted(block):
            if (c in part_dark_by_col) != (c in whole_dark_by_col):
                return PartitionReport(
                    False, "b", f"block {i + 1}, column {c}: dark-cloud presence differs "
                    "between the block restriction and the whole diagram"
                )
            if c in part_dark_by_col:
                r = part_dark_by_col[c]
                r_hat = whole_dark_by_col[c]
                if r_hat > r:
                    return PartitionReport(
                        False, "c", f"column {c}: whole-diagram cloud row {r_hat} sits "
                        f"above block cloud row {r}"
                    )
                for rr in range(r_hat, r + 1):
                    if (rr, c) not in diagram.plains:
                        return PartitionReport(
                            False, "c", f"column {c}: position ({rr}, {c}) between the "
                            "two clouds is empty"
                        )
    return PartitionReport(True)
