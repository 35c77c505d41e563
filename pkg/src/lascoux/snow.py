"""Snow decorations of diagrams: dark clouds, snowflakes, and cell labels.

``snow`` marks, scanning rows top to bottom, the rightmost cell of each row
whose column holds no marked cell yet (a dark cloud), then drops a snowflake
on every empty position below a dark cloud in its column.  ``snow_star``
keeps only flakes in empty rows.  ``ghost_snow`` labels every cell column by
column from the right and drops a flake on each empty position that has a
cell above it (same column) whose label does not exceed the position's row.
The flake counts bound, and for several diagram families equal, the maximal
number of ghosts producible by ghost moves.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram, Position, rightmost_cells


@dataclass(frozen=True)
class SnowDecoration:
    """A diagram with dark clouds, snowflakes, and optional cell labels."""

    base: Diagram
    dark: frozenset[Position]
    flakes: frozenset[Position]
    labels: dict[Position, int] | None = field(default=None, compare=True)

    @property
    def flake_count(self) -> int:
        return len(self.flakes)


def _require_ghost_free(diagram: Diagram, operation: str) -> None:
    if diagram.ghosts:
        raise ValueError(f"{operation} requires a ghost-free diagram")


def snow(diagram: Diagram) -> SnowDecoration:
    """Dark clouds by top-down scan; flakes on empties below clouds."""
    _require_ghost_free(diagram, "snow")
    marked_cols: set[int] = set()
    dark: set[Position] = set()
    for r in sorted(diagram.nonempty_rows(), reverse=True):
        for pos in reversed(diagram.row_positions(r)):
            if pos[1] not in marked_cols:
                dark.add(pos)
                marked_cols.add(pos[1])
                break
    flakes: set[Position] = set()
    occupied = diagram.positions
    for r, c in dark:
        for rr in range(1, r):
            if (rr, c) not in occupied:
                flakes.add((rr, c))
    return SnowDecoration(diagram, frozenset(dark), frozenset(flakes))


def sf(diagram: Diagram) -> int:
    """Number of snowflakes in the snow decoration."""
    return snow(diagram).flake_count


def snow_star(diagram: Diagram) -> SnowDecoration:
    """The snow decoration with flakes in nonempty rows of the diagram removed."""
    deco = snow(diagram)
    nonempty = set(diagram.nonempty_rows())
    kept = frozenset(p for p in deco.flakes if p[0] not in nonempty)
    return SnowDecoration(diagram, deco.dark, kept)


def ghost_snow(diagram: Diagram) -> SnowDecoration:
    """Label cells column by column from the right; flakes where labels reach down.

    In the rightmost nonempty column every cell is labeled 1.  In an earlier
    column, cells whose row also appears in some later nonempty column keep
    their row as label; the remaining cells, taken top to bottom, get the
    largest row from the later columns that is below them and not yet used as
    a label in this column, or 1 if none is available.  An empty position
    gets a flake when some cell above it in its column has a label that is at
    most the position's row.
    """
    _require_ghost_free(diagram, "ghost_snow")
    cols = diagram.nonempty_columns()
    labels: dict[Position, int] = {}
    rows_by_col = {c: [r for r, _ in diagram.column_positions(c)] for c in cols}
    for i, c in enumerate(cols):
        rows_c = rows_by_col[c]
        if i == len(cols) - 1:
            for r in rows_c:
                labels[(r, c)] = 1
            continue
        later: set[int] = set()
        for cc in cols[i + 1 :]:
            later.update(rows_by_col[cc])
        used: set[int] = set()
        unshared: list[int] = []
        for r in rows_c:
            if r in later:
                labels[(r, c)] = r
                used.add(r)
            else:
                unshared.append(r)
        for r in sorted(unshared, reverse=True):
            candidates = [rr for rr in later if rr < r and rr not in used]
            label = max(candidates) if candidates else 1
            labels[(r, c)] = label
            used.add(label)
    flakes: set[Position] = set()
    occupied = diagram.positions
    for c in cols:
        rows_c = rows_by_col[c]
        top = rows_c[-1]
        for r in range(1, top):
            if (r, c) in occupied:
                continue
            if any(rr > r and labels[(rr, c)] <= r for rr in rows_c):
                flakes.add((r, c))
    return SnowDecoration(diagram, frozenset(), frozenset(flakes), labels)


def sf_hat(diagram: Diagram) -> int:
    """Number of snowflakes in the ghost-snow decoration."""
    return ghost_snow(diagram).flake_count


def reduction_kernel(diagram: Diagram) -> frozenset[Position]:
    """Plain cells that are not rightmost and have no rightmost cell above them."""
    _require_ghost_free(diagram, "reduction_kernel")
    rm = rightmost_cells(diagram)
    rm_rows_by_col: dict[int, list[int]] = {}
    for r, c in rm:
        rm_rows_by_col.setdefault(c, []).append(r)
    out: set[Position] = set()
    for r, c in diagram.plains:
        if (r, c) in rm:
            continue
        if any(rr > r for rr in rm_rows_by_col.get(c, ())):
            continue
        out.add((r, c))
    return frozenset(out)


def reduce(diagram: Diagram, target: Diagram) -> Diagram:
    """Remove the reduction kernel of ``diagram`` (as positions) from ``target``."""
    kernel = reduction_kernel(diagram)
    return Diagram(target.plains - kernel, target.ghosts - kernel)


def render_decoration(deco: SnowDecoration) -> str:
    """ASCII like the diagram itself, with dark clouds and flakes overlaid."""
    base = deco.base
    max_row = max(
        [base.max_row] + [r for r, _ in deco.dark] + [r for r, _ in deco.flakes]
    )
    max_col = max(
        [base.max_col] + [c for _, c in deco.dark] + [c for _, c in deco.flakes]
    )
    if max_row == 0:
        return ""
    lines = []
    for row in range(max_row, 0, -1):
        chars = []
        for col in range(1, max_col + 1):
            pos = (row, col)
            if pos in deco.dark:
                chars.append("●")
            elif pos in deco.flakes:
                chars.append("*")
            elif pos in base.plains:
                chars.append("O")
            elif pos in base.ghosts:
                chars.append("X")
            else:
                chars.append(".")
        lines.append("".join(chars) + "\n")
    return "".join(lines)


def decoration_record(deco: SnowDecoration) -> dict:
    """Structured record of a decoration; labels included when present."""
    record = {
        "dark": [list(p) for p in sorted(deco.dark)],
        "flakes": [list(p) for p in sorted(deco.flakes)],
    }
    if deco.labels is not None:
        record["labels"] = [[r, c, l] for (r, c), l in sorted(deco.labels.items())]
    return record
