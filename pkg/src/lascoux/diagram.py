"""Cell diagrams: finite sets of plain and ghost cells at positive coordinates.

Coordinates are 1-based (row, column) pairs with row 1 at the bottom.  A
position holds at most one cell, which is either plain (rendered ``O``) or a
ghost (rendered ``X``).  Diagrams are immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

Position = tuple[int, int]

PLAIN = "plain"
GHOST = "ghost"


class ParseError(ValueError):
    """Raised when diagram text or records cannot be parsed."""


def _check_position(pos: object, context: str) -> Position:
    if (
        not isinstance(pos, tuple)
        or len(pos) != 2
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in pos)
    ):
        raise ValueError(f"{context}: position must be a pair of integers, got {pos!r}")
    r, c = pos
    if r < 1 or c < 1:
        raise ValueError(f"{context}: coordinates must be >= 1, got ({r}, {c})")
    return (r, c)


@dataclass(frozen=True)
class Diagram:
    """An immutable diagram of plain cells and ghost cells."""

    plains: frozenset[Position]
    ghosts: frozenset[Position]

    def __post_init__(self) -> None:
        for pos in self.plains:
            _check_position(pos, "plain cell")
        for pos in self.ghosts:
            _check_position(pos, "ghost cell")
        overlap = self.plains & self.ghosts
        if overlap:
            raise ValueError(f"position holds both a plain and a ghost cell: {sorted(overlap)}")

    @staticmethod
    def of(plains: Iterable[Position] = (), ghosts: Iterable[Position] = ()) -> Diagram:
        return Diagram(frozenset(plains), frozenset(ghosts))

    @staticmethod
    def empty() -> Diagram:
        return Diagram(frozenset(), frozenset())

    @property
    def positions(self) -> frozenset[Position]:
        """All occupied positions, regardless of kind."""
        return self.plains | self.ghosts

    def kind_at(self, pos: Position) -> str | None:
        if pos in self.plains:
            return PLAIN
        if pos in self.ghosts:
            return GHOST
        return None

    def is_ghost_free(self) -> bool:
        return not self.ghosts

    def row_positions(self, row: int) -> list[Position]:
        """Occupied positions in ``row`` (both kinds), sorted by column."""
        return sorted(p for p in self.positions if p[0] == row)

    def column_positions(self, col: int) -> list[Position]:
        """Occupied positions in column ``col`` (both kinds), sorted by row."""
        return sorted(p for p in self.positions if p[1] == col)

    def nonempty_rows(self) -> list[int]:
        return sorted({r for r, _ in self.positions})

    def nonempty_columns(self) -> list[int]:
        return sorted({c for _, c in self.positions})

    @property
    def max_row(self) -> int:
        return max((r for r, _ in self.positions), default=0)

    @property
    def max_col(self) -> int:
        return max((c for _, c in self.positions), default=0)

    def __len__(self) -> int:
        return len(self.plains) + len(self.ghosts)

    def canonical(self) -> tuple[tuple[int, int, str], ...]:
        """Canonical ordering: cells sorted by (row, column, kind)."""
        cells = [(r, c, PLAIN) for r, c in self.plains]
        cells += [(r, c, GHOST) for r, c in self.ghosts]
        return tuple(sorted(cells))

    def __str__(self) -> str:
        return render_ascii(self)


def parse_diagram(source: str | Mapping) -> Diagram:
    """Parse a diagram from ASCII art or from a structured record.

    ASCII: one line per row, top row first, ``O`` plain / ``X`` ghost / ``.``
    empty; all lines must have equal length.  The empty string is the empty
    diagram.  Records: ``{"cells": [[r, c], ...], "ghosts": [[r, c], ...]}``.
    """
    if isinstance(source, str):
        return _parse_ascii(source)
    if isinstance(source, Mapping):
        return _parse_record(source)
    raise ParseError(f"cannot parse diagram from {type(source).__name__}")


def _parse_ascii(text: str) -> Diagram:
    if text == "":
        return Diagram.empty()
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines = lines[:-1]
    width = len(lines[0])
    n_rows = len(lines)
    plains: set[Position] = set()
    ghosts: set[Position] = set()
    for i, line in enumerate(lines):
        if len(line) != width:
            raise ParseError(
                f"line {i + 1}: malformed line length {len(line)} (expected {width})"
            )
        row = n_rows - i
        for j, ch in enumerate(line):
            col = j + 1
            if ch == "O":
                plains.add((row, col))
            elif ch == "X":
                ghosts.add((row, col))
            elif ch != ".":
                raise ParseError(f"line {i + 1}, position {col}: unknown character {ch!r}")
    return Diagram(frozenset(plains), frozenset(ghosts))


def _parse_record(record: Mapping) -> Diagram:
    if "cells" not in record:
        raise ParseError('record is missing the "cells" list')
    seen: set[Position] = set()
    out: dict[str, set[Position]] = {"cells": set(), "ghosts": set()}
    for key in ("cells", "ghosts"):
        entries = record.get(key, [])
        if not isinstance(entries, (list, tuple)):
            raise ParseError(f'"{key}" must be a list of [row, col] pairs')
        for entry in entries:
            if (
                not isinstance(entry, (list, tuple))
                or len(entry) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
            ):
                raise ParseError(f'"{key}" entry {entry!r} is not a [row, col] integer pair')
            r, c = entry
            if r < 1 or c < 1:
                raise ParseError(f'"{key}" entry ({r}, {c}) has coordinates < 1')
            if (r, c) in seen:
                raise ParseError(f"duplicate position ({r}, {c})")
            seen.add((r, c))
            out[key].add((r, c))
    return Diagram(frozenset(out["cells"]), frozenset(out["ghosts"]))


def render_ascii(diagram: Diagram) -> str:
    """Render top row first, ``O``/``X``/``.``, width = max occupied column."""
    if not diagram.positions:
        return ""
    width = diagram.max_col
    lines = []
    for row in range(diagram.max_row, 0, -1):
        chars = []
        for col in range(1, width + 1):
            kind = diagram.kind_at((row, col))
            chars.append("O" if kind == PLAIN else "X" if kind == GHOST else ".")
        lines.append("".join(chars) + "\n")
    return "".join(lines)


def to_record(diagram: Diagram) -> dict:
    """Structured record with sorted cell lists; inverse of ``parse_diagram``."""
    return {
        "cells": [list(p) for p in sorted(diagram.plains)],
        "ghosts": [list(p) for p in sorted(diagram.ghosts)],
    }


def rightmost_cells(diagram: Diagram) -> frozenset[Position]:
    """Plain cells with no cell of either kind strictly to their right."""
    out = set()
    for r, c in diagram.plains:
        if not any(pr == r and pc > c for pr, pc in diagram.positions):
            out.add((r, c))
    return frozenset(out)


def ghost_cells(diagram: Diagram) -> frozenset[Position]:
    return diagram.ghosts


@dataclass(frozen=True)
class Weight:
    """A signed monomial: ``sign * prod_r x_r ** exponents[r-1]``."""

    sign: int
    exponents: tuple[int, ...]

    @property
    def total_degree(self) -> int:
        return sum(self.exponents)

    @property
    def exponent_map(self) -> dict[int, int]:
        """Sparse view: row index to exponent, zero entries dropped."""
        return {r: e for r, e in enumerate(self.exponents, 1) if e}


def weight(diagram: Diagram) -> Weight:
    """Sign is (-1) ** #ghosts; the exponent of x_r counts cells in row r."""
    sign = -1 if len(diagram.ghosts) % 2 else 1
    max_row = diagram.max_row
    exps = [0] * max_row
    for r, _ in diagram.plains:
        exps[r - 1] += 1
    for r, _ in diagram.ghosts:
        exps[r - 1] += 1
    return Weight(sign, tuple(exps))


def _require_ghost_free(diagram: Diagram, operation: str) -> None:
    if diagram.ghosts:
        raise ValueError(f"{operation} requires a ghost-free diagram")


def flat(diagram: Diagram) -> Diagram:
    """Left-justify the nonempty columns, preserving their order and content."""
    _require_ghost_free(diagram, "flat")
    cols = diagram.nonempty_columns()
    remap = {c: i + 1 for i, c in enumerate(cols)}
    return Diagram.of((r, remap[c]) for r, c in diagram.plains)


def restrict_columns(diagram: Diagram, columns: Iterable[int]) -> Diagram:
    """Cells whose column lies in ``columns``; original column indices kept."""
    keep = set(columns)
    return Diagram(
        frozenset(p for p in diagram.plains if p[1] in keep),
        frozenset(p for p in diagram.ghosts if p[1] in keep),
    )


def key_closure(diagram: Diagram) -> Diagram:
    """Fill each row leftward: (r, c) present iff some (r, c') with c' >= c is."""
    _require_ghost_free(diagram, "key_closure")
    out: set[Position] = set()
    for r, c in diagram.plains:
        for cc in range(1, c + 1):
            out.add((r, cc))
    return Diagram.of(out)
