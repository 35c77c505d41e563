"""Kohnert and ghost moves on diagrams.

A move at row r acts on the rightmost cell of that row (either kind).  The
cell drops to the highest empty position below it in its own column.  A
Kohnert move just relocates the cell; a ghost move also leaves a ghost behind
at the vacated position.  The move is trivial (returns the diagram unchanged)
when the row is empty, the rightmost cell is a ghost, there is no empty
position below, or a ghost sits strictly between the drop target and the row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .diagram import Diagram, GHOST, Position

KOHNERT = "kohnert"
GHOST_MOVE = "ghost"

MOVE_KINDS = (KOHNERT, GHOST_MOVE)


@dataclass(frozen=True)
class MoveRecord:
    """One (possibly trivial) move: ``source == dest`` iff the move did nothing.

    Both are None for the degenerate trivial move on an empty row.
    """

    row: int
    kind: str
    source: Position | None
    dest: Position | None

    @property
    def trivial(self) -> bool:
        return self.source == self.dest

    def to_json(self) -> dict:
        return {
            "row": self.row,
            "kind": self.kind,
            "from": list(self.source) if self.source else None,
            "to": list(self.dest) if self.dest else None,
        }

    @staticmethod
    def from_json(data: Mapping) -> MoveRecord:
        src = data.get("from")
        dst = data.get("to")
        return MoveRecord(
            row=int(data["row"]),
            kind=str(data["kind"]),
            source=(int(src[0]), int(src[1])) if src is not None else None,
            dest=(int(dst[0]), int(dst[1])) if dst is not None else None,
        )


def _rightmost_in_row(diagram: Diagram, row: int) -> Position | None:
    cells = diagram.row_positions(row)
    return cells[-1] if cells else None


def _analyze(diagram: Diagram, row: int) -> tuple[Position, Position] | None:
    """Return (source, dest) of a move at ``row``, or None when trivial."""
    if not isinstance(row, int) or row < 1:
        raise ValueError(f"row must be a positive integer, got {row!r}")
    source = _rightmost_in_row(diagram, row)
    if source is None:
        return None
    if diagram.kind_at(source) == GHOST:
        return None
    col = source[1]
    occupied = diagram.positions
    target_row = None
    for r in range(row - 1, 0, -1):
        if (r, col) not in occupied:
            target_row = r
            break
    if target_row is None:
        return None
    for r in range(target_row + 1, row):
        if (r, col) in diagram.ghosts:
            return None
    return source, (target_row, col)


def kohnert_move(diagram: Diagram, row: int) -> tuple[Diagram, MoveRecord]:
    """Drop the rightmost cell of ``row``; trivial moves return the input."""
    found = _analyze(diagram, row)
    if found is None:
        source = _rightmost_in_row(diagram, row)
        return diagram, MoveRecord(row, KOHNERT, source, source)
    source, dest = found
    new = Diagram(diagram.plains - {source} | {dest}, diagram.ghosts)
    return new, MoveRecord(row, KOHNERT, source, dest)


def ghost_move(diagram: Diagram, row: int) -> tuple[Diagram, MoveRecord]:
    """Like a Kohnert move, but leave a ghost at the vacated position."""
    found = _analyze(diagram, row)
    if found is None:
        source = _rightmost_in_row(diagram, row)
        return diagram, MoveRecord(row, GHOST_MOVE, source, source)
    source, dest = found
    new = Diagram(diagram.plains - {source} | {dest}, diagram.ghosts | {source})
    return new, MoveRecord(row, GHOST_MOVE, source, dest)


def move(diagram: Diagram, row: int, kind: str) -> tuple[Diagram, MoveRecord]:
    if kind == KOHNERT:
        return kohnert_move(diagram, row)
    if kind == GHOST_MOVE:
        return ghost_move(diagram, row)
    raise ValueError(f"unknown move kind {kind!r} (expected one of {MOVE_KINDS})")


def legal_moves(diagram: Diagram) -> list[MoveRecord]:
    """Nontrivial moves, ascending by row, Kohnert before ghost within a row."""
    out: list[MoveRecord] = []
    for row in diagram.nonempty_rows():
        found = _analyze(diagram, row)
        if found is None:
            continue
        source, dest = found
        out.append(MoveRecord(row, KOHNERT, source, dest))
        out.append(MoveRecord(row, GHOST_MOVE, source, dest))
    return out


def apply_records(diagram: Diagram, steps: Iterable[MoveRecord]) -> Diagram:
    """Replay recorded moves, verifying each step matches what it claims."""
    current = diagram
    for i, step in enumerate(steps):
        new, record = move(current, step.row, step.kind)
        if record != step:
            raise ValueError(
                f"step {i}: recorded move {step.to_json()} does not replay "
                f"(got {record.to_json()})"
            )
        current = new
    return current


@dataclass(frozen=True)
class MoveSequence:
    """A start diagram plus an ordered list of recorded moves."""

    start: Diagram
    steps: tuple[MoveRecord, ...]

    def replay(self) -> Diagram:
        return apply_records(self.start, self.steps)

    def to_json(self) -> dict:
        from .diagram import to_record

        return {
            "start": to_record(self.start),
            "steps": [s.to_json() for s in self.steps],
        }
