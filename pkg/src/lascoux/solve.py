"""Constructive solvers: move sequences achieving the predicted ghost maxima.

Each solver builds a certificate — a start diagram, a list of recorded moves,
and a claimed ghost count — and re-verifies its own construction against the
relevant snow count before returning, raising instead of ever returning a
wrong certificate.  Certificates replay through the moves module, so an
independent check never trusts the solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .diagram import Diagram, parse_diagram, to_record
from .families import is_generalized_skew, is_key, is_lock, lockmain_qualifies
from .moves import GHOST_MOVE, KOHNERT, MoveRecord, ghost_move, kohnert_move, move
from .snow import ghost_snow, sf, snow, snow_star


@dataclass(frozen=True)
class Certificate:
    """A replayable witness that ``claimed_ghosts`` ghosts are reachable."""

    start: Diagram
    steps: tuple[MoveRecord, ...]
    claimed_ghosts: int

    def to_json(self) -> dict:
        return {
            "start": to_record(self.start),
            "steps": [s.to_json() for s in self.steps],
            "claimed_ghosts": self.claimed_ghosts,
        }

    @staticmethod
    def from_json(data: Mapping) -> Certificate:
        return Certificate(
            start=parse_diagram(data["start"]),
            steps=tuple(MoveRecord.from_json(s) for s in data["steps"]),
            claimed_ghosts=int(data["claimed_ghosts"]),
        )


@dataclass(frozen=True)
class VerifyResult:
    """Replay outcome: the reached diagram, its ghost count, and validity."""

    final: Diagram
    ghosts: int
    ok: bool
    failure: str | None = None


def verify_certificate(cert: Certificate) -> VerifyResult:
    """Replay the steps; ok iff all steps are nontrivial, replay exactly as
    recorded, and the final ghost count equals the claim."""
    current = cert.start
    for i, step in enumerate(cert.steps):
        new, record = move(current, step.row, step.kind)
        if record != step:
            return VerifyResult(
                current,
                len(current.ghosts),
                False,
                f"step {i}: recorded {step.to_json()} but replay produced {record.to_json()}",
            )
        if record.trivial:
            return VerifyResult(
                current, len(current.ghosts), False, f"step {i}: trivial move recorded"
            )
        current = new
    ghosts = len(current.ghosts)
    if ghosts != cert.claimed_ghosts:
        return VerifyResult(
            current,
            ghosts,
            False,
            f"final ghost count {ghosts} != claimed {cert.claimed_ghosts}",
        )
    return VerifyResult(current, ghosts, True)


class SolverError(RuntimeError):
    """A solver's construction failed its own runtime guard."""


def _rightmost(diagram: Diagram, row: int):
    cells = diagram.row_positions(row)
    return cells[-1] if cells else None


def solve_generalized_skew(diagram: Diagram) -> Certificate:
    """Achieve sf(D) ghosts on a key or generalized skew diagram.

    Dark clouds are processed left to right.  Each cloud's cell walks down its
    column: at every stop, Kohnert moves clear the cells to its right in the
    current row, then one ghost move drops it to the next empty position,
    leaving a ghost; the walk takes one step per snowflake in that column.
    """
    if not (is_key(diagram) or is_generalized_skew(diagram)):
        raise ValueError(
            "solve_generalized_skew requires a key or generalized skew diagram"
        )
    deco = snow(diagram)
    flakes_by_col: dict[int, int] = {}
    for _, c in deco.flakes:
        flakes_by_col[c] = flakes_by_col.get(c, 0) + 1
    current = diagram
    steps: list[MoveRecord] = []
    for r_star, c_star in sorted(deco.dark, key=lambda p: (p[1], p[0])):
        target = flakes_by_col.get(c_star, 0)
        row = r_star
        for _ in range(target):
            while True:
                rightmost = _rightmost(current, row)
                if rightmost == (row, c_star):
                    break
                new, record = kohnert_move(current, row)
                if record.trivial:
                    raise SolverError(
                        f"cannot clear row {row} while walking column {c_star}"
                    )
                steps.append(record)
                current = new
            new, record = ghost_move(current, row)
            if record.trivial:
                raise SolverError(
                    f"ghost move at row {row} in column {c_star} is trivial"
                )
            steps.append(record)
            current = new
            row = record.dest[0]
    expected = deco.flake_count
    by_col: dict[int, int] = {}
    for _, c in current.ghosts:
        by_col[c] = by_col.get(c, 0) + 1
    if len(current.ghosts) != expected or by_col != flakes_by_col:
        raise SolverError(
            f"achieved ghosts {sorted(current.ghosts)} do not match the "
            f"snowflake prediction ({expected})"
        )
    return Certificate(diagram, tuple(steps), expected)


def solve_lock(diagram: Diagram) -> Certificate:
    """Achieve the empty-row snowflake count on a qualifying lock diagram.

    For each high row (r_i > i), working upward, a fixed bundle of Kohnert
    moves and at most one ghost move is applied at each row from r_i down to
    i+1; the bundle depends on whether some higher high row, this row, or no
    row lacks a dark cloud.  Prescribed moves that come up trivial are
    skipped; the final count is checked against the prediction.
    """
    if not is_lock(diagram):
        raise ValueError("solve_lock requires a lock diagram")
    if not lockmain_qualifies(diagram):
        raise ValueError(
            "solve_lock requires at most one cloudless high row (see lockmain_qualifies)"
        )
    expected = snow_star(diagram).flake_count
    rows = diagram.nonempty_rows()
    n = len(rows)
    cloud_rows = {r for r, _ in snow(diagram).dark}
    cell_count = {r: len(diagram.row_positions(r)) for r in rows}

    current = diagram
    steps: list[MoveRecord] = []
    for i in range(1, n + 1):
        r_i = rows[i - 1]
        if r_i <= i:
            continue
        later_cloudless = any(rows[k - 1] not in cloud_rows for k in range(i + 1, n + 1))
        if later_cloudless:
            kohnerts, ghosts = n - i - 1, 1
        elif r_i not in cloud_rows:
            kohnerts, ghosts = min(cell_count[r_i], n - i), 0
        else:
            kohnerts, ghosts = n - i, 1
        for row in range(r_i, i, -1):
            for _ in range(kohnerts):
                new, record = kohnert_move(current, row)
                if record.trivial:
                    continue
                steps.append(record)
                current = new
            for _ in range(ghosts):
                new, record = ghost_move(current, row)
                if record.trivial:
                    continue
                steps.append(record)
                current = new
    achieved = len(current.ghosts)
    if achieved != expected:
        raise SolverError(
            f"lock schedule achieved {achieved} ghosts, expected {expected}"
        )
    return Certificate(diagram, tuple(steps), expected)


def solve_greedy(diagram: Diagram) -> Certificate:
    """Achieve the ghost-snow flake count using ghost moves only.

    Columns are processed left to right; within a column, repeatedly take the
    highest row whose cell in this column is rightmost in its row and apply
    its ghost move, stopping at the first trivial one.
    """
    if diagram.ghosts:
        raise ValueError("solve_greedy requires a ghost-free diagram")
    deco = ghost_snow(diagram)
    flakes_by_col: dict[int, int] = {}
    for _, c in deco.flakes:
        flakes_by_col[c] = flakes_by_col.get(c, 0) + 1
    current = diagram
    steps: list[MoveRecord] = []
    for col in diagram.nonempty_columns():
        placed = 0
        while True:
            candidates = [
                r
                for r, c in current.plains
                if c == col and _rightmost(current, r) == (r, col)
            ]
            if not candidates:
                break
            row = max(candidates)
            new, record = ghost_move(current, row)
            if record.trivial:
                break
            steps.append(record)
            current = new
            placed += 1
            if placed > flakes_by_col.get(col, 0):
                raise SolverError(
                    f"column {col} produced more ghosts than its flake count"
                )
        if placed != flakes_by_col.get(col, 0):
            raise SolverError(
                f"column {col} produced {placed} ghosts, expected "
                f"{flakes_by_col.get(col, 0)}"
            )
    expected = deco.flake_count
    if len(current.ghosts) != expected:
        raise SolverError(
            f"greedy achieved {len(current.ghosts)} ghosts, expected {expected}"
        )
    return Certificate(diagram, tuple(steps), expected)
