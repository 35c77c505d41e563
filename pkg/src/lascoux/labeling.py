"""Cell labelings of reachable diagrams and their structural properties.

Lock-diagram closures admit a labeling where each plain cell's label says
which original row it came from: column c of the lock composition fixes the
multiset of labels in that column, and strict decrease down columns forces
the assignment.  Ghost cells copy the label of the highest plain cell below
them in their column.  A general recursive labeling, defined move by move,
agrees with the forced one on lock diagrams; both are checked against the
nine-clause property suite that underpins the lock capacity theorem.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram, Position
from .explore import ReachableSet, SearchLimits, enumerate_kkd
from .families import _lock_parts
from .moves import GHOST_MOVE, KOHNERT, MoveRecord, MoveSequence, legal_moves, move


@dataclass(frozen=True)
class LabeledDiagram:
    """A diagram with one positive label per occupied position (both kinds)."""

    diagram: Diagram
    labels: dict[Position, int]

    def __post_init__(self) -> None:
        if set(self.labels) != set(self.diagram.positions):
            raise ValueError("labels must cover exactly the occupied positions")

    def label(self, pos: Position) -> int:
        return self.labels[pos]

    def to_json(self) -> dict:
        cells = []
        for pos in sorted(self.diagram.positions):
            kind = self.diagram.kind_at(pos)
            cells.append([pos[0], pos[1], self.labels[pos], kind])
        return {"cells": cells}


def _column_contents(alpha: tuple[int, ...]) -> dict[int, list[int]]:
    """Labels appearing in each column: j occupies columns N-alpha_j+1..N."""
    n_cols = max(alpha, default=0)
    contents: dict[int, list[int]] = {c: [] for c in range(1, n_cols + 1)}
    for j, a in enumerate(alpha, 1):
        for c in range(n_cols - a + 1, n_cols + 1):
            contents[c].append(j)
    return contents


def _forced_plain_labels(
    plains: frozenset[Position], alpha: tuple[int, ...]
) -> dict[Position, int]:
    """The unique candidate labeling: k-th lowest cell gets k-th smallest label."""
    contents = _column_contents(alpha)
    labels: dict[Position, int] = {}
    by_col: dict[int, list[int]] = {}
    for r, c in plains:
        by_col.setdefault(c, []).append(r)
    for c, rows in by_col.items():
        entries = contents.get(c, [])
        if len(rows) != len(entries):
            raise ValueError(
                f"column {c} holds {len(rows)} cells but the composition "
                f"allots {len(entries)} labels"
            )
        for row, entry in zip(sorted(rows), sorted(entries)):
            labels[(row, c)] = entry
    return labels


def _extend_to_ghosts(diagram: Diagram, labels: dict[Position, int]) -> dict[Position, int]:
    """Each ghost copies the label of the highest plain cell below it in its column."""
    out = dict(labels)
    for r, c in sorted(diagram.ghosts):
        below = [rr for rr, cc in diagram.plains if cc == c and rr <= r]
        if not below:
            raise ValueError(f"ghost at ({r}, {c}) has no plain cell below it")
        out[(r, c)] = labels[(max(below), c)]
    return out


def label_lock_path(diagram: Diagram, path: MoveSequence) -> LabeledDiagram:
    """Label the endpoint of a move path from a lock diagram.

    Plain cells carry the forced labeling of the endpoint's plain part (the
    endpoint reached with ghost-leaving suppressed); ghosts copy upward.
    """
    alpha = _lock_parts(diagram)
    if path.start != diagram:
        raise ValueError("path does not start at the given diagram")
    final = path.replay()
    labels = _forced_plain_labels(final.plains, alpha)
    return LabeledDiagram(final, _extend_to_ghosts(final, labels))


def _step_labels(
    labels: dict[Position, int], record: MoveRecord
) -> dict[Position, int]:
    """Advance the general recursive labeling across one nontrivial move."""
    r_star, c_star = record.source
    dest_row = record.dest[0]
    k = r_star - dest_row
    out = dict(labels)
    if record.kind == KOHNERT:
        del out[(r_star, c_star)]
    for j in range(1, k + 1):
        out[(r_star - j, c_star)] = labels[(r_star - j + 1, c_star)]
    for j in range(1, k):
        row = r_star - j
        for (rr, cc), old in labels.items():
            if rr == row and cc > c_star and old <= labels[(row, c_star)]:
                out[(rr, cc)] = labels[(r_star - j + 1, c_star)]
    return out


def label_general_path(diagram: Diagram, path: MoveSequence) -> LabeledDiagram:
    """Label the endpoint of a path by the recursive move-by-move rules.

    Cells start labeled by their rows.  A move shifts the labels of its
    column chain down one position; cells to the right of the chain whose
    label does not exceed their row-mate's label in the moved column adopt
    that row-mate's new label; a ghost keeps the moved cell's label.
    """
    if diagram.ghosts:
        raise ValueError("label_general_path requires a ghost-free start diagram")
    if path.start != diagram:
        raise ValueError("path does not start at the given diagram")
    labels = {pos: pos[0] for pos in diagram.plains}
    current = diagram
    for i, step in enumerate(path.steps):
        new, record = move(current, step.row, step.kind)
        if record != step:
            raise ValueError(
                f"step {i}: recorded move {step.to_json()} does not replay"
            )
        if not record.trivial:
            labels = _step_labels(labels, record)
        current = new
    return LabeledDiagram(current, labels)


@dataclass
class ClauseResult:
    ok: bool = True
    counterexample: str | None = None

    def fail(self, message: str) -> None:
        if self.ok:
            self.ok = False
            self.counterexample = message


@dataclass
class ColorpReport:
    """Pass/fail per labeling clause, with first counterexamples."""

    clauses: dict[str, ClauseResult] = field(default_factory=dict)
    members: int = 0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.clauses.values())

    def to_json(self) -> dict:
        return {
            "members": self.members,
            "ok": self.ok,
            "clauses": {
                name: {"ok": c.ok, "counterexample": c.counterexample}
                for name, c in sorted(self.clauses.items())
            },
        }


def _member_labels(
    reachable: ReachableSet, alpha: tuple[int, ...]
) -> dict[tuple, dict[Position, int]]:
    out: dict[tuple, dict[Position, int]] = {}
    for key in sorted(reachable.members):
        member = reachable.members[key]
        plain = _forced_plain_labels(member.plains, alpha)
        out[key] = _extend_to_ghosts(member, plain)
    return out


def check_colorp(diagram: Diagram, limits: SearchLimits = SearchLimits()) -> ColorpReport:
    """Evaluate the nine labeling clauses over the whole move closure.

    Also checks well-definedness: the recursive labeling, advanced across
    every edge of the closure, must agree with the forced labeling.
    """
    alpha = _lock_parts(diagram)
    reachable = enumerate_kkd(diagram, limits)
    if not reachable.complete:
        raise RuntimeError("closure enumeration hit its limits; cannot check clauses")
    labels = _member_labels(reachable, alpha)
    rows_of_col: dict[int, set[int]] = {}
    for r, c in diagram.plains:
        rows_of_col.setdefault(c, set()).add(r)

    report = ColorpReport(
        clauses={name: ClauseResult() for name in "abcdefghi"} | {
            "well-definedness": ClauseResult()
        },
        members=len(reachable.members),
    )
    cl = report.clauses

    general: dict[tuple, dict[Position, int]] = {
        diagram.canonical(): {pos: pos[0] for pos in diagram.plains}
    }

    def general_of(key: tuple) -> dict[Position, int]:
        if key not in general:
            parent_key, record = reachable.parents[key]
            general[key] = _step_labels(general_of(parent_key), record)
        return general[key]

    for key in reachable.members:
        general_of(key)

    for key in sorted(reachable.members):
        member = reachable.members[key]
        lab = labels[key]

        if general[key] != lab:
            cl["well-definedness"].fail(
                f"recursive labels differ from forced labels on {member.canonical()}"
            )

        plain_by_col: dict[int, list[Position]] = {}
        for pos in member.plains:
            plain_by_col.setdefault(pos[1], []).append(pos)
        for c, rows in rows_of_col.items():
            got = {lab[pos] for pos in plain_by_col.get(c, [])}
            if got != rows:
                cl["a"].fail(
                    f"column {c} of {member.canonical()}: labels {sorted(got)} != "
                    f"rows {sorted(rows)}"
                )
        for pos in member.plains:
            if pos[0] > lab[pos]:
                cl["b"].fail(f"plain cell {pos} exceeds its label {lab[pos]}")
        for c, cells in plain_by_col.items():
            ordered = sorted(cells)
            for p1, p2 in zip(ordered, ordered[1:]):
                if not lab[p1] < lab[p2]:
                    cl["c"].fail(
                        f"column {c} of {member.canonical()}: labels not strictly "
                        f"increasing with row ({p1}:{lab[p1]}, {p2}:{lab[p2]})"
                    )
        plain_sorted = sorted(member.plains)
        for i, p1 in enumerate(plain_sorted):
            for p2 in plain_sorted[i + 1 :]:
                if lab[p1] == lab[p2]:
                    if p1[1] == p2[1]:
                        cl["d"].fail(
                            f"equal labels in one column: {p1}, {p2} in "
                            f"{member.canonical()}"
                        )
                    lo, hi = (p1, p2) if p1[1] < p2[1] else (p2, p1)
                    if lo[0] < hi[0]:
                        cl["d"].fail(
                            f"equal labels {lab[p1]} at {lo}, {hi}: row must not "
                            f"increase with column in {member.canonical()}"
                        )
        for pos in member.ghosts:
            if pos[0] > lab[pos]:
                cl["g"].fail(f"ghost {pos} exceeds its label {lab[pos]}")
        ghost_sorted = sorted(member.ghosts)
        for i, g1 in enumerate(ghost_sorted):
            for g2 in ghost_sorted[i + 1 :]:
                if g1[0] == g2[0] and g1[1] < g2[1] and not lab[g1] < lab[g2]:
                    cl["h"].fail(
                        f"ghosts {g1}, {g2} in one row have labels "
                        f"{lab[g1]} >= {lab[g2]} in {member.canonical()}"
                    )
        for g1 in ghost_sorted:
            for g2 in ghost_sorted:
                if g2[0] == g1[0] + 1 and lab[g1] < lab[g2] and not g1[1] < g2[1]:
                    cl["i"].fail(
                        f"stacked ghosts {g1}:{lab[g1]} under {g2}:{lab[g2]} with "
                        f"columns out of order in {member.canonical()}"
                    )

        for record in legal_moves(member):
            child = _apply(member, record)
            child_key = child.canonical()
            child_lab = labels[child_key]
            for g in member.ghosts:
                if g not in child.ghosts:
                    cl["e"].fail(
                        f"ghost {g} of {member.canonical()} vanished after "
                        f"{record.to_json()}"
                    )
                elif child_lab[g] != lab[g]:
                    cl["e"].fail(
                        f"ghost {g} changed label {lab[g]} -> {child_lab[g]} after "
                        f"{record.to_json()}"
                    )
            if record.kind == GHOST_MOVE:
                src = record.source
                if child_lab[src] != lab[src]:
                    cl["f"].fail(
                        f"new ghost {src} has label {child_lab[src]}, expected the "
                        f"moved cell's label {lab[src]}"
                    )
            if _step_labels(general[key], record) != child_lab:
                cl["well-definedness"].fail(
                    f"recursive labels along edge {record.to_json()} from "
                    f"{member.canonical()} disagree with forced labels"
                )
    return report


def _apply(diagram: Diagram, record: MoveRecord) -> Diagram:
    if record.kind == KOHNERT:
        return Diagram(diagram.plains - {record.source} | {record.dest}, diagram.ghosts)
    return Diagram(
        diagram.plains - {record.source} | {record.dest},
        diagram.ghosts | {record.source},
    )


def is_lock_tableau(labeled: LabeledDiagram, alpha) -> bool:
    """Check the four lock-tableau conditions plus the content multiset."""
    diagram = labeled.diagram
    if diagram.ghosts:
        raise ValueError("is_lock_tableau requires a ghost-free labeled diagram")
    parts = tuple(alpha)
    n_cols = max(parts, default=0)
    lab = labeled.labels

    want: dict[int, int] = {}
    for j, a in enumerate(parts, 1):
        if a > 0:
            want[j] = a
    have: dict[int, int] = {}
    for pos in diagram.plains:
        have[lab[pos]] = have.get(lab[pos], 0) + 1
    if have != want:
        return False

    for j, a in enumerate(parts, 1):
        if a == 0:
            continue
        cols = sorted(c for (r, c) in diagram.plains if lab[(r, c)] == j)
        if cols != list(range(n_cols - a + 1, n_cols + 1)):
            return False

    for r, c in diagram.plains:
        if lab[(r, c)] < r:
            return False

    for j in want:
        cells = sorted((c, r) for (r, c) in diagram.plains if lab[(r, c)] == j)
        for (c1, r1), (c2, r2) in zip(cells, cells[1:]):
            if r1 < r2:
                return False

    by_col: dict[int, list[Position]] = {}
    for pos in diagram.plains:
        by_col.setdefault(pos[1], []).append(pos)
    for cells in by_col.values():
        ordered = sorted(cells)
        for p1, p2 in zip(ordered, ordered[1:]):
            if not lab[p1] < lab[p2]:
                return False
    return True
