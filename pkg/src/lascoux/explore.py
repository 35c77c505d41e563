"""Exhaustive exploration of move closures.

Breadth-first search with canonical-form deduplication over the closure of a
diagram under Kohnert and/or ghost moves.  Every search carries explicit
limits; a search that hits them is flagged incomplete, and downstream
consumers either refuse (polynomials) or mark their answer as a lower bound
(brute-force ghost maxima).
"""

from __future__ import annotations

import itertools
import time
from collections import deque
from dataclasses import dataclass

from .diagram import Diagram, to_record, weight
from .families import is_generalized_skew, is_key, is_lock, key_diagram, lockmain_qualifies
from .moves import GHOST_MOVE, KOHNERT, MoveRecord, MoveSequence, legal_moves
from .snow import sf, snow_star

CanonicalKey = tuple


@dataclass(frozen=True)
class SearchLimits:
    """Hard caps for a closure search."""

    max_states: int = 5_000_000
    max_seconds: float = 300.0


@dataclass
class ReachableSet:
    """The explored closure of ``start`` under the given move kinds.

    ``parents`` maps each member's canonical key to the (parent key, move)
    that first discovered it (None for the start), so any member has a
    witness path.  ``complete`` is False when a limit stopped the search.
    """

    start: Diagram
    kinds: tuple[str, ...]
    members: dict[CanonicalKey, Diagram]
    parents: dict[CanonicalKey, tuple[CanonicalKey, MoveRecord] | None]
    complete: bool
    elapsed: float

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, diagram: Diagram) -> bool:
        return diagram.canonical() in self.members

    def diagrams(self) -> list[Diagram]:
        """Members in canonical order."""
        return [self.members[k] for k in sorted(self.members)]

    def path_to(self, diagram: Diagram) -> MoveSequence:
        """Witness move sequence from ``start`` to a member."""
        key = diagram.canonical()
        if key not in self.members:
            raise KeyError("diagram is not a member of this reachable set")
        steps: list[MoveRecord] = []
        while True:
            link = self.parents[key]
            if link is None:
                break
            key, record = link
            steps.append(record)
        steps.reverse()
        return MoveSequence(self.start, tuple(steps))


def _enumerate(diagram: Diagram, kinds: tuple[str, ...], limits: SearchLimits) -> ReachableSet:
    t0 = time.perf_counter()
    key0 = diagram.canonical()
    members: dict[CanonicalKey, Diagram] = {key0: diagram}
    parents: dict[CanonicalKey, tuple[CanonicalKey, MoveRecord] | None] = {key0: None}
    queue: deque[Diagram] = deque([diagram])
    complete = True
    while queue:
        if len(members) > limits.max_states or time.perf_counter() - t0 > limits.max_seconds:
            complete = False
            break
        current = queue.popleft()
        current_key = current.canonical()
        for record in legal_moves(current):
            if record.kind not in kinds:
                continue
            if record.kind == KOHNERT:
                new = Diagram(
                    current.plains - {record.source} | {record.dest}, current.ghosts
                )
            else:
                new = Diagram(
                    current.plains - {record.source} | {record.dest},
                    current.ghosts | {record.source},
                )
            key = new.canonical()
            if key not in members:
                members[key] = new
                parents[key] = (current_key, record)
                queue.append(new)
    return ReachableSet(
        diagram, kinds, members, parents, complete, time.perf_counter() - t0
    )


def enumerate_kkd(diagram: Diagram, limits: SearchLimits = SearchLimits()) -> ReachableSet:
    """Closure under both Kohnert and ghost moves."""
    return _enumerate(diagram, (KOHNERT, GHOST_MOVE), limits)


def enumerate_kd(diagram: Diagram, limits: SearchLimits = SearchLimits()) -> ReachableSet:
    """Closure under Kohnert moves only."""
    return _enumerate(diagram, (KOHNERT,), limits)


def enumerate_gkd(diagram: Diagram, limits: SearchLimits = SearchLimits()) -> ReachableSet:
    """Closure under ghost moves only."""
    return _enumerate(diagram, (GHOST_MOVE,), limits)


@dataclass
class BruteResult:
    """Maximum ghost count found by search, with a witness and its path.

    ``exact`` is False when the search was incomplete, in which case ``count``
    is only a lower bound.
    """

    count: int
    witness: Diagram
    sequence: MoveSequence
    exact: bool


def _max_ghosts(reachable: ReachableSet) -> BruteResult:
    best_key = max(
        sorted(reachable.members),
        key=lambda k: len(reachable.members[k].ghosts),
    )
    witness = reachable.members[best_key]
    return BruteResult(
        len(witness.ghosts), witness, reachable.path_to(witness), reachable.complete
    )


def maxg_brute(diagram: Diagram, limits: SearchLimits = SearchLimits()) -> BruteResult:
    """Maximum ghosts over the Kohnert+ghost closure."""
    return _max_ghosts(enumerate_kkd(diagram, limits))


def maxg_hat_brute(diagram: Diagram, limits: SearchLimits = SearchLimits()) -> BruteResult:
    """Maximum ghosts over the ghost-move-only closure."""
    return _max_ghosts(enumerate_gkd(diagram, limits))


def maxg(diagram: Diagram, limits: SearchLimits = SearchLimits()) -> tuple[int, str]:
    """Maximum ghost count with a tag naming how it was computed.

    Key and generalized skew diagrams use the snowflake count; qualifying
    locks use the empty-row snowflake count; everything else falls back to
    exhaustive search (which raises if the limits cut it short).
    """
    if is_key(diagram):
        return sf(diagram), "theorem:key"
    if is_generalized_skew(diagram):
        return sf(diagram), "theorem:generalized-skew"
    if is_lock(diagram) and lockmain_qualifies(diagram):
        return snow_star(diagram).flake_count, "theorem:lock"
    result = maxg_brute(diagram, limits)
    if not result.exact:
        raise RuntimeError(
            "exhaustive search hit its limits; result would only be a lower bound"
        )
    return result.count, "brute"


@dataclass(frozen=True)
class SignedPolynomial:
    """Sparse polynomial: exponent tuple (trailing zeros trimmed) -> coefficient."""

    terms: tuple[tuple[tuple[int, ...], int], ...]

    @staticmethod
    def from_dict(terms: dict[tuple[int, ...], int]) -> SignedPolynomial:
        cleaned: dict[tuple[int, ...], int] = {}
        for exps, coeff in terms.items():
            if coeff == 0:
                continue
            trimmed = list(exps)
            while trimmed and trimmed[-1] == 0:
                trimmed.pop()
            cleaned[tuple(trimmed)] = cleaned.get(tuple(trimmed), 0) + coeff
        width = max((len(e) for e in cleaned), default=0)
        ordered = sorted(cleaned.items(), key=lambda kv: kv[0] + (0,) * (width - len(kv[0])))
        return SignedPolynomial(tuple((e, c) for e, c in ordered if c != 0))

    @property
    def num_terms(self) -> int:
        return len(self.terms)

    @property
    def min_total_degree(self) -> int:
        return min((sum(e) for e, _ in self.terms), default=0)

    @property
    def max_total_degree(self) -> int:
        return max((sum(e) for e, _ in self.terms), default=0)

    def coefficient(self, exponents: tuple[int, ...]) -> int:
        trimmed = list(exponents)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        for exps, coeff in self.terms:
            if exps == tuple(trimmed):
                return coeff
        return 0

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "exponents": list(e)} for e, c in self.terms]


def lascoux_polynomial(alpha, limits: SearchLimits = SearchLimits()) -> SignedPolynomial:
    """Signed generating polynomial of the Kohnert+ghost closure of the key diagram."""
    reachable = enumerate_kkd(key_diagram(alpha), limits)
    if not reachable.complete:
        raise RuntimeError(
            "enumeration incomplete under the given limits; polynomial would be partial"
        )
    terms: dict[tuple[int, ...], int] = {}
    for member in reachable.members.values():
        w = weight(member)
        terms[w.exponents] = terms.get(w.exponents, 0) + w.sign
    return SignedPolynomial.from_dict(terms)


def cover_relations(reachable: ReachableSet) -> list[tuple[Diagram, Diagram]]:
    """Deduplicated single-move edges between distinct members."""
    edges: set[tuple[CanonicalKey, CanonicalKey]] = set()
    for key in sorted(reachable.members):
        current = reachable.members[key]
        for record in legal_moves(current):
            if record.kind not in reachable.kinds:
                continue
            if record.kind == KOHNERT:
                new = Diagram(
                    current.plains - {record.source} | {record.dest}, current.ghosts
                )
            else:
                new = Diagram(
                    current.plains - {record.source} | {record.dest},
                    current.ghosts | {record.source},
                )
            child_key = new.canonical()
            if child_key in reachable.members and child_key != key:
                edges.add((key, child_key))
    return [
        (reachable.members[a], reachable.members[b]) for a, b in sorted(edges)
    ]


@dataclass(frozen=True)
class ProbeReport:
    """Result of scanning all small ghost-free diagrams for capacity above sf."""

    max_rows: int
    max_cols: int
    max_cells: int
    checked: int
    counterexamples: tuple[dict, ...]
    skipped: tuple[dict, ...]

    def to_json(self) -> dict:
        return {
            "box": {"rows": self.max_rows, "cols": self.max_cols},
            "max_cells": self.max_cells,
            "checked": self.checked,
            "counterexamples": list(self.counterexamples),
            "skipped": list(self.skipped),
        }


def conjecture_probe(
    max_rows: int, max_cols: int, max_cells: int, limits: SearchLimits = SearchLimits()
) -> ProbeReport:
    """Compare brute-force maximum ghosts against sf for every diagram in a box.

    Reports (never asserts) diagrams with more ghost capacity than snowflakes;
    instances whose search hit the limits are listed as skipped.
    """
    checked = 0
    counterexamples: list[dict] = []
    skipped: list[dict] = []
    positions = [
        (r, c) for r in range(1, max_rows + 1) for c in range(1, max_cols + 1)
    ]
    for size in range(0, max_cells + 1):
        for cells in itertools.combinations(positions, size):
            diagram = Diagram.of(cells)
            result = maxg_brute(diagram, limits)
            if not result.exact:
                skipped.append({"diagram": to_record(diagram)})
                continue
            checked += 1
            flakes = sf(diagram)
            if result.count > flakes:
                counterexamples.append(
                    {
                        "diagram": to_record(diagram),
                        "maxg": result.count,
                        "sf": flakes,
                    }
                )
    return ProbeReport(
        max_rows,
        max_cols,
        max_cells,
        checked,
        tuple(counterexamples),
        tuple(skipped),
    )
