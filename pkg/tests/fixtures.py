"""Frozen diagrams shared across test modules.

Values here were derived with tests/oracle_reference.py (an independent
reference implementation) and are frozen so regressions in either codebase
are caught.
"""

from __future__ import annotations

from lascoux import Diagram

# Running examples used throughout the suite.
KEY_ALPHA = (0, 3, 4, 2, 3)
LOCK_ALPHA = (0, 4, 0, 2, 3, 2, 1)
SKEW_ALPHA = (0, 2, 0, 1, 3)

# A wide 18-cell diagram exercising ghost-only dynamics, reduction, and the
# labeled snow overlay.
WIDE_DIAGRAM = Diagram.of(
    [
        (2, 1), (2, 2), (2, 4),
        (3, 3), (3, 6), (3, 8),
        (4, 2), (4, 4), (4, 5),
        (5, 1), (5, 2), (5, 3), (5, 4),
        (6, 6), (6, 7), (6, 8),
        (7, 2), (7, 3),
    ]
)

WIDE_FLAKES = frozenset(
    {(1, 4), (3, 4), (3, 5), (6, 3), (1, 8), (2, 8), (4, 8), (5, 8)}
)

WIDE_REDUCED_CELLS = frozenset(
    {(2, 4), (3, 3), (3, 8), (4, 4), (4, 5), (5, 3), (5, 4), (6, 8), (7, 3)}
)

WIDE_LABELS = {
    (2, 1): 2, (2, 2): 2, (2, 4): 1,
    (3, 3): 3, (3, 6): 3, (3, 8): 1,
    (4, 2): 4, (4, 4): 4, (4, 5): 3,
    (5, 1): 5, (5, 2): 5, (5, 3): 5, (5, 4): 3,
    (6, 6): 6, (6, 7): 6, (6, 8): 1,
    (7, 2): 7, (7, 3): 6,
}

# A member of the running key example's closure that attains the maximum
# ghost count (six); its weight has the closure's top total degree.
MAX_GHOST_MEMBER = Diagram.of(
    [
        (1, 1), (1, 2), (1, 3), (1, 4),
        (2, 2), (2, 3),
        (3, 1), (3, 2), (3, 3),
        (4, 1),
        (5, 1), (5, 2),
    ],
    [(2, 1), (2, 4), (3, 4), (4, 2), (4, 3), (5, 3)],
)

# Small diagrams where the flake count strictly exceeds the ghost capacity.
TWO_CELL_STRICT = Diagram.of([(3, 1), (2, 2)])
ANTIDIAGONAL_STRICT = Diagram.of([(1, 3), (2, 2), (3, 1)])
SIX_CELL_STRICT = Diagram.of([(3, 1), (3, 2), (3, 3), (4, 1), (4, 3), (5, 3)])

# Ghost-only capacity can undershoot the two-move capacity.
GREEDY_GAP = Diagram.of([(2, 1), (2, 2), (3, 2)])

# Frozen skew constructions (derived with the oracle's prose transliteration).
SKEW_CELLS = frozenset({(2, 2), (2, 3), (4, 4), (5, 4), (5, 5), (5, 6)})
SKEW_042_CELLS = frozenset(
    {(2, 2), (2, 3), (2, 4), (2, 5), (3, 6), (3, 7)}
)

# Key closure of the skew diagram above (oracle_key_closure).
SKEW_KEY_CLOSURE = frozenset(
    {(2, 1), (2, 2), (2, 3)}
    | {(4, c) for c in range(1, 5)}
    | {(5, c) for c in range(1, 7)}
)

# Closure size of the small key diagram used by the service tests
# (oracle closure over both move kinds).
SMALL_KEY_ALPHA = (0, 1, 2, 2)
SMALL_KEY_KKD_SIZE = 87
