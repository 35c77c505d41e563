"""Diagrams, Kohnert/ghost moves, snow constructions, and Lascoux polynomials."""

from __future__ import annotations

from .diagram import (
    Diagram,
    ParseError,
    Position,
    Weight,
    flat,
    ghost_cells,
    key_closure,
    parse_diagram,
    render_ascii,
    restrict_columns,
    rightmost_cells,
    to_record,
    weight,
)
from .explore import (
    BruteResult,
    ProbeReport,
    ReachableSet,
    SearchLimits,
    SignedPolynomial,
    conjecture_probe,
    cover_relations,
    enumerate_gkd,
    enumerate_kd,
    enumerate_kkd,
    lascoux_polynomial,
    maxg,
    maxg_brute,
    maxg_hat_brute,
)
from .families import (
    GenSkewCheck,
    PartitionReport,
    checkered_diagram,
    is_generalized_skew,
    is_key,
    is_lock,
    key_diagram,
    lock_diagram,
    lockmain_qualifies,
    skew_diagram,
    verify_column_partition,
)
from .labeling import (
    ColorpReport,
    LabeledDiagram,
    check_colorp,
    is_lock_tableau,
    label_general_path,
    label_lock_path,
)
from .moves import (
    GHOST_MOVE,
    KOHNERT,
    MoveRecord,
    MoveSequence,
    apply_records,
    ghost_move,
    kohnert_move,
    legal_moves,
    move,
)
from .snow import (
    SnowDecoration,
    decoration_record,
    ghost_snow,
    reduce,
    reduction_kernel,
    render_decoration,
    sf,
    sf_hat,
    snow,
    snow_star,
)
from .solve import (
    Certificate,
    SolverError,
    VerifyResult,
    solve_generalized_skew,
    solve_greedy,
    solve_lock,
    verify_certificate,
)

__all__ = [
    "BruteResult",
    "Certificate",
    "ColorpReport",
    "Diagram",
    "GenSkewCheck",
    "GHOST_MOVE",
    "KOHNERT",
    "LabeledDiagram",
    "MoveRecord",
    "MoveSequence",
    "ParseError",
    "PartitionReport",
    "Position",
    "ProbeReport",
    "ReachableSet",
    "SearchLimits",
    "SignedPolynomial",
    "SnowDecoration",
    "SolverError",
    "VerifyResult",
    "Weight",
    "apply_records",
    "check_colorp",
    "checkered_diagram",
    "conjecture_probe",
    "cover_relations",
    "decoration_record",
    "enumerate_gkd",
    "enumerate_kd",
    "enumerate_kkd",
    "flat",
    "ghost_cells",
    "ghost_move",
    "ghost_snow",
    "is_generalized_skew",
    "is_key",
    "is_lock",
    "is_lock_tableau",
    "key_closure",
    "key_diagram",
    "kohnert_move",
    "label_general_path",
    "label_lock_path",
    "lascoux_polynomial",
    "legal_moves",
    "lock_diagram",
    "lockmain_qualifies",
    "maxg",
    "maxg_brute",
    "maxg_hat_brute",
    "move",
    "parse_diagram",
    "reduce",
    "reduction_kernel",
    "render_ascii",
    "render_decoration",
    "restrict_columns",
    "rightmost_cells",
    "sf",
    "sf_hat",
    "skew_diagram",
    "snow",
    "snow_star",
    "solve_generalized_skew",
    "solve_greedy",
    "solve_lock",
    "to_record",
    "verify_certificate",
    "verify_column_partition",
    "weight",
]

__version__ = "0.1.0"
