from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lascoux import (
    Certificate,
    Diagram,
    SolverError,
    key_diagram,
    lock_diagram,
    maxg_brute,
    maxg_hat_brute,
    sf,
    sf_hat,
    skew_diagram,
    snow_star,
    solve_generalized_skew,
    solve_greedy,
    solve_lock,
    verify_certificate,
)

from fixtures import (
    GREEDY_GAP,
    KEY_ALPHA,
    LOCK_ALPHA,
    SKEW_ALPHA,
    TWO_CELL_STRICT,
    WIDE_DIAGRAM,
)

positions = st.tuples(st.integers(1, 4), st.integers(1, 4))
plain_diagrams = st.frozensets(positions, max_size=6).map(Diagram.of)
compositions = st.lists(st.integers(0, 3), min_size=1, max_size=4).map(tuple)


def test_skew_solver_on_running_key_example():
    cert = solve_generalized_skew(key_diagram(KEY_ALPHA))
    assert cert.claimed_ghosts == 6 == sf(key_diagram(KEY_ALPHA))
    result = verify_certificate(cert)
    assert result.ok and result.ghosts == 6


def test_skew_solver_on_gapped_skew_diagram():
    d = skew_diagram(SKEW_ALPHA)
    cert = solve_generalized_skew(d)
    assert cert.claimed_ghosts == sf(d) == 8
    assert verify_certificate(cert).ok


def test_skew_solver_rejects_other_shapes():
    with pytest.raises(ValueError):
        solve_generalized_skew(TWO_CELL_STRICT)


def test_skew_solver_empty_diagram():
    cert = solve_generalized_skew(Diagram.empty())
    assert cert.claimed_ghosts == 0
    assert verify_certificate(cert).ok


def test_lock_solver_on_qualifying_lock():
    lock = lock_diagram(LOCK_ALPHA)
    cert = solve_lock(lock)
    assert cert.claimed_ghosts == 7 == snow_star(lock).flake_count
    assert verify_certificate(cert).ok


def test_lock_solver_rejects_non_locks():
    with pytest.raises(ValueError):
        solve_lock(key_diagram((0, 2, 1)))


def test_greedy_solver_wide_diagram():
    cert = solve_greedy(WIDE_DIAGRAM)
    assert cert.claimed_ghosts == 8 == sf_hat(WIDE_DIAGRAM)
    assert verify_certificate(cert).ok
    assert all(step.kind == "ghost" for step in cert.steps)


def test_greedy_solver_stalls_at_ghost_only_capacity():
    cert = solve_greedy(GREEDY_GAP)
    assert cert.claimed_ghosts == 1 == maxg_hat_brute(GREEDY_GAP).count


def test_greedy_solver_single_row_no_moves():
    cert = solve_greedy(Diagram.of([(1, 1), (1, 2)]))
    assert cert.claimed_ghosts == 0
    assert cert.steps == ()


def test_greedy_solver_rejects_ghosts():
    with pytest.raises(ValueError):
        solve_greedy(Diagram.of([(2, 1)], [(1, 1)]))


def test_certificate_json_round_trip():
    cert = solve_lock(lock_diagram(LOCK_ALPHA))
    assert Certificate.from_json(cert.to_json()) == cert


def test_verify_rejects_overstated_claim():
    cert = solve_lock(lock_diagram(LOCK_ALPHA))
    tampered = Certificate(cert.start, cert.steps, cert.claimed_ghosts + 1)
    result = verify_certificate(tampered)
    assert not result.ok
    assert result.failure is not None


def test_verify_rejects_reordered_steps():
    cert = solve_lock(lock_diagram(LOCK_ALPHA))
    tampered = Certificate(
        cert.start, cert.steps[::-1], cert.claimed_ghosts
    )
    assert not verify_certificate(tampered).ok


def test_verify_rejects_foreign_start():
    cert = solve_lock(lock_diagram(LOCK_ALPHA))
    tampered = Certificate(
        key_diagram((0, 2)), cert.steps, cert.claimed_ghosts
    )
    assert not verify_certificate(tampered).ok


def test_verify_accepts_empty_certificate():
    cert = Certificate(Diagram.of([(1, 1)]), (), 0)
    assert verify_certificate(cert).ok


@settings(deadline=None, max_examples=40)
@given(compositions)
def test_skew_solver_certificates_match_flake_count(alpha):
    d = skew_diagram(alpha)
    cert = solve_generalized_skew(d)
    assert cert.claimed_ghosts == sf(d)
    result = verify_certificate(cert)
    assert result.ok
    assert len(result.final.ghosts) == sf(d)


@settings(deadline=None, max_examples=40)
@given(compositions)
def test_key_solver_certificates_match_flake_count(alpha):
    d = key_diagram(alpha)
    cert = solve_generalized_skew(d)
    assert cert.claimed_ghosts == sf(d)
    assert verify_certificate(cert).ok


@settings(deadline=None, max_examples=30)
@given(plain_diagrams)
def test_greedy_achieves_ghost_only_capacity(d):
    cert = solve_greedy(d)
    assert verify_certificate(cert).ok
    assert cert.claimed_ghosts == maxg_hat_brute(d).count == sf_hat(d)


@settings(deadline=None, max_examples=40)
@given(plain_diagrams)
def test_greedy_steps_are_columnwise_ghost_moves(d):
    cert = solve_greedy(d)
    for step in cert.steps:
        assert step.kind == "ghost"
        assert step.source is not None and step.dest is not None
        assert step.source[1] == step.dest[1]
    # Steps are grouped by column: once the solver leaves a column it never
    # returns to it.
    cols = [step.source[1] for step in cert.steps]
    grouped = [c for i, c in enumerate(cols) if i == 0 or cols[i - 1] != c]
    assert len(grouped) == len(set(grouped))


@settings(deadline=None, max_examples=30)
@given(compositions)
def test_key_certificates_reach_brute_capacity(alpha):
    d = key_diagram(alpha)
    cert = solve_generalized_skew(d)
    assert cert.claimed_ghosts == maxg_brute(d).count
