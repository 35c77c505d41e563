from __future__ import annotations

import io
import json

import pytest

from lascoux.cli import main

from fixtures import SMALL_KEY_KKD_SIZE


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_key_ascii(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["gen", "key", "--alpha", "0,1,2,2"])
    assert code == 0
    assert out == "OO\nOO\nO.\n..\n"


def test_gen_lock_json(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch,
        ["gen", "lock", "--alpha", "0,2,1", "--format", "json"],
    )
    assert code == 0
    assert json.loads(out) == {
        "cells": [[2, 1], [2, 2], [3, 2]],
        "ghosts": [],
    }


def test_gen_checkered_requires_n(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["gen", "checkered"])
    assert code == 1
    assert "requires --n" in err


def test_gen_checkered_odd(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch, ["gen", "checkered", "--n", "2", "--parity", "odd"]
    )
    assert code == 0
    assert out == "O.\n.O\n"


def test_show_round_trips_ascii(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["show"], stdin="OX\nO.\n")
    assert code == 0
    assert out == "OX\nO.\n"


def test_show_accepts_json_on_stdin(capsys, monkeypatch):
    record = json.dumps({"cells": [[1, 1]], "ghosts": [[2, 1]]})
    code, out, _ = run(capsys, monkeypatch, ["show"], stdin=record)
    assert code == 0
    assert out == "X\nO\n"


def test_show_empty_stdin_is_error(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["show"], stdin="")
    assert code == 1
    assert "no diagram" in err


def test_show_malformed_input_is_error(capsys, monkeypatch):
    code, _, err = run(capsys, monkeypatch, ["show"], stdin="O?\n")
    assert code == 1
    assert err.startswith("error:")


def test_snow_ascii_output(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["snow"], stdin="OO\nO.\n")
    assert code == 0
    assert out == "O●\n●*\nflakes: 1\n"


def test_snow_json_output(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch, ["snow", "--format", "json"], stdin=".O\nOO\n"
    )
    assert code == 0
    record = json.loads(out)
    assert set(record) == {"dark", "flakes"}


def test_ghost_snow_json_includes_labels(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch, ["ghostsnow", "--format", "json"], stdin="O\nO\n"
    )
    assert code == 0
    assert "labels" in json.loads(out)


def test_maxg_from_family_flag(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch, ["maxg", "--alpha", "0,3,4,2,3", "--family", "key"]
    )
    assert code == 0
    assert out == "6\n"


def test_maxg_json_reports_method(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch,
        ["maxg", "--alpha", "0,4,0,2,3,2,1", "--family", "lock", "--format", "json"],
    )
    assert code == 0
    assert json.loads(out) == {"maxg": 7, "method": "theorem:lock"}


def test_maxg_from_stdin_brute(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch,
        ["maxg", "--method", "brute", "--format", "json"],
        stdin=json.dumps({"cells": [[3, 1], [2, 2]]}),
    )
    assert code == 0
    assert json.loads(out) == {"maxg": 2, "method": "brute"}


def test_maxg_theorem_method_refuses_brute_fallback(capsys, monkeypatch):
    code, _, err = run(
        capsys, monkeypatch,
        ["maxg", "--method", "theorem"],
        stdin=json.dumps({"cells": [[3, 1], [2, 2]]}),
    )
    assert code == 1
    assert "no capacity theorem" in err


def test_maxghat(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch, ["maxghat"],
        stdin=json.dumps({"cells": [[2, 1], [2, 2], [3, 2]]}),
    )
    assert code == 0
    assert out == "1\n"


def test_enumerate_count(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch, ["enumerate"],
        stdin=json.dumps({"cells": [[2, 1], [3, 1], [3, 2], [4, 1], [4, 2]]}),
    )
    assert code == 0
    assert out == f"{SMALL_KEY_KKD_SIZE}\n"


def test_enumerate_json_members(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch,
        ["enumerate", "--moves", "gkd", "--out-format", "json"],
        stdin=json.dumps({"cells": [[2, 1]]}),
    )
    assert code == 0
    members = json.loads(out)
    assert {"cells": [[2, 1]], "ghosts": []} in members
    assert {"cells": [[1, 1]], "ghosts": [[2, 1]]} in members
    assert len(members) == 2


def test_enumerate_limit_hit_is_error(capsys, monkeypatch):
    code, _, err = run(
        capsys, monkeypatch,
        ["enumerate", "--limits", "states=2,seconds=60"],
        stdin=json.dumps(
            {"cells": [[2, 1], [2, 2], [3, 1], [3, 2], [3, 3], [4, 1]]}
        ),
    )
    assert code == 1
    assert "limit" in err


def test_polynomial_command(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["lascoux", "--alpha", "0,1"])
    assert code == 0
    terms = json.loads(out)
    assert {"coeff": -1, "exponents": [1, 1]} in terms
    assert len(terms) == 3


def test_solve_auto_picks_lock_strategy(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch, ["solve"],
        stdin=json.dumps(
            {"cells": [[2, c] for c in (1, 2, 3, 4)]
             + [[4, 3], [4, 4], [5, 2], [5, 3], [5, 4], [6, 3], [6, 4], [7, 4]]}
        ),
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["strategy"] == "lock"
    assert payload["claimed_ghosts"] == 7


def test_solve_greedy_strategy(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch, ["solve", "--strategy", "greedy"],
        stdin=json.dumps({"cells": [[2, 1], [2, 2], [3, 2]]}),
    )
    assert code == 0
    assert json.loads(out)["claimed_ghosts"] == 1


def test_reduce_command(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch, ["reduce", "--format", "json"],
        stdin=json.dumps({"cells": [[1, 1], [2, 1], [2, 2]]}),
    )
    assert code == 0
    # (2,1) is not rightmost and no rightmost cell sits above it, so it goes.
    assert json.loads(out) == {"cells": [[1, 1], [2, 2]], "ghosts": []}


def test_colorp_command(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["colorp", "--alpha", "0,0,2"])
    assert code == 0
    assert out.startswith("ok")


def test_probe_command(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["probe", "--rows", "2", "--cols", "2", "--cells", "3"])
    assert code == 0
    assert out == "0 counterexamples (checked 15, skipped 0)\n"


def test_probe_json(capsys, monkeypatch):
    code, out, _ = run(
        capsys, monkeypatch,
        ["probe", "--rows", "1", "--cols", "2", "--cells", "2", "--format", "json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["checked"] == 4
    assert payload["counterexamples"] == []


def test_bad_alpha_is_error(capsys, monkeypatch):
    with pytest.raises(SystemExit):
        main(["gen", "key", "--alpha", "2,x"])


def test_bad_limits_component_is_error(capsys, monkeypatch):
    with pytest.raises(SystemExit):
        main(["enumerate", "--limits", "bogus=3"])
