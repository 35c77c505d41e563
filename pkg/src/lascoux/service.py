"""HTTP/JSON service exposing the puzzle state machine.

Sessions hold a start diagram, the move history, and the ghost-count target.
Targets from the capacity theorems are filled in immediately; otherwise a
background search runs off the request path and the target stays null until
it finishes.  Mutations on one session are serialized by a per-session lock.
"""

from __future__ import annotations

import json
import secrets
import threading
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from .diagram import Diagram, ParseError, parse_diagram, render_ascii, to_record
from .explore import SearchLimits, maxg_brute
from .families import is_generalized_skew, is_key, is_lock, lockmain_qualifies
from .moves import MOVE_KINDS, MoveRecord, apply_records, legal_moves, move
from .snow import decoration_record, sf, snow, snow_star


@dataclass
class PuzzleSession:
    """One puzzle in progress; replaying history from start yields current."""

    id: str
    start: Diagram
    current: Diagram
    history: list[MoveRecord] = field(default_factory=list)
    target: int | None = None
    target_method: str | None = None
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def state(self) -> dict:
        return {
            "id": self.id,
            "start": to_record(self.start),
            "diagram": to_record(self.current),
            "ascii": render_ascii(self.current),
            "history": [step.to_json() for step in self.history],
            "ghosts": len(self.current.ghosts),
            "target": self.target,
            "target_method": self.target_method,
            "legal_moves": [m.to_json() for m in legal_moves(self.current)],
        }


def _theorem_target(diagram: Diagram) -> tuple[int, str] | None:
    if is_key(diagram):
        return sf(diagram), "theorem:key"
    if is_generalized_skew(diagram):
        return sf(diagram), "theorem:generalized-skew"
    if is_lock(diagram) and lockmain_qualifies(diagram):
        return snow_star(diagram).flake_count, "theorem:lock"
    return None


def create_app(
    state_file: str | None = None, limits: SearchLimits | None = None
) -> FastAPI:
    app = FastAPI(title="lascoux puzzle service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    limits = limits or SearchLimits()
    sessions: dict[str, PuzzleSession] = {}
    store_lock = threading.Lock()

    def save_state() -> None:
        if state_file is None:
            return
        snapshot = {
            sid: {
                "start": to_record(s.start),
                "history": [step.to_json() for step in s.history],
                "target": s.target,
                "target_method": s.target_method,
            }
            for sid, s in sessions.items()
        }
        Path(state_file).write_text(json.dumps(snapshot, indent=2))

    def load_state() -> None:
        if state_file is None or not Path(state_file).exists():
            return
        snapshot = json.loads(Path(state_file).read_text())
        for sid, data in snapshot.items():
            start = parse_diagram(data["start"])
            history = [MoveRecord.from_json(s) for s in data["history"]]
            sessions[sid] = PuzzleSession(
                id=sid,
                start=start,
                current=apply_records(start, history),
                history=history,
                target=data.get("target"),
                target_method=data.get("target_method"),
            )

    load_state()

    def compute_target_async(session: PuzzleSession) -> None:
        def job() -> None:
            result = maxg_brute(session.start, limits)
            with session.lock:
                if result.exact:
                    session.target = result.count
                    session.target_method = "brute"
            with store_lock:
                save_state()

        threading.Thread(target=job, daemon=True).start()

    def get_session(session_id: str) -> PuzzleSession | None:
        return sessions.get(session_id)

    def error(status: int, message: str) -> JSONResponse:
        return JSONResponse(status_code=status, content={"detail": message})

    @app.post("/sessions")
    async def create_session(request: Request):
        try:
            body = await request.json()
        except Exception:
            return error(400, "request body is not valid JSON")
        if not isinstance(body, dict) or "diagram" not in body:
            return error(400, 'body must be an object with a "diagram" field')
        try:
            diagram = parse_diagram(body["diagram"])
        except (ParseError, ValueError) as exc:
            return error(400, f"bad diagram: {exc}")
        session = PuzzleSession(
            id=secrets.token_hex(8), start=diagram, current=diagram
        )
        found = _theorem_target(diagram)
        if found is not None:
            session.target, session.target_method = found
        with store_lock:
            sessions[session.id] = session
            save_state()
        if found is None:
            compute_target_async(session)
        return session.state()

    @app.get("/sessions/{session_id}")
    def get_state(session_id: str):
        session = get_session(session_id)
        if session is None:
            return error(404, "unknown session")
        with session.lock:
            return session.state()

    @app.post("/sessions/{session_id}/move")
    async def post_move(session_id: str, request: Request):
        session = get_session(session_id)
        if session is None:
            return error(404, "unknown session")
        try:
            body = await request.json()
        except Exception:
            return error(400, "request body is not valid JSON")
        if not isinstance(body, dict):
            return error(400, "body must be an object")
        row = body.get("row")
        kind = body.get("kind")
        if not isinstance(row, int) or isinstance(row, bool) or row < 1:
            return error(400, "row must be a positive integer")
        if kind not in MOVE_KINDS:
            return error(400, f"kind must be one of {list(MOVE_KINDS)}")
        with session.lock:
            new, record = move(session.current, row, kind)
            trivial = record.trivial
            if not trivial:
                session.current = new
                session.history.append(record)
        with store_lock:
            save_state()
        return {"trivial": trivial, "move": record.to_json(), **session.state()}

    @app.post("/sessions/{session_id}/undo")
    def post_undo(session_id: str):
        session = get_session(session_id)
        if session is None:
            return error(404, "unknown session")
        with session.lock:
            undone = bool(session.history)
            if undone:
                session.history.pop()
                session.current = apply_records(session.start, session.history)
        with store_lock:
            save_state()
        return {"undone": undone, **session.state()}

    @app.get("/sessions/{session_id}/hint")
    def get_hint(session_id: str):
        session = get_session(session_id)
        if session is None:
            return error(404, "unknown session")
        with session.lock:
            if session.target is None:
                return error(409, "target is not known yet")
            if len(session.current.ghosts) >= session.target:
                return Response(status_code=204)
            result = maxg_brute(session.current, limits)
            if not result.exact or not result.sequence.steps:
                return Response(status_code=204)
            return {"hint": result.sequence.steps[0].to_json()}

    @app.get("/sessions/{session_id}/snow")
    def get_snow(session_id: str):
        session = get_session(session_id)
        if session is None:
            return error(404, "unknown session")
        if session.start.ghosts:
            return error(409, "snow overlay requires a ghost-free start diagram")
        deco = snow(session.start)
        return {"snow": decoration_record(deco), "sf": deco.flake_count}

    @app.delete("/sessions/{session_id}")
    def delete_session(session_id: str):
        with store_lock:
            if session_id not in sessions:
                return error(404, "unknown session")
            del sessions[session_id]
            save_state()
        return {"deleted": True}

    return app
