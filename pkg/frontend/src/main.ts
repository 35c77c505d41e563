/** DOM wiring: one active session per tab, every mutation awaits the service
 * round-trip, and the board is re-rendered from each response. */

import { ApiError, PuzzleClient } from "./api.js";
import type {
  MoveKind,
  MoveRecord,
  SessionState,
  SnowResponse,
} from "./types.js";
import { boardView, type BoardView } from "./view.js";

const DEFAULT_DIAGRAM = "OO\nOO\nO.\n..";
const TARGET_POLL_MS = 1500;

// Same-origin by default; override with ?api=http://host:port when the
// service runs elsewhere.
const apiBase =
  new URLSearchParams(window.location.search).get("api") ?? "";
const client = new PuzzleClient(apiBase);

let session: SessionState | null = null;
let hint: MoveRecord | null = null;
let snow: SnowResponse | null = null;
let snowEnabled = false;
let busy = false;
let pollTimer: number | undefined;

const $ = <T extends HTMLElement>(id: string): T => {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
};

function notice(text: string, tone: "info" | "error" | "win" = "info"): void {
  const banner = $("banner");
  banner.textContent = text;
  banner.className = text ? `banner ${tone}` : "banner";
}

function moveKind(): MoveKind {
  const checked = document.querySelector<HTMLInputElement>(
    'input[name="kind"]:checked',
  );
  return checked?.value === "ghost" ? "ghost" : "kohnert";
}

function renderBoard(view: BoardView): void {
  const table = $("board");
  table.innerHTML = "";
  const active = new Set(view.activeRows);
  view.grid.forEach((cells, i) => {
    const row = view.rowNumbers[i]!;
    const tr = document.createElement("tr");
    const label = document.createElement("th");
    label.textContent = String(row);
    tr.appendChild(label);
    for (const cell of cells) {
      const td = document.createElement("td");
      td.className = `cell ${cell.kind}`;
      if (cell.dark) td.classList.add("dark");
      if (cell.hinted) td.classList.add("hinted");
      td.textContent =
        cell.kind === "plain" ? "●"
        : cell.kind === "ghost" ? "✕"
        : cell.kind === "flake" ? "✶"
        : "";
      tr.appendChild(td);
    }
    if (active.has(row)) {
      tr.classList.add("active");
      tr.title = `play ${moveKind()} at row ${row}`;
      tr.addEventListener("click", () => void playMove(row));
    }
    table.appendChild(tr);
  });
}

function render(): void {
  const hasSession = session !== null;
  $("puzzle").hidden = !hasSession;
  for (const id of ["hint-btn", "undo-btn", "snow-toggle"]) {
    ($(id) as HTMLButtonElement | HTMLInputElement).toggleAttribute(
      "disabled",
      !hasSession || busy,
    );
  }
  if (!session) return;

  const view = boardView(session, { hint, snow: snowEnabled ? snow : null });
  renderBoard(view);
  $("ghost-count").textContent = String(view.ghostCount);
  $("target").textContent =
    view.target === null ? "unknown" : String(view.target);
  $("target-method").textContent = view.targetMethod ?? "computing…";
  const log = $("move-log");
  log.innerHTML = "";
  for (const line of view.moveLog) {
    const li = document.createElement("li");
    li.textContent = line;
    log.appendChild(li);
  }
  if (view.victory) notice("Target reached!", "win");
}

/** Re-fetch until the background target computation lands. */
function pollTarget(): void {
  window.clearTimeout(pollTimer);
  if (!session || session.target !== null) return;
  pollTimer = window.setTimeout(async () => {
    if (!session) return;
    try {
      session = await client.getSession(session.id);
      render();
    } catch {
      // transient; next poll retries
    }
    pollTarget();
  }, TARGET_POLL_MS);
}

async function guard(action: () => Promise<void>): Promise<void> {
  if (busy) return;
  busy = true;
  render();
  try {
    await action();
  } catch (error) {
    notice(
      error instanceof ApiError ? error.message : `request failed: ${error}`,
      "error",
    );
  } finally {
    busy = false;
    render();
  }
}

async function createSession(): Promise<void> {
  const text = ($("diagram-input") as HTMLTextAreaElement).value.trim();
  await guard(async () => {
    const diagram = text.startsWith("{") ? JSON.parse(text) : text;
    session = await client.createSession(diagram);
    hint = null;
    snow = null;
    snowEnabled = false;
    ($("snow-toggle") as HTMLInputElement).checked = false;
    notice("");
    pollTarget();
  });
}

async function playMove(row: number): Promise<void> {
  if (!session) return;
  await guard(async () => {
    const response = await client.playMove(session!.id, row, moveKind());
    session = response;
    hint = null;
    if (response.trivial) notice("No effect: that move is trivial.");
    else notice("");
  });
}

async function requestHint(): Promise<void> {
  if (!session) return;
  await guard(async () => {
    const result = await client.hint(session!.id);
    if (result.status === "optimal") {
      hint = null;
      notice("Already optimal: the target is met.");
    } else {
      hint = result.step;
      notice(`Hint: ${result.step.kind} at row ${result.step.row}`);
    }
  });
}

async function undoMove(): Promise<void> {
  if (!session) return;
  await guard(async () => {
    const response = await client.undo(session!.id);
    session = response;
    hint = null;
    notice(response.undone ? "" : "Nothing to undo.");
  });
}

async function toggleSnow(): Promise<void> {
  if (!session) return;
  snowEnabled = ($("snow-toggle") as HTMLInputElement).checked;
  if (snowEnabled && snow === null) {
    await guard(async () => {
      snow = await client.snow(session!.id);
    });
  } else {
    render();
  }
}

window.addEventListener("DOMContentLoaded", () => {
  ($("diagram-input") as HTMLTextAreaElement).value = DEFAULT_DIAGRAM;
  $("new-session").addEventListener("click", () => void createSession());
  $("hint-btn").addEventListener("click", () => void requestHint());
  $("undo-btn").addEventListener("click", () => void undoMove());
  $("snow-toggle").addEventListener("change", () => void toggleSnow());
  render();
});
