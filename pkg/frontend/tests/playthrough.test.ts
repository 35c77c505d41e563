/** Scripted playthrough against a real service process: the client follows
 * hints to the target, plays a manual ghost move, and exercises the trivial,
 * undo, error, and snow-overlay paths. Requires `lascoux` on PATH. */

import { type ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiError, PuzzleClient } from "../src/api.js";
import { boardView, renderGrid } from "../src/view.js";
import type { DiagramRecord } from "../src/types.js";

const PORT = 8400 + (process.pid % 800);
const BASE = `http://127.0.0.1:${PORT}`;

// Left-justified diagram of the composition (0, 1, 2, 2).
const START: DiagramRecord = {
  cells: [[2, 1], [3, 1], [3, 2], [4, 1], [4, 2]],
  ghosts: [],
};

const sortPairs = (pairs: [number, number][]) =>
  [...pairs].sort((a, b) => a[0] - b[0] || a[1] - b[1]);

let server: ChildProcess;
const client = new PuzzleClient(BASE);

beforeAll(async () => {
  server = spawn("lascoux", ["serve", "--port", String(PORT)], {
    stdio: "ignore",
  });
  const deadline = Date.now() + 45_000;
  for (;;) {
    try {
      await fetch(`${BASE}/sessions/warmup-probe`);
      return;
    } catch {
      if (Date.now() > deadline) throw new Error("service did not start");
      await new Promise((resolve) => setTimeout(resolve, 250));
    }
  }
});

afterAll(() => {
  server?.kill();
});

describe("scripted playthrough", () => {
  it("follows hints from the start diagram to the ghost target", async () => {
    let state = await client.createSession(START);
    expect(state.target).toBe(3);
    expect(state.target_method).toBe("theorem:key");

    for (let step = 0; step < 20; step++) {
      const hint = await client.hint(state.id);
      if (hint.status === "optimal") break;
      state = await client.playMove(state.id, hint.step.row, hint.step.kind);
    }

    expect(state.ghosts).toBe(state.target);
    expect(boardView(state).victory).toBe(true);
  });

  it("renders the documented state after a manual ghost move at row 3", async () => {
    const created = await client.createSession(START);
    const state = await client.playMove(created.id, 3, "ghost");

    expect(state.trivial).toBe(false);
    expect(sortPairs(state.diagram.cells)).toEqual([
      [2, 1], [2, 2], [3, 1], [4, 1], [4, 2],
    ]);
    expect(state.diagram.ghosts).toEqual([[3, 2]]);
    expect(renderGrid(boardView(state))).toBe("OO\nOX\nOO\n..");
  });

  it("reports trivial moves without recording them", async () => {
    const created = await client.createSession(START);
    const state = await client.playMove(created.id, 9, "kohnert");
    expect(state.trivial).toBe(true);
    expect(state.history).toHaveLength(0);
    expect(state.ghosts).toBe(0);
  });

  it("rejects malformed moves and leaves the board unchanged", async () => {
    const created = await client.createSession(START);
    await expect(client.playMove(created.id, 0, "ghost")).rejects.toThrow(
      ApiError,
    );
    const after = await client.getSession(created.id);
    expect(after.diagram).toEqual(created.diagram);
    expect(after.history).toHaveLength(0);
  });

  it("undoes the last move", async () => {
    const created = await client.createSession(START);
    await client.playMove(created.id, 3, "ghost");
    const undone = await client.undo(created.id);
    expect(undone.undone).toBe(true);
    expect(sortPairs(undone.diagram.cells)).toEqual(sortPairs(START.cells));
    expect(undone.diagram.ghosts).toEqual([]);
  });

  it("serves the snow overlay of the start diagram", async () => {
    const created = await client.createSession(START);
    const snow = await client.snow(created.id);
    expect(snow.sf).toBe(3);
    expect(sortPairs(snow.snow.flakes)).toEqual([[1, 1], [1, 2], [2, 2]]);

    const view = boardView(created, { snow });
    expect(renderGrid(view)).toBe("OO\nOO\nO*\n**");
  });

  it("drops sessions on delete", async () => {
    const created = await client.createSession(START);
    await client.deleteSession(created.id);
    await expect(client.getSession(created.id)).rejects.toMatchObject({
      status: 404,
    });
  });
});
