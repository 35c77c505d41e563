import { describe, expect, it } from "vitest";

import { boardView, renderGrid } from "../src/view.js";
import type { SessionState, SnowResponse } from "../src/types.js";

function state(overrides: Partial<SessionState> = {}): SessionState {
  return {
    id: "s1",
    start: { cells: [[2, 1], [3, 1], [3, 2], [4, 1], [4, 2]], ghosts: [] },
    diagram: { cells: [[2, 1], [3, 1], [3, 2], [4, 1], [4, 2]], ghosts: [] },
    ascii: "OO\nOO\nO.\n..\n",
    history: [],
    ghosts: 0,
    target: 3,
    target_method: "theorem:key",
    legal_moves: [
      { row: 2, kind: "kohnert", from: [2, 1], to: [1, 1] },
      { row: 3, kind: "ghost", from: [3, 2], to: [2, 2] },
    ],
    ...overrides,
  };
}

describe("boardView", () => {
  it("mirrors the service diagram, top row first", () => {
    const view = boardView(state());
    expect(view.rowNumbers).toEqual([4, 3, 2, 1]);
    expect(renderGrid(view)).toBe("OO\nOO\nO.\n..");
  });

  it("marks ghosts distinctly from plain cells", () => {
    const view = boardView(
      state({
        diagram: {
          cells: [[2, 1], [2, 2], [3, 1], [4, 1], [4, 2]],
          ghosts: [[3, 2]],
        },
        ghosts: 1,
      }),
    );
    expect(renderGrid(view)).toBe("OO\nOX\nOO\n..");
    const ghostCell = view.grid
      .flat()
      .find((cell) => cell.row === 3 && cell.col === 2);
    expect(ghostCell?.kind).toBe("ghost");
  });

  it("keeps the frame sized by the start diagram after cells drop", () => {
    const view = boardView(
      state({ diagram: { cells: [[1, 1]], ghosts: [] } }),
    );
    expect(view.rowNumbers).toEqual([4, 3, 2, 1]);
    expect(renderGrid(view)).toBe("..\n..\n..\nO.");
  });

  it("flags victory exactly when the target is met", () => {
    expect(boardView(state({ ghosts: 2, target: 3 })).victory).toBe(false);
    expect(boardView(state({ ghosts: 3, target: 3 })).victory).toBe(true);
    expect(boardView(state({ ghosts: 3, target: null })).victory).toBe(false);
  });

  it("lists active rows from the service's legal moves only", () => {
    const view = boardView(state());
    expect(view.activeRows).toEqual([2, 3]);
    const none = boardView(state({ legal_moves: [] }));
    expect(none.activeRows).toEqual([]);
  });

  it("highlights the hinted move's source cell", () => {
    const view = boardView(state(), {
      hint: { row: 3, kind: "ghost", from: [3, 2], to: [2, 2] },
    });
    const hinted = view.grid.flat().filter((cell) => cell.hinted);
    expect(hinted.map((cell) => [cell.row, cell.col])).toEqual([[3, 2]]);
  });

  it("describes history entries, flagging trivial ones", () => {
    const view = boardView(
      state({
        history: [
          { row: 3, kind: "ghost", from: [3, 2], to: [2, 2] },
          { row: 9, kind: "kohnert", from: null, to: null },
        ],
      }),
    );
    expect(view.moveLog).toEqual([
      "ghost at row 3: (3,2) → (2,2)",
      "kohnert at row 9: no effect",
    ]);
  });

  it("overlays snowflakes and dark cells without touching the diagram", () => {
    const snow: SnowResponse = {
      snow: { dark: [[3, 1], [4, 2]], flakes: [[1, 1], [1, 2], [2, 2]] },
      sf: 3,
    };
    const view = boardView(state(), { snow });
    expect(renderGrid(view)).toBe("OO\nOO\nO*\n**");
    const darks = view.grid.flat().filter((cell) => cell.dark);
    expect(darks.map((cell) => [cell.row, cell.col])).toEqual(
      expect.arrayContaining([[3, 1], [4, 2]]),
    );
    expect(darks).toHaveLength(2);
  });

  it("never lets a flake overwrite an occupied cell", () => {
    const snow: SnowResponse = {
      snow: { dark: [], flakes: [[2, 1]] },
      sf: 1,
    };
    const view = boardView(state(), { snow });
    const cell = view.grid
      .flat()
      .find((c) => c.row === 2 && c.col === 1);
    expect(cell?.kind).toBe("plain");
  });
});
