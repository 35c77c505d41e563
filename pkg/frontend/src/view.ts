/** Pure board-view model: everything here is a function of the last service
 * response (plus transient display options). No move semantics live on the
 * client; the grid mirrors whatever the service said. */

import type {
  MoveRecord,
  SessionState,
  SnowResponse,
} from "./types.js";

export type CellKind = "plain" | "ghost" | "flake" | "empty";

export interface CellView {
  row: number;
  col: number;
  kind: CellKind;
  /** Dark cloud marker from the snow overlay. */
  dark: boolean;
  /** Part of the currently hinted move (its source cell). */
  hinted: boolean;
}

export interface BoardView {
  /** Rows top-to-bottom (highest row first), each left-to-right. */
  grid: CellView[][];
  /** 1-based row numbers in the same top-to-bottom order as `grid`. */
  rowNumbers: number[];
  ghostCount: number;
  /** null while the service is still computing the target. */
  target: number | null;
  targetMethod: string | null;
  victory: boolean;
  /** Human-readable move log, oldest first. */
  moveLog: string[];
  /** Rows on which the service reports at least one non-trivial move. */
  activeRows: number[];
  hint: MoveRecord | null;
}

export interface ViewOptions {
  hint?: MoveRecord | null;
  snow?: SnowResponse | null;
}

function describeMove(record: MoveRecord): string {
  if (record.from === null || record.to === null) {
    return `${record.kind} at row ${record.row}: no effect`;
  }
  const [fr, fc] = record.from;
  const [tr, tc] = record.to;
  return `${record.kind} at row ${record.row}: (${fr},${fc}) → (${tr},${tc})`;
}

/** Build the immutable view model for one service response. */
export function boardView(
  state: SessionState,
  options: ViewOptions = {},
): BoardView {
  const hint = options.hint ?? null;
  const flakes = options.snow?.snow.flakes ?? [];
  const dark = options.snow?.snow.dark ?? [];

  const positions = [
    ...state.diagram.cells,
    ...state.diagram.ghosts,
    ...state.start.cells,
    ...flakes,
  ];
  let maxRow = 1;
  let maxCol = 1;
  for (const [r, c] of positions) {
    if (r > maxRow) maxRow = r;
    if (c > maxCol) maxCol = c;
  }

  const kinds = new Map<string, CellKind>();
  for (const [r, c] of flakes) kinds.set(`${r},${c}`, "flake");
  for (const [r, c] of state.diagram.cells) kinds.set(`${r},${c}`, "plain");
  for (const [r, c] of state.diagram.ghosts) kinds.set(`${r},${c}`, "ghost");
  const darkSet = new Set(dark.map(([r, c]) => `${r},${c}`));
  const hintSource = hint?.from ? `${hint.from[0]},${hint.from[1]}` : null;

  const grid: CellView[][] = [];
  const rowNumbers: number[] = [];
  for (let row = maxRow; row >= 1; row--) {
    rowNumbers.push(row);
    const cells: CellView[] = [];
    for (let col = 1; col <= maxCol; col++) {
      const key = `${row},${col}`;
      cells.push({
        row,
        col,
        kind: kinds.get(key) ?? "empty",
        dark: darkSet.has(key),
        hinted: key === hintSource,
      });
    }
    grid.push(cells);
  }

  const activeRows = [
    ...new Set(
      state.legal_moves
        .filter((m) => m.from !== null)
        .map((m) => m.row),
    ),
  ].sort((a, b) => a - b);

  return {
    grid,
    rowNumbers,
    ghostCount: state.ghosts,
    target: state.target,
    targetMethod: state.target_method,
    victory: state.target !== null && state.ghosts >= state.target,
    moveLog: state.history.map(describeMove),
    activeRows,
    hint,
  };
}

const MARKS: Record<CellKind, string> = {
  plain: "O",
  ghost: "X",
  flake: "*",
  empty: ".",
};

/** ASCII projection of the grid, top row first (matches the service's own
 * rendering when no overlay is active). */
export function renderGrid(view: BoardView): string {
  return view.grid
    .map((row) => row.map((cell) => MARKS[cell.kind]).join(""))
    .join("\n");
}
