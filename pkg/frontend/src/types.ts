/** Wire types mirroring the diagram service's JSON payloads. */

export type MoveKind = "kohnert" | "ghost";

/** A diagram as the service serializes it: 1-based [row, col] pairs. */
export interface DiagramRecord {
  cells: [number, number][];
  ghosts: [number, number][];
}

/** One applied move; `from`/`to` are null for trivial moves on empty rows. */
export interface MoveRecord {
  row: number;
  kind: MoveKind;
  from: [number, number] | null;
  to: [number, number] | null;
}

/** Full session state returned by every session endpoint. */
export interface SessionState {
  id: string;
  start: DiagramRecord;
  diagram: DiagramRecord;
  ascii: string;
  history: MoveRecord[];
  ghosts: number;
  target: number | null;
  target_method: string | null;
  legal_moves: MoveRecord[];
}

export interface MoveResponse extends SessionState {
  trivial: boolean;
  move: MoveRecord;
}

export interface UndoResponse extends SessionState {
  undone: boolean;
}

/** Snow decoration of the session's start diagram. */
export interface SnowResponse {
  snow: {
    dark: [number, number][];
    flakes: [number, number][];
  };
  sf: number;
}

export type HintResult =
  | { status: "hint"; step: MoveRecord }
  | { status: "optimal" };
