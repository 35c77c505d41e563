/** Thin fetch client for the diagram puzzle service. */

import type {
  DiagramRecord,
  HintResult,
  MoveKind,
  MoveRecord,
  MoveResponse,
  SessionState,
  SnowResponse,
  UndoResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`service responded ${status}: ${detail}`);
    this.name = "ApiError";
  }
}

async function reject(response: Response): Promise<never> {
  let detail = response.statusText;
  try {
    const body = await response.json();
    if (body && typeof body.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(response.status, detail);
}

export class PuzzleClient {
  constructor(readonly baseUrl: string) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) await reject(response);
    return (await response.json()) as T;
  }

  /** Create a session from a diagram record or an ASCII grid. */
  createSession(diagram: DiagramRecord | string): Promise<SessionState> {
    return this.request<SessionState>("POST", "/sessions", { diagram });
  }

  getSession(id: string): Promise<SessionState> {
    return this.request<SessionState>("GET", `/sessions/${id}`);
  }

  playMove(id: string, row: number, kind: MoveKind): Promise<MoveResponse> {
    return this.request<MoveResponse>("POST", `/sessions/${id}/move`, {
      row,
      kind,
    });
  }

  undo(id: string): Promise<UndoResponse> {
    return this.request<UndoResponse>("POST", `/sessions/${id}/undo`, {});
  }

  /** 204 from the service means the session already meets its target. */
  async hint(id: string): Promise<HintResult> {
    const response = await fetch(`${this.baseUrl}/sessions/${id}/hint`);
    if (response.status === 204) return { status: "optimal" };
    if (!response.ok) await reject(response);
    const body = (await response.json()) as { hint: MoveRecord };
    return { status: "hint", step: body.hint };
  }

  snow(id: string): Promise<SnowResponse> {
    return this.request<SnowResponse>("GET", `/sessions/${id}/snow`);
  }

  async deleteSession(id: string): Promise<void> {
    const response = await fetch(`${this.baseUrl}/sessions/${id}`, {
      method: "DELETE",
    });
    if (!response.ok) await reject(response);
  }
}
