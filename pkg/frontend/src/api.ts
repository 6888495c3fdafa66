import type {
  ActionSummary,
  EditOp,
  ErrorsDoc,
  PathDoc,
  ServiceError,
  TrajectoryDoc,
  WaypointsDoc,
} from "./types";

export class ApiError extends Error {
  constructor(
    readonly kind: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

type FetchLike = typeof fetch;

/** Typed client for the session service. The editor never computes splines
 * or metrics itself; everything it renders comes out of these calls. */
export class SessionApi {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const body = await response.text();
    if (!response.ok) {
      let kind = "HttpError";
      let message = body || response.statusText;
      try {
        const parsed = JSON.parse(body) as ServiceError;
        kind = parsed.error.kind;
        message = parsed.error.message;
      } catch {
        // non-JSON error body, keep raw text
      }
      throw new ApiError(kind, message, response.status);
    }
    return JSON.parse(body) as T;
  }

  async createSession(recording: string | Uint8Array, format: "csv" | "jsonl" = "csv"): Promise<string> {
    const { id } = await this.request<{ id: string }>(`/sessions?format=${format}`, {
      method: "POST",
      body: recording as BodyInit,
    });
    return id;
  }

  private action(sessionId: string, payload: Record<string, unknown>): Promise<ActionSummary> {
    return this.request<ActionSummary>(`/sessions/${sessionId}/actions`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  trim(sessionId: string, start: number, end: number): Promise<ActionSummary> {
    return this.action(sessionId, { action: "trim", start, end });
  }

  plan(
    sessionId: string,
    n: number,
    strategy: "equidistant" | "random" = "equidistant",
    seed = 0,
  ): Promise<ActionSummary> {
    return this.action(sessionId, { action: "plan", strategy, n, seed });
  }

  edit(sessionId: string, op: EditOp): Promise<ActionSummary> {
    return this.action(sessionId, { action: "edit", op });
  }

  stopwatch(sessionId: string, event: "start" | "stop"): Promise<ActionSummary> {
    return this.action(sessionId, { action: "stopwatch", event });
  }

  getPath(sessionId: string): Promise<PathDoc> {
    return this.request<PathDoc>(`/sessions/${sessionId}/state?view=path`);
  }

  getWaypoints(sessionId: string): Promise<WaypointsDoc> {
    return this.request<WaypointsDoc>(`/sessions/${sessionId}/state?view=waypoints`);
  }

  getTrajectory(sessionId: string): Promise<TrajectoryDoc> {
    return this.request<TrajectoryDoc>(`/sessions/${sessionId}/state?view=trajectory`);
  }

  getErrors(sessionId: string): Promise<ErrorsDoc> {
    return this.request<ErrorsDoc>(`/sessions/${sessionId}/state?view=errors`);
  }
}
