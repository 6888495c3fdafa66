import { ApiError, SessionApi } from "./api";
import type {
  ActionSummary,
  EditOp,
  ErrorsDoc,
  PathDoc,
  TrajectoryDoc,
  Violation,
  WaypointsDoc,
} from "./types";

export interface EditorState {
  sessionId: string | null;
  busy: boolean;
  banner: string | null;
  violations: Violation[];
  path: PathDoc | null;
  waypoints: WaypointsDoc | null;
  trajectory: TrajectoryDoc | null;
  errors: ErrorsDoc | null;
  summary: ActionSummary | null;
  selectedWaypoint: number | null;
  trimHandles: [number, number] | null;
  stopwatch: { running: boolean; elapsed: number | null };
}

function initialState(): EditorState {
  return {
    sessionId: null,
    busy: false,
    banner: null,
    violations: [],
    path: null,
    waypoints: null,
    trajectory: null,
    errors: null,
    summary: null,
    selectedWaypoint: null,
    trimHandles: null,
    stopwatch: { running: false, elapsed: null },
  };
}

type Listener = (state: EditorState) => void;

/** View model of the editor. Every mutation round-trips through the service
 * and re-reads the relevant state views; the store never derives geometry
 * on its own. At most one action is in flight: `busy` is set while a call
 * runs and callers are expected to disable controls on it. */
export class EditorStore {
  private state = initialState();
  private listeners = new Set<Listener>();

  constructor(private readonly api: SessionApi) {}

  get current(): EditorState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private patch(changes: Partial<EditorState>): void {
    this.state = { ...this.state, ...changes };
    for (const listener of this.listeners) listener(this.state);
  }

  /** Runs one service interaction; rejects immediately when another one is
   * still in flight. */
  private async exclusive<T>(work: () => Promise<T>): Promise<T> {
    if (this.state.busy) {
      throw new Error("another action is in flight");
    }
    this.patch({ busy: true, banner: null });
    try {
      return await work();
    } catch (error) {
      this.patch({ banner: describeError(error) });
      throw error;
    } finally {
      this.patch({ busy: false });
    }
  }

  private requireSession(): string {
    const id = this.state.sessionId;
    if (!id) throw new Error("no recording loaded");
    return id;
  }

  async loadRecording(content: string | Uint8Array, format: "csv" | "jsonl" = "csv"): Promise<void> {
    await this.exclusive(async () => {
      const id = await this.api.createSession(content, format);
      const path = await this.api.getPath(id);
      this.patch({
        ...initialState(),
        busy: true, // cleared by exclusive()
        sessionId: id,
        path,
        trimHandles: [0, path.points.length - 1],
      });
    });
  }

  /** Trim to the handle range and plan. n < 2 never reaches the service. */
  async trimAndPlan(
    start: number,
    end: number,
    n: number,
    strategy: "equidistant" | "random" = "equidistant",
    seed = 0,
  ): Promise<void> {
    if (!Number.isInteger(n) || n < 2) {
      this.patch({ banner: `waypoint count must be an integer ≥ 2, got ${n}` });
      throw new Error("waypoint count must be at least 2");
    }
    await this.exclusive(async () => {
      const id = this.requireSession();
      await this.api.trim(id, start, end);
      const summary = await this.api.plan(id, n, strategy, seed);
      await this.refreshPlanned(id, summary);
      this.patch({ trimHandles: [start, end], path: await this.api.getPath(id) });
    });
  }

  /** Applies one edit. An infeasible edit is not committed by the service;
   * the store keeps the previous geometry and surfaces the violations. */
  async applyEdit(op: EditOp): Promise<boolean> {
    return this.exclusive(async () => {
      const id = this.requireSession();
      const summary = await this.api.edit(id, op);
      if (!summary.committed) {
        // the service reports the rejected candidate's violations while its
        // own numbers still describe the unchanged current plan
        this.patch({
          violations: summary.violations,
          banner: violationBanner(summary.violations),
          summary,
        });
        return false;
      }
      await this.refreshPlanned(id, summary);
      return true;
    });
  }

  moveWaypoint(index: number, position: [number, number, number]): Promise<boolean> {
    return this.applyEdit({ kind: "move_waypoint", waypoint_index: index, new_position: position });
  }

  async toggleStopwatch(): Promise<void> {
    await this.exclusive(async () => {
      const id = this.requireSession();
      const event = this.state.stopwatch.running ? "stop" : "start";
      const summary = await this.api.stopwatch(id, event);
      this.patch({
        stopwatch: { running: event === "start", elapsed: summary.elapsed },
      });
    });
  }

  selectWaypoint(index: number | null): void {
    this.patch({ selectedWaypoint: index });
  }

  private async refreshPlanned(id: string, summary: ActionSummary): Promise<void> {
    const [waypoints, trajectory, errors] = await Promise.all([
      this.api.getWaypoints(id),
      this.api.getTrajectory(id),
      this.api.getErrors(id),
    ]);
    this.patch({
      summary,
      waypoints,
      trajectory,
      errors,
      violations: summary.feasible === false ? trajectory.feasibility.violations : [],
      banner:
        summary.feasible === false
          ? violationBanner(trajectory.feasibility.violations)
          : null,
    });
  }
}

export function violationBanner(violations: Violation[]): string {
  if (violations.length === 0) return "infeasible trajectory";
  const byKind = new Map<string, number>();
  for (const v of violations) {
    byKind.set(v.kind, (byKind.get(v.kind) ?? 0) + 1);
  }
  const parts = [...byKind.entries()].map(([kind, count]) => `${count} ${kind}`);
  return `edit rejected: ${parts.join(", ")} violation(s)`;
}

export function describeError(error: unknown): string {
  if (error instanceof ApiError) return `${error.kind}: ${error.message}`;
  if (error instanceof Error) return error.message;
  return String(error);
}
