import { SessionApi } from "./api";
import { formatSeconds } from "./geometry";
import { EditorScene } from "./scene";
import { EditorStore, type EditorState } from "./state";
import type { EditOp } from "./types";

const api = new SessionApi("");
const store = new EditorStore(api);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const canvas = el<HTMLCanvasElement>("viewport");
const scene = new EditorScene(canvas, {
  onSelectWaypoint: (index) => store.selectWaypoint(index),
  onMoveWaypoint: (index, position) => {
    void store.moveWaypoint(index, position).catch(() => undefined);
  },
});

const fileInput = el<HTMLInputElement>("recording-file");
const trimStart = el<HTMLInputElement>("trim-start");
const trimEnd = el<HTMLInputElement>("trim-end");
const waypointCount = el<HTMLInputElement>("waypoint-count");
const strategy = el<HTMLSelectElement>("strategy");
const seed = el<HTMLInputElement>("seed");
const planButton = el<HTMLButtonElement>("plan");
const banner = el<HTMLDivElement>("banner");
const stats = el<HTMLDivElement>("stats");
const stopwatchButton = el<HTMLButtonElement>("stopwatch");
const stopwatchDisplay = el<HTMLSpanElement>("stopwatch-display");
const applyTransform = el<HTMLButtonElement>("apply-transform");
const moveButton = el<HTMLButtonElement>("move-selected");
const controls = [planButton, stopwatchButton, applyTransform, moveButton];

fileInput.addEventListener("change", async () => {
  const file = fileInput.files?.[0];
  if (!file) return;
  const text = await file.text();
  const format = file.name.endsWith(".jsonl") ? "jsonl" : "csv";
  await store.loadRecording(text, format).catch(() => undefined);
});

planButton.addEventListener("click", () => {
  const n = Number(waypointCount.value);
  if (!Number.isInteger(n) || n < 2) {
    banner.textContent = "waypoint count must be an integer ≥ 2";
    banner.hidden = false;
    return; // never submitted
  }
  void store
    .trimAndPlan(
      Number(trimStart.value),
      Number(trimEnd.value),
      n,
      strategy.value as "equidistant" | "random",
      Number(seed.value) || 0,
    )
    .catch(() => undefined);
});

applyTransform.addEventListener("click", () => {
  const kind = el<HTMLSelectElement>("transform-kind").value;
  let op: EditOp;
  if (kind === "shift") {
    op = {
      kind: "shift",
      offset: [
        Number(el<HTMLInputElement>("shift-x").value) || 0,
        Number(el<HTMLInputElement>("shift-y").value) || 0,
        Number(el<HTMLInputElement>("shift-z").value) || 0,
      ],
    };
  } else if (kind === "rotate") {
    op = { kind: "rotate", angle: Number(el<HTMLInputElement>("rotate-angle").value) || 0 };
  } else {
    op = { kind: "scale", factor: Number(el<HTMLInputElement>("scale-factor").value) || 1 };
  }
  void store.applyEdit(op).catch(() => undefined);
});

moveButton.addEventListener("click", () => {
  const index = store.current.selectedWaypoint;
  if (index === null) {
    banner.textContent = "select a waypoint first";
    banner.hidden = false;
    return;
  }
  void store
    .moveWaypoint(index, [
      Number(el<HTMLInputElement>("move-x").value),
      Number(el<HTMLInputElement>("move-y").value),
      Number(el<HTMLInputElement>("move-z").value),
    ])
    .catch(() => undefined);
});

stopwatchButton.addEventListener("click", () => {
  void store.toggleStopwatch().catch(() => undefined);
});

function render(state: EditorState): void {
  for (const control of controls) control.disabled = state.busy || !state.sessionId;
  banner.hidden = !state.banner;
  banner.textContent = state.banner ?? "";

  if (state.path) {
    trimStart.max = trimEnd.max = String(state.path.points.length - 1);
    if (state.trimHandles) {
      trimStart.value = String(state.trimHandles[0]);
      trimEnd.value = String(state.trimHandles[1]);
    }
    scene.setPath(state.path.points, state.trimHandles ?? [0, state.path.points.length - 1]);
  }
  scene.setWaypoints(state.waypoints, state.selectedWaypoint);
  scene.setTrajectory(state.trajectory);

  if (state.summary?.planned) {
    const { rsme, mae, waypoint_count, feasible } = state.summary;
    stats.textContent =
      `waypoints ${waypoint_count} · RSME ${(rsme ?? 0).toFixed(4)} m · ` +
      `MAE ${(mae ?? 0).toFixed(4)} m · ${feasible ? "feasible" : "INFEASIBLE"}`;
  } else {
    stats.textContent = state.sessionId ? "recording loaded — plan to continue" : "";
  }

  const selected = state.selectedWaypoint;
  const point = selected !== null ? state.waypoints?.points[selected] : undefined;
  if (point) {
    el<HTMLInputElement>("move-x").value = point.x.toFixed(3);
    el<HTMLInputElement>("move-y").value = point.y.toFixed(3);
    el<HTMLInputElement>("move-z").value = point.z.toFixed(3);
  }

  stopwatchButton.textContent = state.stopwatch.running ? "stop timer" : "start timer";
  stopwatchDisplay.textContent = state.stopwatch.running
    ? "running…"
    : formatSeconds(state.stopwatch.elapsed);
}

store.subscribe(render);
render(store.current);
