/** JSON documents exchanged with the session service. */

export interface PointRecord {
  t: number;
  x: number;
  y: number;
  z: number;
}

export interface PathDoc {
  points: PointRecord[];
  trim_start: number;
  trim_end: number;
}

export interface WaypointsDoc {
  points: PointRecord[];
  source_indices: number[] | null;
}

export interface SegmentCoeffs {
  a: number;
  b: number;
  c: number;
  d: number;
}

export interface ControlSample {
  t: number;
  p: [number, number, number];
  v: [number, number, number];
  a: [number, number, number];
}

export interface TimedColor {
  t: number;
  rgb: [number, number, number];
}

export interface Violation {
  t: number;
  kind: "bounds" | "velocity" | "acceleration";
  value: number;
  limit: number;
  detail: string;
}

export interface FeasibilityDoc {
  feasible: boolean;
  violations: Violation[];
}

export interface TrajectoryDoc {
  knots: number[];
  segments: { x: SegmentCoeffs[]; y: SegmentCoeffs[]; z: SegmentCoeffs[] };
  samples: ControlSample[];
  colors: TimedColor[];
  feasibility: FeasibilityDoc;
}

export interface ErrorsDoc {
  rsme: number;
  mae: number;
  series: { t: number; e: [number, number, number]; norm: number }[];
  normalized: number[];
  colors: [number, number, number][];
}

export interface ActionSummary {
  id: string;
  trim: [number, number];
  planned: boolean;
  committed: boolean;
  feasible: boolean | null;
  waypoint_count: number | null;
  rsme: number | null;
  mae: number | null;
  violations: Violation[];
  elapsed: number | null;
}

export type EditOp =
  | { kind: "shift"; offset: [number, number, number] }
  | { kind: "rotate"; angle: number }
  | { kind: "scale"; factor: number }
  | { kind: "move_waypoint"; waypoint_index: number; new_position: [number, number, number] };

export interface ServiceError {
  error: { kind: string; message: string };
}
