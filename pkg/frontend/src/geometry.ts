/** Pure vector helpers for waypoint dragging and trajectory coloring.
 * Kept free of three.js so they can be unit-tested in node. */

export type Vec3 = [number, number, number];

export function sub(a: Vec3, b: Vec3): Vec3 {
  return [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
}

export function add(a: Vec3, b: Vec3): Vec3 {
  return [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
}

export function scale(a: Vec3, k: number): Vec3 {
  return [a[0] * k, a[1] * k, a[2] * k];
}

export function dot(a: Vec3, b: Vec3): number {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

export function norm(a: Vec3): number {
  return Math.hypot(a[0], a[1], a[2]);
}

/**
 * Intersection of the pointer ray with the camera-facing plane through a
 * dragged waypoint: the plane contains `planePoint` and is normal to the
 * camera's viewing direction, so screen motion maps to in-plane motion.
 * Returns null when the ray runs (near-)parallel to the plane.
 */
export function dragPlaneIntersection(
  rayOrigin: Vec3,
  rayDirection: Vec3,
  planePoint: Vec3,
  planeNormal: Vec3,
): Vec3 | null {
  const denom = dot(rayDirection, planeNormal);
  if (Math.abs(denom) < 1e-12) return null;
  const s = dot(sub(planePoint, rayOrigin), planeNormal) / denom;
  if (s < 0) return null;
  return add(rayOrigin, scale(rayDirection, s));
}

export interface TimedColor {
  t: number;
  rgb: [number, number, number];
}

/**
 * Per-vertex color for a trajectory sample: the error gradient is reported
 * at the demonstration timestamps, so pick the entry nearest in time.
 */
export function colorAt(colors: TimedColor[], t: number): [number, number, number] {
  if (colors.length === 0) return [128, 128, 128];
  let lo = 0;
  let hi = colors.length - 1;
  while (hi - lo > 1) {
    const mid = (lo + hi) >> 1;
    if ((colors[mid] as TimedColor).t <= t) lo = mid;
    else hi = mid;
  }
  const a = colors[lo] as TimedColor;
  const b = colors[hi] as TimedColor;
  return Math.abs(a.t - t) <= Math.abs(b.t - t) ? a.rgb : b.rgb;
}

export function formatSeconds(value: number | null): string {
  if (value === null) return "--.-s";
  return `${value.toFixed(1)}s`;
}
