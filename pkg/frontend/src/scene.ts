import * as THREE from "three";
import { OrbitControls } from "three/addons/controls/OrbitControls.js";

import { colorAt, dragPlaneIntersection, type Vec3 } from "./geometry";
import type { PointRecord, TimedColor, TrajectoryDoc, WaypointsDoc } from "./types";

const BOX_MIN: Vec3 = [0, 0, 0];
const BOX_MAX: Vec3 = [6, 4, 3];
const WAYPOINT_RADIUS = 0.05;

export interface SceneCallbacks {
  onSelectWaypoint(index: number | null): void;
  onMoveWaypoint(index: number, position: Vec3): void;
}

/** Renders the recording, the waypoint spheres (start/end in yellow, per
 * the lab convention) and the error-colored trajectory inside a wireframe
 * of the flight volume. World axes are z-up. */
export class EditorScene {
  private readonly scene = new THREE.Scene();
  private readonly camera: THREE.PerspectiveCamera;
  private readonly renderer: THREE.WebGLRenderer;
  private readonly controls: OrbitControls;
  private readonly raycaster = new THREE.Raycaster();

  private pathLine: THREE.Line | null = null;
  private trajectoryLine: THREE.Line | null = null;
  private waypointMeshes: THREE.Mesh[] = [];
  private waypointGroup = new THREE.Group();

  private dragging: { index: number; plane: { point: Vec3; normal: Vec3 } } | null = null;
  private selected: number | null = null;

  constructor(
    private readonly canvas: HTMLCanvasElement,
    private readonly callbacks: SceneCallbacks,
  ) {
    this.renderer = new THREE.WebGLRenderer({ canvas, antialias: true });
    this.camera = new THREE.PerspectiveCamera(50, 1, 0.01, 100);
    this.camera.up.set(0, 0, 1);
    this.camera.position.set(9, -6, 5);
    this.controls = new OrbitControls(this.camera, canvas);
    this.controls.target.set(3, 2, 1);

    this.scene.background = new THREE.Color(0x10141a);
    this.scene.add(new THREE.AmbientLight(0xffffff, 0.7));
    const sun = new THREE.DirectionalLight(0xffffff, 1.2);
    sun.position.set(4, -6, 8);
    this.scene.add(sun);
    this.scene.add(this.waypointGroup);
    this.addVolumeAndGrid();

    canvas.addEventListener("pointerdown", (e) => this.onPointerDown(e));
    canvas.addEventListener("pointermove", (e) => this.onPointerMove(e));
    canvas.addEventListener("pointerup", () => this.onPointerUp());
    window.addEventListener("resize", () => this.resize());
    this.resize();
    this.renderer.setAnimationLoop(() => {
      this.controls.update();
      this.renderer.render(this.scene, this.camera);
    });
  }

  private addVolumeAndGrid(): void {
    const size = new THREE.Vector3(...BOX_MAX).sub(new THREE.Vector3(...BOX_MIN));
    const box = new THREE.BoxGeometry(size.x, size.y, size.z);
    const edges = new THREE.LineSegments(
      new THREE.EdgesGeometry(box),
      new THREE.LineBasicMaterial({ color: 0x3a4a5a }),
    );
    edges.position.set(size.x / 2, size.y / 2, size.z / 2);
    this.scene.add(edges);

    const grid = new THREE.GridHelper(12, 24, 0x2a3442, 0x1c242e);
    grid.rotation.x = Math.PI / 2; // grid lives in the xy ground plane
    grid.position.set(3, 2, 0);
    this.scene.add(grid);
  }

  private resize(): void {
    const width = this.canvas.clientWidth || this.canvas.width;
    const height = this.canvas.clientHeight || this.canvas.height;
    this.camera.aspect = width / height;
    this.camera.updateProjectionMatrix();
    this.renderer.setSize(width, height, false);
  }

  setPath(points: PointRecord[], trim: [number, number]): void {
    if (this.pathLine) this.scene.remove(this.pathLine);
    const inside = points.slice(trim[0], trim[1] + 1);
    const geometry = new THREE.BufferGeometry().setFromPoints(
      inside.map((p) => new THREE.Vector3(p.x, p.y, p.z)),
    );
    this.pathLine = new THREE.Line(
      geometry,
      new THREE.LineBasicMaterial({ color: 0x5b7f9e }),
    );
    this.scene.add(this.pathLine);
  }

  setWaypoints(doc: WaypointsDoc | null, selected: number | null): void {
    this.selected = selected;
    this.waypointGroup.clear();
    this.waypointMeshes = [];
    if (!doc) return;
    doc.points.forEach((p, index) => {
      const endpoint = index === 0 || index === doc.points.length - 1;
      const color = index === selected ? 0xff5533 : endpoint ? 0xffd447 : 0x4fd1c5;
      const mesh = new THREE.Mesh(
        new THREE.SphereGeometry(WAYPOINT_RADIUS, 16, 12),
        new THREE.MeshStandardMaterial({ color }),
      );
      mesh.position.set(p.x, p.y, p.z);
      mesh.userData.index = index;
      this.waypointGroup.add(mesh);
      this.waypointMeshes.push(mesh);
    });
  }

  setTrajectory(doc: TrajectoryDoc | null): void {
    if (this.trajectoryLine) {
      this.scene.remove(this.trajectoryLine);
      this.trajectoryLine = null;
    }
    if (!doc) return;
    const positions = new Float32Array(doc.samples.length * 3);
    const colors = new Float32Array(doc.samples.length * 3);
    doc.samples.forEach((sample, i) => {
      positions.set(sample.p, i * 3);
      const rgb = colorAt(doc.colors as TimedColor[], sample.t);
      colors[i * 3] = (rgb[0] ?? 0) / 255;
      colors[i * 3 + 1] = (rgb[1] ?? 0) / 255;
      colors[i * 3 + 2] = (rgb[2] ?? 0) / 255;
    });
    const geometry = new THREE.BufferGeometry();
    geometry.setAttribute("position", new THREE.BufferAttribute(positions, 3));
    geometry.setAttribute("color", new THREE.BufferAttribute(colors, 3));
    this.trajectoryLine = new THREE.Line(
      geometry,
      new THREE.LineBasicMaterial({ vertexColors: true, linewidth: 2 }),
    );
    this.scene.add(this.trajectoryLine);
  }

  private pointerRay(event: PointerEvent): void {
    const rect = this.canvas.getBoundingClientRect();
    const ndc = new THREE.Vector2(
      ((event.clientX - rect.left) / rect.width) * 2 - 1,
      -((event.clientY - rect.top) / rect.height) * 2 + 1,
    );
    this.raycaster.setFromCamera(ndc, this.camera);
  }

  private onPointerDown(event: PointerEvent): void {
    this.pointerRay(event);
    const hits = this.raycaster.intersectObjects(this.waypointMeshes);
    const first = hits[0];
    if (!first) {
      this.callbacks.onSelectWaypoint(null);
      return;
    }
    const index = first.object.userData.index as number;
    this.callbacks.onSelectWaypoint(index);
    const normal = new THREE.Vector3();
    this.camera.getWorldDirection(normal);
    const p = first.object.position;
    this.dragging = {
      index,
      plane: { point: [p.x, p.y, p.z], normal: [normal.x, normal.y, normal.z] },
    };
    this.controls.enabled = false;
  }

  private onPointerMove(event: PointerEvent): void {
    if (!this.dragging) return;
    this.pointerRay(event);
    const origin = this.raycaster.ray.origin;
    const direction = this.raycaster.ray.direction;
    const hit = dragPlaneIntersection(
      [origin.x, origin.y, origin.z],
      [direction.x, direction.y, direction.z],
      this.dragging.plane.point,
      this.dragging.plane.normal,
    );
    if (!hit) return;
    this.waypointMeshes[this.dragging.index]?.position.set(hit[0], hit[1], hit[2]);
  }

  private onPointerUp(): void {
    if (!this.dragging) return;
    const { index } = this.dragging;
    this.dragging = null;
    this.controls.enabled = true;
    const mesh = this.waypointMeshes[index];
    if (mesh) {
      this.callbacks.onMoveWaypoint(index, [mesh.position.x, mesh.position.y, mesh.position.z]);
    }
  }
}
