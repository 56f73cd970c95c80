import type { Client } from "./api.js";
import type {
  ApplyResponse,
  MatrixDocument,
  ProjectResponse,
  TuringFactorResponse,
  WireVector,
} from "./types.js";
import { vectorToNumbers } from "./vec.js";
import type { Vec2, Vec3 } from "./vec.js";

/** Corners of the unit cube, index bit-coded: bit0 = x, bit1 = y, bit2 = z. */
export function cubeCorners(): Vec3[] {
  const out: Vec3[] = [];
  for (let i = 0; i < 8; i++) {
    out.push({ x: i & 1, y: (i >> 1) & 1, z: (i >> 2) & 1 });
  }
  return out;
}

/** The 12 cube edges as corner-index pairs (corners differ in one bit). */
export function cubeEdges(): Array<[number, number]> {
  const edges: Array<[number, number]> = [];
  for (let i = 0; i < 8; i++) {
    for (const bit of [1, 2, 4]) {
      if ((i & bit) === 0) edges.push([i, i | bit]);
    }
  }
  return edges;
}

export interface CubeScene {
  /** cube corners through the matrix, straight from /v1/apply */
  vertices: Vec3[];
  edges: Array<[number, number]>;
  rank: number;
  /** rank < 3: the image collapsed onto a plane (or worse) */
  flat: boolean;
  badge: string | null;
  b: Vec3;
  /** projection of b onto the column space, from /v1/project */
  p: Vec3;
  residual: number;
  segmentLength: number;
}

function wireCorner(c: Vec3, scalar: MatrixDocument["scalar"]): WireVector {
  const raw = [c.x, c.y, c.z];
  return scalar === "double" ? raw : raw.map((v) => String(v));
}

function toVec3(v: number[]): Vec3 {
  return { x: v[0], y: v[1], z: v[2] };
}

/**
 * Assemble the Fig-1 style scene.  All math is the service's: vertices via
 * /v1/apply, coplanarity via the rank reported by /v1/factor, projection via
 * /v1/project.  Runs once per matrix change; orbiting the camera afterwards
 * touches none of it.
 */
export async function buildCubeScene(
  client: Client,
  matrix: MatrixDocument,
  b: WireVector,
): Promise<CubeScene> {
  if (matrix.rows !== 3 || matrix.cols !== 3) {
    throw new Error(`cube mode needs a 3x3 matrix, got ${matrix.rows}x${matrix.cols}`);
  }
  const corners = cubeCorners();
  const vertices: Vec3[] = [];
  for (let i = 0; i < corners.length; i++) {
    const r = await client.post<ApplyResponse>(
      "/v1/apply",
      { matrix, vector: wireCorner(corners[i], matrix.scalar) },
      `cube-vertex-${i}`,
    );
    vertices.push(toVec3(vectorToNumbers(r.vector)));
  }

  const f = await client.post<TuringFactorResponse>(
    "/v1/factor",
    { matrix, kind: "turing" },
    "cube-rank",
  );
  const flat = f.rank < 3;

  const proj = await client.post<ProjectResponse>(
    "/v1/project",
    { A: matrix, b },
    "cube-project",
  );
  const bNum = toVec3(vectorToNumbers(b));
  const pNum = toVec3(vectorToNumbers(proj.p));
  const segmentLength = Math.hypot(bNum.x - pNum.x, bNum.y - pNum.y, bNum.z - pNum.z);

  return {
    vertices,
    edges: cubeEdges(),
    rank: f.rank,
    flat,
    badge: flat ? `flattened to rank ${f.rank}` : null,
    b: bNum,
    p: pNum,
    residual: proj.residual,
    segmentLength,
  };
}

/** Orbit camera with an orthographic projection; drag maps to (theta, phi). */
export class OrbitCamera {
  theta = Math.PI / 4;
  phi = Math.PI / 3;
  zoom = 1;

  orbit(dTheta: number, dPhi: number) {
    this.theta += dTheta;
    // keep the pole unreachable so the up vector stays well defined
    this.phi = Math.min(Math.PI - 0.05, Math.max(0.05, this.phi + dPhi));
  }

  project(p: Vec3): Vec2 & { depth: number } {
    const st = Math.sin(this.theta);
    const ct = Math.cos(this.theta);
    const sp = Math.sin(this.phi);
    const cp = Math.cos(this.phi);
    const right = { x: -st, y: ct, z: 0 };
    const up = { x: -ct * cp, y: -st * cp, z: sp };
    const fwd = { x: ct * sp, y: st * sp, z: cp };
    return {
      x: this.zoom * (p.x * right.x + p.y * right.y + p.z * right.z),
      y: this.zoom * (p.x * up.x + p.y * up.y + p.z * up.z),
      depth: p.x * fwd.x + p.y * fwd.y + p.z * fwd.z,
    };
  }
}
