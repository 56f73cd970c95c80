export type Vec2 = { x: number; y: number };
export type Vec3 = { x: number; y: number; z: number };

export type Mat2 = [[number, number], [number, number]];

export function apply2(m: Mat2, v: Vec2): Vec2 {
  return {
    x: m[0][0] * v.x + m[0][1] * v.y,
    y: m[1][0] * v.x + m[1][1] * v.y,
  };
}

export function cross2(a: Vec2, b: Vec2): number {
  return a.x * b.y - a.y * b.x;
}

export function dot2(a: Vec2, b: Vec2): number {
  return a.x * b.x + a.y * b.y;
}

export function norm2(a: Vec2): number {
  return Math.hypot(a.x, a.y);
}

export function unit(theta: number): Vec2 {
  return { x: Math.cos(theta), y: Math.sin(theta) };
}

export function sub3(a: Vec3, b: Vec3): Vec3 {
  return { x: a.x - b.x, y: a.y - b.y, z: a.z - b.z };
}

export function dot3(a: Vec3, b: Vec3): number {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

export function norm3(a: Vec3): number {
  return Math.hypot(a.x, a.y, a.z);
}

/** Angle wrapped into [0, 2*pi). */
export function wrapAngle(t: number): number {
  const tau = 2 * Math.PI;
  const w = t % tau;
  return w < 0 ? w + tau : w;
}

/** Shortest angular distance between two directions, in [0, pi]. */
export function angularDistance(a: number, b: number): number {
  const d = Math.abs(wrapAngle(a) - wrapAngle(b));
  return Math.min(d, 2 * Math.PI - d);
}

/** Render-only conversion of a wire scalar to a double.  Accepts plain
 *  numbers, integer strings, decimal strings, and "p/q" fractions; anything
 *  else (gaussian, polynomial) has no drawing interpretation here. */
export function scalarToNumber(v: string | number): number {
  if (typeof v === "number") return v;
  const s = v.trim();
  const frac = s.match(/^(-?\d+)\/(-?\d+)$/);
  if (frac) return Number(frac[1]) / Number(frac[2]);
  const f = Number(s);
  if (!Number.isFinite(f)) {
    throw new Error(`scalar ${JSON.stringify(v)} does not render as a number`);
  }
  return f;
}

export function vectorToNumbers(v: Array<string | number>): number[] {
  return v.map(scalarToNumber);
}
