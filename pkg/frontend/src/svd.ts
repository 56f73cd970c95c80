import { apply2, dot2, norm2, unit, wrapAngle } from "./vec.js";
import type { Mat2, Vec2 } from "./vec.js";
import type { SvdResponse } from "./types.js";
import { scalarToNumber } from "./vec.js";

/** Ax and Ay count as perpendicular when their angle is within this of 90deg. */
export const ORTHO_TOL_RAD = 0.01;

export interface SvdFrame {
  theta: number;
  x: Vec2;
  y: Vec2;
  ax: Vec2;
  ay: Vec2;
  highlighted: boolean;
  /** [|Ax|, |Ay|] readout, only while highlighted */
  sigma: [number, number] | null;
  /** image-of-the-unit-circle polyline for drawing */
  ellipse: Vec2[];
}

export function svdFrame(m: Mat2, theta: number, ellipseSamples = 96): SvdFrame {
  const t = wrapAngle(theta);
  const x = unit(t);
  const y = unit(t + Math.PI / 2);
  const ax = apply2(m, x);
  const ay = apply2(m, y);

  const na = norm2(ax);
  const nb = norm2(ay);
  // |cos angle(Ax,Ay)| < sin(tol)  <=>  angle within tol of a right angle
  const highlighted =
    na > 0 && nb > 0 && Math.abs(dot2(ax, ay)) < Math.sin(ORTHO_TOL_RAD) * na * nb;

  const ellipse: Vec2[] = [];
  for (let i = 0; i <= ellipseSamples; i++) {
    ellipse.push(apply2(m, unit((2 * Math.PI * i) / ellipseSamples)));
  }

  return {
    theta: t,
    x,
    y,
    ax,
    ay,
    highlighted,
    sigma: highlighted ? [na, nb] : null,
    ellipse,
  };
}

export interface SvdOverlay {
  /** singular values from the service, descending */
  sigma: number[];
  /** input singular directions: angles of the columns of V */
  directions: number[];
}

export function overlayFromService(r: SvdResponse): SvdOverlay {
  const directions: number[] = [];
  for (let j = 0; j < r.V.cols; j++) {
    const vx = scalarToNumber(r.V.entries[0][j]);
    const vy = scalarToNumber(r.V.entries[1][j]);
    const angle = Math.atan2(vy, vx);
    directions.push(wrapAngle(angle), wrapAngle(angle + Math.PI));
  }
  return { sigma: r.sigma, directions };
}
