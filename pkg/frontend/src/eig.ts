import { apply2, cross2, norm2, unit, wrapAngle } from "./vec.js";
import type { Mat2, Vec2 } from "./vec.js";
import type { ComplexPair, NumericEigResponse } from "./types.js";

// Pointer quantization at 60 fps makes a tighter window undraggable; shown in
// the panel, not hidden.
export const HIGHLIGHT_TOL = 0.01;

export interface EigFrame {
  theta: number;
  x: Vec2;
  ax: Vec2;
  highlighted: boolean;
  /** |Ax|/|x| readout, only while highlighted */
  lambda: number | null;
}

/** One drag frame: pure client-side 2x2 multiply of the validated matrix. */
export function dragUpdate(m: Mat2, theta: number): EigFrame {
  const t = wrapAngle(theta);
  const x = unit(t);
  const ax = apply2(m, x);
  const len = norm2(ax);
  const highlighted = len > 0 && Math.abs(cross2(x, ax)) < HIGHLIGHT_TOL * len;
  return { theta: t, x, ax, highlighted, lambda: highlighted ? len : null };
}

export interface EigOverlay {
  /** angles of real eigendirections, both senses, wrapped to [0, 2*pi) */
  directions: number[];
  /** real eigenvalues paired with directions (two entries per eigenvector) */
  values: number[];
  /** true when the spectrum has a non-real pair, i.e. nothing to draw */
  complexSpectrum: boolean;
}

const IMAG_TOL = 1e-9;

function isReal(z: ComplexPair): boolean {
  return Math.abs(z[1]) <= IMAG_TOL * Math.max(1, Math.abs(z[0]));
}

/** Eigen directions to draw, straight from a service /v1/eig response. */
export function overlayFromService(r: NumericEigResponse): EigOverlay {
  const directions: number[] = [];
  const values: number[] = [];
  let complexSpectrum = false;
  r.values.forEach((lam, j) => {
    if (!isReal(lam)) {
      complexSpectrum = true;
      return;
    }
    const v = r.vectors?.[j];
    if (!v || v.some((c) => !isReal(c))) return;
    const angle = Math.atan2(v[1][0], v[0][0]);
    directions.push(wrapAngle(angle), wrapAngle(angle + Math.PI));
    values.push(lam[0], lam[0]);
  });
  return { directions, values, complexSpectrum };
}
