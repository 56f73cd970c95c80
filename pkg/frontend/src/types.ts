/** Wire types for the mechlin JSON service.  Exact scalars travel as strings
 *  ("1/2", "t^2-1"); doubles as plain numbers; complex values as [re, im]. */

export type ScalarKind = "rational" | "gaussian" | "double" | "poly";

export interface MatrixDocument {
  scalar: ScalarKind;
  rows: number;
  cols: number;
  entries: Array<Array<string | number>>;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  detail: Record<string, unknown>;
}

export type ComplexPair = [number, number];

export interface NumericEigResponse {
  method: "qr";
  values: ComplexPair[];
  iterations: number;
  /** vectors[j] is the eigenvector paired with values[j], one [re, im] per component */
  vectors?: ComplexPair[][];
}

export interface SvdResponse {
  sigma: number[];
  U: MatrixDocument;
  V: MatrixDocument;
  sweeps: number;
}

export interface ApplyResponse {
  vector: Array<string | number>;
}

export interface ProjectResponse {
  p: Array<string | number>;
  residual: number;
}

export interface TuringFactorResponse {
  kind: "turing";
  rank: number;
  pivot_cols: number[];
}

export type WireVector = Array<string | number>;
