import { Client } from "../src/api.js";
import type { MatrixDocument } from "../src/types.js";

// must agree with tests/global-setup.ts
export const BASE = "http://127.0.0.1:8799";

export function newClient(): Client {
  return new Client(BASE);
}

export function doubleDoc(rows: number[][]): MatrixDocument {
  return {
    scalar: "double",
    rows: rows.length,
    cols: rows[0].length,
    entries: rows,
  };
}

export function rationalDoc(rows: string[][]): MatrixDocument {
  return {
    scalar: "rational",
    rows: rows.length,
    cols: rows[0].length,
    entries: rows,
  };
}
