import { Client, isSuperseded } from "./api.js";
import type { MatrixDocument, NumericEigResponse, SvdResponse, WireVector } from "./types.js";
import { scalarToNumber } from "./vec.js";
import type { Mat2 } from "./vec.js";
import { dragUpdate, overlayFromService as eigOverlay } from "./eig.js";
import type { EigFrame, EigOverlay } from "./eig.js";
import { svdFrame, overlayFromService as svdOverlay } from "./svd.js";
import type { SvdFrame, SvdOverlay } from "./svd.js";
import { buildCubeScene, OrbitCamera } from "./cube.js";
import type { CubeScene } from "./cube.js";

export type Mode = "eig2d" | "svd2d" | "cube3d";

/** Entries stay exact strings; doubles are derived for rendering only. */
export const DEFAULT_MATRIX_2D: MatrixDocument = {
  scalar: "rational",
  rows: 2,
  cols: 2,
  entries: [
    ["1/4", "3/4"],
    ["1", "1/2"],
  ],
};

export const DEFAULT_MATRIX_3D: MatrixDocument = {
  scalar: "rational",
  rows: 3,
  cols: 3,
  entries: [
    ["1", "0", "0"],
    ["0", "1", "0"],
    ["0", "0", "1"],
  ],
};

export const DEFAULT_B: WireVector = ["1", "0", "0"];

function requiredSize(mode: Mode): number {
  return mode === "cube3d" ? 3 : 2;
}

function toMat2(doc: MatrixDocument): Mat2 {
  return [
    [scalarToNumber(doc.entries[0][0]), scalarToNumber(doc.entries[0][1])],
    [scalarToNumber(doc.entries[1][0]), scalarToNumber(doc.entries[1][1])],
  ];
}

/**
 * All mutable UI state.  The split of labor is strict: eigendirections,
 * singular triples, and rank come from the service and are cached here as
 * overlays; per-frame geometry (the spinning x and Ax) is local arithmetic
 * on a matrix the service has already accepted.  A frame never talks to
 * the network.
 */
export class Session {
  mode: Mode = "eig2d";
  matrix: MatrixDocument = DEFAULT_MATRIX_2D;
  theta = 0;
  b: WireVector = DEFAULT_B;
  camera = new OrbitCamera();

  /** set when the service is unreachable or rejects input; overlays freeze */
  banner: string | null = null;

  eigOverlay: EigOverlay | null = null;
  svdOverlay: SvdOverlay | null = null;
  cubeScene: CubeScene | null = null;

  // derived after the service validates; null until then
  private mat2: Mat2 | null = null;

  constructor(readonly client: Client) {}

  setTheta(t: number) {
    const tau = 2 * Math.PI;
    this.theta = ((t % tau) + tau) % tau;
  }

  /** Arrow keys: one degree per press. */
  stepDegrees(n = 1) {
    this.setTheta(this.theta + (n * Math.PI) / 180);
  }

  async setMode(mode: Mode): Promise<void> {
    if (mode === this.mode) return;
    this.mode = mode;
    const size = requiredSize(mode);
    const doc =
      this.matrix.rows === size && this.matrix.cols === size
        ? this.matrix
        : mode === "cube3d"
          ? DEFAULT_MATRIX_3D
          : DEFAULT_MATRIX_2D;
    await this.setMatrix(doc);
  }

  /**
   * Install a matrix.  The overlay fetch doubles as validation: nothing is
   * cached or rendered from a document the service has not accepted.  A
   * failure leaves the previous matrix and overlays frozen behind a banner.
   */
  async setMatrix(doc: MatrixDocument): Promise<void> {
    const size = requiredSize(this.mode);
    if (doc.rows !== size || doc.cols !== size) {
      this.banner = `${this.mode} needs a ${size}x${size} matrix, got ${doc.rows}x${doc.cols}`;
      return;
    }
    try {
      if (this.mode === "eig2d") {
        const r = await this.client.post<NumericEigResponse>(
          "/v1/eig",
          { matrix: doc, numeric: true, vectors: true },
          "overlay",
        );
        this.eigOverlay = eigOverlay(r);
      } else if (this.mode === "svd2d") {
        const r = await this.client.post<SvdResponse>("/v1/svd", { matrix: doc }, "overlay");
        this.svdOverlay = svdOverlay(r);
      } else {
        this.cubeScene = await buildCubeScene(this.client, doc, this.b);
      }
    } catch (err) {
      if (isSuperseded(err)) return;
      this.banner = err instanceof Error ? err.message : String(err);
      return;
    }
    this.matrix = doc;
    this.mat2 = size === 2 ? toMat2(doc) : null;
    this.banner = null;
  }

  async setB(b: WireVector): Promise<void> {
    this.b = b;
    if (this.mode === "cube3d" && this.cubeScene) {
      await this.setMatrix(this.matrix);
    }
  }

  /** Pure: recompute the spinning-vector geometry at the current angle. */
  frame(): EigFrame | SvdFrame | null {
    if (this.mat2 === null) return null;
    if (this.mode === "eig2d") return dragUpdate(this.mat2, this.theta);
    if (this.mode === "svd2d") return svdFrame(this.mat2, this.theta);
    return null;
  }
}
