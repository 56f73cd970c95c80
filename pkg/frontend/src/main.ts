import { Client } from "./api.js";
import { Session, DEFAULT_MATRIX_2D } from "./session.js";
import type { Mode } from "./session.js";
import { board, drawBanner, drawCubeScene, drawEigFrame, drawSvdFrame } from "./render.js";
import type { MatrixDocument } from "./types.js";
import type { EigFrame } from "./eig.js";
import type { SvdFrame } from "./svd.js";

// Deployed as static files; the service location is the one deploy-time knob.
declare global {
  interface Window {
    EIGSHOW_SERVICE_URL?: string;
  }
}

const BASE = window.EIGSHOW_SERVICE_URL ?? "http://127.0.0.1:8787";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function readMatrix(size: number): MatrixDocument {
  const entries: string[][] = [];
  for (let i = 0; i < size; i++) {
    const row: string[] = [];
    for (let j = 0; j < size; j++) {
      // entries travel as the exact strings the user typed
      row.push(el<HTMLInputElement>(`m${i}${j}`).value.trim());
    }
    entries.push(row);
  }
  return { scalar: "rational", rows: size, cols: size, entries };
}

function writeMatrixInputs(doc: MatrixDocument) {
  const grid = el<HTMLDivElement>("matrix-grid");
  grid.innerHTML = "";
  grid.style.gridTemplateColumns = `repeat(${doc.cols}, 5em)`;
  for (let i = 0; i < doc.rows; i++) {
    for (let j = 0; j < doc.cols; j++) {
      const input = document.createElement("input");
      input.id = `m${i}${j}`;
      input.value = String(doc.entries[i][j]);
      grid.appendChild(input);
    }
  }
}

function main() {
  const canvas = el<HTMLCanvasElement>("stage");
  const ctx = canvas.getContext("2d");
  if (!ctx) throw new Error("2d canvas unavailable");
  const session = new Session(new Client(BASE));

  const redraw = () => {
    const b = board(ctx);
    if (session.mode === "cube3d") {
      if (session.cubeScene) drawCubeScene(b, session.cubeScene, session.camera);
    } else {
      const frame = session.frame();
      if (frame && session.mode === "eig2d") {
        drawEigFrame(b, frame as EigFrame, session.eigOverlay);
      } else if (frame) {
        drawSvdFrame(b, frame as SvdFrame, session.svdOverlay);
      }
    }
    if (session.banner) drawBanner(ctx, session.banner);
  };

  const applyMatrix = () => {
    const size = session.mode === "cube3d" ? 3 : 2;
    void session.setMatrix(readMatrix(size)).then(redraw);
  };

  el<HTMLButtonElement>("apply").addEventListener("click", applyMatrix);

  for (const mode of ["eig2d", "svd2d", "cube3d"] as Mode[]) {
    el<HTMLButtonElement>(`mode-${mode}`).addEventListener("click", () => {
      void session.setMode(mode).then(() => {
        writeMatrixInputs(session.matrix);
        redraw();
      });
    });
  }

  let dragging = false;
  canvas.addEventListener("pointerdown", (e) => {
    dragging = true;
    canvas.setPointerCapture(e.pointerId);
  });
  canvas.addEventListener("pointerup", () => {
    dragging = false;
  });
  canvas.addEventListener("pointermove", (e) => {
    if (!dragging) return;
    if (session.mode === "cube3d") {
      session.camera.orbit(e.movementX * 0.01, e.movementY * 0.01);
    } else {
      const r = canvas.getBoundingClientRect();
      const x = e.clientX - r.left - r.width / 2;
      const y = r.height / 2 - (e.clientY - r.top);
      session.setTheta(Math.atan2(y, x));
    }
    redraw();
  });

  window.addEventListener("keydown", (e) => {
    if (e.key === "ArrowRight" || e.key === "ArrowUp") session.stepDegrees(1);
    else if (e.key === "ArrowLeft" || e.key === "ArrowDown") session.stepDegrees(-1);
    else return;
    e.preventDefault();
    redraw();
  });

  writeMatrixInputs(DEFAULT_MATRIX_2D);
  void session.setMatrix(DEFAULT_MATRIX_2D).then(redraw);

  // surfacing an unreachable service beats a silently blank canvas
  void session.client.health().then((ok) => {
    if (!ok && !session.banner) {
      session.banner = `no service at ${BASE}`;
      redraw();
    }
  });
}

main();
