import type { EigFrame, EigOverlay } from "./eig.js";
import { HIGHLIGHT_TOL } from "./eig.js";
import type { SvdFrame, SvdOverlay } from "./svd.js";
import type { CubeScene } from "./cube.js";
import type { OrbitCamera } from "./cube.js";
import { unit } from "./vec.js";
import type { Vec2 } from "./vec.js";

const X_COLOR = "#2563eb";
const AX_COLOR = "#dc2626";
const Y_COLOR = "#0891b2";
const AY_COLOR = "#ea580c";
const OVERLAY_COLOR = "#9ca3af";
const HIGHLIGHT_COLOR = "#16a34a";

interface Board {
  ctx: CanvasRenderingContext2D;
  cx: number;
  cy: number;
  /** pixels per unit length */
  scale: number;
}

export function board(ctx: CanvasRenderingContext2D, span = 3): Board {
  const w = ctx.canvas.width;
  const h = ctx.canvas.height;
  return { ctx, cx: w / 2, cy: h / 2, scale: Math.min(w, h) / (2 * span) };
}

function px(b: Board, v: Vec2): [number, number] {
  return [b.cx + v.x * b.scale, b.cy - v.y * b.scale];
}

function arrow(b: Board, v: Vec2, color: string, label?: string) {
  const { ctx } = b;
  const [x, y] = px(b, v);
  ctx.strokeStyle = color;
  ctx.fillStyle = color;
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.moveTo(b.cx, b.cy);
  ctx.lineTo(x, y);
  ctx.stroke();
  ctx.beginPath();
  ctx.arc(x, y, 4, 0, 2 * Math.PI);
  ctx.fill();
  if (label) ctx.fillText(label, x + 6, y - 6);
}

function ray(b: Board, angle: number, color: string, reach = 3) {
  const d = unit(angle);
  const [x0, y0] = px(b, { x: -d.x * reach, y: -d.y * reach });
  const [x1, y1] = px(b, { x: d.x * reach, y: d.y * reach });
  b.ctx.strokeStyle = color;
  b.ctx.lineWidth = 1;
  b.ctx.setLineDash([5, 5]);
  b.ctx.beginPath();
  b.ctx.moveTo(x0, y0);
  b.ctx.lineTo(x1, y1);
  b.ctx.stroke();
  b.ctx.setLineDash([]);
}

function clear(b: Board) {
  b.ctx.clearRect(0, 0, b.ctx.canvas.width, b.ctx.canvas.height);
  b.ctx.font = "13px system-ui, sans-serif";
}

function unitCircle(b: Board) {
  b.ctx.strokeStyle = "#e5e7eb";
  b.ctx.beginPath();
  b.ctx.arc(b.cx, b.cy, b.scale, 0, 2 * Math.PI);
  b.ctx.stroke();
}

export function drawEigFrame(b: Board, frame: EigFrame, overlay: EigOverlay | null) {
  clear(b);
  unitCircle(b);
  if (overlay) {
    for (const dir of overlay.directions) ray(b, dir, OVERLAY_COLOR);
  }
  arrow(b, frame.x, frame.highlighted ? HIGHLIGHT_COLOR : X_COLOR, "x");
  arrow(b, frame.ax, frame.highlighted ? HIGHLIGHT_COLOR : AX_COLOR, "Ax");
  const { ctx } = b;
  ctx.fillStyle = "#111827";
  // the tolerance is part of the display contract, never hidden
  ctx.fillText(`alignment window: ${HIGHLIGHT_TOL} rad`, 10, 18);
  if (frame.lambda !== null) {
    ctx.fillStyle = HIGHLIGHT_COLOR;
    ctx.fillText(`eigendirection  |Ax|/|x| = ${frame.lambda.toFixed(4)}`, 10, 36);
  }
  if (overlay && overlay.complexSpectrum) {
    ctx.fillStyle = "#6b7280";
    ctx.fillText("complex spectrum: no real eigendirections", 10, 54);
  }
}

export function drawSvdFrame(b: Board, frame: SvdFrame, overlay: SvdOverlay | null) {
  clear(b);
  unitCircle(b);
  const { ctx } = b;
  ctx.strokeStyle = "#d1d5db";
  ctx.beginPath();
  frame.ellipse.forEach((p, i) => {
    const [x, y] = px(b, p);
    if (i === 0) ctx.moveTo(x, y);
    else ctx.lineTo(x, y);
  });
  ctx.stroke();
  if (overlay) {
    for (const dir of overlay.directions) ray(b, dir, OVERLAY_COLOR);
  }
  const hot = frame.highlighted;
  arrow(b, frame.x, hot ? HIGHLIGHT_COLOR : X_COLOR, "x");
  arrow(b, frame.y, hot ? HIGHLIGHT_COLOR : Y_COLOR, "y");
  arrow(b, frame.ax, hot ? HIGHLIGHT_COLOR : AX_COLOR, "Ax");
  arrow(b, frame.ay, hot ? HIGHLIGHT_COLOR : AY_COLOR, "Ay");
  ctx.fillStyle = "#111827";
  ctx.fillText("orthogonality window: 0.01 rad", 10, 18);
  if (frame.sigma !== null) {
    ctx.fillStyle = HIGHLIGHT_COLOR;
    ctx.fillText(`Ax ⊥ Ay   σ = (${frame.sigma[0].toFixed(4)}, ${frame.sigma[1].toFixed(4)})`, 10, 36);
  }
  if (overlay) {
    ctx.fillStyle = "#6b7280";
    ctx.fillText(`service σ: ${overlay.sigma.map((s) => s.toFixed(4)).join(", ")}`, 10, 54);
  }
}

export function drawCubeScene(b: Board, scene: CubeScene, cam: OrbitCamera) {
  clear(b);
  const { ctx } = b;
  ctx.strokeStyle = "#374151";
  ctx.lineWidth = 1.5;
  for (const [i, j] of scene.edges) {
    const p0 = cam.project(scene.vertices[i]);
    const p1 = cam.project(scene.vertices[j]);
    const [x0, y0] = px(b, p0);
    const [x1, y1] = px(b, p1);
    ctx.beginPath();
    ctx.moveTo(x0, y0);
    ctx.lineTo(x1, y1);
    ctx.stroke();
  }
  const bp = cam.project(scene.b);
  const pp = cam.project(scene.p);
  const [bx, by] = px(b, bp);
  const [pxx, pyy] = px(b, pp);
  ctx.strokeStyle = AX_COLOR;
  ctx.lineWidth = 2;
  ctx.beginPath();
  ctx.moveTo(bx, by);
  ctx.lineTo(pxx, pyy);
  ctx.stroke();
  ctx.fillStyle = X_COLOR;
  ctx.beginPath();
  ctx.arc(bx, by, 4, 0, 2 * Math.PI);
  ctx.fill();
  ctx.fillText("b", bx + 6, by - 6);
  ctx.fillStyle = HIGHLIGHT_COLOR;
  ctx.beginPath();
  ctx.arc(pxx, pyy, 4, 0, 2 * Math.PI);
  ctx.fill();
  ctx.fillText("p", pxx + 6, pyy - 6);
  ctx.fillStyle = "#111827";
  ctx.fillText(`residual |b - p| = ${scene.residual.toExponential(3)}`, 10, 18);
  if (scene.badge) {
    // rank came from the service; the badge is its verdict, not ours
    ctx.fillStyle = "#b45309";
    ctx.fillRect(8, 26, 150, 20);
    ctx.fillStyle = "#ffffff";
    ctx.fillText(scene.badge, 14, 40);
  }
}

export function drawBanner(ctx: CanvasRenderingContext2D, text: string) {
  ctx.fillStyle = "#991b1b";
  ctx.fillRect(0, 0, ctx.canvas.width, 26);
  ctx.fillStyle = "#ffffff";
  ctx.font = "13px system-ui, sans-serif";
  ctx.fillText(`service error: ${text} (overlays frozen)`, 10, 17);
}
