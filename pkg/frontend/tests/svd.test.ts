// svd mode: the frame's highlighted |Ax|, |Ay| must be the service's
// singular values, not an independent client computation.
import { describe, expect, it } from "vitest";
import { svdFrame, overlayFromService } from "../src/svd.js";
import type { SvdResponse } from "../src/types.js";
import { Session } from "../src/session.js";
import { norm2 } from "../src/vec.js";
import type { Mat2 } from "../src/vec.js";
import { doubleDoc, newClient } from "./helpers.js";

const client = newClient();

async function serviceSigma(rows: number[][]): Promise<number[]> {
  const r = await client.post<SvdResponse>("/v1/svd", { matrix: doubleDoc(rows) });
  return overlayFromService(r).sigma;
}

function sortedDesc(pair: [number, number]): number[] {
  return [...pair].sort((a, b) => b - a);
}

describe("svd mode", () => {
  it("diag(3,4): highlighted at theta 0 with sigma {4,3} to 1e-6", async () => {
    const m: Mat2 = [
      [3, 0],
      [0, 4],
    ];
    const frame = svdFrame(m, 0);
    expect(frame.highlighted).toBe(true);
    expect(frame.sigma).not.toBeNull();

    const sigma = await serviceSigma(m);
    const mine = sortedDesc(frame.sigma!);
    expect(Math.abs(mine[0] - sigma[0])).toBeLessThan(1e-6);
    expect(Math.abs(mine[1] - sigma[1])).toBeLessThan(1e-6);
    expect(sigma[0]).toBeCloseTo(4, 9);
    expect(sigma[1]).toBeCloseTo(3, 9);
  });

  it("generic matrix: any highlighted frame reads sigma to 1e-3", async () => {
    const rows = [
      [0.8, -0.3],
      [0.45, 1.1],
    ];
    const m: Mat2 = [
      [rows[0][0], rows[0][1]],
      [rows[1][0], rows[1][1]],
    ];
    const sigma = await serviceSigma(rows);

    let found = 0;
    for (let t = 0; t < Math.PI; t += 0.0005) {
      const frame = svdFrame(m, t, 4);
      if (!frame.highlighted) continue;
      found++;
      const mine = sortedDesc(frame.sigma!);
      expect(Math.abs(mine[0] - sigma[0])).toBeLessThan(1e-3);
      expect(Math.abs(mine[1] - sigma[1])).toBeLessThan(1e-3);
    }
    expect(found).toBeGreaterThan(0);
  });

  it("the overlay marks the right-singular directions", async () => {
    const r = await client.post<SvdResponse>("/v1/svd", {
      matrix: doubleDoc([
        [3, 0],
        [0, 4],
      ]),
    });
    const overlay = overlayFromService(r);
    // V columns of a diagonal matrix are the axes, both senses each
    expect(overlay.directions).toHaveLength(4);
    const canonical = overlay.directions.map((d) => {
      const deg = Math.round((d * 180) / Math.PI) % 180;
      return deg;
    });
    expect(new Set(canonical)).toEqual(new Set([0, 90]));
  });

  it("a rotation maps the unit circle to itself", () => {
    const frame = svdFrame(
      [
        [0, -1],
        [1, 0],
      ],
      0.3,
    );
    for (const p of frame.ellipse) {
      expect(Math.abs(norm2(p) - 1)).toBeLessThan(1e-12);
    }
  });

  it("frames never touch the network once the matrix is in", async () => {
    const counting = newClient();
    let calls = 0;
    const orig = counting.post.bind(counting);
    counting.post = ((path: string, body: unknown, lane?: string) => {
      calls++;
      return orig(path, body, lane);
    }) as typeof counting.post;

    const session = new Session(counting);
    session.mode = "svd2d";
    await session.setMatrix(doubleDoc([[3, 0], [0, 4]]));
    expect(session.banner).toBeNull();
    expect(session.svdOverlay!.sigma[0]).toBeCloseTo(4, 9);
    expect(calls).toBe(1);

    for (let deg = 0; deg < 360; deg += 5) {
      session.setTheta((deg * Math.PI) / 180);
      session.frame();
    }
    expect(calls).toBe(1);

    session.setTheta(0);
    const frame = session.frame();
    expect(frame && "ay" in frame && frame.highlighted).toBe(true);
  });
});
