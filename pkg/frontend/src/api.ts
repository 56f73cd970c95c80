import type { ApiErrorBody } from "./types.js";

/** A non-2xx response whose body carries the service's {code, message, detail}. */
export class ServiceError extends Error {
  constructor(
    readonly body: ApiErrorBody,
    readonly status: number,
  ) {
    super(`${body.code}: ${body.message}`);
    this.name = "ServiceError";
    Object.setPrototypeOf(this, ServiceError.prototype);
  }
}

/** Thrown when a newer request on the same lane replaced this one. */
export class Superseded extends Error {
  constructor() {
    super("request superseded by a newer one");
    this.name = "Superseded";
    Object.setPrototypeOf(this, Superseded.prototype);
  }
}

export function isSuperseded(e: unknown): e is Superseded {
  return e instanceof Superseded;
}

/**
 * Typed POST client with latest-wins cancellation: at most one request is in
 * flight per lane, and starting a new one aborts its predecessor, which then
 * rejects with Superseded.  Lanes default to the path, so overlay refreshes
 * for the same endpoint never race each other.
 */
export class Client {
  private inflight = new Map<string, AbortController>();

  constructor(readonly baseUrl: string) {}

  async post<T>(path: string, body: unknown, lane?: string): Promise<T> {
    const key = lane ?? path;
    this.inflight.get(key)?.abort();
    const controller = new AbortController();
    this.inflight.set(key, controller);

    let res: Response;
    try {
      res = await fetch(this.baseUrl + path, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body),
        signal: controller.signal,
      });
    } catch (e) {
      if (controller.signal.aborted) throw new Superseded();
      throw e;
    } finally {
      if (this.inflight.get(key) === controller) this.inflight.delete(key);
    }

    if (!res.ok) {
      const fallback: ApiErrorBody = {
        code: "HTTP" + res.status,
        message: res.statusText,
        detail: {},
      };
      const parsed = await res.json().catch(() => fallback);
      const shaped =
        parsed && typeof parsed === "object" && "code" in parsed
          ? (parsed as ApiErrorBody)
          : fallback;
      throw new ServiceError(shaped, res.status);
    }
    return (await res.json()) as T;
  }

  async health(): Promise<boolean> {
    try {
      const res = await fetch(this.baseUrl + "/v1/health");
      return res.ok;
    } catch {
      return false;
    }
  }
}
