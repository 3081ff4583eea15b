// Thin fetch wrapper over the session service. Every method either returns
// the parsed response or throws with the server's error message.

import type { PartitionSpec } from "./partition.js";

export interface StateResponse {
  state: string;
  state_int: number;
}

export interface HitResponse extends StateResponse {
  sector: number | null;
}

export class ServiceClient {
  constructor(readonly baseUrl: string) {}

  private async json<T>(path: string, init?: RequestInit): Promise<T> {
    const resp = await fetch(this.baseUrl + path, init);
    let body: unknown = null;
    try {
      body = await resp.json();
    } catch {
      // fall through to the status check with an empty body
    }
    if (!resp.ok) {
      const message =
        body && typeof body === "object" && "error" in body
          ? String((body as { error: unknown }).error)
          : `request failed with status ${resp.status}`;
      throw new Error(message);
    }
    return body as T;
  }

  private post<T>(path: string, payload?: unknown): Promise<T> {
    return this.json<T>(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: payload === undefined ? undefined : JSON.stringify(payload),
    });
  }

  spec(): Promise<PartitionSpec> {
    return this.json<PartitionSpec>("/spec");
  }

  state(): Promise<StateResponse> {
    return this.json<StateResponse>("/state");
  }

  hit(x: number, y: number): Promise<HitResponse> {
    return this.post<HitResponse>("/hit", { x, y });
  }

  setState(state: string): Promise<StateResponse> {
    return this.post<StateResponse>("/state", { state });
  }

  reset(): Promise<StateResponse> {
    return this.post<StateResponse>("/reset");
  }

  async renderPbm(): Promise<Uint8Array> {
    const resp = await fetch(this.baseUrl + "/render.pbm");
    if (!resp.ok) {
      throw new Error(`render request failed with status ${resp.status}`);
    }
    return new Uint8Array(await resp.arrayBuffer());
  }
}
