// View logic kept free of DOM calls so it can be tested headless against a
// live service. The server is the single source of truth: every response
// replaces the local state wholesale, and nothing is toggled optimistically.

import type { ServiceClient } from "./api.js";
import { expectedRender, type PartitionSpec } from "./partition.js";
import { parsePlainPbm } from "./pbm.js";
import { sectorsOf, selectedCount } from "./state.js";

export interface DisplayPort {
  drawPartition(spec: PartitionSpec, filled: ReadonlySet<number>): void;
  showState(state: string, selected: number): void;
  showFeedback(text: string): void;
  showError(text: string): void;
  clearError(): void;
}

export type ClickResult =
  | { kind: "applied"; sector: number | null }
  | { kind: "busy" }
  | { kind: "failed"; message: string };

export interface RasterComparison {
  equal: boolean;
  differing: number;
}

export class ClientView {
  state: string;
  private busy = false;

  private constructor(
    readonly client: ServiceClient,
    readonly port: DisplayPort,
    readonly spec: PartitionSpec,
    initialState: string,
  ) {
    this.state = initialState;
    this.apply(initialState);
  }

  /** Fetch the spec and current state, then draw the initial view. */
  static async connect(client: ServiceClient, port: DisplayPort): Promise<ClientView> {
    const spec = await client.spec();
    const { state } = await client.state();
    return new ClientView(client, port, spec, state);
  }

  filledSectors(): Set<number> {
    return new Set(sectorsOf(this.state));
  }

  private apply(state: string): void {
    this.state = state;
    this.port.drawPartition(this.spec, this.filledSectors());
    this.port.showState(state, selectedCount(state));
  }

  /**
   * Send one click to the service. At most one mutation is in flight;
   * clicks arriving while busy are dropped. A network failure leaves the
   * state untouched and surfaces a retry notice.
   */
  async click(px: number, py: number): Promise<ClickResult> {
    if (this.busy) {
      return { kind: "busy" };
    }
    this.busy = true;
    try {
      const res = await this.client.hit(px, py);
      this.apply(res.state);
      this.port.clearError();
      this.port.showFeedback(
        res.sector === null ? "outside" : `sector ${res.sector} toggled`,
      );
      return { kind: "applied", sector: res.sector };
    } catch (err) {
      const message = err instanceof Error ? err.message : String(err);
      this.port.showError(`request failed, state unchanged: ${message}; click to retry`);
      return { kind: "failed", message };
    } finally {
      this.busy = false;
    }
  }

  async setState(text: string): Promise<void> {
    const res = await this.client.setState(text);
    this.apply(res.state);
    this.port.clearError();
    this.port.showFeedback(`state set, ${selectedCount(res.state)} selected`);
  }

  async reset(): Promise<void> {
    const res = await this.client.reset();
    this.apply(res.state);
    this.port.clearError();
    this.port.showFeedback("state cleared");
  }

  /** Re-pull the authoritative state without mutating anything. */
  async refresh(): Promise<void> {
    const res = await this.client.state();
    this.apply(res.state);
  }

  /**
   * Debug action: fetch the server's raster and compare it pixel by pixel
   * with the locally computed expectation for the current filled set.
   */
  async compareWithServer(): Promise<RasterComparison> {
    const pbm = parsePlainPbm(await this.client.renderPbm());
    if (pbm.width !== this.spec.canvas_width || pbm.height !== this.spec.canvas_height) {
      this.port.showFeedback(
        `server raster is ${pbm.width}x${pbm.height}, expected ` +
          `${this.spec.canvas_width}x${this.spec.canvas_height}`,
      );
      return { equal: false, differing: pbm.pixels.length };
    }
    const expected = expectedRender(this.spec, this.filledSectors());
    let differing = 0;
    for (let i = 0; i < expected.length; i++) {
      if (expected[i] !== pbm.pixels[i]) {
        differing++;
      }
    }
    this.port.showFeedback(
      differing === 0
        ? "server raster matches the local view"
        : `server raster differs at ${differing} pixels`,
    );
    return { equal: differing === 0, differing };
  }
}
