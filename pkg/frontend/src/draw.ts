// Canvas implementation of the display port. Black on white like the
// service's raster: filled sectors are solid, boundaries are stroked on top.

import { rayEndpoint, sectorOutline, type PartitionSpec } from "./partition.js";
import type { DisplayPort } from "./view.js";

export class CanvasDisplay implements DisplayPort {
  constructor(
    private readonly canvas: HTMLCanvasElement,
    private readonly stateEl: HTMLElement,
    private readonly countEl: HTMLElement,
    private readonly feedbackEl: HTMLElement,
    private readonly errorEl: HTMLElement,
  ) {}

  drawPartition(spec: PartitionSpec, filled: ReadonlySet<number>): void {
    this.canvas.width = spec.canvas_width;
    this.canvas.height = spec.canvas_height;
    const ctx = this.canvas.getContext("2d");
    if (!ctx) {
      this.showError("canvas 2d context unavailable");
      return;
    }
    ctx.fillStyle = "#ffffff";
    ctx.fillRect(0, 0, spec.canvas_width, spec.canvas_height);

    ctx.fillStyle = "#111111";
    for (const sector of filled) {
      const outline = sectorOutline(spec, sector);
      ctx.beginPath();
      ctx.moveTo(outline[0][0], outline[0][1]);
      for (let i = 1; i < outline.length; i++) {
        ctx.lineTo(outline[i][0], outline[i][1]);
      }
      ctx.closePath();
      ctx.fill();
    }

    ctx.strokeStyle = "#111111";
    ctx.lineWidth = 1;
    for (let ring = 1; ring <= spec.ring_count; ring++) {
      ctx.beginPath();
      ctx.ellipse(
        spec.center_x,
        spec.center_y,
        ring * spec.semi_axis_x,
        ring * spec.semi_axis_y,
        0,
        0,
        2 * Math.PI,
      );
      ctx.stroke();
    }
    for (let k = 0; k < spec.slice_count; k++) {
      const [ex, ey] = rayEndpoint(spec, k);
      ctx.beginPath();
      ctx.moveTo(spec.center_x, spec.center_y);
      ctx.lineTo(ex, ey);
      ctx.stroke();
    }
  }

  showState(state: string, selected: number): void {
    this.stateEl.textContent = state;
    this.countEl.textContent = `${selected} selected`;
  }

  showFeedback(text: string): void {
    this.feedbackEl.textContent = text;
  }

  showError(text: string): void {
    this.errorEl.textContent = text;
    this.errorEl.hidden = false;
  }

  clearError(): void {
    this.errorEl.textContent = "";
    this.errorEl.hidden = true;
  }
}
