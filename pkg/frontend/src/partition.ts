// Client-side mirror of the service's partition geometry. Used for two
// things only: drawing the vector view, and the debug raster comparison.
// Interactive hit decisions always come from the server.

export interface PartitionSpec {
  center_x: number;
  center_y: number;
  semi_axis_x: number;
  semi_axis_y: number;
  ring_count: number;
  slice_count: number;
  canvas_width: number;
  canvas_height: number;
}

export const TWO_PI = 2 * Math.PI;

/** Polar angle of a centered point, normalized to [0, 2pi); (0,0) maps to 0. */
export function angleOf(x: number, y: number): number {
  if (x === 0 && y === 0) return 0;
  let theta = Math.atan2(y, x);
  if (theta < 0) theta += TWO_PI;
  // adding 2pi to a tiny negative angle can round to exactly 2pi
  if (theta >= TWO_PI) return 0;
  return theta;
}

/**
 * Smallest ring whose ellipse contains the centered point, or 0 when the
 * point lies outside all of them. Boundary points belong to the inner ring.
 */
export function ringOf(x: number, y: number, spec: PartitionSpec): number {
  const b = spec.semi_axis_x;
  const a = spec.semi_axis_y;
  for (let i = 1; i <= spec.ring_count; i++) {
    const u = x / (i * b);
    const v = y / (i * a);
    if (u * u + v * v <= 1.0) {
      return i;
    }
  }
  return 0;
}

/** Slice index 0..M-1 for an angle in [0, 2pi). */
export function sliceOf(theta: number, spec: PartitionSpec): number {
  if (theta < 0 || theta >= TWO_PI) {
    throw new RangeError(`angle ${theta} outside [0, 2pi)`);
  }
  const k = Math.floor((theta * spec.slice_count) / TWO_PI);
  return Math.min(k, spec.slice_count - 1);
}

/** Ring-major 1-based sector id of a centered point; 0 means outside. */
export function sectorIndex(x: number, y: number, spec: PartitionSpec): number {
  const ring = ringOf(x, y, spec);
  if (ring === 0) {
    return 0;
  }
  return (ring - 1) * spec.slice_count + sliceOf(angleOf(x, y), spec) + 1;
}

/** Sector id under a canvas-coordinate point (y grows downward); 0 = outside. */
export function sectorAtCanvas(spec: PartitionSpec, px: number, py: number): number {
  return sectorIndex(px - spec.center_x, spec.center_y - py, spec);
}

/** Sector label of every pixel center, row-major; 0 marks the exterior. */
export function classifyCenters(spec: PartitionSpec): Uint8Array {
  const w = spec.canvas_width;
  const h = spec.canvas_height;
  const field = new Uint8Array(w * h);
  let i = 0;
  for (let row = 0; row < h; row++) {
    const y = spec.center_y - (row + 0.5);
    for (let col = 0; col < w; col++) {
      field[i++] = sectorIndex(col + 0.5 - spec.center_x, y, spec);
    }
  }
  return field;
}

/**
 * The display raster the service is expected to produce for a filled set:
 * a pixel is set when its label is filled, or when the label changes to the
 * east or south (the boundary skeleton).
 */
export function expectedRender(
  spec: PartitionSpec,
  filled: ReadonlySet<number>,
): Uint8Array {
  const w = spec.canvas_width;
  const h = spec.canvas_height;
  const field = classifyCenters(spec);
  const pixels = new Uint8Array(w * h);
  for (let row = 0; row < h; row++) {
    const base = row * w;
    for (let col = 0; col < w; col++) {
      const i = base + col;
      const label = field[i];
      if (
        (label !== 0 && filled.has(label)) ||
        (col + 1 < w && field[i + 1] !== label) ||
        (row + 1 < h && field[i + w] !== label)
      ) {
        pixels[i] = 1;
      }
    }
  }
  return pixels;
}

/** Distance from the center to ellipse `ring` along polar angle theta. */
function radiusAt(spec: PartitionSpec, ring: number, theta: number): number {
  const u = Math.cos(theta) / (ring * spec.semi_axis_x);
  const v = Math.sin(theta) / (ring * spec.semi_axis_y);
  return 1 / Math.sqrt(u * u + v * v);
}

function toCanvas(spec: PartitionSpec, r: number, theta: number): [number, number] {
  return [
    spec.center_x + r * Math.cos(theta),
    spec.center_y - r * Math.sin(theta),
  ];
}

/**
 * Closed polygon approximating one sector, in canvas coordinates: along the
 * outer ellipse from the slice's start angle to its end, then back along the
 * inner ellipse (or to the center for ring 1).
 */
export function sectorOutline(
  spec: PartitionSpec,
  sector: number,
  samples = 24,
): Array<[number, number]> {
  if (sector < 1 || sector > spec.ring_count * spec.slice_count) {
    throw new RangeError(`sector id ${sector} out of range`);
  }
  const ring = Math.floor((sector - 1) / spec.slice_count) + 1;
  const slice = (sector - 1) % spec.slice_count;
  const start = (slice * TWO_PI) / spec.slice_count;
  const end = ((slice + 1) * TWO_PI) / spec.slice_count;
  const points: Array<[number, number]> = [];
  for (let s = 0; s <= samples; s++) {
    const theta = start + ((end - start) * s) / samples;
    points.push(toCanvas(spec, radiusAt(spec, ring, theta), theta));
  }
  if (ring === 1) {
    points.push([spec.center_x, spec.center_y]);
  } else {
    for (let s = samples; s >= 0; s--) {
      const theta = start + ((end - start) * s) / samples;
      points.push(toCanvas(spec, radiusAt(spec, ring - 1, theta), theta));
    }
  }
  return points;
}

/** Canvas endpoint of the slice-boundary ray k on the outermost ellipse. */
export function rayEndpoint(spec: PartitionSpec, k: number): [number, number] {
  const theta = (k * TWO_PI) / spec.slice_count;
  return toCanvas(spec, radiusAt(spec, spec.ring_count, theta), theta);
}
