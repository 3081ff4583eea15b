// Minimal plain-PBM (P1) reader, enough to check /render.pbm responses.

export interface Pbm {
  width: number;
  height: number;
  pixels: Uint8Array;
}

const NL = 0x0a;
const CR = 0x0d;
const HASH = 0x23;

function isSpace(byte: number): boolean {
  return byte === 0x20 || byte === 0x09 || byte === NL || byte === CR || byte === 0x0b || byte === 0x0c;
}

function isDigit(byte: number): boolean {
  return byte >= 0x30 && byte <= 0x39;
}

export function parsePlainPbm(data: Uint8Array): Pbm {
  if (data.length < 2 || data[0] !== 0x50 || data[1] !== 0x31) {
    throw new Error("not a plain PBM: missing P1 magic");
  }
  let pos = 2;

  function readInt(): number {
    while (pos < data.length && (isSpace(data[pos]) || data[pos] === HASH)) {
      if (data[pos] === HASH) {
        while (pos < data.length && data[pos] !== NL && data[pos] !== CR) {
          pos++;
        }
      } else {
        pos++;
      }
    }
    const start = pos;
    while (pos < data.length && isDigit(data[pos])) {
      pos++;
    }
    if (pos === start) {
      throw new Error("malformed PBM header: expected an integer");
    }
    return parseInt(new TextDecoder().decode(data.subarray(start, pos)), 10);
  }

  const width = readInt();
  const height = readInt();
  if (width < 1 || height < 1) {
    throw new Error(`malformed PBM header: bad dimensions ${width}x${height}`);
  }
  const total = width * height;
  const pixels = new Uint8Array(total);
  let filled = 0;
  while (filled < total && pos < data.length) {
    const byte = data[pos];
    if (byte === HASH) {
      while (pos < data.length && data[pos] !== NL && data[pos] !== CR) {
        pos++;
      }
    } else if (isSpace(byte)) {
      pos++;
    } else if (byte === 0x30 || byte === 0x31) {
      pixels[filled++] = byte - 0x30;
      pos++;
    } else {
      throw new Error(`invalid pixel character ${String.fromCharCode(byte)} in PBM raster`);
    }
  }
  if (filled < total) {
    throw new Error(`truncated PBM raster: expected ${total} pixels, got ${filled}`);
  }
  return { width, height, pixels };
}
