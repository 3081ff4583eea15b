// Helpers over the server's bit-string state. The rightmost character is
// sector 1, so bit k lives at position (length - k) in the string.

export function isBitString(text: string, width: number): boolean {
  return text.length === width && /^[01]+$/.test(text);
}

/** Ascending sector ids of the set bits. */
export function sectorsOf(bits: string): number[] {
  const out: number[] = [];
  for (let k = 1; k <= bits.length; k++) {
    if (bits[bits.length - k] === "1") {
      out.push(k);
    }
  }
  return out;
}

export function selectedCount(bits: string): number {
  let n = 0;
  for (const ch of bits) {
    if (ch === "1") {
      n++;
    }
  }
  return n;
}

export function setsEqual(a: ReadonlySet<number>, b: ReadonlySet<number>): boolean {
  if (a.size !== b.size) {
    return false;
  }
  for (const v of a) {
    if (!b.has(v)) {
      return false;
    }
  }
  return true;
}
