/** Decode the per-row run-length masks the homogeneity endpoint returns. */

export function decodeMask(rle: [number, number][][], ny: number, nz: number): Uint8Array {
  if (rle.length !== ny) {
    throw new Error(`mask encoding has ${rle.length} rows, expected ${ny}`);
  }
  const mask = new Uint8Array(ny * nz);
  for (let iy = 0; iy < ny; iy++) {
    for (const [start, length] of rle[iy]) {
      if (start < 0 || length < 1 || start + length > nz) {
        throw new Error(`run (${start}, ${length}) exceeds row width ${nz}`);
      }
      mask.fill(1, iy * nz + start, iy * nz + start + length);
    }
  }
  return mask;
}

export function maskCount(mask: Uint8Array): number {
  let n = 0;
  for (const v of mask) {
    n += v;
  }
  return n;
}

/** True when every cell of `inner` is also set in `outer`. */
export function isSubset(inner: Uint8Array, outer: Uint8Array): boolean {
  if (inner.length !== outer.length) {
    throw new Error("mask size mismatch");
  }
  for (let i = 0; i < inner.length; i++) {
    if (inner[i] && !outer[i]) {
      return false;
    }
  }
  return true;
}
