/**
 * Colormaps shared with the server-side SVG renderer: the anchor lists and
 * the piecewise-linear interpolation (with round-half-up channels) must stay
 * byte-identical so browser and server render the same colors.
 */

export type Rgb = [number, number, number];
type Anchor = [number, Rgb];

export const COLORMAPS: Record<string, Anchor[]> = {
  viridis: [
    [0.0, [68, 1, 84]],
    [0.125, [71, 45, 123]],
    [0.25, [59, 82, 139]],
    [0.375, [44, 114, 142]],
    [0.5, [33, 145, 140]],
    [0.625, [40, 174, 128]],
    [0.75, [94, 201, 98]],
    [0.875, [173, 220, 48]],
    [1.0, [253, 231, 37]],
  ],
  grayscale: [
    [0.0, [0, 0, 0]],
    [1.0, [255, 255, 255]],
  ],
  bluered: [
    [0.0, [59, 76, 192]],
    [0.5, [221, 221, 221]],
    [1.0, [180, 4, 38]],
  ],
};

export function colorAt(name: string, t: number): Rgb {
  const anchors = COLORMAPS[name];
  if (!anchors) {
    throw new Error(`unknown colormap: ${name}`);
  }
  const tt = Math.min(Math.max(t, 0), 1);
  if (tt <= anchors[0][0]) {
    return anchors[0][1];
  }
  for (let i = 1; i < anchors.length; i++) {
    const [t1, c1] = anchors[i];
    if (tt <= t1) {
      const [t0, c0] = anchors[i - 1];
      const f = (tt - t0) / (t1 - t0);
      return [
        Math.round(c0[0] + (c1[0] - c0[0]) * f),
        Math.round(c0[1] + (c1[1] - c0[1]) * f),
        Math.round(c0[2] + (c1[2] - c0[2]) * f),
      ];
    }
  }
  return anchors[anchors.length - 1][1];
}

export function hexColor(rgb: Rgb): string {
  const hex = (v: number) => v.toString(16).padStart(2, "0");
  return `#${hex(rgb[0])}${hex(rgb[1])}${hex(rgb[2])}`;
}

/** Color of one heatmap cell: clamp into [bmin, bmax], then interpolate. */
export function cellColor(valueMt: number, bminMt: number, bmaxMt: number, name: string): string {
  if (!(bminMt < bmaxMt)) {
    throw new Error("color limits must satisfy bmin < bmax");
  }
  if (!Number.isFinite(valueMt)) {
    return "#ffffff";
  }
  return hexColor(colorAt(name, (valueMt - bminMt) / (bmaxMt - bminMt)));
}
