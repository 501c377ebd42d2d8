/**
 * Canvas rendering of the field heatmap, color bar, coil markers, and the
 * homogeneity overlay.  Cell colors go through the shared cellColor rule,
 * so a cell here matches the same cell in the server's SVG export.
 */

import { cellColor, colorAt, hexColor } from "./colormap.js";
import { latticeStep, type FieldGridData } from "./fieldTable.js";
import type { CoilRecord, SquareRecord } from "./types.js";
import { dataToPixel, type Viewport } from "./zoom.js";

export interface HeatmapOptions {
  bminMt: number;
  bmaxMt: number;
  colormap: string;
  showCoils: boolean;
  coils: CoilRecord[];
}

export function drawHeatmap(
  ctx: CanvasRenderingContext2D,
  grid: FieldGridData,
  view: Viewport,
  opts: HeatmapOptions,
): void {
  const { width, height } = ctx.canvas;
  ctx.fillStyle = "#f5f5f5";
  ctx.fillRect(0, 0, width, height);
  const { region } = grid;
  const { dy, dz } = latticeStep(region);
  for (let iy = 0; iy < region.ny; iy++) {
    const y = region.y_min_m + iy * dy;
    for (let iz = 0; iz < region.nz; iz++) {
      const z = region.z_min_m + iz * dz;
      const a = dataToPixel(view, width, height, y + 0.5 * dy, z - 0.5 * dz);
      const b = dataToPixel(view, width, height, y - 0.5 * dy, z + 0.5 * dz);
      if (b.px < 0 || a.px > width || b.py < 0 || a.py > height) {
        continue;
      }
      ctx.fillStyle = cellColor(
        grid.bMag[iy * region.nz + iz] * 1e3,
        opts.bminMt,
        opts.bmaxMt,
        opts.colormap,
      );
      ctx.fillRect(a.px, a.py, b.px - a.px + 0.5, b.py - a.py + 0.5);
    }
  }
  if (opts.showCoils) {
    drawCoilMarkers(ctx, opts.coils, view);
  }
}

export function drawCoilMarkers(
  ctx: CanvasRenderingContext2D,
  coils: CoilRecord[],
  view: Viewport,
): void {
  const { width, height } = ctx.canvas;
  ctx.strokeStyle = "#e31a1c";
  ctx.lineWidth = 2;
  for (const coil of coils) {
    for (const sign of [-1, 1]) {
      const { px, py } = dataToPixel(view, width, height, sign * coil.radius_m, coil.z_m);
      ctx.beginPath();
      ctx.arc(px, py, 4, 0, 2 * Math.PI);
      ctx.stroke();
    }
  }
}

export function drawColorBar(
  ctx: CanvasRenderingContext2D,
  colormap: string,
  bminMt: number,
  bmaxMt: number,
): void {
  const { width, height } = ctx.canvas;
  const barWidth = 18;
  const steps = 64;
  ctx.clearRect(0, 0, width, height);
  for (let i = 0; i < steps; i++) {
    ctx.fillStyle = hexColor(colorAt(colormap, (i + 0.5) / steps));
    const top = height - ((i + 1) / steps) * height;
    ctx.fillRect(0, top, barWidth, height / steps + 1);
  }
  ctx.fillStyle = "#222";
  ctx.font = "11px sans-serif";
  ctx.fillText(`${bmaxMt.toPrecision(4)} mT`, barWidth + 4, 10);
  ctx.fillText(`${(0.5 * (bminMt + bmaxMt)).toPrecision(4)}`, barWidth + 4, height / 2 + 4);
  ctx.fillText(`${bminMt.toPrecision(4)}`, barWidth + 4, height - 2);
}

export function drawMaskOverlay(
  ctx: CanvasRenderingContext2D,
  grid: FieldGridData,
  mask: Uint8Array,
  square: SquareRecord | null,
  view: Viewport,
): void {
  const { width, height } = ctx.canvas;
  ctx.fillStyle = "#ffffff";
  ctx.fillRect(0, 0, width, height);
  const { region } = grid;
  const { dy, dz } = latticeStep(region);
  ctx.fillStyle = "#2166ac";
  for (let iy = 0; iy < region.ny; iy++) {
    const y = region.y_min_m + iy * dy;
    for (let iz = 0; iz < region.nz; iz++) {
      if (!mask[iy * region.nz + iz]) {
        continue;
      }
      const z = region.z_min_m + iz * dz;
      const a = dataToPixel(view, width, height, y + 0.5 * dy, z - 0.5 * dz);
      const b = dataToPixel(view, width, height, y - 0.5 * dy, z + 0.5 * dz);
      ctx.fillRect(a.px, a.py, b.px - a.px + 0.5, b.py - a.py + 0.5);
    }
  }
  if (square) {
    const a = dataToPixel(view, width, height, square.y0_m + square.side_m, square.z0_m);
    const b = dataToPixel(view, width, height, square.y0_m, square.z0_m + square.side_m);
    ctx.strokeStyle = "#e31a1c";
    ctx.lineWidth = 2;
    ctx.strokeRect(a.px, a.py, b.px - a.px, b.py - a.py);
  }
}
