/**
 * Viewport math for the zoomable field view.  Zooming rescales the visible
 * window about its center (it does not re-run the simulation; the view
 * offers a separate "re-simulate this window" action for that).
 */

import type { RegionRecord } from "./types.js";

export interface Viewport {
  centerY: number;
  centerZ: number;
  halfY: number;
  halfZ: number;
}

export function fullViewport(region: RegionRecord): Viewport {
  return {
    centerY: 0.5 * (region.y_min_m + region.y_max_m),
    centerZ: 0.5 * (region.z_min_m + region.z_max_m),
    halfY: 0.5 * (region.y_max_m - region.y_min_m),
    halfZ: 0.5 * (region.z_max_m - region.z_min_m),
  };
}

/** Visible extent scales as 100 / percent: 200% shows half the span. */
export function zoomedViewport(region: RegionRecord, percent: number): Viewport {
  if (!(Number.isFinite(percent) && percent > 0)) {
    throw new Error("zoom percentage must be a positive number");
  }
  const base = fullViewport(region);
  const scale = 100 / percent;
  return { ...base, halfY: base.halfY * scale, halfZ: base.halfZ * scale };
}

/** Map a canvas pixel to data coordinates; z runs right, y runs up. */
export function pixelToData(
  view: Viewport,
  width: number,
  height: number,
  px: number,
  py: number,
): { y: number; z: number } {
  return {
    z: view.centerZ + ((px / width) * 2 - 1) * view.halfZ,
    y: view.centerY + (1 - (py / height) * 2) * view.halfY,
  };
}

/** Inverse of pixelToData. */
export function dataToPixel(
  view: Viewport,
  width: number,
  height: number,
  y: number,
  z: number,
): { px: number; py: number } {
  return {
    px: ((z - view.centerZ) / view.halfZ + 1) * 0.5 * width,
    py: (1 - (y - view.centerY) / view.halfY) * 0.5 * height,
  };
}

/** Region covering the current viewport, for the re-simulate action. */
export function viewportRegion(view: Viewport, ny: number, nz: number): RegionRecord {
  return {
    y_min_m: view.centerY - view.halfY,
    y_max_m: view.centerY + view.halfY,
    z_min_m: view.centerZ - view.halfZ,
    z_max_m: view.centerZ + view.halfZ,
    ny,
    nz,
  };
}
