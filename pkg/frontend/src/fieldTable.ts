/**
 * Parse the server's field table (CSV embedded in a results body) into
 * typed arrays, and look up samples the way the GUI needs them: nearest
 * lattice point, values in display units.  All numbers here are
 * server-computed; the client never evaluates field formulas.
 */

import type { RegionRecord, ResultsBody } from "./types.js";

export const FIELD_TABLE_HEADER = "y_m,z_m,B_rho_T,B_z_T,B_mag_T";

export interface FieldGridData {
  region: RegionRecord;
  /** row-major (iy, iz) */
  bY: Float64Array;
  bZ: Float64Array;
  bMag: Float64Array;
}

export function parseFieldTable(table: string, region: RegionRecord): FieldGridData {
  const lines = table.split("\n").filter((line) => line.trim().length > 0);
  if (lines[0] !== FIELD_TABLE_HEADER) {
    throw new Error(`field table must start with header ${FIELD_TABLE_HEADER}`);
  }
  const expected = region.ny * region.nz;
  const rows = lines.slice(1);
  if (rows.length !== expected) {
    throw new Error(`field table has ${rows.length} rows, expected ${expected}`);
  }
  const bY = new Float64Array(expected);
  const bZ = new Float64Array(expected);
  const bMag = new Float64Array(expected);
  for (let n = 0; n < expected; n++) {
    const cells = rows[n].split(",");
    if (cells.length !== 5) {
      throw new Error(`row ${n + 1}: expected 5 columns`);
    }
    bY[n] = Number(cells[2]);
    bZ[n] = Number(cells[3]);
    bMag[n] = Number(cells[4]);
    if (Number.isNaN(bY[n]) && cells[2].trim() !== "nan") {
      throw new Error(`row ${n + 1}: non-numeric cell`);
    }
  }
  return { region, bY, bZ, bMag };
}

export function gridFromResults(results: ResultsBody): FieldGridData {
  return parseFieldTable(results.field_table, results.region);
}

export function latticeStep(region: RegionRecord): { dy: number; dz: number } {
  return {
    dy: (region.y_max_m - region.y_min_m) / (region.ny - 1),
    dz: (region.z_max_m - region.z_min_m) / (region.nz - 1),
  };
}

export function nearestIndex(region: RegionRecord, y: number, z: number): { iy: number; iz: number } {
  const { dy, dz } = latticeStep(region);
  const clamp = (v: number, hi: number) => Math.min(Math.max(v, 0), hi);
  return {
    iy: clamp(Math.round((y - region.y_min_m) / dy), region.ny - 1),
    iz: clamp(Math.round((z - region.z_min_m) / dz), region.nz - 1),
  };
}

export interface SampleReadout {
  iy: number;
  iz: number;
  y: number;
  z: number;
  bMagT: number;
  text: string;
}

/** Readout for the sample nearest (y, z): coordinates plus |B| in mT (4 s.f.). */
export function sampleReadout(grid: FieldGridData, y: number, z: number): SampleReadout {
  const { region } = grid;
  const { iy, iz } = nearestIndex(region, y, z);
  const { dy, dz } = latticeStep(region);
  const sy = region.y_min_m + iy * dy;
  const sz = region.z_min_m + iz * dz;
  const bMagT = grid.bMag[iy * region.nz + iz];
  const text = Number.isFinite(bMagT)
    ? `y = ${sy.toPrecision(4)} m, z = ${sz.toPrecision(4)} m, |B| = ${formatMilliTesla(bMagT)}`
    : `y = ${sy.toPrecision(4)} m, z = ${sz.toPrecision(4)} m, on a coil filament`;
  return { iy, iz, y: sy, z: sz, bMagT, text };
}

export function formatMilliTesla(bT: number): string {
  return `${(bT * 1e3).toPrecision(4)} mT`;
}

/** Finite data range of |B| in mT, for the color bar's reset action. */
export function magRangeMt(grid: FieldGridData): { min: number; max: number } {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of grid.bMag) {
    if (Number.isFinite(v)) {
      lo = Math.min(lo, v);
      hi = Math.max(hi, v);
    }
  }
  if (!(lo < Infinity)) {
    throw new Error("grid has no finite samples");
  }
  return { min: lo * 1e3, max: hi * 1e3 };
}
