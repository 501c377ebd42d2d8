/**
 * Client-side mirror of the server's coil/region invariants, so the editor
 * can flag bad fields before the simulate button is enabled.  Paths use the
 * same convention as server ApiError.field_path.
 */

import type { CoilRecord, ProjectBody, RegionRecord } from "./types.js";

export interface FieldIssue {
  path: string;
  message: string;
}

export function validateCoil(coil: CoilRecord, index: number): FieldIssue[] {
  const path = (field: string) => `coils[${index}].${field}`;
  const issues: FieldIssue[] = [];
  if (!(Number.isFinite(coil.radius_m) && coil.radius_m > 0)) {
    issues.push({ path: path("radius_m"), message: "radius must be a positive length" });
  }
  if (!(Number.isInteger(coil.turns) && coil.turns >= 1)) {
    issues.push({ path: path("turns"), message: "turns must be an integer >= 1" });
  }
  if (!(Number.isFinite(coil.current_a) && coil.current_a !== 0)) {
    issues.push({ path: path("current_a"), message: "current must be finite and nonzero" });
  }
  if (!Number.isFinite(coil.z_m)) {
    issues.push({ path: path("z_m"), message: "axial position must be finite" });
  }
  return issues;
}

export function validateRegion(region: RegionRecord): FieldIssue[] {
  const issues: FieldIssue[] = [];
  if (!(Number.isFinite(region.y_min_m) && Number.isFinite(region.y_max_m) && region.y_min_m < region.y_max_m)) {
    issues.push({ path: "region.y_min_m", message: "needs y_min < y_max" });
  }
  if (!(Number.isFinite(region.z_min_m) && Number.isFinite(region.z_max_m) && region.z_min_m < region.z_max_m)) {
    issues.push({ path: "region.z_min_m", message: "needs z_min < z_max" });
  }
  if (!(Number.isInteger(region.ny) && region.ny >= 2)) {
    issues.push({ path: "region.ny", message: "ny must be an integer >= 2" });
  }
  if (!(Number.isInteger(region.nz) && region.nz >= 2)) {
    issues.push({ path: "region.nz", message: "nz must be an integer >= 2" });
  }
  return issues;
}

export function validateProject(body: ProjectBody): FieldIssue[] {
  const issues: FieldIssue[] = [];
  if (body.coils.length < 1) {
    issues.push({ path: "coils", message: "at least one coil is required" });
  }
  body.coils.forEach((coil, i) => issues.push(...validateCoil(coil, i)));
  issues.push(...validateRegion(body.region));
  const t = body.homogeneity.threshold_percent;
  if (!(Number.isFinite(t) && t > 0 && t <= 100)) {
    issues.push({ path: "homogeneity.threshold_percent", message: "must be in (0, 100]" });
  }
  return issues;
}
