/** Session state of the designer UI and its pure update helpers. */

import type { CoilRecord, PresetEntry, ProjectBody, RegionRecord, ResultsBody } from "./types.js";
import { validateProject, type FieldIssue } from "./validation.js";

export interface UiSessionState {
  draft: ProjectBody;
  useDefaultRegion: boolean;
  results: ResultsBody | null;
  colormap: string;
  bminMt: number | null;
  bmaxMt: number | null;
  showCoils: boolean;
  zoomPercent: number;
  thresholdPercent: number;
  simulating: boolean;
}

export function defaultCoil(): CoilRecord {
  return { radius_m: 0.5, turns: 100, current_a: 1.0, z_m: 0.0 };
}

export function emptyDraft(): ProjectBody {
  return {
    format_version: 1,
    label: "untitled",
    coils: [defaultCoil()],
    region: { y_min_m: -0.55, y_max_m: 0.55, z_min_m: -0.55, z_max_m: 0.55, ny: 101, nz: 101 },
    homogeneity: { threshold_percent: 97.0, signed_convention: false },
  };
}

export function initialState(): UiSessionState {
  return {
    draft: emptyDraft(),
    useDefaultRegion: true,
    results: null,
    colormap: "viridis",
    bminMt: null,
    bmaxMt: null,
    showCoils: true,
    zoomPercent: 100,
    thresholdPercent: 97.0,
    simulating: false,
  };
}

export function addCoil(draft: ProjectBody): ProjectBody {
  return { ...draft, coils: [...draft.coils, defaultCoil()] };
}

export function removeCoil(draft: ProjectBody, index: number): ProjectBody {
  if (draft.coils.length <= 1) {
    return draft; // the model requires at least one coil
  }
  return { ...draft, coils: draft.coils.filter((_, i) => i !== index) };
}

/** Fill the editor from a server preset entry (rows are server-computed). */
export function applyPreset(draft: ProjectBody, preset: PresetEntry): ProjectBody {
  return {
    ...draft,
    label: preset.name,
    coils: preset.coils.map((c) => ({ ...c })),
    region: { ...preset.region },
  };
}

/** Default region mirror of the server rule: 1.1 x max radius, centered. */
export function defaultRegionFor(coils: CoilRecord[]): RegionRecord {
  const half = 1.1 * Math.max(...coils.map((c) => c.radius_m));
  const zc = coils.reduce((acc, c) => acc + c.z_m, 0) / coils.length;
  return {
    y_min_m: -half,
    y_max_m: half,
    z_min_m: zc - half,
    z_max_m: zc + half,
    ny: 101,
    nz: 101,
  };
}

export function draftIssues(state: UiSessionState): FieldIssue[] {
  const body = simulateBody(state);
  return validateProject(body);
}

export function canSimulate(state: UiSessionState): boolean {
  return !state.simulating && draftIssues(state).length === 0;
}

export function simulateBody(state: UiSessionState): ProjectBody {
  const region = state.useDefaultRegion
    ? defaultRegionFor(state.draft.coils)
    : state.draft.region;
  return { ...state.draft, region };
}
