/** Test-only loader for the committed API-response fixtures. */

import { readFileSync } from "node:fs";

import type { HomogeneityResponse, PresetEntry, ResultsBody } from "./types.js";

function load<T>(name: string): T {
  const url = new URL(`../fixtures/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf-8")) as T;
}

export const helmholtzResults = (): ResultsBody => load<ResultsBody>("helmholtz_results.json");
export const homogeneity97 = (): HomogeneityResponse => load<HomogeneityResponse>("homogeneity_97.json");
export const homogeneity98 = (): HomogeneityResponse => load<HomogeneityResponse>("homogeneity_98.json");
export const presetCatalog = (): { presets: PresetEntry[] } => load("presets.json");
