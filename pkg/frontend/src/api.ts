/** Typed fetch wrappers for the /api/v1 endpoints. */

import type {
  ApiErrorBody,
  HomogeneityResponse,
  PresetEntry,
  ProjectBody,
  ResultsBody,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly body: ApiErrorBody,
  ) {
    super(body.message);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, init);
  const payload = await response.json();
  if (!response.ok) {
    throw new ApiError(response.status, payload as ApiErrorBody);
  }
  return payload as T;
}

export async function fetchPresets(): Promise<PresetEntry[]> {
  const payload = await request<{ presets: PresetEntry[] }>("/api/v1/presets");
  return payload.presets;
}

export function postSimulate(body: ProjectBody): Promise<ResultsBody> {
  return request<ResultsBody>("/api/v1/simulate", {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
}

export function postHomogeneity(
  results: ResultsBody,
  thresholdPercent: number,
): Promise<HomogeneityResponse> {
  return request<HomogeneityResponse>("/api/v1/homogeneity", {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ results, threshold_percent: thresholdPercent }),
  });
}
