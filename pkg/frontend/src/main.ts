/**
 * Browser app: coil editor -> simulate -> field view with click-to-inspect
 * and zoom -> any number of homogeneity panels.  Every displayed number is
 * server-computed; this file only binds them to the DOM.
 */

import { ApiError, fetchPresets, postHomogeneity, postSimulate } from "./api.js";
import { gridFromResults, magRangeMt, sampleReadout, type FieldGridData } from "./fieldTable.js";
import { drawColorBar, drawHeatmap, drawMaskOverlay } from "./heatmap.js";
import { RowRateTracker } from "./progress.js";
import { decodeMask } from "./rle.js";
import {
  addCoil,
  applyPreset,
  canSimulate,
  draftIssues,
  initialState,
  removeCoil,
  simulateBody,
  type UiSessionState,
} from "./state.js";
import type { PresetEntry, ResultsBody } from "./types.js";
import { fullViewport, pixelToData, viewportRegion, zoomedViewport, type Viewport } from "./zoom.js";

const state: UiSessionState = initialState();
let grid: FieldGridData | null = null;
let view: Viewport | null = null;
let presets: PresetEntry[] = [];
const rateTracker = new RowRateTracker();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function banner(message: string | null): void {
  const box = el<HTMLDivElement>("error-banner");
  box.textContent = message ?? "";
  box.classList.toggle("hidden", message === null);
}

// ---------------------------------------------------------------- editor

function coilInput(value: number, onChange: (raw: string) => void): HTMLInputElement {
  const input = document.createElement("input");
  input.type = "text";
  input.value = String(value);
  input.addEventListener("input", () => onChange(input.value));
  return input;
}

function renderCoilTable(): void {
  const body = el<HTMLTableSectionElement>("coil-rows");
  body.textContent = "";
  state.draft.coils.forEach((coil, i) => {
    const row = document.createElement("tr");
    const fields: Array<[keyof typeof coil, boolean]> = [
      ["radius_m", false],
      ["turns", true],
      ["current_a", false],
      ["z_m", false],
    ];
    for (const [field, isInt] of fields) {
      const cell = document.createElement("td");
      const input = coilInput(coil[field], (raw) => {
        const parsed = isInt ? Number.parseInt(raw, 10) : Number.parseFloat(raw);
        state.draft.coils[i] = { ...state.draft.coils[i], [field]: parsed };
        refreshValidity();
      });
      input.dataset.path = `coils[${i}].${field}`;
      cell.appendChild(input);
      row.appendChild(cell);
    }
    const actions = document.createElement("td");
    const remove = document.createElement("button");
    remove.textContent = "-";
    remove.title = "remove this coil";
    remove.addEventListener("click", () => {
      state.draft = removeCoil(state.draft, i);
      renderCoilTable();
      refreshValidity();
    });
    actions.appendChild(remove);
    row.appendChild(actions);
    body.appendChild(row);
  });
}

function refreshValidity(): void {
  const issues = draftIssues(state);
  document.querySelectorAll<HTMLInputElement>("#editor input[data-path]").forEach((input) => {
    const issue = issues.find((item) => item.path === input.dataset.path);
    input.classList.toggle("invalid", issue !== undefined);
    input.title = issue ? issue.message : "";
  });
  el<HTMLButtonElement>("simulate").disabled = !canSimulate(state);
}

function bindRegionInputs(): void {
  const fields: Array<[string, "y_min_m" | "y_max_m" | "z_min_m" | "z_max_m" | "ny" | "nz", boolean]> = [
    ["region-ymin", "y_min_m", false],
    ["region-ymax", "y_max_m", false],
    ["region-zmin", "z_min_m", false],
    ["region-zmax", "z_max_m", false],
    ["region-ny", "ny", true],
    ["region-nz", "nz", true],
  ];
  for (const [id, field, isInt] of fields) {
    const input = el<HTMLInputElement>(id);
    input.value = String(state.draft.region[field]);
    input.addEventListener("input", () => {
      const parsed = isInt ? Number.parseInt(input.value, 10) : Number.parseFloat(input.value);
      state.draft.region = { ...state.draft.region, [field]: parsed };
      refreshValidity();
    });
  }
  const checkbox = el<HTMLInputElement>("default-region");
  const syncDisabled = () => {
    state.useDefaultRegion = checkbox.checked;
    for (const [id] of fields) {
      el<HTMLInputElement>(id).disabled = checkbox.checked;
    }
    refreshValidity();
  };
  checkbox.addEventListener("change", syncDisabled);
  syncDisabled();
}

async function loadPresets(): Promise<void> {
  const select = el<HTMLSelectElement>("preset-select");
  try {
    presets = await fetchPresets();
  } catch {
    banner("preset catalog unavailable; is the service running?");
    return;
  }
  for (const preset of presets) {
    const option = document.createElement("option");
    option.value = preset.name;
    option.textContent = `${preset.name} (${preset.coil_count} coils)`;
    select.appendChild(option);
  }
}

function applySelectedPreset(): void {
  const select = el<HTMLSelectElement>("preset-select");
  const preset = presets.find((p) => p.name === select.value);
  if (preset) {
    state.draft = applyPreset(state.draft, preset);
    el<HTMLInputElement>("label").value = state.draft.label;
    renderCoilTable();
    bindRegionInputs();
    refreshValidity();
  }
}

// ------------------------------------------------------------ field view

function colorLimits(): { bmin: number; bmax: number } | null {
  if (!grid) {
    return null;
  }
  if (state.bminMt !== null && state.bmaxMt !== null) {
    return { bmin: state.bminMt, bmax: state.bmaxMt };
  }
  const range = magRangeMt(grid);
  return { bmin: range.min, bmax: range.max };
}

function redrawField(): void {
  if (!grid || !view) {
    return;
  }
  const limits = colorLimits();
  if (!limits) {
    return;
  }
  const canvas = el<HTMLCanvasElement>("heatmap");
  const ctx = canvas.getContext("2d");
  if (!ctx) {
    return;
  }
  drawHeatmap(ctx, grid, view, {
    bminMt: limits.bmin,
    bmaxMt: limits.bmax,
    colormap: state.colormap,
    showCoils: state.showCoils,
    coils: state.results?.coils ?? [],
  });
  const barCtx = el<HTMLCanvasElement>("colorbar").getContext("2d");
  if (barCtx) {
    drawColorBar(barCtx, state.colormap, limits.bmin, limits.bmax);
  }
}

function attachResults(results: ResultsBody): void {
  state.results = results;
  grid = gridFromResults(results);
  view = zoomedViewport(results.region, state.zoomPercent);
  el<HTMLDivElement>("readout").textContent = "click the map to inspect a point";
  redrawField();
}

function bindFieldControls(): void {
  el<HTMLCanvasElement>("heatmap").addEventListener("click", (event) => {
    if (!grid || !view) {
      return;
    }
    const canvas = event.currentTarget as HTMLCanvasElement;
    const rect = canvas.getBoundingClientRect();
    const px = ((event.clientX - rect.left) / rect.width) * canvas.width;
    const py = ((event.clientY - rect.top) / rect.height) * canvas.height;
    const point = pixelToData(view, canvas.width, canvas.height, px, py);
    el<HTMLDivElement>("readout").textContent = sampleReadout(grid, point.y, point.z).text;
  });

  el<HTMLButtonElement>("apply-limits").addEventListener("click", () => {
    const bmin = Number.parseFloat(el<HTMLInputElement>("bmin").value);
    const bmax = Number.parseFloat(el<HTMLInputElement>("bmax").value);
    const note = el<HTMLSpanElement>("limits-note");
    if (!(Number.isFinite(bmin) && Number.isFinite(bmax) && bmin < bmax)) {
      note.textContent = "needs bmin < bmax";
      return;
    }
    note.textContent = "";
    state.bminMt = bmin;
    state.bmaxMt = bmax;
    redrawField();
  });

  el<HTMLButtonElement>("reset-limits").addEventListener("click", () => {
    state.bminMt = null;
    state.bmaxMt = null;
    el<HTMLSpanElement>("limits-note").textContent = "";
    if (grid) {
      const range = magRangeMt(grid);
      el<HTMLInputElement>("bmin").value = range.min.toPrecision(4);
      el<HTMLInputElement>("bmax").value = range.max.toPrecision(4);
    }
    redrawField();
  });

  el<HTMLSelectElement>("colormap").addEventListener("change", (event) => {
    state.colormap = (event.currentTarget as HTMLSelectElement).value;
    redrawField();
  });

  el<HTMLInputElement>("show-coils").addEventListener("change", (event) => {
    state.showCoils = (event.currentTarget as HTMLInputElement).checked;
    redrawField();
  });

  el<HTMLInputElement>("zoom").addEventListener("change", (event) => {
    const pct = Number.parseFloat((event.currentTarget as HTMLInputElement).value);
    if (Number.isFinite(pct) && pct > 0 && state.results) {
      state.zoomPercent = pct;
      view = zoomedViewport(state.results.region, pct);
      redrawField();
    }
  });

  el<HTMLButtonElement>("resimulate-window").addEventListener("click", () => {
    if (!state.results || !view) {
      return;
    }
    const region = viewportRegion(view, state.results.region.ny, state.results.region.nz);
    void runSimulation({ ...state.draft, region });
  });
}

// ------------------------------------------------------------- simulate

async function runSimulation(body = simulateBody(state)): Promise<void> {
  if (state.simulating) {
    return;
  }
  state.simulating = true;
  refreshValidity();
  banner(null);
  const progress = el<HTMLDivElement>("progress");
  const started = performance.now();
  const ticker = window.setInterval(() => {
    const elapsed = (performance.now() - started) / 1000;
    progress.textContent = rateTracker.describe(elapsed, body.region.ny);
  }, 200);
  try {
    const results = await postSimulate(body);
    const seconds = (performance.now() - started) / 1000;
    rateTracker.record(body.region.ny, seconds);
    progress.textContent = `done: ${body.region.ny} rows in ${seconds.toFixed(1)}s`;
    attachResults(results);
  } catch (error) {
    if (error instanceof ApiError) {
      banner(
        error.body.field_path
          ? `${error.body.message} (${error.body.field_path})`
          : error.body.message,
      );
      document.querySelectorAll<HTMLInputElement>("#editor input[data-path]").forEach((input) => {
        input.classList.toggle("invalid", input.dataset.path === error.body.field_path);
      });
    } else {
      banner(`simulation failed: ${String(error)}`);
    }
    progress.textContent = "";
  } finally {
    window.clearInterval(ticker);
    state.simulating = false;
    refreshValidity();
  }
}

// ------------------------------------------------------- homogeneity view

function volumeTable(response: Awaited<ReturnType<typeof postHomogeneity>>): HTMLElement {
  const dl = document.createElement("dl");
  dl.className = "volume";
  const add = (term: string, value: string) => {
    const dt = document.createElement("dt");
    dt.textContent = term;
    const dd = document.createElement("dd");
    dd.textContent = value;
    dl.append(dt, dd);
  };
  if (response.volume) {
    const v = response.volume;
    add("shape", v.shape);
    add("height", `${v.height_m.toPrecision(5)} m`);
    add("outer radius", `${v.outer_radius_m.toPrecision(5)} m`);
    if (v.shape === "annulus") {
      add("inner radius", `${v.inner_radius_m.toPrecision(5)} m`);
    }
    add("volume", `${v.volume_m3.toPrecision(5)} m³`);
    add("centroid z", `${v.centroid_z_m.toPrecision(5)} m`);
  } else {
    add("volume", response.note ?? "no homogeneous region");
  }
  return dl;
}

async function openHomogeneityPanel(): Promise<void> {
  if (!state.results || !grid) {
    banner("run a simulation first");
    return;
  }
  const threshold = Number.parseFloat(el<HTMLInputElement>("threshold").value);
  if (!(Number.isFinite(threshold) && threshold > 0 && threshold <= 100)) {
    banner("homogeneity threshold must be in (0, 100]");
    return;
  }
  state.thresholdPercent = threshold;
  let response;
  try {
    response = await postHomogeneity(state.results, threshold);
  } catch (error) {
    banner(error instanceof ApiError ? `homogeneity: ${error.body.message}` : String(error));
    return;
  }

  const panel = document.createElement("section");
  panel.className = "panel";
  const heading = document.createElement("h3");
  heading.textContent = `work region at ${threshold}%`;
  const close = document.createElement("button");
  close.textContent = "close";
  close.className = "close";
  close.addEventListener("click", () => panel.remove());
  heading.appendChild(close);

  const canvas = document.createElement("canvas");
  canvas.width = 320;
  canvas.height = 320;
  const ctx = canvas.getContext("2d");
  if (ctx) {
    const mask = decodeMask(response.mask_rle, grid.region.ny, grid.region.nz);
    drawMaskOverlay(ctx, grid, mask, response.square, fullViewport(grid.region));
  }
  panel.append(heading, canvas, volumeTable(response));
  el<HTMLDivElement>("panels").prepend(panel);
}

// ----------------------------------------------------------------- boot

function main(): void {
  renderCoilTable();
  bindRegionInputs();
  bindFieldControls();
  refreshValidity();
  void loadPresets();

  el<HTMLButtonElement>("add-coil").addEventListener("click", () => {
    state.draft = addCoil(state.draft);
    renderCoilTable();
    refreshValidity();
  });
  el<HTMLButtonElement>("apply-preset").addEventListener("click", applySelectedPreset);
  el<HTMLInputElement>("label").addEventListener("input", (event) => {
    state.draft = { ...state.draft, label: (event.currentTarget as HTMLInputElement).value };
  });
  el<HTMLButtonElement>("simulate").addEventListener("click", () => void runSimulation());
  el<HTMLButtonElement>("open-homogeneity").addEventListener("click", () => void openHomogeneityPanel());
}

main();
