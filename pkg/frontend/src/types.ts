/** Wire formats of the /api/v1 endpoints (mirrors of the server schemas). */

export interface CoilRecord {
  radius_m: number;
  turns: number;
  current_a: number;
  z_m: number;
}

export interface RegionRecord {
  y_min_m: number;
  y_max_m: number;
  z_min_m: number;
  z_max_m: number;
  ny: number;
  nz: number;
}

export interface HomogeneitySettings {
  threshold_percent: number;
  signed_convention: boolean;
}

export interface ProjectBody {
  format_version: number;
  label: string;
  coils: CoilRecord[];
  region: RegionRecord;
  homogeneity: HomogeneitySettings;
}

export interface WireRecord {
  awg: number;
  diameter_m: number;
  resistance_per_meter_ohm: number;
  ampacity_a: number;
}

export interface CoilElectricalRecord {
  wire: WireRecord;
  wire_length_m: number;
  resistance_ohm: number;
  voltage_v: number;
  power_w: number;
}

export interface ElectricalRecord {
  per_coil: CoilElectricalRecord[];
  total_wire_length_m: number;
  total_resistance_ohm: number;
  total_voltage_v: number;
  total_power_w: number;
}

export interface ResultsBody extends ProjectBody {
  electrical: ElectricalRecord;
  homogeneity_summary: unknown;
  field_table: string;
}

export interface SquareRecord {
  iy0: number;
  iz0: number;
  side_cells: number;
  y0_m: number;
  z0_m: number;
  side_m: number;
}

export interface VolumeRecord {
  shape: "cylinder" | "annulus";
  height_m: number;
  outer_radius_m: number;
  inner_radius_m: number;
  volume_m3: number;
  centroid_z_m: number;
}

export interface HomogeneityResponse {
  threshold_percent: number;
  signed_convention: boolean;
  b_center_t: number;
  mask_rle: [number, number][][];
  square: SquareRecord | null;
  volume: VolumeRecord | null;
  note: string | null;
}

export interface ApiErrorBody {
  code: "validation" | "numeric" | "not_found" | "over_capacity";
  message: string;
  field_path: string | null;
}

export interface PresetEntry {
  name: string;
  base_radius_m: number;
  turns: number;
  current_a: number;
  coil_count: number;
  coils: CoilRecord[];
  region: RegionRecord;
}
