"""Documented file formats: .coilproj projects, .coilres results, field tables.

Projects are versioned JSON with a fixed schema; unknown fields are
rejected so typos fail loudly.  Results embed the same project fields plus
the electrical report, an optional homogeneity summary, and the field
table as character-separated values with the exact header
``y_m,z_m,B_rho_T,B_z_T,B_mag_T`` (scientific notation, 9 significant
digits, iy-major row order).  Externally measured tables in that format
import as grids indistinguishable from simulated ones.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .coils import (
    Coil,
    CoilSystem,
    SimulationRegion,
    ValidationIssue,
    validate_region,
    validate_system,
)
from .electrical import CoilElectrical, ElectricalReport, WireSpec
from .field import FieldGrid
from .homogeneity import InscribedSquare, VolumeReport

FORMAT_VERSION = 1
FIELD_TABLE_HEADER = "y_m,z_m,B_rho_T,B_z_T,B_mag_T"
PROJECT_EXTENSION = ".coilproj"
RESULTS_EXTENSION = ".coilres"


class PersistenceError(ValueError):
    """Base for file-format failures."""

    def __init__(self, message: str, path: Optional[str] = None):
        super().__init__(message if path is None else f"{path}: {message}")
        self.path = path


class ParseError(PersistenceError):
    pass


class UnsupportedVersionError(PersistenceError):
    pass


class DocumentValidationError(PersistenceError):
    def __init__(self, issues):
        self.issues = tuple(issues)
        detail = "; ".join(f"{i.path}: {i.message}" for i in self.issues)
        super().__init__(f"document violates invariants: {detail}")


@dataclass(frozen=True)
class ProjectDocument:
    label: str
    system: CoilSystem
    region: SimulationRegion
    threshold_percent: float = 97.0
    signed_convention: bool = False


@dataclass(frozen=True)
class HomogeneitySummary:
    threshold_percent: float
    signed_convention: bool
    b_center_t: float
    square: Optional[InscribedSquare]
    volume: Optional[VolumeReport]
    mask_rle: Optional[tuple] = None
    note: Optional[str] = None


@dataclass(frozen=True)
class ResultsDocument:
    project: ProjectDocument
    grid: FieldGrid
    electrical: ElectricalReport
    homogeneity_summary: Optional[HomogeneitySummary] = None


def _require(obj: dict, spec: dict, path: str) -> None:
    """Check key set and value types; reject unknown and missing fields."""
    if not isinstance(obj, dict):
        raise ParseError("expected an object", path)
    unknown = set(obj) - set(spec)
    if unknown:
        raise ParseError(f"unknown field(s): {', '.join(sorted(unknown))}", path)
    for key, kinds in spec.items():
        kinds_tuple = kinds if isinstance(kinds, tuple) else (kinds,)
        if key not in obj:
            raise ParseError("missing required field", f"{path}.{key}" if path else key)
        value = obj[key]
        # bool is an int subclass; only accept it where bool is listed.
        if not isinstance(value, kinds_tuple) or (
            isinstance(value, bool) and bool not in kinds_tuple
        ):
            raise ParseError("wrong type", f"{path}.{key}" if path else key)


def _float(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError("expected a number", path)
    return float(value)


def _int(value, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError("expected an integer", path)
    return value


def _project_payload(doc: ProjectDocument) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "label": doc.label,
        "coils": [
            {
                "radius_m": c.radius,
                "turns": c.turns,
                "current_a": c.current,
                "z_m": c.z_position,
            }
            for c in doc.system.coils
        ],
        "region": {
            "y_min_m": doc.region.y_min,
            "y_max_m": doc.region.y_max,
            "z_min_m": doc.region.z_min,
            "z_max_m": doc.region.z_max,
            "ny": doc.region.ny,
            "nz": doc.region.nz,
        },
        "homogeneity": {
            "threshold_percent": doc.threshold_percent,
            "signed_convention": doc.signed_convention,
        },
    }


def parse_project_payload(data: dict) -> ProjectDocument:
    _require(
        data,
        {
            "format_version": int,
            "label": str,
            "coils": list,
            "region": dict,
            "homogeneity": dict,
        },
        "",
    )
    if data["format_version"] != FORMAT_VERSION:
        raise UnsupportedVersionError(
            f"unsupported format_version {data['format_version']} (expected {FORMAT_VERSION})",
            "format_version",
        )
    coils = []
    for i, raw in enumerate(data["coils"]):
        path = f"coils[{i}]"
        _require(raw, {"radius_m": (int, float), "turns": int, "current_a": (int, float), "z_m": (int, float)}, path)
        coils.append(
            Coil(
                radius=_float(raw["radius_m"], f"{path}.radius_m"),
                turns=_int(raw["turns"], f"{path}.turns"),
                current=_float(raw["current_a"], f"{path}.current_a"),
                z_position=_float(raw["z_m"], f"{path}.z_m"),
            )
        )
    r = data["region"]
    _require(
        r,
        {
            "y_min_m": (int, float),
            "y_max_m": (int, float),
            "z_min_m": (int, float),
            "z_max_m": (int, float),
            "ny": int,
            "nz": int,
        },
        "region",
    )
    region = SimulationRegion(
        y_min=_float(r["y_min_m"], "region.y_min_m"),
        y_max=_float(r["y_max_m"], "region.y_max_m"),
        z_min=_float(r["z_min_m"], "region.z_min_m"),
        z_max=_float(r["z_max_m"], "region.z_max_m"),
        ny=_int(r["ny"], "region.ny"),
        nz=_int(r["nz"], "region.nz"),
    )
    h = data["homogeneity"]
    _require(h, {"threshold_percent": (int, float), "signed_convention": bool}, "homogeneity")
    doc = ProjectDocument(
        label=data["label"],
        system=CoilSystem(coils=tuple(coils), label=data["label"]),
        region=region,
        threshold_percent=_float(h["threshold_percent"], "homogeneity.threshold_percent"),
        signed_convention=h["signed_convention"],
    )
    issues = []
    for issue in validate_system(doc.system).issues:
        # Map internal field names onto the file's field names.
        file_path = (
            issue.path.replace(".radius", ".radius_m")
            .replace(".current", ".current_a")
            .replace(".z_position", ".z_m")
        )
        issues.append(ValidationIssue(file_path, issue.message))
    issues.extend(validate_region(doc.region).issues)
    if not (math.isfinite(doc.threshold_percent) and 0.0 < doc.threshold_percent <= 100.0):
        issues.append(ValidationIssue("homogeneity.threshold_percent", "must be in (0, 100]"))
    if issues:
        raise DocumentValidationError(issues)
    return doc


def save_project(doc: ProjectDocument) -> bytes:
    return (json.dumps(_project_payload(doc), indent=2) + "\n").encode("utf-8")


def load_project(data: bytes | str) -> ProjectDocument:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    return parse_project_payload(raw)


def format_field_table(grid: FieldGrid) -> str:
    ys = grid.y_coords()
    zs = grid.z_coords()
    b_mag = grid.b_mag
    lines = [FIELD_TABLE_HEADER]
    for iy in range(grid.region.ny):
        y = ys[iy]
        for iz in range(grid.region.nz):
            lines.append(
                f"{y:.8e},{zs[iz]:.8e},{grid.b_y[iy, iz]:.8e},{grid.b_z[iy, iz]:.8e},{b_mag[iy, iz]:.8e}"
            )
    return "\n".join(lines) + "\n"


def parse_field_table(text: str, region: SimulationRegion) -> FieldGrid:
    lines = text.splitlines()
    if not lines or lines[0] != FIELD_TABLE_HEADER:
        raise ParseError(
            f"field table must start with the exact header {FIELD_TABLE_HEADER!r}", "field_table"
        )
    rows = [line for line in lines[1:] if line.strip()]
    expected = region.ny * region.nz
    if len(rows) != expected:
        raise ParseError(
            f"field table has {len(rows)} data rows, expected ny*nz = {expected}", "field_table"
        )
    b_y = np.empty((region.ny, region.nz))
    b_z = np.empty((region.ny, region.nz))
    for n, line in enumerate(rows):
        cells = line.split(",")
        if len(cells) != 5:
            raise ParseError(f"row {n + 1}: expected 5 columns, got {len(cells)}", "field_table")
        try:
            values = [float(c) for c in cells]
        except ValueError as exc:
            raise ParseError(f"row {n + 1}: non-numeric cell ({exc})", "field_table") from exc
        iy, iz = divmod(n, region.nz)
        b_y[iy, iz] = values[2]
        b_z[iy, iz] = values[3]
    return FieldGrid(region=region, b_y=b_y, b_z=b_z)


def _wire_payload(w: WireSpec) -> dict:
    return {
        "awg": w.awg,
        "diameter_m": w.diameter,
        "resistance_per_meter_ohm": w.resistance_per_meter,
        "ampacity_a": w.ampacity,
    }


def _electrical_payload(rep: ElectricalReport) -> dict:
    return {
        "per_coil": [
            {
                "wire": _wire_payload(e.wire),
                "wire_length_m": e.wire_length,
                "resistance_ohm": e.resistance,
                "voltage_v": e.voltage,
                "power_w": e.power,
            }
            for e in rep.per_coil
        ],
        "total_wire_length_m": rep.total_wire_length,
        "total_resistance_ohm": rep.total_resistance,
        "total_voltage_v": rep.total_voltage,
        "total_power_w": rep.total_power,
    }


def _parse_electrical(data: dict) -> ElectricalReport:
    _require(
        data,
        {
            "per_coil": list,
            "total_wire_length_m": (int, float),
            "total_resistance_ohm": (int, float),
            "total_voltage_v": (int, float),
            "total_power_w": (int, float),
        },
        "electrical",
    )
    entries = []
    for i, raw in enumerate(data["per_coil"]):
        path = f"electrical.per_coil[{i}]"
        _require(
            raw,
            {
                "wire": dict,
                "wire_length_m": (int, float),
                "resistance_ohm": (int, float),
                "voltage_v": (int, float),
                "power_w": (int, float),
            },
            path,
        )
        w = raw["wire"]
        _require(
            w,
            {
                "awg": int,
                "diameter_m": (int, float),
                "resistance_per_meter_ohm": (int, float),
                "ampacity_a": (int, float),
            },
            f"{path}.wire",
        )
        entries.append(
            CoilElectrical(
                wire=WireSpec(
                    awg=_int(w["awg"], f"{path}.wire.awg"),
                    diameter=_float(w["diameter_m"], f"{path}.wire.diameter_m"),
                    resistance_per_meter=_float(
                        w["resistance_per_meter_ohm"], f"{path}.wire.resistance_per_meter_ohm"
                    ),
                    ampacity=_float(w["ampacity_a"], f"{path}.wire.ampacity_a"),
                ),
                wire_length=_float(raw["wire_length_m"], f"{path}.wire_length_m"),
                resistance=_float(raw["resistance_ohm"], f"{path}.resistance_ohm"),
                voltage=_float(raw["voltage_v"], f"{path}.voltage_v"),
                power=_float(raw["power_w"], f"{path}.power_w"),
            )
        )
    return ElectricalReport(
        per_coil=tuple(entries),
        total_wire_length=_float(data["total_wire_length_m"], "electrical.total_wire_length_m"),
        total_resistance=_float(data["total_resistance_ohm"], "electrical.total_resistance_ohm"),
        total_voltage=_float(data["total_voltage_v"], "electrical.total_voltage_v"),
        total_power=_float(data["total_power_w"], "electrical.total_power_w"),
    )


def square_payload(square: Optional[InscribedSquare]) -> Optional[dict]:
    if square is None:
        return None
    return {
        "iy0": square.iy0,
        "iz0": square.iz0,
        "side_cells": square.side_cells,
        "y0_m": square.y0,
        "z0_m": square.z0,
        "side_m": square.side_m,
    }


def volume_payload(vol: Optional[VolumeReport]) -> Optional[dict]:
    if vol is None:
        return None
    return {
        "shape": vol.shape,
        "height_m": vol.height,
        "outer_radius_m": vol.outer_radius,
        "inner_radius_m": vol.inner_radius,
        "volume_m3": vol.volume,
        "centroid_z_m": vol.centroid_z,
    }


def _summary_payload(s: Optional[HomogeneitySummary]) -> Optional[dict]:
    if s is None:
        return None
    return {
        "threshold_percent": s.threshold_percent,
        "signed_convention": s.signed_convention,
        "b_center_t": s.b_center_t,
        "square": square_payload(s.square),
        "volume": volume_payload(s.volume),
        "mask_rle": None
        if s.mask_rle is None
        else [[[int(a), int(b)] for a, b in row] for row in s.mask_rle],
        "note": s.note,
    }


def _parse_summary(data) -> Optional[HomogeneitySummary]:
    if data is None:
        return None
    _require(
        data,
        {
            "threshold_percent": (int, float),
            "signed_convention": bool,
            "b_center_t": (int, float),
            "square": (dict, type(None)),
            "volume": (dict, type(None)),
            "mask_rle": (list, type(None)),
            "note": (str, type(None)),
        },
        "homogeneity_summary",
    )
    square = None
    if data["square"] is not None:
        q = data["square"]
        _require(
            q,
            {
                "iy0": int,
                "iz0": int,
                "side_cells": int,
                "y0_m": (int, float),
                "z0_m": (int, float),
                "side_m": (int, float),
            },
            "homogeneity_summary.square",
        )
        square = InscribedSquare(
            iy0=q["iy0"], iz0=q["iz0"], side_cells=q["side_cells"],
            y0=_float(q["y0_m"], "square.y0_m"), z0=_float(q["z0_m"], "square.z0_m"),
            side_m=_float(q["side_m"], "square.side_m"),
        )
    volume = None
    if data["volume"] is not None:
        v = data["volume"]
        _require(
            v,
            {
                "shape": str,
                "height_m": (int, float),
                "outer_radius_m": (int, float),
                "inner_radius_m": (int, float),
                "volume_m3": (int, float),
                "centroid_z_m": (int, float),
            },
            "homogeneity_summary.volume",
        )
        volume = VolumeReport(
            shape=v["shape"],
            height=_float(v["height_m"], "volume.height_m"),
            outer_radius=_float(v["outer_radius_m"], "volume.outer_radius_m"),
            inner_radius=_float(v["inner_radius_m"], "volume.inner_radius_m"),
            volume=_float(v["volume_m3"], "volume.volume_m3"),
            centroid_z=_float(v["centroid_z_m"], "volume.centroid_z_m"),
        )
    mask_rle = None
    if data["mask_rle"] is not None:
        mask_rle = tuple(
            tuple((int(run[0]), int(run[1])) for run in row) for row in data["mask_rle"]
        )
    return HomogeneitySummary(
        threshold_percent=_float(data["threshold_percent"], "homogeneity_summary.threshold_percent"),
        signed_convention=data["signed_convention"],
        b_center_t=_float(data["b_center_t"], "homogeneity_summary.b_center_t"),
        square=square,
        volume=volume,
        mask_rle=mask_rle,
        note=data["note"],
    )


def results_payload(results: ResultsDocument) -> dict:
    """JSON-ready dict for a results document (also the API response body)."""
    payload = _project_payload(results.project)
    payload["electrical"] = _electrical_payload(results.electrical)
    payload["homogeneity_summary"] = _summary_payload(results.homogeneity_summary)
    payload["field_table"] = format_field_table(results.grid)
    return payload


def parse_results_payload(data: dict) -> ResultsDocument:
    if not isinstance(data, dict):
        raise ParseError("expected a JSON object")
    extra = {"electrical", "homogeneity_summary", "field_table"}
    missing = extra - set(data)
    if missing:
        raise ParseError(f"missing required field(s): {', '.join(sorted(missing))}")
    project = parse_project_payload({k: v for k, v in data.items() if k not in extra})
    if not isinstance(data["field_table"], str):
        raise ParseError("wrong type", "field_table")
    grid = parse_field_table(data["field_table"], project.region)
    electrical = _parse_electrical(data["electrical"])
    summary = _parse_summary(data["homogeneity_summary"])
    return ResultsDocument(project=project, grid=grid, electrical=electrical, homogeneity_summary=summary)


def save_results(results: ResultsDocument) -> bytes:
    return (json.dumps(results_payload(results), indent=2) + "\n").encode("utf-8")


def load_results(data: bytes | str) -> ResultsDocument:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        raw = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    return parse_results_payload(raw)


def import_measurements(data: bytes | str, region: SimulationRegion) -> FieldGrid:
    """Parse an externally measured field table into a grid.

    The table must use the exact results-file format (header, column
    order, iy-major ordering) and contain ny*nz rows for the declared
    region.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    verdict = validate_region(region)
    if not verdict.ok:
        raise DocumentValidationError(verdict.issues)
    return parse_field_table(data, region)


def export_measurements(grid: FieldGrid) -> bytes:
    """Field table alone, in the same format embedded in results files."""
    return format_field_table(grid).encode("utf-8")
