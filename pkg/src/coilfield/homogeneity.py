"""Homogeneity map, work-region mask, inscribed square, experimentation volume.

The homogeneity of a point is the percentage closeness of |B| to the
reference value at the region center:  h = (1 - |B - B_o| / B_o) * 100.
A signed variant (no absolute value) is also available; under it, values
below the reference give h > 100.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .coils import SimulationRegion
from .field import FieldGrid

# Reference fields smaller than this are treated as zero (gradient-type systems).
ZERO_REFERENCE_FLOOR = 1e-15


class ZeroReferenceError(ValueError):
    """Center field is ~0, so relative homogeneity is undefined."""


@dataclass(frozen=True)
class HomogeneityMap:
    region: SimulationRegion
    h_values: np.ndarray  # (ny, nz) percentages; NaN field samples become -inf
    b_center: float
    signed: bool = False


@dataclass(frozen=True)
class InscribedSquare:
    """Largest all-true axis-aligned square of lattice cells in a mask.

    Cells are sample-centered: cell (iy, iz) spans half a lattice spacing
    on each side of its sample point, so a square of ``side_cells`` cells
    has physical side ``side_cells * dy``.
    """

    iy0: int
    iz0: int
    side_cells: int
    y0: float
    z0: float
    side_m: float

    @property
    def y_extent(self) -> tuple[float, float]:
        return (self.y0, self.y0 + self.side_m)

    @property
    def z_extent(self) -> tuple[float, float]:
        return (self.z0, self.z0 + self.side_m)


@dataclass(frozen=True)
class VolumeReport:
    """Solid of revolution of the inscribed square about the y = 0 axis."""

    shape: str  # "cylinder" | "annulus"
    height: float
    outer_radius: float
    inner_radius: float
    volume: float
    centroid_z: float


def center_index(region: SimulationRegion) -> tuple[int, int]:
    yc = 0.5 * (region.y_min + region.y_max)
    zc = 0.5 * (region.z_min + region.z_max)
    iy = int(round((yc - region.y_min) / region.dy))
    iz = int(round((zc - region.z_min) / region.dz))
    return iy, iz


def homogeneity_map(grid: FieldGrid, signed: bool = False) -> HomogeneityMap:
    """Percent closeness of |B| to the value at the sample nearest the region center."""
    iy, iz = center_index(grid.region)
    b_mag = grid.b_mag
    b_center = float(b_mag[iy, iz])
    if not math.isfinite(b_center) or abs(b_center) <= ZERO_REFERENCE_FLOOR:
        raise ZeroReferenceError(
            "field magnitude at the region center is ~0; homogeneity relative to it is undefined"
        )
    finite = np.isfinite(b_mag)
    safe = np.where(finite, b_mag, b_center)
    if signed:
        h = (1.0 - (safe - b_center) / b_center) * 100.0
    else:
        h = (1.0 - np.abs(safe - b_center) / b_center) * 100.0
    h = np.where(finite, h, -np.inf)
    return HomogeneityMap(region=grid.region, h_values=h, b_center=b_center, signed=signed)


def homogeneous_mask(hmap: HomogeneityMap, threshold: float) -> np.ndarray:
    """Boolean mask of cells with h >= threshold percent, threshold in (0, 100]."""
    if not (isinstance(threshold, (int, float)) and math.isfinite(threshold) and 0.0 < threshold <= 100.0):
        raise ValueError("threshold must be a percentage in (0, 100]")
    return hmap.h_values >= threshold


def largest_inscribed_square(
    mask: np.ndarray, region: Optional[SimulationRegion] = None
) -> Optional[InscribedSquare]:
    """Maximal-square dynamic programming over the true cells of ``mask``.

    Ties break to the smallest iy0, then the smallest iz0.  Returns None
    for an all-false mask.  When ``region`` is given and its cells are
    square (|dy - dz| <= 1e-9 dy), physical coordinates are attached;
    otherwise the square is reported in index units with unit cell size.
    """
    mask = np.asarray(mask, dtype=bool)
    ny, nz = mask.shape
    dp = np.zeros((ny, nz), dtype=np.int32)
    best_side = 0
    best_iy0 = best_iz0 = 0
    for i in range(ny):
        for j in range(nz):
            if not mask[i, j]:
                continue
            if i == 0 or j == 0:
                side = 1
            else:
                side = 1 + min(dp[i - 1, j], dp[i, j - 1], dp[i - 1, j - 1])
            dp[i, j] = side
            side = int(side)
            iy0, iz0 = i - side + 1, j - side + 1
            if side > best_side or (
                side == best_side and (iy0, iz0) < (best_iy0, best_iz0)
            ):
                best_side = side
                best_iy0, best_iz0 = iy0, iz0
    if best_side == 0:
        return None

    if region is not None:
        dy, dz = region.dy, region.dz
        if abs(dy - dz) > 1e-9 * dy:
            # Anisotropic lattice: fall back to index units on the finer axis.
            warnings.warn(
                "lattice cells are not square; inscribed square computed on the "
                "index lattice with the finer spacing",
                stacklevel=2,
            )
            cell = min(dy, dz)
            return InscribedSquare(
                best_iy0, best_iz0, best_side,
                y0=float(best_iy0), z0=float(best_iz0), side_m=float(best_side * cell),
            )
        return InscribedSquare(
            best_iy0,
            best_iz0,
            best_side,
            y0=float(region.y_at(best_iy0) - 0.5 * dy),
            z0=float(region.z_at(best_iz0) - 0.5 * dz),
            side_m=float(best_side * dy),
        )
    return InscribedSquare(
        best_iy0, best_iz0, best_side,
        y0=float(best_iy0), z0=float(best_iz0), side_m=float(best_side),
    )


def experimentation_volume(
    y_extent: tuple[float, float],
    z_extent: tuple[float, float],
) -> VolumeReport:
    """Revolve the square with the given extents about the y = 0 axis.

    A square whose transverse span covers the axis sweeps a cylinder;
    otherwise it sweeps an annular cylinder (washer).
    """
    a, b = y_extent
    z1, z2 = z_extent
    if not (a < b and z1 < z2):
        raise ValueError("square extents must be non-degenerate")
    height = z2 - z1
    if a <= 0.0 <= b:
        shape = "cylinder"
        outer = max(abs(a), b)
        inner = 0.0
    else:
        shape = "annulus"
        inner = min(abs(a), abs(b))
        outer = max(abs(a), abs(b))
    volume = math.pi * (outer * outer - inner * inner) * height
    return VolumeReport(
        shape=shape,
        height=height,
        outer_radius=outer,
        inner_radius=inner,
        volume=volume,
        centroid_z=0.5 * (z1 + z2),
    )


def square_volume_report(square: InscribedSquare) -> VolumeReport:
    if square is None:
        raise ValueError("cannot revolve an empty square")
    return experimentation_volume(square.y_extent, square.z_extent)


def mask_to_rle(mask: np.ndarray) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Per-row run-length encoding: each row becomes ((start, length), ...) of true runs."""
    mask = np.asarray(mask, dtype=bool)
    rows = []
    for row in mask:
        runs = []
        start = None
        for j, v in enumerate(row):
            if v and start is None:
                start = j
            elif not v and start is not None:
                runs.append((start, j - start))
                start = None
        if start is not None:
            runs.append((start, len(row) - start))
        rows.append(tuple(runs))
    return tuple(rows)


def rle_to_mask(rle, ny: int, nz: int) -> np.ndarray:
    mask = np.zeros((ny, nz), dtype=bool)
    if len(rle) != ny:
        raise ValueError(f"run-length encoding has {len(rle)} rows, expected {ny}")
    for i, runs in enumerate(rle):
        for start, length in runs:
            if start < 0 or length < 1 or start + length > nz:
                raise ValueError(f"run ({start}, {length}) exceeds row width {nz}")
            mask[i, start : start + length] = True
    return mask
