"""Off-axis field of circular coils and grid simulation.

The field of a single loop is evaluated from the closed-form expressions in
terms of the complete elliptic integrals K and E (modulus k with
k^2 = 4 r rho / ((r + rho)^2 + (z - Z)^2)); coil systems superpose.  On the
axis the radial component is identically zero and the axial component uses
the analytic limit, since the off-axis expression is 0/0 there.
"""

from __future__ import annotations

import math
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .coils import Coil, CoilSystem, SimulationRegion, validate_region, validate_system
from .elliptic import K_MODULUS_CUTOFF, _unchecked_ke

MU_0 = 4e-7 * math.pi  # vacuum permeability, T*m/A (exact by definition here)

# Below this radial distance the point counts as on-axis.
ON_AXIS_RHO = 1e-12
# Points closer than this to the filament are rejected / marked non-finite.
WIRE_CUTOFF = 1e-9


class WireProximityError(ValueError):
    """Evaluation point lies on (or numerically indistinguishable from) a coil filament."""

    def __init__(self, message: str, coil_index: Optional[int] = None):
        super().__init__(message)
        self.coil_index = coil_index


class ProgressUndefinedError(ValueError):
    """Remaining-time extrapolation requested before any row completed."""


@dataclass(frozen=True)
class FieldSample:
    """Flux density at one point, in tesla.

    In planar grids the ``b_rho`` slot holds the signed in-plane transverse
    component b_y = sign(y) * b_rho(|y|).
    """

    b_rho: float
    b_z: float

    @property
    def b_mag(self) -> float:
        return math.hypot(self.b_rho, self.b_z)

    @property
    def finite(self) -> bool:
        return math.isfinite(self.b_rho) and math.isfinite(self.b_z)


@dataclass(frozen=True)
class ProgressEvent:
    done: int
    total: int
    elapsed: float


@dataclass(frozen=True)
class FieldGrid:
    """Row-major (iy, iz) lattice of field samples over a y-z window.

    ``b_y`` and ``b_z`` are (ny, nz) arrays in tesla; wire hits are NaN.
    """

    region: SimulationRegion
    b_y: np.ndarray
    b_z: np.ndarray

    @property
    def b_mag(self) -> np.ndarray:
        return np.hypot(self.b_y, self.b_z)

    def y_coords(self) -> np.ndarray:
        return self.region.y_lattice()

    def z_coords(self) -> np.ndarray:
        return self.region.z_lattice()

    def sample(self, iy: int, iz: int) -> FieldSample:
        return FieldSample(float(self.b_y[iy, iz]), float(self.b_z[iy, iz]))

    def nearest_index(self, y: float, z: float) -> tuple[int, int]:
        iy = int(round((y - self.region.y_min) / self.region.dy))
        iz = int(round((z - self.region.z_min) / self.region.dz))
        return (min(max(iy, 0), self.region.ny - 1), min(max(iz, 0), self.region.nz - 1))


def _coil_field_arrays(coil: Coil, rho: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(b_rho, b_z) of one coil over numpy arrays; wire hits come back NaN.

    Lattice points too close to the filament (geometrically, or through the
    elliptic-modulus cutoff) are masked before the elliptic call and
    overwritten with NaN, so the surviving lanes are unaffected.
    """
    r = coil.radius
    d = z - coil.z_position
    rho = np.abs(rho)

    q = (r + rho) ** 2 + d * d
    den = (r - rho) ** 2 + d * d
    on_axis = rho < ON_AXIS_RHO
    k2 = np.where(on_axis, 0.0, 4.0 * r * rho / q)
    k = np.sqrt(np.clip(k2, 0.0, 1.0))
    bad = (den <= WIRE_CUTOFF**2) | (k >= K_MODULUS_CUTOFF)

    k_safe = np.where(bad, 0.0, k)
    big_k, big_e = _unchecked_ke(k_safe)

    pref = MU_0 * coil.turns * coil.current / (2.0 * math.pi)
    rho_safe = np.where(on_axis | bad, 1.0, rho)
    den_safe = np.where(bad, 1.0, den)
    sq = np.sqrt(q)

    b_rho = pref * d / (rho_safe * sq) * ((r * r + rho * rho + d * d) / den_safe * big_e - big_k)
    b_z = pref / sq * ((r * r - rho * rho - d * d) / den_safe * big_e + big_k)

    axis_bz = MU_0 * coil.turns * coil.current * r * r / (2.0 * (r * r + d * d) ** 1.5)
    b_rho = np.where(on_axis, 0.0, b_rho)
    b_z = np.where(on_axis, axis_bz, b_z)
    b_rho = np.where(bad, np.nan, b_rho)
    b_z = np.where(bad, np.nan, b_z)
    return b_rho, b_z


def field_single_coil(coil: Coil, rho: float, z: float) -> FieldSample:
    """Field of one coil at cylindrical (rho, z), rho >= 0."""
    if rho < 0:
        raise ValueError("rho must be >= 0")
    if (rho - coil.radius) ** 2 + (z - coil.z_position) ** 2 <= WIRE_CUTOFF**2:
        raise WireProximityError("evaluation point lies on the coil filament")
    b_rho, b_z = _coil_field_arrays(coil, np.asarray([float(rho)]), np.asarray([float(z)]))
    if not (math.isfinite(b_rho[0]) and math.isfinite(b_z[0])):
        raise WireProximityError("evaluation point too close to the coil filament")
    return FieldSample(float(b_rho[0]), float(b_z[0]))


def field_at_point(system: CoilSystem, y: float, z: float) -> FieldSample:
    """Superposed field of the system at planar (y, z).

    The transverse component is mapped into the plane as
    b_y = sign(y) * sum(b_rho), with sign(0) = 0.
    """
    verdict = validate_system(system)
    if not verdict.ok:
        raise ValueError(f"invalid coil system: {verdict.issues[0].message}")
    rho = abs(y)
    total_rho = 0.0
    total_z = 0.0
    for idx, coil in enumerate(system.coils):
        if (rho - coil.radius) ** 2 + (z - coil.z_position) ** 2 <= WIRE_CUTOFF**2:
            raise WireProximityError(f"point lies on the filament of coil {idx}", coil_index=idx)
        br, bz = _coil_field_arrays(coil, np.asarray([rho]), np.asarray([float(z)]))
        if not (math.isfinite(br[0]) and math.isfinite(bz[0])):
            raise WireProximityError(f"point too close to the filament of coil {idx}", coil_index=idx)
        total_rho += float(br[0])
        total_z += float(bz[0])
    sign = math.copysign(1.0, y) if y != 0.0 else 0.0
    return FieldSample(sign * total_rho, total_z)


def simulate_grid(
    system: CoilSystem,
    region: SimulationRegion,
    progress_sink: Optional[Callable[[ProgressEvent], None]] = None,
    workers: int = 1,
) -> FieldGrid:
    """Fill the whole lattice, one row (fixed y) at a time.

    Rows are the unit of parallel work; each row is computed in a single
    vectorized pass regardless of worker count, so the result is
    bit-identical for any scheduling.  Lattice points on a filament are
    recorded as NaN instead of aborting the run.
    """
    v = validate_system(system)
    if not v.ok:
        raise ValueError(f"invalid coil system: {v.issues[0].message}")
    v = validate_region(region)
    if not v.ok:
        raise ValueError(f"invalid region: {v.issues[0].message}")

    ny, nz = region.ny, region.nz
    ys = region.y_lattice()
    zs = region.z_lattice()
    b_y = np.empty((ny, nz), dtype=float)
    b_z = np.empty((ny, nz), dtype=float)

    start = time.monotonic()
    done = 0
    lock = threading.Lock()

    def fill_row(iy: int) -> None:
        nonlocal done
        y = ys[iy]
        rho = np.full(nz, abs(y))
        row_rho = np.zeros(nz)
        row_z = np.zeros(nz)
        for coil in system.coils:
            br, bz = _coil_field_arrays(coil, rho, zs)
            row_rho += br
            row_z += bz
        sign = math.copysign(1.0, y) if y != 0.0 else 0.0
        b_y[iy, :] = sign * row_rho
        b_z[iy, :] = row_z
        if progress_sink is not None:
            with lock:
                done += 1
                snapshot = done
            progress_sink(ProgressEvent(snapshot, ny, time.monotonic() - start))

    if workers <= 1:
        for iy in range(ny):
            fill_row(iy)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(fill_row, range(ny)))

    return FieldGrid(region=region, b_y=b_y, b_z=b_z)


def estimate_remaining(elapsed: float, done: int, total: int) -> float:
    """Linear extrapolation of the time left: elapsed * (total - done) / done."""
    if done <= 0:
        raise ProgressUndefinedError("cannot extrapolate with zero completed rows")
    if elapsed < 0 or done > total:
        raise ValueError("elapsed must be >= 0 and done <= total")
    return elapsed * (total - done) / done


def axial_field(system: CoilSystem, z) -> np.ndarray | float:
    """On-axis b_z(z) from the analytic loop formula (no elliptic integrals).

    Independent of the off-axis path; used as the oracle for preset
    flatness checks.
    """
    zz = np.asarray(z, dtype=float)
    total = np.zeros_like(zz)
    for coil in system.coils:
        d = zz - coil.z_position
        total = total + MU_0 * coil.turns * coil.current * coil.radius**2 / (
            2.0 * (coil.radius**2 + d * d) ** 1.5
        )
    return float(total) if np.ndim(z) == 0 else total
