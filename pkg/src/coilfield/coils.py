"""Coil geometry types, validation, and the preset catalog.

Coils are ideal filamentary loops: N turns lumped at one (radius, z)
position on a shared symmetry axis.  Presets scale linearly with the base
radius; their positions and turn ratios were chosen so that the on-axis
field derivatives vanish at the center through order 2 (helmholtz) or
order 4 (the four-coil and three-coil systems), which the test suite
checks by finite differences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

PRESET_NAMES = ("helmholtz", "maxwell", "tetracoil", "wang", "lee-whiting")

# maxwell: outer coils sit on the same sphere as the central one.
_MAXWELL_RADIUS = math.sqrt(4.0 / 7.0)
_MAXWELL_Z = math.sqrt(3.0 / 7.0)

# Four-equal-coil systems: pair positions (fractions of the coil radius)
# solving d2(Bz) = d4(Bz) = 0 at the center for the given exact
# outer:inner turn ratios.
_TETRACOIL_INNER_Z = 0.2284975405575286487
_TETRACOIL_OUTER_Z = 0.9082008236655192528
_TETRACOIL_RATIO = (26, 11)  # outer : inner

_LEE_WHITING_INNER_Z = 0.2448309197946654651
_LEE_WHITING_OUTER_Z = 0.9448548103805990172
_LEE_WHITING_RATIO = (9, 4)  # outer : inner

# wang: Helmholtz main pair plus a reversed compensation pair at half the
# radius; the 32:1 turn ratio cancels the fourth derivative exactly.
_WANG_COMP_DIVISOR = 32


class UnknownPresetError(ValueError):
    """Preset name not in the catalog."""


@dataclass(frozen=True)
class Coil:
    """One circular loop bundle on the symmetry axis."""

    radius: float
    turns: int
    current: float
    z_position: float


@dataclass(frozen=True)
class CoilSystem:
    """Ordered collection of coaxial coils."""

    coils: tuple[Coil, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "coils", tuple(self.coils))


def _lattice(lo: float, hi: float, n: int):
    xs = np.linspace(lo, hi, n)
    if lo == -hi:
        # Exact +/- pairs (and an exact 0 for odd n), so that mirror points
        # see bit-identical |coordinate|.
        xs = 0.5 * (xs - xs[::-1])
    xs.setflags(write=False)
    return xs


@dataclass(frozen=True)
class SimulationRegion:
    """Rectangular window of the y-z plane with its lattice point counts.

    Lattice coordinates are x_i = x_min + i * (x_max - x_min) / (n - 1);
    windows symmetric about zero get exactly mirror-symmetric lattices.
    """

    y_min: float
    y_max: float
    z_min: float
    z_max: float
    ny: int
    nz: int

    @property
    def dy(self) -> float:
        return (self.y_max - self.y_min) / (self.ny - 1)

    @property
    def dz(self) -> float:
        return (self.z_max - self.z_min) / (self.nz - 1)

    def y_lattice(self):
        return _lattice(self.y_min, self.y_max, self.ny)

    def z_lattice(self):
        return _lattice(self.z_min, self.z_max, self.nz)

    def y_at(self, iy: int) -> float:
        return float(self.y_lattice()[iy])

    def z_at(self, iz: int) -> float:
        return float(self.z_lattice()[iz])


@dataclass(frozen=True)
class ValidationIssue:
    path: str
    message: str


@dataclass(frozen=True)
class ValidationVerdict:
    issues: tuple[ValidationIssue, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.issues

    def __bool__(self) -> bool:
        return self.ok


def _coil_issues(coil: Coil, path: str) -> list[ValidationIssue]:
    issues = []
    if not (isinstance(coil.radius, (int, float)) and math.isfinite(coil.radius) and coil.radius > 0):
        issues.append(ValidationIssue(f"{path}.radius", "radius must be a finite positive length"))
    if not (isinstance(coil.turns, int) and coil.turns >= 1):
        issues.append(ValidationIssue(f"{path}.turns", "turns must be an integer >= 1"))
    if not (isinstance(coil.current, (int, float)) and math.isfinite(coil.current) and coil.current != 0):
        issues.append(ValidationIssue(f"{path}.current", "current must be finite and nonzero"))
    if not (isinstance(coil.z_position, (int, float)) and math.isfinite(coil.z_position)):
        issues.append(ValidationIssue(f"{path}.z_position", "axial position must be finite"))
    return issues


def validate_system(system: CoilSystem) -> ValidationVerdict:
    """Collect every violated invariant; never raises."""
    issues: list[ValidationIssue] = []
    if len(system.coils) < 1:
        issues.append(ValidationIssue("coils", "a coil system needs at least one coil"))
    for i, coil in enumerate(system.coils):
        issues.extend(_coil_issues(coil, f"coils[{i}]"))
    return ValidationVerdict(tuple(issues))


def validate_region(region: SimulationRegion) -> ValidationVerdict:
    issues: list[ValidationIssue] = []
    for name in ("y_min", "y_max", "z_min", "z_max"):
        v = getattr(region, name)
        if not (isinstance(v, (int, float)) and math.isfinite(v)):
            issues.append(ValidationIssue(f"region.{name}", "limit must be a finite number"))
    if math.isfinite(region.y_min) and math.isfinite(region.y_max) and not region.y_min < region.y_max:
        issues.append(ValidationIssue("region.y_min", "y_min must be < y_max"))
    if math.isfinite(region.z_min) and math.isfinite(region.z_max) and not region.z_min < region.z_max:
        issues.append(ValidationIssue("region.z_min", "z_min must be < z_max"))
    if not (isinstance(region.ny, int) and region.ny >= 2):
        issues.append(ValidationIssue("region.ny", "ny must be an integer >= 2"))
    if not (isinstance(region.nz, int) and region.nz >= 2):
        issues.append(ValidationIssue("region.nz", "nz must be an integer >= 2"))
    return ValidationVerdict(tuple(issues))


def _scaled_turns(turns: int, num: int, den: int) -> int:
    return max(1, round(turns * num / den))


def make_preset(name: str, base_radius: float, turns: int, current: float) -> CoilSystem:
    """Build a named preset scaled to ``base_radius``.

    ``turns`` sets the reference coil group (both coils for helmholtz, the
    central coil for maxwell, the inner pair for tetracoil/lee-whiting, the
    main pair for wang); dependent groups keep the design ratio, rounded to
    integers.  The ratios are exact when turns is divisible by 64
    (maxwell), 11 (tetracoil), 4 (lee-whiting) or 32 (wang).
    """
    if name not in PRESET_NAMES:
        raise UnknownPresetError(f"unknown preset {name!r}; expected one of {', '.join(PRESET_NAMES)}")
    if not (isinstance(base_radius, (int, float)) and math.isfinite(base_radius) and base_radius > 0):
        raise ValueError("base_radius must be a finite positive length")
    if not (isinstance(turns, int) and turns >= 1):
        raise ValueError("turns must be an integer >= 1")
    if not (isinstance(current, (int, float)) and math.isfinite(current) and current != 0):
        raise ValueError("current must be finite and nonzero")

    r = float(base_radius)
    i = float(current)
    if name == "helmholtz":
        coils = (
            Coil(r, turns, i, -r / 2.0),
            Coil(r, turns, i, +r / 2.0),
        )
    elif name == "maxwell":
        outer = _scaled_turns(turns, 49, 64)
        coils = (
            Coil(_MAXWELL_RADIUS * r, outer, i, -_MAXWELL_Z * r),
            Coil(r, turns, i, 0.0),
            Coil(_MAXWELL_RADIUS * r, outer, i, +_MAXWELL_Z * r),
        )
    elif name == "tetracoil":
        outer = _scaled_turns(turns, *_TETRACOIL_RATIO)
        coils = (
            Coil(r, outer, i, -_TETRACOIL_OUTER_Z * r),
            Coil(r, turns, i, -_TETRACOIL_INNER_Z * r),
            Coil(r, turns, i, +_TETRACOIL_INNER_Z * r),
            Coil(r, outer, i, +_TETRACOIL_OUTER_Z * r),
        )
    elif name == "wang":
        comp = _scaled_turns(turns, 1, _WANG_COMP_DIVISOR)
        coils = (
            Coil(r, turns, i, -r / 2.0),
            Coil(r / 2.0, comp, -i, -r / 4.0),
            Coil(r / 2.0, comp, -i, +r / 4.0),
            Coil(r, turns, i, +r / 2.0),
        )
    else:  # lee-whiting
        outer = _scaled_turns(turns, *_LEE_WHITING_RATIO)
        coils = (
            Coil(r, outer, i, -_LEE_WHITING_OUTER_Z * r),
            Coil(r, turns, i, -_LEE_WHITING_INNER_Z * r),
            Coil(r, turns, i, +_LEE_WHITING_INNER_Z * r),
            Coil(r, outer, i, +_LEE_WHITING_OUTER_Z * r),
        )
    return CoilSystem(coils=coils, label=name)


def default_region(system: CoilSystem) -> SimulationRegion:
    """Square 101x101 window: half-width 1.1x the largest coil radius,
    centered on the axial centroid of the coils."""
    verdict = validate_system(system)
    if not verdict.ok:
        raise ValueError(f"invalid coil system: {verdict.issues[0].message}")
    half = 1.1 * max(c.radius for c in system.coils)
    zc = sum(c.z_position for c in system.coils) / len(system.coils)
    return SimulationRegion(
        y_min=-half, y_max=half, z_min=zc - half, z_max=zc + half, ny=101, nz=101
    )


def preset_catalog() -> list[dict]:
    """Parameter templates for each preset (used by the CLI and the API).

    Each entry carries the concrete coil rows and default region for its
    default parameters, so clients can fill an editor without duplicating
    the preset geometry.
    """
    defaults = {
        "helmholtz": (0.5, 100, 1.0),
        "maxwell": (0.5, 64, 1.0),
        "tetracoil": (0.5, 55, 1.0),
        "wang": (0.5, 96, 1.0),
        "lee-whiting": (0.5, 100, 1.0),
    }
    catalog = []
    for name in PRESET_NAMES:
        radius, turns, current = defaults[name]
        system = make_preset(name, radius, turns, current)
        region = default_region(system)
        catalog.append(
            {
                "name": name,
                "base_radius_m": radius,
                "turns": turns,
                "current_a": current,
                "coil_count": len(system.coils),
                "coils": [
                    {
                        "radius_m": c.radius,
                        "turns": c.turns,
                        "current_a": c.current,
                        "z_m": c.z_position,
                    }
                    for c in system.coils
                ],
                "region": {
                    "y_min_m": region.y_min,
                    "y_max_m": region.y_max,
                    "z_min_m": region.z_min,
                    "z_max_m": region.z_max,
                    "ny": region.ny,
                    "nz": region.nz,
                },
            }
        )
    return catalog
