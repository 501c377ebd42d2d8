"""AWG wire selection and per-coil electrical build parameters.

Diameters follow the AWG closed formula d = 0.127 mm * 92^((36 - n) / 39).
Ampacities are the conservative single-wire-in-free-air ("chassis wiring")
copper ratings reproduced in the Handbook of Electronic Tables and
Formulas (12th ed.); the table is configuration, the thinnest-wire-that-
carries-the-current selection rule is the contract.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

COPPER_RESISTIVITY = 1.68e-8  # ohm*m at 20 C

# AWG gauge -> ampacity in amperes (chassis wiring, single copper wire in free air).
AMPACITY_A = {
    0: 245.0, 1: 211.0, 2: 181.0, 3: 158.0, 4: 135.0, 5: 118.0, 6: 101.0,
    7: 89.0, 8: 73.0, 9: 64.0, 10: 55.0, 11: 47.0, 12: 41.0, 13: 35.0,
    14: 32.0, 15: 28.0, 16: 22.0, 17: 19.0, 18: 16.0, 19: 14.0, 20: 11.0,
    21: 9.0, 22: 7.0, 23: 4.7, 24: 3.5, 25: 2.7, 26: 2.2, 27: 1.7, 28: 1.4,
    29: 1.2, 30: 0.86, 31: 0.7, 32: 0.53, 33: 0.43, 34: 0.33, 35: 0.27,
    36: 0.21, 37: 0.17, 38: 0.13, 39: 0.11, 40: 0.09,
}


class GaugeRangeError(ValueError):
    """Gauge outside the table (0-40)."""


class OverCapacityError(ValueError):
    """Requested current exceeds the largest wire in the table."""


@dataclass(frozen=True)
class WireSpec:
    awg: int
    diameter: float  # m
    resistance_per_meter: float  # ohm/m
    ampacity: float  # A


@dataclass(frozen=True)
class CoilElectrical:
    wire: WireSpec
    wire_length: float  # m
    resistance: float  # ohm
    voltage: float  # V
    power: float  # W


@dataclass(frozen=True)
class ElectricalReport:
    per_coil: tuple[CoilElectrical, ...]
    total_wire_length: float
    total_resistance: float
    total_voltage: float
    total_power: float


def awg_diameter(gauge: int) -> float:
    """Bare-copper diameter in meters for AWG ``gauge`` (0-40)."""
    if not (isinstance(gauge, int) and 0 <= gauge <= 40):
        raise GaugeRangeError(f"gauge must be an integer in [0, 40], got {gauge!r}")
    return 0.000127 * 92.0 ** ((36 - gauge) / 39.0)


def wire_spec(gauge: int) -> WireSpec:
    d = awg_diameter(gauge)
    area = math.pi * d * d / 4.0
    return WireSpec(
        awg=gauge,
        diameter=d,
        resistance_per_meter=COPPER_RESISTIVITY / area,
        ampacity=AMPACITY_A[gauge],
    )


def select_gauge(current: float) -> WireSpec:
    """Thinnest wire (highest gauge number) whose ampacity covers |current|."""
    if not (isinstance(current, (int, float)) and math.isfinite(current)) or current == 0:
        raise ValueError("current must be finite and nonzero")
    need = abs(current)
    for gauge in range(40, -1, -1):
        if AMPACITY_A[gauge] >= need:
            return wire_spec(gauge)
    raise OverCapacityError(
        f"|current| = {need:g} A exceeds the AWG 0 rating of {AMPACITY_A[0]:g} A"
    )


def electrical_report(system) -> ElectricalReport:
    """Wire gauge, length, resistance, voltage and power for every coil.

    Totals assume the coils are wired in series (voltages add, one shared
    current path per coil's own current).
    """
    entries = []
    for idx, coil in enumerate(system.coils):
        try:
            wire = select_gauge(coil.current)
        except OverCapacityError as exc:
            raise OverCapacityError(f"coil {idx}: {exc}") from exc
        length = coil.turns * 2.0 * math.pi * coil.radius
        resistance = length * wire.resistance_per_meter
        # Signed: a negative value flags a reversed-polarity winding.
        voltage = coil.current * resistance
        power = coil.current * coil.current * resistance
        entries.append(CoilElectrical(wire, length, resistance, voltage, power))
    return ElectricalReport(
        per_coil=tuple(entries),
        total_wire_length=sum(e.wire_length for e in entries),
        total_resistance=sum(e.resistance for e in entries),
        total_voltage=sum(e.voltage for e in entries),
        total_power=sum(e.power for e in entries),
    )
