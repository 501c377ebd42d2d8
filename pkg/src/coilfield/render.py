"""Deterministic SVG rendering of field heatmaps and homogeneity regions.

One filled rectangle per lattice cell; cell color is the piecewise-linear
interpolation of the chosen colormap's anchor list at the value's position
in [bmin, bmax] (clamped).  No timestamps or randomness: identical inputs
produce identical bytes.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from .coils import CoilSystem
from .field import FieldGrid
from .homogeneity import HomogeneityMap, InscribedSquare

# Anchor lists: (position in [0, 1], (r, g, b)).  The interpolation rule is
# the contract; the stops are documented configuration.
COLORMAPS = {
    "viridis": (
        (0.000, (68, 1, 84)),
        (0.125, (71, 45, 123)),
        (0.250, (59, 82, 139)),
        (0.375, (44, 114, 142)),
        (0.500, (33, 145, 140)),
        (0.625, (40, 174, 128)),
        (0.750, (94, 201, 98)),
        (0.875, (173, 220, 48)),
        (1.000, (253, 231, 37)),
    ),
    "grayscale": (
        (0.0, (0, 0, 0)),
        (1.0, (255, 255, 255)),
    ),
    "bluered": (
        (0.0, (59, 76, 192)),
        (0.5, (221, 221, 221)),
        (1.0, (180, 4, 38)),
    ),
}

_MARGIN_LEFT = 70.0
_MARGIN_RIGHT = 90.0
_MARGIN_TOP = 30.0
_MARGIN_BOTTOM = 55.0
_PLOT_SIZE = 440.0
_BAR_WIDTH = 18.0


class RenderError(ValueError):
    pass


def color_at(colormap: str, t: float) -> tuple[int, int, int]:
    """RGB at scale position t (clamped to [0, 1]) for a named colormap."""
    try:
        anchors = COLORMAPS[colormap]
    except KeyError:
        raise RenderError(f"unknown colormap {colormap!r}; have {', '.join(sorted(COLORMAPS))}")
    t = min(max(t, 0.0), 1.0)
    if t <= anchors[0][0]:
        return anchors[0][1]
    for (t0, c0), (t1, c1) in zip(anchors, anchors[1:]):
        if t <= t1:
            f = (t - t0) / (t1 - t0)
            return tuple(int(a + (b - a) * f + 0.5) for a, b in zip(c0, c1))
    return anchors[-1][1]


def _hex(rgb: tuple[int, int, int]) -> str:
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def _svg_header(width: float, height: float) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]


def _axes(parts: list[str], region, x_of, y_of, title: str) -> None:
    x0, x1 = x_of(region.z_min), x_of(region.z_max)
    y0, y1 = y_of(region.y_min), y_of(region.y_max)
    parts.append(
        f'<rect x="{_fmt(min(x0, x1))}" y="{_fmt(min(y0, y1))}" width="{_fmt(abs(x1 - x0))}" '
        f'height="{_fmt(abs(y0 - y1))}" fill="none" stroke="black" stroke-width="1"/>'
    )
    for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
        z = region.z_min + frac * (region.z_max - region.z_min)
        y = region.y_min + frac * (region.y_max - region.y_min)
        parts.append(
            f'<text x="{_fmt(x_of(z))}" y="{_fmt(max(y0, y1) + 16)}" font-size="11" '
            f'text-anchor="middle" font-family="sans-serif">{_fmt(z)}</text>'
        )
        parts.append(
            f'<text x="{_fmt(min(x0, x1) - 6)}" y="{_fmt(y_of(y) + 4)}" font-size="11" '
            f'text-anchor="end" font-family="sans-serif">{_fmt(y)}</text>'
        )
    xc = 0.5 * (x0 + x1)
    parts.append(
        f'<text x="{_fmt(xc)}" y="{_fmt(max(y0, y1) + 36)}" font-size="13" '
        f'text-anchor="middle" font-family="sans-serif">z (m)</text>'
    )
    parts.append(
        f'<text x="16" y="{_fmt(0.5 * (y0 + y1))}" font-size="13" text-anchor="middle" '
        f'font-family="sans-serif" transform="rotate(-90 16 {_fmt(0.5 * (y0 + y1))})">y (m)</text>'
    )
    parts.append(
        f'<text x="{_fmt(xc)}" y="18" font-size="13" text-anchor="middle" '
        f'font-family="sans-serif">{title}</text>'
    )


def _color_bar(parts: list[str], colormap: str, vmin: float, vmax: float, unit: str,
               x: float, y_top: float, height: float) -> None:
    steps = 64
    for i in range(steps):
        t1 = (i + 1) / steps
        c = color_at(colormap, (i + 0.5) / steps)
        parts.append(
            f'<rect x="{_fmt(x)}" y="{_fmt(y_top + height * (1 - t1))}" width="{_fmt(_BAR_WIDTH)}" '
            f'height="{_fmt(height / steps + 0.5)}" fill="{_hex(c)}"/>'
        )
    parts.append(
        f'<rect x="{_fmt(x)}" y="{_fmt(y_top)}" width="{_fmt(_BAR_WIDTH)}" height="{_fmt(height)}" '
        f'fill="none" stroke="black" stroke-width="0.5"/>'
    )
    for frac in (0.0, 0.5, 1.0):
        v = vmin + frac * (vmax - vmin)
        yy = y_top + height * (1.0 - frac)
        parts.append(
            f'<text x="{_fmt(x + _BAR_WIDTH + 4)}" y="{_fmt(yy + 4)}" font-size="11" '
            f'font-family="sans-serif">{_fmt(v)}</text>'
        )
    parts.append(
        f'<text x="{_fmt(x + _BAR_WIDTH / 2)}" y="{_fmt(y_top - 8)}" font-size="11" '
        f'text-anchor="middle" font-family="sans-serif">{unit}</text>'
    )


def _cell_rects(parts: list[str], region, values: np.ndarray, x_of, y_of,
                colormap: str, vmin: float, vmax: float, nan_color="#ffffff") -> None:
    dy, dz = region.dy, region.dz
    span = vmax - vmin
    for iy in range(region.ny):
        y = region.y_at(iy)
        for iz in range(region.nz):
            v = values[iy, iz]
            if math.isfinite(v):
                fill = _hex(color_at(colormap, (v - vmin) / span))
            else:
                fill = nan_color
            x_lo = x_of(region.z_at(iz) - 0.5 * dz)
            y_lo = y_of(y + 0.5 * dy)
            parts.append(
                f'<rect x="{_fmt(x_lo)}" y="{_fmt(y_lo)}" width="{_fmt(abs(x_of(dz) - x_of(0)))}" '
                f'height="{_fmt(abs(y_of(dy) - y_of(0)))}" fill="{fill}"/>'
            )


def _make_transforms(region):
    sx = _PLOT_SIZE / (region.z_max - region.z_min + region.dz)
    sy = _PLOT_SIZE / (region.y_max - region.y_min + region.dy)

    def x_of(z):
        return _MARGIN_LEFT + (z - (region.z_min - 0.5 * region.dz)) * sx

    def y_of(y):
        return _MARGIN_TOP + ((region.y_max + 0.5 * region.dy) - y) * sy

    return x_of, y_of


def _coil_markers(parts: list[str], system: CoilSystem, x_of, y_of) -> None:
    for coil in system.coils:
        for sign in (-1.0, 1.0):
            parts.append(
                f'<circle cx="{_fmt(x_of(coil.z_position))}" cy="{_fmt(y_of(sign * coil.radius))}" '
                f'r="4" fill="none" stroke="red" stroke-width="1.5"/>'
            )


def render_heatmap(
    grid: FieldGrid,
    bmin_mt: Optional[float] = None,
    bmax_mt: Optional[float] = None,
    colormap: str = "viridis",
    show_coils: bool = False,
    system: Optional[CoilSystem] = None,
) -> bytes:
    """Field-magnitude heatmap (color scale in millitesla) as SVG bytes."""
    if colormap not in COLORMAPS:
        raise RenderError(f"unknown colormap {colormap!r}; have {', '.join(sorted(COLORMAPS))}")
    values = grid.b_mag * 1e3
    finite = values[np.isfinite(values)]
    if finite.size == 0:
        raise RenderError("grid has no finite samples to render")
    vmin = float(finite.min()) if bmin_mt is None else float(bmin_mt)
    vmax = float(finite.max()) if bmax_mt is None else float(bmax_mt)
    if not (math.isfinite(vmin) and math.isfinite(vmax)) or vmin >= vmax:
        raise RenderError(f"color limits must satisfy bmin < bmax, got [{vmin}, {vmax}]")

    region = grid.region
    x_of, y_of = _make_transforms(region)
    width = _MARGIN_LEFT + _PLOT_SIZE + _MARGIN_RIGHT
    height = _MARGIN_TOP + _PLOT_SIZE + _MARGIN_BOTTOM
    parts = _svg_header(width, height)
    _cell_rects(parts, region, values, x_of, y_of, colormap, vmin, vmax)
    if show_coils and system is not None:
        _coil_markers(parts, system, x_of, y_of)
    _axes(parts, region, x_of, y_of, "|B| (mT)")
    _color_bar(parts, colormap, vmin, vmax, "mT",
               _MARGIN_LEFT + _PLOT_SIZE + 18, _MARGIN_TOP, _PLOT_SIZE)
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")


def render_homogeneity(
    hmap: HomogeneityMap,
    mask: np.ndarray,
    square: Optional[InscribedSquare] = None,
    system: Optional[CoilSystem] = None,
    show_coils: bool = False,
) -> bytes:
    """Work-region plot: cells in the mask filled, inscribed square outlined."""
    region = hmap.region
    x_of, y_of = _make_transforms(region)
    width = _MARGIN_LEFT + _PLOT_SIZE + _MARGIN_RIGHT
    height = _MARGIN_TOP + _PLOT_SIZE + _MARGIN_BOTTOM
    parts = _svg_header(width, height)
    dy, dz = region.dy, region.dz
    cell_w = abs(x_of(dz) - x_of(0))
    cell_h = abs(y_of(dy) - y_of(0))
    for iy in range(region.ny):
        y = region.y_at(iy)
        for iz in range(region.nz):
            if not mask[iy, iz]:
                continue
            parts.append(
                f'<rect x="{_fmt(x_of(region.z_at(iz) - 0.5 * dz))}" '
                f'y="{_fmt(y_of(y + 0.5 * dy))}" width="{_fmt(cell_w)}" '
                f'height="{_fmt(cell_h)}" fill="#2166ac"/>'
            )
    if square is not None:
        y_lo, y_hi = square.y_extent
        z_lo, z_hi = square.z_extent
        parts.append(
            f'<rect x="{_fmt(x_of(z_lo))}" y="{_fmt(y_of(y_hi))}" '
            f'width="{_fmt(x_of(z_hi) - x_of(z_lo))}" height="{_fmt(y_of(y_lo) - y_of(y_hi))}" '
            f'fill="none" stroke="#e31a1c" stroke-width="2"/>'
        )
    if show_coils and system is not None:
        _coil_markers(parts, system, x_of, y_of)
    _axes(parts, region, x_of, y_of, "homogeneous region")
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")
