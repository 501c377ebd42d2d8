"""Independent oracles the tests check the library against.

Nothing here imports the implementation paths it verifies: the elliptic
oracle integrates the defining integrals with adaptive Simpson, the field
oracle sums straight wire segments, the square oracle enumerates every
candidate square, and the flatness oracle differentiates the analytic
on-axis formula.
"""

from __future__ import annotations

import math

import numpy as np

MU0 = 4e-7 * math.pi


def adaptive_simpson(f, a: float, b: float, tol: float = 1e-13) -> float:
    def recurse(a, b, fa, fm, fb, whole, tol, depth):
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        if depth > 50 or abs(left + right - whole) <= 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) + recurse(
            m, b, fm, frm, fb, right, 0.5 * tol, depth + 1
        )

    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return recurse(a, b, fa, fm, fb, whole, tol, 0)


def elliptic_k_quadrature(k: float, tol: float = 1e-13) -> float:
    k2 = k * k
    sin = math.sin
    return adaptive_simpson(lambda t: 1.0 / math.sqrt(1.0 - k2 * sin(t) ** 2), 0.0, math.pi / 2, tol)


def elliptic_e_quadrature(k: float, tol: float = 1e-13) -> float:
    k2 = k * k
    sin = math.sin
    return adaptive_simpson(lambda t: math.sqrt(1.0 - k2 * sin(t) ** 2), 0.0, math.pi / 2, tol)


_UNIT_CIRCLE_CACHE: dict[int, tuple[np.ndarray, ...]] = {}


def _unit_circle_segments(segments: int):
    """Midpoints and deltas of a unit circle split into straight chords."""
    cached = _UNIT_CIRCLE_CACHE.get(segments)
    if cached is None:
        phi = np.linspace(0.0, 2.0 * math.pi, segments + 1)
        cx, cy = np.cos(phi), np.sin(phi)
        mid_x = 0.5 * (cx[1:] + cx[:-1])
        mid_y = 0.5 * (cy[1:] + cy[:-1])
        seg_x = np.diff(cx)
        seg_y = np.diff(cy)
        cached = (mid_x, mid_y, seg_x, seg_y)
        _UNIT_CIRCLE_CACHE[segments] = cached
    return cached


def segmented_loop_field(
    radius: float,
    z_position: float,
    turns: int,
    current: float,
    rho: float,
    z: float,
    segments: int = 10**6,
) -> tuple[float, float]:
    """(b_rho, b_z) by summing mu0*I*dl x R / (4 pi |R|^3) over straight segments.

    The field point sits at (rho, 0, z); the loop is the scaled unit
    circle at height z_position.  Cross products are expanded by
    component, which is the same summation as the vector form.
    """
    mid_x, mid_y, seg_x, seg_y = _unit_circle_segments(segments)
    rx = rho - radius * mid_x
    ry = -radius * mid_y
    dz = z - z_position
    d2 = rx * rx + ry * ry + dz * dz
    inv_d3 = 1.0 / (d2 * np.sqrt(d2))
    # dl x R with dl = radius * (seg_x, seg_y, 0) and R = (rx, ry, dz):
    #   x-component: seg_y * dz,  z-component: seg_x * ry - seg_y * rx
    pref = MU0 * turns * current * radius / (4.0 * math.pi)
    b_x = pref * dz * float(np.dot(seg_y, inv_d3))
    b_z = pref * float(np.dot(seg_x, ry * inv_d3) - np.dot(seg_y, rx * inv_d3))
    return b_x, b_z


def brute_force_max_square(mask: np.ndarray):
    """Largest all-true square by exhaustive (corner, side) enumeration.

    Returns (side, iy0, iz0) with the same tie-break as the implementation
    (smallest iy0, then iz0), or None for an all-false mask.
    """
    mask = np.asarray(mask, dtype=bool)
    ny, nz = mask.shape
    best = None
    for side in range(min(ny, nz), 0, -1):
        for iy0 in range(ny - side + 1):
            for iz0 in range(nz - side + 1):
                if mask[iy0 : iy0 + side, iz0 : iz0 + side].all():
                    if best is None:
                        best = (side, iy0, iz0)
                    elif side == best[0] and (iy0, iz0) < (best[1], best[2]):
                        best = (side, iy0, iz0)
        if best is not None:
            return best
    return None


def axial_field_analytic(coils, z: float) -> float:
    """On-axis b_z from the textbook loop formula; coils = (radius, z_pos, turns, current)."""
    total = 0.0
    for radius, z_pos, turns, current in coils:
        d = z - z_pos
        total += MU0 * turns * current * radius**2 / (2.0 * (radius**2 + d * d) ** 1.5)
    return total


def normalized_axis_derivatives(coils, scale: float) -> dict[int, float]:
    """Central-difference derivatives of the on-axis field at the center,
    normalized to be dimensionless: D_n = d^n B / dz^n * scale^n / B(0).

    Order 1 uses the step scale/1000; orders 2 and 4 use wider stencils
    chosen so truncation and roundoff both stay far below the pass/fail
    thresholds used by the preset tests.
    """
    b0 = axial_field_analytic(coils, 0.0)
    f = lambda z: axial_field_analytic(coils, z)

    h1 = scale / 1000.0
    d1 = (f(h1) - f(-h1)) / (2.0 * h1)

    h2 = scale / 200.0
    d2 = (f(h2) - 2.0 * b0 + f(-h2)) / (h2 * h2)

    # 7-point, O(h^4)-accurate stencil: the designed systems have large
    # sixth derivatives, which would dominate a plain 5-point estimate.
    h4 = scale / 100.0
    d4 = (
        -f(-3 * h4) + 12 * f(-2 * h4) - 39 * f(-h4) + 56 * b0
        - 39 * f(h4) + 12 * f(2 * h4) - f(3 * h4)
    ) / (6 * h4**4)

    return {
        0: b0,
        1: d1 * scale / b0,
        2: d2 * scale**2 / b0,
        4: d4 * scale**4 / b0,
    }
