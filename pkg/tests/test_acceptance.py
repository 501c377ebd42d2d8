"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines live.
Tolerances are pinned here, not configurable.
"""

import functools
import math
import random
import time
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from coilfield.cli import run as cli_run
from coilfield.coils import SimulationRegion, default_region, make_preset
from coilfield.elliptic import complete_elliptic_e, complete_elliptic_k, complete_elliptic_ke
from coilfield.field import FieldGrid, field_single_coil, simulate_grid
from coilfield.coils import Coil
from coilfield.homogeneity import (
    experimentation_volume,
    homogeneity_map,
    homogeneous_mask,
    largest_inscribed_square,
)
from coilfield.persistence import load_project, load_results, save_project, save_results
from oracles import (
    brute_force_max_square,
    elliptic_e_quadrature,
    elliptic_k_quadrature,
    normalized_axis_derivatives,
    segmented_loop_field,
)
from test_persistence import _project_equal, _random_project, _results_equal


def criterion(number, title, budget_s=None):
    """Print one `criterion N PASS/FAIL` line and enforce the runtime budget."""

    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            start = time.monotonic()
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"criterion {number:2d} FAIL  {title}")
                raise
            elapsed = time.monotonic() - start
            print(f"criterion {number:2d} PASS  {title} ({elapsed:.2f}s)")
            if budget_s is not None:
                assert elapsed < budget_s, f"criterion {number} exceeded {budget_s}s budget"

        return inner

    return wrap


@criterion(1, "elliptic integrals match the quadrature oracle", budget_s=5.0)
def test_c01_elliptic_oracle():
    rng = random.Random(1)
    for _ in range(1000):
        k = rng.uniform(0.0, 0.999)
        assert complete_elliptic_k(k) == pytest.approx(elliptic_k_quadrature(k), rel=1e-12)
        assert complete_elliptic_e(k) == pytest.approx(elliptic_e_quadrature(k), rel=1e-12)
    for k in np.arange(0.1, 0.95, 0.1):
        kp = math.sqrt(1.0 - k * k)
        K, E = complete_elliptic_ke(float(k))
        Kp, Ep = complete_elliptic_ke(kp)
        assert abs(E * Kp + Ep * K - K * Kp - math.pi / 2) <= 1e-10


@criterion(2, "single-coil field matches the segmented Biot-Savart oracle", budget_s=60.0)
def test_c02_biot_savart_oracle():
    rng = random.Random(2)
    checked = 0
    while checked < 200:
        r = rng.uniform(0.1, 2.0)
        Z = rng.uniform(-1.5, 1.5)
        turns = rng.randint(1, 200)
        current = rng.choice([-1.0, 1.0]) * rng.uniform(0.01, 20.0)
        rho = rng.uniform(0.0, 3.0)
        z = rng.uniform(-3.0, 3.0)
        d = z - Z
        k2 = 4.0 * r * rho / ((r + rho) ** 2 + d * d)
        if k2 > 0.999:
            continue
        want_rho, want_z = segmented_loop_field(r, Z, turns, current, rho, z, segments=10**6)
        got = field_single_coil(Coil(r, turns, current, Z), rho, z)
        scale = math.hypot(want_rho, want_z)
        assert abs(got.b_rho - want_rho) <= 1e-6 * max(abs(want_rho), 1e-9 * scale)
        assert abs(got.b_z - want_z) <= 1e-6 * max(abs(want_z), 1e-9 * scale)
        checked += 1


@criterion(3, "Helmholtz preset center field equals the analytic value", budget_s=1.0)
def test_c03_helmholtz_center():
    system = make_preset("helmholtz", 0.5, 100, 1.0)
    grid = simulate_grid(system, SimulationRegion(-0.1, 0.1, -0.1, 0.1, 3, 3))
    want = (4.0 / 5.0) ** 1.5 * 4e-7 * math.pi * 100 * 1.0 / 0.5
    assert grid.sample(1, 1).b_mag == pytest.approx(want, rel=1e-9)
    assert want == pytest.approx(1.798352571146426e-04, rel=1e-12)


@criterion(4, "preset on-axis derivative flatness", budget_s=10.0)
def test_c04_preset_flatness():
    for base_radius in (0.1, 0.5, 1.0):
        for name, turns, needs_fourth in (
            ("helmholtz", 100, False),
            ("maxwell", 64, True),
            ("lee-whiting", 100, True),
        ):
            system = make_preset(name, base_radius, turns, 1.0)
            coils = [(c.radius, c.z_position, c.turns, c.current) for c in system.coils]
            d = normalized_axis_derivatives(coils, base_radius)
            assert abs(d[1]) <= 1e-6, f"{name} r={base_radius}: d1={d[1]:.2e}"
            assert abs(d[2]) <= 1e-4, f"{name} r={base_radius}: d2={d[2]:.2e}"
            if needs_fourth:
                assert abs(d[4]) <= 1e-2, f"{name} r={base_radius}: d4={d[4]:.2e}"


@criterion(5, "homogeneity definition and threshold monotonicity")
def test_c05_homogeneity_semantics():
    b = np.full((7, 7), 1.0e-3)
    b[2, 4] = 1.02e-3
    region = SimulationRegion(-1.0, 1.0, -1.0, 1.0, 7, 7)
    hmap = homogeneity_map(FieldGrid(region=region, b_y=np.zeros_like(b), b_z=b))
    assert hmap.h_values[2, 4] == pytest.approx(98.0, abs=1e-9)

    rng = np.random.default_rng(5)
    for _ in range(20):
        ny, nz = rng.integers(3, 12, size=2)
        bz = 1e-3 * (1.0 + 0.1 * rng.standard_normal((ny, nz)))
        grid = FieldGrid(
            region=SimulationRegion(-1.0, 1.0, -1.0, 1.0, int(ny), int(nz)),
            b_y=np.zeros((ny, nz)),
            b_z=bz,
        )
        hmap = homogeneity_map(grid)
        t1, t2 = sorted(rng.uniform(1.0, 100.0, size=2))
        m1 = homogeneous_mask(hmap, float(t1))
        m2 = homogeneous_mask(hmap, float(t2))
        assert not np.any(m2 & ~m1)


@criterion(6, "inscribed-square DP equals exhaustive brute force", budget_s=30.0)
def test_c06_inscribed_square_oracle():
    rng = np.random.default_rng(6)

    def check(mask):
        got = largest_inscribed_square(mask)
        want = brute_force_max_square(mask)
        if want is None:
            assert got is None
        else:
            assert (got.side_cells, got.iy0, got.iz0) == want

    # every mask shape up to 12x12, three densities each
    for ny in range(1, 13):
        for nz in range(1, 13):
            for density in (0.25, 0.6, 0.9):
                check(rng.random((ny, nz)) < density)
            check(np.ones((ny, nz), dtype=bool))
            check(np.zeros((ny, nz), dtype=bool))
    # exhaustive over every mask on shapes with at most 9 cells
    for ny, nz in ((1, 1), (2, 2), (3, 3), (2, 4), (4, 2), (1, 9), (3, 2)):
        cells = ny * nz
        for bits in range(2**cells):
            mask = np.array(
                [(bits >> i) & 1 for i in range(cells)], dtype=bool
            ).reshape(ny, nz)
            check(mask)
    # the 50 random 8x8 masks
    for _ in range(50):
        check(rng.random((8, 8)) < rng.uniform(0.2, 0.95))


@criterion(7, "experimentation volume of a centered square is a consistent cylinder")
def test_c07_experimentation_volume():
    side = 0.13029
    rep = experimentation_volume((-side / 2, side / 2), (-side / 2, side / 2))
    assert rep.shape == "cylinder"
    assert rep.height == pytest.approx(0.13029, abs=1e-15)
    assert rep.outer_radius == pytest.approx(0.065145, abs=1e-15)
    assert rep.volume == pytest.approx(math.pi * 0.065145**2 * 0.13029, rel=1e-12)
    # at display precision: 0.13029 m tall, 0.06514 m radius, 0.00174 m^3
    assert round(rep.height, 5) == 0.13029
    assert round(rep.outer_radius, 5) == 0.06514
    assert round(rep.volume, 5) == 0.00174
    assert rep.centroid_z == 0.0


@criterion(8, "grid determinism across worker counts", budget_s=5.0)
def test_c08_grid_determinism():
    system = make_preset("helmholtz", 0.5, 100, 1.0)
    region = default_region(system)
    assert (region.ny, region.nz) == (101, 101)
    a = simulate_grid(system, region, workers=1)
    b = simulate_grid(system, region, workers=8)
    assert np.array_equal(a.b_y, b.b_y)
    assert np.array_equal(a.b_z, b.b_z)


@criterion(9, "format round-trips and re-imported measurement grids")
def test_c09_format_round_trips():
    from coilfield.electrical import electrical_report
    from coilfield.persistence import (
        ResultsDocument,
        export_measurements,
        import_measurements,
    )

    rng = random.Random(9)
    for _ in range(100):
        doc = _random_project(rng)
        assert _project_equal(load_project(save_project(doc)), doc)

    np_rng = np.random.default_rng(9)
    for _ in range(10):
        doc = _random_project(rng)
        grid = FieldGrid(
            region=doc.region,
            b_y=np_rng.normal(scale=1e-4, size=(doc.region.ny, doc.region.nz)),
            b_z=np_rng.normal(scale=1e-3, size=(doc.region.ny, doc.region.nz)),
        )
        results = ResultsDocument(project=doc, grid=grid, electrical=electrical_report(doc.system))
        once = load_results(save_results(results))
        assert _results_equal(once, load_results(save_results(once)))

    system = make_preset("helmholtz", 0.5, 100, 1.0)
    grid = simulate_grid(system, SimulationRegion(-0.55, 0.55, -0.55, 0.55, 21, 21))
    imported = import_measurements(export_measurements(grid), grid.region)
    again = import_measurements(export_measurements(imported), imported.region)
    m1 = homogeneity_map(imported)
    m2 = homogeneity_map(again)
    assert np.array_equal(m1.h_values, m2.h_values)
    assert m1.b_center == m2.b_center


@criterion(10, "CLI preset -> simulate -> homogeneity -> render pipeline", budget_s=10.0)
def test_c10_cli_pipeline(tmp_path):
    proj = tmp_path / "h.coilproj"
    res = tmp_path / "h.coilres"
    report = tmp_path / "report.coilres"
    region_svg = tmp_path / "region.svg"
    field_svg = tmp_path / "field.svg"

    assert cli_run(["preset", "--name", "helmholtz", "--radius", "0.5", "--turns", "100",
                    "--current", "1", "--out", str(proj)]) == 0
    assert cli_run(["simulate", "--project", str(proj), "--out", str(res)]) == 0
    assert cli_run(["homogeneity", "--results", str(res), "--threshold", "97",
                    "--out", str(report), "--svg", str(region_svg)]) == 0
    assert cli_run(["render", "--results", str(res), "--svg", str(field_svg)]) == 0

    for svg in (region_svg, field_svg):
        root = ET.fromstring(svg.read_bytes())
        assert root.tag.endswith("svg")

    summary = load_results(report.read_bytes()).homogeneity_summary
    assert summary is not None
    vol = summary.volume
    assert vol is not None
    want = math.pi * (vol.outer_radius**2 - vol.inner_radius**2) * vol.height
    assert vol.volume == pytest.approx(want, rel=1e-12)
    assert summary.square is not None
    assert vol.height == pytest.approx(summary.square.side_m, rel=1e-12)
