import math
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coilfield.coils import Coil, CoilSystem, SimulationRegion
from coilfield.field import FieldGrid, simulate_grid
from coilfield.homogeneity import (
    ZeroReferenceError,
    center_index,
    experimentation_volume,
    homogeneity_map,
    homogeneous_mask,
    largest_inscribed_square,
    mask_to_rle,
    rle_to_mask,
    square_volume_report,
)
from oracles import brute_force_max_square


def _grid_from_bz(bz, y_min=-1.0, y_max=1.0, z_min=-1.0, z_max=1.0):
    bz = np.asarray(bz, dtype=float)
    ny, nz = bz.shape
    region = SimulationRegion(y_min, y_max, z_min, z_max, ny, nz)
    return FieldGrid(region=region, b_y=np.zeros_like(bz), b_z=bz)


def test_uniform_grid_is_100_everywhere():
    grid = _grid_from_bz(np.full((5, 7), 2.5e-4))
    hmap = homogeneity_map(grid)
    assert np.all(hmap.h_values == 100.0)
    assert hmap.b_center == 2.5e-4


def test_center_cell_is_exactly_100(helmholtz_grid):
    hmap = homogeneity_map(helmholtz_grid)
    iy, iz = center_index(helmholtz_grid.region)
    assert hmap.h_values[iy, iz] == 100.0
    assert np.all(hmap.h_values <= 100.0)


def test_two_percent_above_reference_gives_98():
    bz = np.full((5, 5), 1.0e-3)
    bz[1, 3] = 1.02e-3
    hmap = homogeneity_map(_grid_from_bz(bz))
    assert hmap.h_values[1, 3] == pytest.approx(98.0, abs=1e-9)


def test_three_percent_below_reference_gives_97():
    bz = np.full((5, 5), 1.0e-3)
    bz[4, 0] = 0.97e-3
    hmap = homogeneity_map(_grid_from_bz(bz))
    assert hmap.h_values[4, 0] == pytest.approx(97.0, abs=1e-9)


def test_signed_convention_exceeds_100_below_reference():
    bz = np.full((3, 3), 1.0e-3)
    bz[0, 0] = 0.97e-3
    hmap = homogeneity_map(_grid_from_bz(bz), signed=True)
    assert hmap.h_values[0, 0] == pytest.approx(103.0, abs=1e-9)
    assert hmap.signed


def test_nonfinite_samples_marked_minus_inf():
    bz = np.full((3, 3), 1.0e-3)
    bz[0, 2] = np.nan
    hmap = homogeneity_map(_grid_from_bz(bz))
    assert hmap.h_values[0, 2] == -np.inf


def test_zero_reference_raises():
    # anti-Helmholtz: opposite currents null the center field
    system = CoilSystem(
        coils=(Coil(0.5, 100, 1.0, -0.25), Coil(0.5, 100, -1.0, 0.25)), label="gradient"
    )
    region = SimulationRegion(-0.4, 0.4, -0.4, 0.4, 11, 11)
    grid = simulate_grid(system, region)
    with pytest.raises(ZeroReferenceError):
        homogeneity_map(grid)


def test_mask_threshold_validation(helmholtz_grid):
    hmap = homogeneity_map(helmholtz_grid)
    for bad in (0.0, -5.0, 100.5, math.nan):
        with pytest.raises(ValueError):
            homogeneous_mask(hmap, bad)


def test_mask_at_100_keeps_only_center(helmholtz_grid):
    hmap = homogeneity_map(helmholtz_grid)
    mask = homogeneous_mask(hmap, 100.0)
    iy, iz = center_index(helmholtz_grid.region)
    assert mask[iy, iz]
    assert mask.sum() < 10  # the exact-100 set is tiny on a real field


def test_mask_below_minimum_is_all_true():
    bz = np.array([[1.0, 1.01], [0.99, 1.0]]) * 1e-3
    hmap = homogeneity_map(_grid_from_bz(bz, z_min=-1, z_max=1, y_min=-1, y_max=1))
    lo = float(hmap.h_values.min())
    mask = homogeneous_mask(hmap, lo - 0.5)
    assert mask.all()


def test_helmholtz_97_mask_is_centered_and_symmetric(helmholtz_grid):
    hmap = homogeneity_map(helmholtz_grid)
    mask = homogeneous_mask(hmap, 97.0)
    iy, iz = center_index(helmholtz_grid.region)
    assert mask[iy, iz]
    assert np.array_equal(mask, mask[::-1, :])  # y-mirror symmetry, exact
    # connected around the center along both lattice directions
    row = mask[iy, :]
    col = mask[:, iz]
    assert row[iz - 5 : iz + 6].all()
    assert col[iy - 5 : iy + 6].all()


def test_mask_monotone_in_threshold(helmholtz_grid):
    hmap = homogeneity_map(helmholtz_grid)
    rng = random.Random(9)
    for _ in range(20):
        t1 = rng.uniform(0.5, 99.5)
        t2 = rng.uniform(t1, 100.0)
        m1 = homogeneous_mask(hmap, t1)
        m2 = homogeneous_mask(hmap, t2)
        assert not np.any(m2 & ~m1)  # m2 subset of m1


def test_square_all_true_3x3():
    sq = largest_inscribed_square(np.ones((3, 3), dtype=bool))
    assert (sq.side_cells, sq.iy0, sq.iz0) == (3, 0, 0)


def test_square_empty_mask():
    assert largest_inscribed_square(np.zeros((4, 6), dtype=bool)) is None


def test_square_tie_break_prefers_smallest_indices():
    mask = np.zeros((3, 7), dtype=bool)
    mask[0:2, 0:2] = True
    mask[1:3, 5:7] = True
    sq = largest_inscribed_square(mask)
    assert (sq.side_cells, sq.iy0, sq.iz0) == (2, 0, 0)


def test_square_matches_brute_force_random():
    rng = np.random.default_rng(20240817)
    for _ in range(50):
        mask = rng.random((8, 8)) < rng.uniform(0.2, 0.9)
        sq = largest_inscribed_square(mask)
        want = brute_force_max_square(mask)
        if want is None:
            assert sq is None
        else:
            assert (sq.side_cells, sq.iy0, sq.iz0) == want


def test_square_matches_brute_force_all_shapes():
    rng = np.random.default_rng(7)
    for ny in range(1, 13):
        for nz in range(1, 13):
            mask = rng.random((ny, nz)) < 0.65
            sq = largest_inscribed_square(mask)
            want = brute_force_max_square(mask)
            if want is None:
                assert sq is None
            else:
                assert (sq.side_cells, sq.iy0, sq.iz0) == want


@st.composite
def _masks(draw, max_side=10):
    ny = draw(st.integers(1, max_side))
    nz = draw(st.integers(1, max_side))
    bits = draw(st.lists(st.booleans(), min_size=ny * nz, max_size=ny * nz))
    return np.array(bits, dtype=bool).reshape(ny, nz)


@settings(max_examples=300, deadline=None)
@given(mask=_masks())
def test_square_matches_brute_force_property(mask):
    sq = largest_inscribed_square(mask)
    want = brute_force_max_square(mask)
    if want is None:
        assert sq is None
    else:
        assert (sq.side_cells, sq.iy0, sq.iz0) == want


@settings(max_examples=200, deadline=None)
@given(mask=_masks(max_side=12))
def test_rle_round_trip_property(mask):
    ny, nz = mask.shape
    assert np.array_equal(rle_to_mask(mask_to_rle(mask), ny, nz), mask)


def test_square_physical_coordinates():
    region = SimulationRegion(-1.0, 1.0, -1.0, 1.0, 5, 5)  # dy = dz = 0.5
    mask = np.zeros((5, 5), dtype=bool)
    mask[1:4, 1:4] = True
    sq = largest_inscribed_square(mask, region)
    assert sq.side_cells == 3
    assert sq.side_m == pytest.approx(1.5)
    assert sq.y0 == pytest.approx(-0.75)  # cell 1 center -0.5, minus half a cell
    assert sq.z0 == pytest.approx(-0.75)
    assert sq.y_extent == (pytest.approx(-0.75), pytest.approx(0.75))


def test_square_anisotropic_grid_falls_back_to_cells():
    region = SimulationRegion(-1.0, 1.0, -2.0, 2.0, 5, 5)  # dy=0.5, dz=1.0
    mask = np.ones((5, 5), dtype=bool)
    with pytest.warns(UserWarning, match="not square"):
        sq = largest_inscribed_square(mask, region)
    assert sq.side_cells == 5
    assert sq.side_m == pytest.approx(5 * 0.5)  # finer axis


def test_volume_centered_square_cylinder():
    side = 0.13029
    report = experimentation_volume((-side / 2, side / 2), (-side / 2, side / 2))
    assert report.shape == "cylinder"
    assert report.height == pytest.approx(0.13029, abs=1e-15)
    assert round(report.outer_radius, 5) == 0.06514
    assert round(report.volume, 5) == 0.00174
    assert report.volume == pytest.approx(math.pi * report.outer_radius**2 * report.height, rel=1e-12)
    assert report.centroid_z == 0.0


def test_volume_annulus():
    report = experimentation_volume((0.1, 0.2), (0.0, 0.1))
    assert report.shape == "annulus"
    assert report.volume == pytest.approx(math.pi * (0.2**2 - 0.1**2) * 0.1, rel=1e-12)
    assert report.inner_radius == pytest.approx(0.1)
    assert report.outer_radius == pytest.approx(0.2)
    assert report.centroid_z == pytest.approx(0.05)


def test_volume_axis_inside_span_is_cylinder():
    report = experimentation_volume((-0.05, 0.15), (0.0, 0.2))
    assert report.shape == "cylinder"
    assert report.outer_radius == pytest.approx(0.15)
    assert report.inner_radius == 0.0


def test_volume_self_consistency_randomized():
    rng = random.Random(3)
    for _ in range(100):
        a = rng.uniform(-1.0, 1.0)
        b = a + rng.uniform(0.01, 1.0)
        z1 = rng.uniform(-1.0, 1.0)
        z2 = z1 + rng.uniform(0.01, 1.0)
        rep = experimentation_volume((a, b), (z1, z2))
        want = math.pi * (rep.outer_radius**2 - rep.inner_radius**2) * rep.height
        assert rep.volume == pytest.approx(want, rel=1e-12)


def test_volume_requires_square():
    with pytest.raises(ValueError):
        square_volume_report(None)
    with pytest.raises(ValueError):
        experimentation_volume((0.2, 0.1), (0.0, 0.1))


def test_inscribed_square_symmetric_for_symmetric_mask(helmholtz_grid):
    hmap = homogeneity_map(helmholtz_grid)
    mask = homogeneous_mask(hmap, 97.0)
    sq = largest_inscribed_square(mask, helmholtz_grid.region)
    lo, hi = sq.y_extent
    assert lo == pytest.approx(-hi, rel=1e-12)


def test_rle_round_trip():
    rng = np.random.default_rng(11)
    for _ in range(25):
        ny, nz = rng.integers(1, 15, size=2)
        mask = rng.random((ny, nz)) < 0.5
        rle = mask_to_rle(mask)
        back = rle_to_mask(rle, ny, nz)
        assert np.array_equal(mask, back)


def test_rle_rejects_bad_runs():
    with pytest.raises(ValueError):
        rle_to_mask(((0, 5),), 2, 4)  # wrong row count
    with pytest.raises(ValueError):
        rle_to_mask((((2, 5),), ()), 2, 4)  # run exceeds width
