"""Command-line front end: simulate, analyze, render, and inspect.

Exit codes: 0 success, 1 validation failure (including bad arguments),
2 I/O failure, 3 numeric failure (e.g. zero reference field).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import __version__
from .coils import UnknownPresetError, default_region, make_preset, preset_catalog
from .electrical import OverCapacityError, electrical_report
from .field import ProgressEvent, WireProximityError, estimate_remaining, simulate_grid
from .homogeneity import (
    ZeroReferenceError,
    homogeneity_map,
    homogeneous_mask,
    largest_inscribed_square,
    mask_to_rle,
    square_volume_report,
)
from .persistence import (
    HomogeneitySummary,
    PersistenceError,
    ProjectDocument,
    ResultsDocument,
    load_project,
    load_results,
    save_project,
    save_results,
)
from .render import RenderError, render_heatmap, render_homogeneity

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2
EXIT_NUMERIC = 3


class CliValidationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # Bad flags are validation failures (exit 1); argparse's default 2 is
    # reserved for I/O here.
    def error(self, message):
        raise CliValidationError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="coilfield", description="Coaxial coil-system field simulator")
    parser.add_argument("--version", action="version", version=f"coilfield {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("presets", help="inspect the preset catalog")
    p.add_argument("action", choices=["list"])

    p = sub.add_parser("preset", help="materialize a preset into a project file")
    p.add_argument("--name", required=True)
    p.add_argument("--radius", type=float, required=True, help="base coil radius in meters")
    p.add_argument("--turns", type=int, required=True)
    p.add_argument("--current", type=float, required=True, help="coil current in amperes")
    p.add_argument("--out", required=True, help="output .coilproj path")

    p = sub.add_parser("simulate", help="run a project and write results")
    p.add_argument("--project", required=True, help="input .coilproj path")
    p.add_argument("--out", required=True, help="output .coilres path")
    p.add_argument("--progress", action="store_true", help="print one progress line per row")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("homogeneity", help="work region, inscribed square, volume")
    p.add_argument("--results", required=True, help="input .coilres path")
    p.add_argument("--threshold", type=float, required=True, help="homogeneity percentage in (0, 100]")
    p.add_argument("--out", help="write results with the homogeneity report embedded")
    p.add_argument("--svg", help="write the region plot")

    p = sub.add_parser("render", help="field heatmap as SVG")
    p.add_argument("--results", required=True)
    p.add_argument("--svg", required=True)
    p.add_argument("--bmin", type=float, help="color bar lower limit, mT")
    p.add_argument("--bmax", type=float, help="color bar upper limit, mT")
    p.add_argument("--colormap", default="viridis")
    p.add_argument("--show-coils", action="store_true")

    p = sub.add_parser("probe", help="field value at the lattice point nearest (y, z)")
    p.add_argument("--results", required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--z", type=float, required=True)

    p = sub.add_parser("axis-profile", help="extract |B| along the symmetry axis (y = 0)")
    p.add_argument("--results", required=True)
    p.add_argument("--out", required=True, help="output CSV path")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def _read(path: str) -> bytes:
    try:
        with open(path, "rb") as f:
            return f.read()
    except OSError as exc:
        raise _IoFailure(f"cannot read {path}: {exc}") from exc


def _write(path: str, data: bytes) -> None:
    try:
        with open(path, "wb") as f:
            f.write(data)
    except OSError as exc:
        raise _IoFailure(f"cannot write {path}: {exc}") from exc


class _IoFailure(Exception):
    pass


def _cmd_presets(args) -> int:
    for entry in preset_catalog():
        print(entry["name"])
    return EXIT_OK


def _cmd_preset(args) -> int:
    system = make_preset(args.name, args.radius, args.turns, args.current)
    doc = ProjectDocument(label=args.name, system=system, region=default_region(system))
    _write(args.out, save_project(doc))
    print(f"wrote {args.out} ({len(system.coils)} coils)")
    return EXIT_OK


def _cmd_simulate(args) -> int:
    doc = load_project(_read(args.project))

    sink = None
    if args.progress:
        def sink(event: ProgressEvent) -> None:
            eta = estimate_remaining(event.elapsed, event.done, event.total)
            print(f"row {event.done}/{event.total} eta {eta:.1f}s")

    grid = simulate_grid(doc.system, doc.region, progress_sink=sink, workers=args.workers)
    results = ResultsDocument(project=doc, grid=grid, electrical=electrical_report(doc.system))
    _write(args.out, save_results(results))
    print(f"wrote {args.out} ({doc.region.ny}x{doc.region.nz} samples)")
    return EXIT_OK


def _homogeneity_summary(results: ResultsDocument, threshold: float):
    hmap = homogeneity_map(results.grid, signed=results.project.signed_convention)
    mask = homogeneous_mask(hmap, threshold)
    square = largest_inscribed_square(mask, results.grid.region)
    volume = square_volume_report(square) if square is not None else None
    note = None if square is not None else "mask is empty: no square to inscribe"
    summary = HomogeneitySummary(
        threshold_percent=threshold,
        signed_convention=results.project.signed_convention,
        b_center_t=hmap.b_center,
        square=square,
        volume=volume,
        mask_rle=mask_to_rle(mask),
        note=note,
    )
    return hmap, mask, square, volume, summary


def _cmd_homogeneity(args) -> int:
    if not 0.0 < args.threshold <= 100.0:
        raise CliValidationError("--threshold must be in (0, 100]")
    results = load_results(_read(args.results))
    hmap, mask, square, volume, summary = _homogeneity_summary(results, args.threshold)
    if square is None:
        print(f"no cell reaches {args.threshold:g}% homogeneity; nothing to inscribe")
    else:
        print(
            f"square: side {square.side_m:.6g} m at y0={square.y0:.6g} m z0={square.z0:.6g} m "
            f"({square.side_cells} cells)"
        )
        print(
            f"volume: {volume.shape} height {volume.height:.6g} m outer radius "
            f"{volume.outer_radius:.6g} m inner radius {volume.inner_radius:.6g} m "
            f"volume {volume.volume:.6g} m^3 centroid z {volume.centroid_z:.6g} m"
        )
    if args.out:
        updated = ResultsDocument(
            project=results.project,
            grid=results.grid,
            electrical=results.electrical,
            homogeneity_summary=summary,
        )
        _write(args.out, save_results(updated))
    if args.svg:
        _write(args.svg, render_homogeneity(hmap, mask, square))
    return EXIT_OK


def _cmd_render(args) -> int:
    results = load_results(_read(args.results))
    svg = render_heatmap(
        results.grid,
        bmin_mt=args.bmin,
        bmax_mt=args.bmax,
        colormap=args.colormap,
        show_coils=args.show_coils,
        system=results.project.system,
    )
    _write(args.svg, svg)
    print(f"wrote {args.svg}")
    return EXIT_OK


def _cmd_probe(args) -> int:
    results = load_results(_read(args.results))
    grid = results.grid
    iy, iz = grid.nearest_index(args.y, args.z)
    sample = grid.sample(iy, iz)
    y = grid.region.y_at(iy)
    z = grid.region.z_at(iz)
    print(
        f"nearest sample ({iy}, {iz}) at y={y:.6e} m z={z:.6e} m: "
        f"B_y={sample.b_rho:.6e} T B_z={sample.b_z:.6e} T "
        f"|B| = {sample.b_mag:.6e} T ({sample.b_mag * 1e3:.4g} mT)"
    )
    return EXIT_OK


def _cmd_axis_profile(args) -> int:
    results = load_results(_read(args.results))
    grid = results.grid
    iy, _ = grid.nearest_index(0.0, grid.region.z_min)
    zs = grid.z_coords()
    lines = ["z_m,B_rho_T,B_z_T,B_mag_T"]
    b_mag = grid.b_mag
    for iz in range(grid.region.nz):
        lines.append(
            f"{zs[iz]:.8e},{grid.b_y[iy, iz]:.8e},{grid.b_z[iy, iz]:.8e},{b_mag[iy, iz]:.8e}"
        )
    _write(args.out, ("\n".join(lines) + "\n").encode("utf-8"))
    print(f"wrote {args.out} (row y={grid.region.y_at(iy):.6e} m)")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def run(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        handlers = {
            "presets": _cmd_presets,
            "preset": _cmd_preset,
            "simulate": _cmd_simulate,
            "homogeneity": _cmd_homogeneity,
            "render": _cmd_render,
            "probe": _cmd_probe,
            "axis-profile": _cmd_axis_profile,
            "serve": _cmd_serve,
        }
        return handlers[args.command](args)
    except CliValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ZeroReferenceError, WireProximityError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except _IoFailure as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (UnknownPresetError, PersistenceError, RenderError, OverCapacityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


def entrypoint() -> None:
    sys.exit(run())


if __name__ == "__main__":
    entrypoint()
