"""Coaxial circular-coil field simulation and homogeneity characterization."""

__version__ = "0.1.0"

from .coils import (
    Coil,
    CoilSystem,
    PRESET_NAMES,
    SimulationRegion,
    default_region,
    make_preset,
    validate_system,
)
from .electrical import ElectricalReport, WireSpec, awg_diameter, electrical_report, select_gauge
from .elliptic import complete_elliptic_e, complete_elliptic_k, complete_elliptic_ke
from .field import (
    FieldGrid,
    FieldSample,
    MU_0,
    ProgressEvent,
    WireProximityError,
    estimate_remaining,
    field_at_point,
    field_single_coil,
    simulate_grid,
)
from .homogeneity import (
    HomogeneityMap,
    InscribedSquare,
    VolumeReport,
    ZeroReferenceError,
    experimentation_volume,
    homogeneity_map,
    homogeneous_mask,
    largest_inscribed_square,
    square_volume_report,
)
from .persistence import (
    ProjectDocument,
    ResultsDocument,
    import_measurements,
    load_project,
    load_results,
    save_project,
    save_results,
)
from .render import render_heatmap, render_homogeneity

__all__ = [
    "Coil",
    "CoilSystem",
    "ElectricalReport",
    "FieldGrid",
    "FieldSample",
    "HomogeneityMap",
    "InscribedSquare",
    "MU_0",
    "PRESET_NAMES",
    "ProgressEvent",
    "ProjectDocument",
    "ResultsDocument",
    "SimulationRegion",
    "VolumeReport",
    "WireProximityError",
    "WireSpec",
    "ZeroReferenceError",
    "awg_diameter",
    "complete_elliptic_e",
    "complete_elliptic_k",
    "complete_elliptic_ke",
    "default_region",
    "electrical_report",
    "estimate_remaining",
    "experimentation_volume",
    "field_at_point",
    "field_single_coil",
    "homogeneity_map",
    "homogeneous_mask",
    "import_measurements",
    "largest_inscribed_square",
    "load_project",
    "load_results",
    "make_preset",
    "render_heatmap",
    "render_homogeneity",
    "save_project",
    "save_results",
    "select_gauge",
    "simulate_grid",
    "square_volume_report",
    "validate_system",
    "__version__",
]
