#!/usr/bin/env python3
"""Regenerate the test fixtures from the live API surface.

Run from the repo root after any wire-format change:
    python3 frontend/scripts/make_fixtures.py
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from coilfield.coils import default_region, make_preset
from coilfield.persistence import ProjectDocument, save_project
from coilfield.service import create_app

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def main() -> None:
    system = make_preset("helmholtz", 0.5, 100, 1.0)
    doc = ProjectDocument(label="helmholtz", system=system, region=default_region(system))
    body = json.loads(save_project(doc))
    body["region"]["ny"] = body["region"]["nz"] = 41

    with TestClient(create_app(frontend_dir="/nonexistent")) as client:
        results = client.post("/api/v1/simulate", json=body).json()
        mask97 = client.post(
            "/api/v1/homogeneity", json={"results": results, "threshold_percent": 97.0}
        ).json()
        mask98 = client.post(
            "/api/v1/homogeneity", json={"results": results, "threshold_percent": 98.0}
        ).json()
        presets = client.get("/api/v1/presets").json()

    OUT.mkdir(exist_ok=True)
    (OUT / "helmholtz_results.json").write_text(json.dumps(results))
    (OUT / "homogeneity_97.json").write_text(json.dumps(mask97))
    (OUT / "homogeneity_98.json").write_text(json.dumps(mask98))
    (OUT / "presets.json").write_text(json.dumps(presets))
    print("fixtures written to", OUT)


if __name__ == "__main__":
    main()
