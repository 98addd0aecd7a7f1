#!/usr/bin/env python3
"""Regenerate the committed fixture corpus.

Writes portrait PNGs and their ground-truth landmark files under
fixtures/faces/, the no-face image under fixtures/, and the canned
face-mesh files consumed by the frontend adapter tests under
frontend/test/data/.  Output is deterministic; the test suite checks the
committed files against a fresh regeneration.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tools"))

from facegen import FACES, canned_mesh, landmark_doc, render_face, render_no_face, shrunk_mesh

sys.path.insert(0, str(ROOT / "src"))
from scleraqc.image_io import save_png  # noqa: E402


def main() -> None:
    faces_dir = ROOT / "fixtures" / "faces"
    faces_dir.mkdir(parents=True, exist_ok=True)
    for params in FACES:
        save_png(faces_dir / f"{params.name}.png", render_face(params))
        doc = landmark_doc(params)
        (faces_dir / f"{params.name}.landmarks.json").write_text(json.dumps(doc, indent=2) + "\n")
        print(f"wrote {params.name}")

    save_png(ROOT / "fixtures" / "no_face.png", render_no_face())
    print("wrote no_face")

    index_map = json.loads((ROOT / "frontend" / "data" / "facemesh_index_map.json").read_text())
    mesh_dir = ROOT / "frontend" / "test" / "data"
    mesh_dir.mkdir(parents=True, exist_ok=True)
    portrait = FACES[0]
    mesh = canned_mesh(portrait, index_map)
    (mesh_dir / "mesh_portrait.json").write_text(
        json.dumps({"faces": [{"landmarks": mesh}]}, indent=None) + "\n"
    )
    (mesh_dir / "mesh_none.json").write_text(json.dumps({"faces": []}) + "\n")
    small = shrunk_mesh(mesh, 0.22, 0.02, 0.72)
    (mesh_dir / "mesh_two_faces.json").write_text(
        json.dumps({"faces": [{"landmarks": small}, {"landmarks": mesh}]}, indent=None) + "\n"
    )
    print("wrote canned meshes")


if __name__ == "__main__":
    main()
