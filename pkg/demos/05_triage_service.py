"""The triage HTTP service and the human labeling loop.

Runs the pipeline on a small synthetic scene, serves the report on an
ephemeral port, walks the API the way the browser viewer does, and
submits a human cause label (which lands in the append-only audit log).

Run from the repo root:  python demos/05_triage_service.py
"""

import json
import tempfile
import threading
import urllib.request
from pathlib import Path

from voidscan.cloudio import Aabb, CloudFormat, parse_epoch, serialize_cloud
from voidscan.pipeline import config_from_dict, run
from voidscan.server import serve
from voidscan.synthetic import (
    BaseSurface,
    Mound,
    SceneSpec,
    VoidShape,
    VoidSpec,
    generate_scene,
)

work = Path(tempfile.mkdtemp(prefix="voidscan_serve_"))
scene = SceneSpec(
    footprint=Aabb.from_bounds(0, 0, 0, 24, 24, 12),
    epochs=(parse_epoch("2025-03-01T10:00:00Z"), parse_epoch("2025-03-02T10:00:00Z")),
    base=BaseSurface(ground=1.0, mound=Mound((12, 12), 20, 4.0)),
    voids=(VoidSpec("a", VoidShape.BOX, (9.0, 9.0), (4.5, 4.0), 1.2, reveal_epoch=1),),
    noise_sigma=0.0, point_density=150.0, seed=9)
clouds, _ = generate_scene(scene)
for k, cloud in enumerate(clouds):
    (work / f"epoch_{k}.ply").write_bytes(serialize_cloud(cloud, CloudFormat.PLY_BINARY_LE))
config = config_from_dict({
    "inputs": [{"path": "epoch_0.ply", "epoch": "2025-03-01T10:00:00Z"},
               {"path": "epoch_1.ply", "epoch": "2025-03-02T10:00:00Z"}],
    "registration": {"mode": "none"},
    "output_dir": "out"}, base_dir=work)
run(config)

httpd = serve(work / "out", "127.0.0.1:0")
threading.Thread(target=httpd.serve_forever, daemon=True).start()
base = f"http://127.0.0.1:{httpd.server_address[1]}"
print(f"serving {work / 'out'} at {base}")


def get(path):
    with urllib.request.urlopen(base + path) as r:
        return json.loads(r.read())


def post(path, body):
    req = urllib.request.Request(base + path, data=json.dumps(body).encode(),
                                 method="POST")
    with urllib.request.urlopen(req) as r:
        return json.loads(r.read())


overlay = get("/api/overlay")
print(f"\nplan view: site bbox {overlay['site_bbox']}, "
      f"{len(overlay['voids'])} void boxes")

voids = get("/api/voids")
for v in voids:
    m = v["metrics"]
    print(f"void {v['id']}: {m['approx_volume_m3']:.2f} m^3, cause {m['cause']} "
          f"({m['cause_source']}), slices {v['slice_ids']}")

sid = voids[0]["slice_ids"][0]
profile = get(f"/api/slices/{sid}/profile")
print(f"\nslice {sid}: {len(profile['stations'])} stations, "
      f"void highlights: {profile['void_hits']}")

# The analyst confirms the cause after checking the cross sections.
updated = post(f"/api/voids/{voids[0]['id']}/label",
               {"cause": "NATURAL", "note": "slab ceiling intact in obliques"})
print(f"\nlabeled void {updated['id']}: cause {updated['metrics']['cause']} "
      f"({updated['metrics']['cause_source']})")
print("audit log:", get("/api/report")["audit_log"])

httpd.shutdown()
print(f"\nlabel persisted to {work / 'out' / 'labels.jsonl'}")
