"""Systematic cross-section slicing of a two-epoch stack.

Builds a stepped surface with one cavity exposed between the epochs,
generates the 4 m x 4 m slice grid (1 m thick bands), and renders the
band crossing the cavity to PPM, PNG, and SVG.

Run from the repo root:  python demos/03_slice_gallery.py
"""

import tempfile
from pathlib import Path

from voidscan.cloudio import Aabb, bounding_box, parse_epoch
from voidscan.imaging import to_png_bytes, to_ppm_bytes
from voidscan.slicing import (
    RenderStyle,
    SliceAxis,
    extract_profile,
    generate_slice_planes,
    render_profile,
    render_profile_svg,
)
from voidscan.surface import GridSpec, SurfaceRule, build_stack, rasterize_dsm
from voidscan.synthetic import (
    BaseSurface,
    Mound,
    SceneSpec,
    SlabStep,
    VoidShape,
    VoidSpec,
    generate_scene,
)

scene = SceneSpec(
    footprint=Aabb.from_bounds(0, 0, 0, 32, 32, 15),
    epochs=(parse_epoch("2025-03-01T10:00:00Z"), parse_epoch("2025-03-02T10:00:00Z")),
    base=BaseSurface(ground=1.0, mound=Mound((16, 16), 26, 5.0),
                     slabs=(SlabStep((6, 6, 26, 26), 6.0), SlabStep((10, 10, 22, 22), 7.1))),
    voids=(VoidSpec("cavity", VoidShape.BOX, (16.0, 14.0), (5.0, 4.0), 1.6, reveal_epoch=1),),
    noise_sigma=0.01, point_density=160.0, seed=31)

clouds, _ = generate_scene(scene)
grid = GridSpec.from_region(bounding_box(clouds[0]), cell_size=0.25)
layers = [rasterize_dsm(c, grid, SurfaceRule.MAX_Z) for c in clouds]
stack = build_stack(layers)

region = Aabb.from_bounds(0, 0, 0, 32, 32, 15)
planes = generate_slice_planes(region, spacing=4.0, thickness=1.0)
n_x = sum(1 for p in planes if p.axis is SliceAxis.X_NORMAL)
print(f"slice grid: {n_x} X-normal + {len(planes) - n_x} Y-normal bands, "
      f"{n_x * (len(planes) - n_x)} grid crossings")

# pick the XZ band (Y-normal) passing through the cavity at y = 14
band = min((p for p in planes if p.axis is SliceAxis.Y_NORMAL),
           key=lambda p: abs(p.offset - 14.0))
profile = extract_profile(stack, band)
print(f"band at y = {band.offset} m, {len(profile.stations)} stations, "
      f"{len(profile.layers)} epoch layers")

out = Path(tempfile.mkdtemp(prefix="voidscan_slices_"))
style = RenderStyle(px_per_meter=12, vertical_exaggeration=2.0)
img = render_profile(profile, style)
(out / "cavity_xz.ppm").write_bytes(to_ppm_bytes(img))
(out / "cavity_xz.png").write_bytes(to_png_bytes(img))
(out / "cavity_xz.svg").write_text(render_profile_svg(profile, style))
print(f"rendered {img.shape[1]}x{img.shape[0]} px views into {out}")

# the gap between the two polylines at x ~ 16 is the exposed cavity
k = len(profile.stations) // 2
e0 = profile.layers[0].elevation[k]
e1 = profile.layers[1].elevation[k]
print(f"at mid-station: epoch-1 surface {e0:.2f} m, epoch-2 surface {e1:.2f} m "
      f"(gap {e0 - e1:.2f} m)")
