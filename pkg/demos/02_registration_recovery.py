"""Rigid registration on misaligned flights.

Builds a blocky synthetic rubble surface, knocks a copy of it off-pose
(rotation + translation + per-point jitter), and recovers the pose two
ways: closed-form fit on tie points, then ICP refinement. Prints the
residual misalignment metrics the report would carry.

Run from the repo root:  python demos/02_registration_recovery.py
"""

import numpy as np

from voidscan.cloudio import PointCloud
from voidscan.registration import (
    CorrespondenceSet,
    IcpParams,
    RigidTransform,
    alignment_error,
    fit_rigid,
    icp_refine,
)
from voidscan.synthetic import _rng, perturb_epoch

AREA = 50.0


def rubble_surface(seed: int, n: int = 80_000) -> PointCloud:
    rng = _rng(seed, 999)
    x = rng.random(n) * AREA
    y = rng.random(n) * AREA
    z = 0.02 * x + 0.01 * y
    for _ in range(40):  # slab blocks give ICP sharp features to lock onto
        cx, cy = rng.random(2) * AREA
        w, h = rng.random(2) * 7.0 + 3.0
        inside = (np.abs(x - cx) < w / 2) & (np.abs(y - cy) < h / 2)
        z = np.where(inside, z + rng.random() * 2.0 + 0.2, z)
    return PointCloud(np.column_stack([x, y, z]))


def rotation_about(axis, deg):
    axis = np.asarray(axis, float)
    axis /= np.linalg.norm(axis)
    a = np.radians(deg)
    k = np.array([[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]])
    return np.eye(3) + np.sin(a) * k + (1 - np.cos(a)) * (k @ k)


cloud = rubble_surface(seed=1)
true_pose = RigidTransform(rotation_about([0.2, -0.1, 1.0], 3.0), [0.7, -0.4, 0.1])
flight2 = perturb_epoch(cloud, true_pose, jitter_sigma=0.01, seed=2)
print(f"surface: {len(cloud):,} points over {AREA:.0f} m; "
      f"true offset {np.linalg.norm(true_pose.translation):.2f} m, 3.0 deg")

mean, rms = alignment_error(flight2, cloud, max_pair_distance=2.0)
print(f"before registration: mean NN distance {mean:.3f} m (rms {rms:.3f})")

# Step 1: closed-form fit on six hand-picked tie points (with pick error).
rng = np.random.default_rng(5)
picks = cloud.points[rng.choice(len(cloud), 6, replace=False)]
ties = CorrespondenceSet(true_pose.apply(picks) + rng.normal(0, 0.05, picks.shape), picks)
coarse = fit_rigid(ties)
print(f"tie-point fit: translation error "
      f"{np.linalg.norm(coarse.translation - true_pose.inverse().translation):.3f} m")

# Step 2: ICP refinement from the coarse pose.
report = icp_refine(flight2, cloud, IcpParams(max_pair_distance=0.5, initial=coarse))
est = report.transform
t_err = np.linalg.norm(est.translation - true_pose.inverse().translation)
r_err = est.compose(true_pose).rotation_angle_deg()
print(f"after ICP ({report.iterations} iterations, converged={report.converged}):")
print(f"  translation error {t_err * 100:.2f} cm, rotation error {r_err:.4f} deg")
print(f"  residual mean NN distance {report.mean_nn_distance:.4f} m "
      f"(rms {report.rms_nn_distance:.4f}) over {report.accepted_pairs:,} pairs")
print(f"  objective history (mean sq. m): "
      + ", ".join(f"{v:.2e}" for v in report.objective_history[:6]) + ", ...")
