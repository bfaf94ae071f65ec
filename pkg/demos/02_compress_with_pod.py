"""Compress an ensemble of simulations with proper orthogonal decomposition.

Generates a handful of short runs at random reproduction numbers, builds
the POD basis, and shows how few modes carry essentially all the variance,
plus what projecting to 15 coefficients does to a snapshot.
"""

from pathlib import Path

import numpy as np

from ganrom import pod, seirs

out = Path(__file__).parent / "demo_out"
out.mkdir(exist_ok=True)

grid = seirs.Grid()
transport = seirs.TransportParams()
rng = np.random.default_rng(11)

print("Running a 6-member mini ensemble (300 steps each)...")
runs = []
for i in range(6):
    r0 = rng.uniform(0, 20, size=2)
    epi = seirs.EpiParams(r0_home=r0[0], r0_mobile=r0[1])
    initial = seirs.make_initial_field(grid)
    runs.append(seirs.run_simulation(grid, epi, transport, initial, 4000.0, 300))
    print(f"  member {i}: R0 = ({r0[0]:.1f}, {r0[1]:.1f})")

snapshots = np.concatenate([r.fields[::2] for r in runs], axis=0)
print(f"\nSnapshot pool: {snapshots.shape[0]} states of {snapshots.shape[1]} values")

basis = pod.build_basis(snapshots, n_pod=15)
for n in (1, 5, 10, 15):
    print(f"  first {n:2d} modes capture {100 * basis.captured_variance(n):.5f}% of variance")

u = runs[0].fields[250]
alpha = basis.project(u)
back = basis.reconstruct(alpha)
err = np.linalg.norm(back - u) / np.linalg.norm(u)
print(f"\nOne snapshot: 800 values -> {len(alpha)} coefficients -> back, "
      f"relative L2 error {err:.2e}")

spec = pod.build_normalization([basis.project(r.fields) for r in runs],
                               [(r.epi.r0_home, r.epi.r0_mobile) for r in runs],
                               u_min=min(float(r.fields.min()) for r in runs),
                               u_max=max(float(r.fields.max()) for r in runs))
w = spec.normalize_alpha(alpha)
print(f"Normalized coefficients live in [-1, 1]: min {w.min():.2f}, max {w.max():.2f}")

pod.save_rom(out / "demo_rom.npz", basis, spec, meta={"demo": True})
print(f"\nWrote {out / 'demo_rom.npz'}")
