"""March the trained generator forward in time as a surrogate model.

Reuses the artifacts from demo 03 (run that first). Nine early time levels
of a held-out simulation start the march; from there every new level comes
from optimising the latent vector so the generator's window matches the
most recent nine levels, then accepting the window's final row. The CLI
equivalent:

    ganrom predict --config config.json --model train/gan.npz \
        --rom train/rom.npz --run ensemble/run_006.npz --out-dir predict
"""

from pathlib import Path

import numpy as np

from ganrom import pipeline, seirs
from ganrom.config import ExperimentConfig
from ganrom.forecast import PredictConfig, rollout

out = Path(__file__).parent / "demo_out"
if not (out / "train" / "gan.npz").exists():
    raise SystemExit("run 03_train_gan.py first")

model, basis, spec = pipeline.load_artifacts(out / "train" / "gan.npz",
                                             out / "train" / "rom.npz")
run = seirs.load_run(out / "ensemble" / "run_006.npz")  # the held-out member
truth = run.fields[::2]
print(f"Held-out run: R0 = ({run.epi.r0_home:.2f}, {run.epi.r0_mobile:.2f}), "
      f"{len(truth)} surrogate levels")

cfg = PredictConfig(max_iters=200)
res = rollout(model, spec, basis.project(truth[:9]),
              np.array([run.epi.r0_home, run.epi.r0_mobile]),
              n_levels=len(truth), cfg=cfg, seed=0)

fields = res.reconstruct(basis)
errs = np.linalg.norm(fields - truth, axis=1) / np.linalg.norm(truth, axis=1)
print(f"\nRollout of {len(truth) - 9} new levels "
      f"({sum(r['iterations'] for r in res.report)} optimiser iterations total)")
print(f"Relative L2 error vs the high-fidelity run: "
      f"mean {errs.mean():.3f}, final level {errs[-1]:.3f}")

grid = seirs.Grid()
ix, iy = grid.region_corner(2)
slot = seirs.flat_index(grid, 0, 2, ix, iy)  # infectious at home, home cell
print("\nInfectious-at-home in the home-region corner cell:")
print("  level   day   surrogate   truth")
for k in range(9, len(truth), max(1, len(truth) // 8)):
    day = 2 * k * 4000.0 / seirs.T_DAY
    print(f"  {k:5d}  {day:5.1f}   {fields[k, slot]:9.2f}   {truth[k, slot]:9.2f}")
