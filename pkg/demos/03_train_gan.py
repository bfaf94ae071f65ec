"""Train the window generator on compressed trajectories (miniature scale).

Builds a small ensemble, compresses it, slices the coefficient
trajectories into overlapping 10-level windows, and trains the
generator/discriminator pair for a short budget. The full-scale version of
this script is one CLI call:

    ganrom generate-ensemble --config config.json --out-dir work/ensemble
    ganrom train --config config.json --ensemble work/ensemble/manifest.json \
        --out-dir work/train
"""

from pathlib import Path

import numpy as np

from ganrom import pipeline
from ganrom.config import ExperimentConfig
from ganrom.gan import GanConfig

out = Path(__file__).parent / "demo_out"
out.mkdir(exist_ok=True)

cfg = ExperimentConfig()
cfg.sim.n_steps = 300
cfg.ensemble.size = 6
cfg.ensemble.n_test = 1
cfg.ensemble.seed = 5
cfg.pod.n_modes = 8
cfg.pod.offset_stride = 4
cfg.gan = GanConfig(latent_dim=16, window=10, gen_hidden=(48, 96),
                    disc_hidden=(96, 48), epochs=150, batch_size=32, seed=1)

print("Generating the mini ensemble...")
pipeline.generate_ensemble(cfg, out / "ensemble", threads=1)

print("Building the POD basis and training the GAN (150 epochs)...")
arts = pipeline.train_artifacts(cfg, out / "ensemble" / "manifest.json",
                                out / "train")
print(f"  {arts['n_windows']} training windows")

history = np.loadtxt(arts["history"], delimiter=",", skiprows=1)
for row in history[:: max(1, len(history) // 6)]:
    print(f"  epoch {int(row[0]):4d}: discriminator loss {row[1]:.3f}, "
          f"generator loss {row[2]:.3f}")

model, basis, spec = pipeline.load_artifacts(arts["gan"], arts["rom"])
z = np.random.default_rng(0).standard_normal((3, model.latent_dim))
windows = model.generate_windows(z)
print(f"\nThree generated windows, shape {windows.shape}; "
      f"entries span [{windows.min():.2f}, {windows.max():.2f}]")
mu = spec.denormalize_mu(windows[:, 0, model.n_alpha:])
print("Reproduction numbers the generator attached to them:")
for pair in mu:
    print(f"  R0 = ({pair[0]:5.2f}, {pair[1]:5.2f})")
print(f"\nArtifacts in {out / 'train'}")
