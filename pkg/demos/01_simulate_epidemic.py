"""Simulate the idealised town and watch the epidemic move through it.

Runs the two-group spatial SEIRS model at one pair of reproduction
numbers, prints conservation and day/night-cycle sanity numbers, and
writes the trajectory (binary snapshot container + CSV extract of one
cell) to demo_out/.
"""

from pathlib import Path

import numpy as np

from ganrom import seirs

out = Path(__file__).parent / "demo_out"
out.mkdir(exist_ok=True)

grid = seirs.Grid()
print("Region layout (top row first):")
print(grid.region_map[::-1])

# A 12-day run is enough to see the daily commuting cycle and the outbreak.
epi = seirs.EpiParams(r0_home=7.7, r0_mobile=17.4)
transport = seirs.TransportParams()
initial = seirs.make_initial_field(grid, population_per_home_cell=2000.0,
                                   exposed_fraction=0.001)
print(f"\nInitial population: {initial.total_population():.0f} "
      f"(all at home in region 2, 0.1% exposed)")

n_steps = 260  # ~12 days at dt = 4000 s
run = seirs.run_simulation(grid, epi, transport, initial, dt=4000.0,
                           n_steps=n_steps)

totals = run.total_population()
print(f"Population drift over {n_steps} steps: "
      f"{abs(totals[-1] - totals[0]) / totals[0]:.2e} (relative)")

mobile = run.fields[:, 400:].sum(axis=1)
days = run.times / seirs.T_DAY
for d in range(0, 12, 3):
    k = np.searchsorted(days, d + 0.45)  # late morning
    print(f"day {d + 0.45:5.2f}: {mobile[k]:7.0f} people out and about")

infectious = run.fields[:, 200:300].sum(axis=1) + run.fields[:, 600:700].sum(axis=1)
print(f"\nInfectious people: start {infectious[0]:.0f}, "
      f"day 12 {infectious[-1]:.0f}")

seirs.save_run(out / "demo_run.npz", run, seed=None)
seirs.export_run_csv(run, out / "demo_run.csv")
print(f"\nWrote {out / 'demo_run.npz'} and a CSV export next to it.")
