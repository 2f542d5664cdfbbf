#!/usr/bin/env python3
"""Build a synthetic stand and scan it, record by record.

    python3 demos/03_simulate_forest.py

Writes the scan and its ground truth to demos/output/ so the later demos
(and the command line tools) can pick them up.
"""

from pathlib import Path

import numpy as np

from treescan import (ForestConfig, ScannerConfig, generate_forest,
                      ray_cylinder_intersection, simulate_scan)
from treescan.io import write_forest_json, write_scan_csv

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# ---------------------------------------------------------------------------
# 1. Planting.
#
# Trees go on a rectangular grid clipped to the square plot, with random
# vacancies; sizes come from truncated normal distributions.  Everything
# downstream of the seed is deterministic.

forest = generate_forest(ForestConfig(extent_half_side_m=5.0,
                                      vacancy_probability=0.25,
                                      scanner_clearance_m=0.8,
                                      seed=3))
dbh = np.array([t.dbh_m for t in forest.trees])
height = np.array([t.height_m for t in forest.trees])
print(f"planted {len(forest.trees)} trees on a 10 m square plot")
print(f"dbh    {100 * dbh.mean():.2f} +/- {100 * dbh.std():.2f} cm"
      f"  (range {100 * dbh.min():.1f} to {100 * dbh.max():.1f})")
print(f"height {height.mean():.2f} +/- {height.std():.2f} m")
print(f"ground plane normal {np.round(forest.ground.normal, 3)},"
      f" scanner head {forest.scanner_height_m} m above it")

# Same seed, same stand; the next seed is a different draw.
again = generate_forest(ForestConfig(extent_half_side_m=5.0,
                                     vacancy_probability=0.25,
                                     scanner_clearance_m=0.8,
                                     seed=3))
assert [t.position_x_m for t in again.trees] == [t.position_x_m for t in forest.trees]

# ---------------------------------------------------------------------------
# 2. One ray against one stem.
#
# The scan itself is nothing but this primitive applied per beam.  A level
# ray from the origin toward a 12 cm stem centered 5 m out hits the near
# wall at 5 - 0.06 = 4.94 m.

t = ray_cylinder_intersection(origin=(0.0, 0.0, 0.0), direction=(1.0, 0.0, 0.0),
                              axis_x=5.0, axis_y=0.0, radius=0.06,
                              z_base=-2.0, z_top=6.0)
print()
print(f"head-on hit at t = {t:.2f} m")

# A ray that misses sideways returns None; a tangent graze still counts.
assert ray_cylinder_intersection((0, 0, 0), (0, 1, 0), 5.0, 0.0, 0.06, -2, 6) is None
graze = ray_cylinder_intersection((0, 0, 0), (1.0, 0.06 / 5.0, 0.0),
                                  5.0, 0.0, 0.06 * np.sqrt(1 + (0.06 / 5) ** 2),
                                  -2, 6)
print(f"grazing hit at t = {graze:.4f}")

# ---------------------------------------------------------------------------
# 3. The full sweep.
#
# A coarse angular grid keeps this quick; survey scans use a far finer
# vertical step.  Ranges carry Gaussian noise (sigma 1.2 cm by default),
# and a small outlier_rate injects the premature returns that airborne
# dust produces on a real instrument.

scanner = ScannerConfig(vertical_step_deg=0.5,
                        rotation_speed_deg_per_s=2.0,
                        elevation_min_deg=-88.0, elevation_max_deg=88.0)
scan = simulate_scan(forest, scanner, seed=1003, outlier_rate=0.001)
print()
print(f"{scanner.n_lines} lines x {scanner.n_beams} beams ->"
      f" {len(scan)} returns ({len(scan) / (scanner.n_lines * scanner.n_beams):.0%}"
      f" of beams hit something)")

# Where the returns land, by surface height above the ground plane.
z = scan.range_m * np.sin(np.radians(scan.elevation_deg))
above = z - (-forest.scanner_height_m)
print(f"returns below 0.5 m over ground: {int((above < 0.5).sum())} (mostly floor)")
print(f"returns above breast height:     {int((above > 1.3).sum())}")

# ---------------------------------------------------------------------------
# 4. Persist the pair.
#
# The truth file is what evaluation scores against; the scan file is the
# only thing the measurement chain gets to see.

write_scan_csv(scan, OUT / "stand.scan.csv")
write_forest_json(forest, OUT / "stand.truth.json")
print()
print(f"wrote {OUT / 'stand.scan.csv'}")
print(f"wrote {OUT / 'stand.truth.json'}")
