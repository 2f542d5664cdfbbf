#!/usr/bin/env python3
"""Walk through the scan geometry: spherical records, point clouds, maps.

Run from anywhere:

    python3 demos/01_spherical_geometry.py

Writes a small panoramic range map to demos/output/.
"""

from pathlib import Path

import numpy as np

from treescan import (ScannerConfig, build_point_cloud,
                      cartesian_to_spherical, coarse_ground_z,
                      extract_square_plot, render_cylindrical_map,
                      simulate_scan, spherical_to_cartesian)
from treescan.io import write_pgm
from treescan.simulate import ForestConfig, generate_forest

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# ---------------------------------------------------------------------------
# 1. A single record: (range, elevation, azimuth) -> (x, y, z) and back.
#
# Elevation is measured up from the horizontal plane of the scanner head,
# azimuth counterclockwise from +x, both in degrees.  A level beam pointing
# down the x axis at 10 m lands at (10, 0, 0).

xyz = spherical_to_cartesian(10.0, 0.0, 0.0)
print("level beam, 10 m:           ", xyz)

# 45 degrees up, swung a quarter turn: y axis, equal parts lateral and up.
xyz = spherical_to_cartesian(1.0, 45.0, 90.0)
print("45 deg up along y:          ", np.round(xyz, 12))

# The inverse recovers the record exactly (up to floating point).
rng, elev, azim = cartesian_to_spherical(spherical_to_cartesian(7.25, -30.0, 211.5))
print("roundtrip of (7.25, -30, 211.5):", (round(rng, 10), round(elev, 10), round(azim, 10)))

# ---------------------------------------------------------------------------
# 2. The sampling lattice.
#
# One scan line is a vertical fan of beams at one azimuth; the head then
# rotates and fires the next line.  The azimuth step is set indirectly by
# rotation speed over scan rate, so slow rotation means dense panoramas.

cfg = ScannerConfig(rotation_speed_deg_per_s=0.25, scan_rate_hz=2.0)
print()
print(f"azimuth step  {cfg.horizontal_step_deg:.3f} deg -> {cfg.n_lines} lines per revolution")
print(f"vertical step {cfg.vertical_step_deg:.3f} deg -> {cfg.n_beams} beams per line")
print(f"line 100 points at azimuth {cfg.azimuth_of(100):.2f} deg;"
      f" beam 0 starts at elevation {cfg.elevation_of(0):.1f} deg")

# ---------------------------------------------------------------------------
# 3. From records to a cloud.
#
# A quick synthetic stand gives us something real to look at.  The scanner
# sits at the origin with its head 1.7 m over the ground plane.

forest = generate_forest(ForestConfig(extent_half_side_m=5.0, vacancy_probability=0.0,
                                      seed=7))
scan = simulate_scan(forest, ScannerConfig(vertical_step_deg=0.5,
                                           rotation_speed_deg_per_s=2.0,
                                           elevation_min_deg=-88.0,
                                           elevation_max_deg=88.0),
                     seed=42)
cloud = build_point_cloud(scan)
print()
print(f"simulated stand: {len(forest.trees)} trees, {len(scan)} returns")
print(f"cloud bounds x [{cloud.x.min():.2f}, {cloud.x.max():.2f}] m,"
      f" z [{cloud.z.min():.2f}, {cloud.z.max():.2f}] m")

# The ground shows up as the densest low-z level; everything below breast
# height references that, not the scanner origin.
ground_z = coarse_ground_z(cloud)
print(f"coarse ground level: {ground_z:.3f} m (head height {-ground_z:.2f} m)")

# Cropping to the plot square drops the far returns past the stand edge.
plot = extract_square_plot(cloud, half_side_m=5.0)
print(f"inside the 10 m plot square: {len(plot)} of {len(cloud)} points")

# ---------------------------------------------------------------------------
# 4. Panoramic maps.
#
# Unrolling the lattice into an image row per elevation gives the classic
# cylinder panorama: trunks are bright vertical streaks (near == bright).

img = render_cylindrical_map(scan, mode="range")
write_pgm(img, OUT / "panorama_range.pgm")
img = render_cylindrical_map(scan, mode="intensity")
write_pgm(img, OUT / "panorama_intensity.pgm")
print()
print(f"wrote {img.height}x{img.width} panoramas to {OUT}/")

# A cloud also slices cleanly with plain numpy; count returns per height band.
z = cloud.z
for lo in (-2.0, 0.0, 2.0, 4.0):
    band = int(((z >= lo) & (z < lo + 2.0)).sum())
    print(f"  z in [{lo:+.0f}, {lo + 2.0:+.0f}) m: {band:6d} returns")
