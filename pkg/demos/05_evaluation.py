#!/usr/bin/env python3
"""Score pipeline output against the simulator's ground truth.

    python3 demos/05_evaluation.py

Rebuilds the stand from 03/04 if their files are missing, then matches
measured stems to true stems and prints the error statistics.  Ends with a
small survey over plots showing how detection degrades with stand depth.
"""

from pathlib import Path

import numpy as np

from treescan import (DetectConfig, ForestConfig, PipelineConfig,
                      ScannerConfig, evaluate_measurements, generate_forest,
                      match_trees, run_pipeline, simulate_scan)
from treescan.io import (read_forest_json, read_report_trees,
                         truth_to_references, write_metrics_json)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def stand_config():
    return ForestConfig(extent_half_side_m=5.0, vacancy_probability=0.25,
                        scanner_clearance_m=0.8, seed=3)


truth_path = OUT / "stand.truth.json"
report_path = OUT / "stand.report.json"
if report_path.exists() and truth_path.exists():
    trees = read_report_trees(report_path)
    forest = read_forest_json(truth_path)
else:
    forest = generate_forest(stand_config())
    scan = simulate_scan(forest, ScannerConfig(vertical_step_deg=0.5,
                                               rotation_speed_deg_per_s=2.0,
                                               elevation_min_deg=-88.0,
                                               elevation_max_deg=88.0),
                         seed=1003, outlier_rate=0.001)
    dbhs = [t.dbh_m for t in forest.trees]
    cfg = PipelineConfig(detect=DetectConfig(dbh_min_m=0.5 * min(dbhs),
                                             dbh_max_m=1.5 * max(dbhs)),
                         circle_method="gauss_newton")
    trees = run_pipeline(scan, cfg).trees

references = truth_to_references(forest)

# ---------------------------------------------------------------------------
# 1. Matching.
#
# Stems pair greedily by distance, nearest pair first, each stem used at
# most once, and nothing pairs beyond half a meter.  Leftover estimates
# are false detections; leftover references are omissions.

match = match_trees([(t.position_x_m, t.position_y_m) for t in trees],
                    [(r.position_x_m, r.position_y_m) for r in references])
print(f"{match.correct} matched pairs,"
      f" {len(match.unmatched_estimates)} false detections,"
      f" {len(match.unmatched_references)} omissions")
for ei, ri in match.pairs[:3]:
    e, r = trees[ei], references[ri]
    d = np.hypot(e.position_x_m - r.position_x_m, e.position_y_m - r.position_y_m)
    print(f"  measured stem {e.tree_id} -> true stem {r.id}: {100 * d:.1f} cm apart")
print("  ...")
if match.unmatched_references:
    missed = references[match.unmatched_references[0]]
    print(f"missed: true stem {missed.id} at ({missed.position_x_m:+.2f},"
          f" {missed.position_y_m:+.2f}), dbh {missed.dbh_cm:.1f} cm")

# ---------------------------------------------------------------------------
# 2. Error statistics.
#
# Bias is estimate minus reference, so a negative dbh bias means the chain
# reads stems slightly thin; percentages are relative to the mean of the
# reference values.  Heights are only scored for stems that got one.

metrics = evaluate_measurements(trees, references)
print()
print(f"detection rate {metrics.detection_rate_pct:.1f}%"
      f" ({metrics.correct}/{metrics.n_reference})")
for name, q in (("dbh [cm]", metrics.dbh), ("height [m]", metrics.height)):
    if q is None:
        continue
    print(f"{name:11s} bias {q.bias:+.3f} ({q.bias_pct:+.2f}%)"
          f"   rmse {q.rmse:.3f} ({q.rmse_pct:.2f}%)   n={q.count}")

write_metrics_json(metrics, OUT / "stand.metrics.json")
print(f"wrote {OUT / 'stand.metrics.json'}")

# ---------------------------------------------------------------------------
# 3. Occlusion with depth.
#
# A single-position scanner sees the near face of the stand; back rows
# hide behind front rows.  Splitting the matched/missed counts by range
# ring makes the falloff visible even on this small plot.

print()
print("detection by distance from the scanner:")
matched_refs = {ri for _, ri in match.pairs}
rings = [(0.0, 2.5), (2.5, 4.0), (4.0, 5.5), (5.5, 8.0)]
for lo, hi in rings:
    inside = [i for i, r in enumerate(references)
              if lo <= np.hypot(r.position_x_m, r.position_y_m) < hi]
    if not inside:
        continue
    got = sum(1 for i in inside if i in matched_refs)
    print(f"  {lo:3.1f} to {hi:3.1f} m: {got}/{len(inside)} found")
