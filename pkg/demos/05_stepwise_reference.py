"""Track step-wise reference changes around positive, negative and zero.

The shaper is designed once, from the first command's estimation window.
Because it acts as an LTI prefilter with zeros on the plant pole, every
later reference change is shaped vibration-free too.
"""

import math
import os

from tdfkit import (
    PiecewiseConstantSignal,
    PlantParams,
    ShaperConfig,
    stepwise_experiment,
    transition_metrics,
)
from tdfkit.output import emit_timeseries

schedule = PiecewiseConstantSignal(
    ((0.0, 1.0), (8.0, -1.0), (16.0, 0.0), (24.0, 0.5)), 0.0
)
cfg = ShaperConfig(reference_fraction=0.01, estimation_time=2.0)

for mult in (3, 30):
    plant = PlantParams(0.707, mult * math.pi)
    result = stepwise_experiment(plant, cfg, schedule, t_end=32.0)
    print(f"== omega_n = {mult}*pi ==")
    for tm in transition_metrics(result):
        print(
            f"  change at t={tm.time:>5.1f}s to {tm.target:+.2f}: "
            f"residual vibration {tm.residual_vibration:.2e}"
        )
    out_dir = os.path.join(os.path.dirname(__file__), "out")
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, f"stepwise_{mult}pi.csv")
    emit_timeseries(result, path)
    print(f"  trace written to {path}")
    print()
