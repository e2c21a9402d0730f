"""Full adaptive sequence on a hidden plant, end to end.

Phase 1 commands K*x* and records the response; phase 2 identifies the
plant; phase 3 designs the shaper; phase 4 tracks the shaped reference.
The trace lands in demos/out/adaptive_run.csv for plotting.
"""

import math
import os

from tdfkit import PiecewiseConstantSignal, PlantParams, ShaperConfig, run_adaptive
from tdfkit.output import emit_timeseries

HIDDEN = PlantParams(zeta=0.707, omega_n=3 * math.pi)   # unknown to the pipeline
cfg = ShaperConfig(reference_fraction=0.01, estimation_time=2.0)

result = run_adaptive(HIDDEN, PiecewiseConstantSignal.step(1.0), cfg)

print(f"hidden plant:     zeta = {HIDDEN.zeta}, omega_n = {HIDDEN.omega_n / math.pi:g}*pi")
print(
    f"identified:       zeta = {result.estimate.zeta:.6f}, "
    f"omega_n = {result.estimate.omega_n / math.pi:.6f}*pi "
    f"({result.estimate.damping.value})"
)
print(f"shaper ({result.design.method.value}):")
for t, a in result.design.impulses:
    print(f"  impulse at t = {t:.5f} s  amplitude = {a:+.5f}")
print(f"residual vibration after the last impulse: {result.metrics.residual_vibration:.2e}")
print(f"overshoot past the target:                 {result.metrics.overshoot:.2e}")

os.makedirs(os.path.join(os.path.dirname(__file__), "out"), exist_ok=True)
path = os.path.join(os.path.dirname(__file__), "out", "adaptive_run.csv")
emit_timeseries(result, path)
print(f"trace written to {path} (columns: t, reference, shaped_reference, response)")
