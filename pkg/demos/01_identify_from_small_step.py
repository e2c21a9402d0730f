"""Identify an unknown second-order plant from a small scaled step.

The plant is a black box: the identification below sees only the recorded
samples and the commanded level. We drive it with 1% of the reference for
a user-chosen window, then read damping and natural frequency off the
transient.
"""

import math

from tdfkit import (
    PiecewiseConstantSignal,
    PlantParams,
    TimeSeries,
    classify,
    default_timestep,
    extract_features,
    estimate,
    simulate,
)

FRACTION = 0.01     # share of the reference commanded during estimation
WINDOW = 2.0        # estimation duration [s]

print("true plant        estimate           features")
print("-" * 72)
for zeta, omega_n in [(0.0, math.pi), (0.5, math.pi), (0.707, 3 * math.pi), (1.0, math.pi)]:
    plant = PlantParams(zeta, omega_n)
    dt = default_timestep(omega_n)
    recorded = simulate(plant, PiecewiseConstantSignal.step(FRACTION), dt, WINDOW)
    window = TimeSeries(0.0, dt, recorded.samples[: int(round(WINDOW / dt))])

    feats = extract_features(window, FRACTION)
    damping = classify(feats)
    est = estimate(feats, damping)

    described = (
        f"{len(feats.peaks)} peak(s)"
        if feats.peaks
        else ("monotone" if feats.monotone else "no peaks")
    )
    if feats.overshoot is not None:
        described += f", overshoot {feats.overshoot:.4f}"
    if feats.settling_time is not None:
        described += f", settles at {feats.settling_time:.3f}s"
    print(
        f"z={zeta:<5} wn={omega_n / math.pi:>4.3g}*pi -> "
        f"z^={est.zeta:<8.5f} wn^={est.omega_n / math.pi:6.4f}*pi   {described}"
    )

print()
print("Notes: the critically damped row recovers zeta exactly but reads the")
print("frequency off the 2% settling time (4/T_s), which lands near 0.69*wn;")
print("the shaping stage tolerates that bias because its residual check")
print("works against the same estimate.")
