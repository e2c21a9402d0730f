"""Design the three-impulse filter for a known (or estimated) plant.

The filter places K at t=0 and the remaining weight at tau+T and tau+2T,
so its zeros sit on the plant pole no matter how long the estimation
window tau was. Undamped plants get the closed-form switch time (tangent
half-angle cubic); damped plants a two-variable Newton solve.
"""

import math

from tdfkit import ShaperConfig, design_damped, design_undamped, evaluate_shaper

cfg = ShaperConfig(reference_fraction=0.01, estimation_time=2.0)

print("== undamped, omega_n = pi (the phase-degenerate showcase) ==")
des = design_undamped(cfg, math.pi)
for t, a in des.impulses:
    print(f"  impulse at t = {t:.6f} s  amplitude = {a:+.6f}")
print(f"  switch time T = {des.switch_time:.6f} s, mid amplitude A = {des.amplitude:.6f}")
print(f"  |G(j*wn)| = {abs(evaluate_shaper(des, 1j * math.pi)):.2e}")
print()

print("== damped, zeta = 0.5, omega_n = 3*pi ==")
des = design_damped(cfg, 0.5, 3 * math.pi)
for t, a in des.impulses:
    print(f"  impulse at t = {t:.6f} s  amplitude = {a:+.6f}")
print(f"  scaled pole residual = {des.pole_residual:.2e}")
print()

print("== the K -> 0 limit recovers the classical two-impulse shaper ==")
for zeta in (0.3, 0.5, 0.7):
    tiny = ShaperConfig(1e-6, 1.0)
    des = design_damped(tiny, zeta, math.pi)
    wd = math.pi * math.sqrt(1 - zeta**2)
    x = zeta * math.pi / math.sqrt(1 - zeta**2)
    print(
        f"  zeta={zeta}: T = {des.switch_time:.6f} (half damped period {math.pi / wd:.6f}), "
        f"A = {des.amplitude:.6f} (classical {math.exp(x) / (1 + math.exp(x)):.6f})"
    )
