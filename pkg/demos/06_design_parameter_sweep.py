"""Sweep the designed (A, T) over damping and frequency.

The switch time rides the natural frequency hyperbolically while the mid
amplitude is governed almost entirely by damping; the emitted grid is the
raw material for surface plots or a regression surrogate.
"""

import math
import os

from tdfkit import ShaperConfig, sweep_design_parameters
from tdfkit.output import emit_sweep

zetas = [round(0.1 * k, 1) for k in range(10)]
omegas = [m * math.pi for m in range(1, 31)]
rows = sweep_design_parameters(zetas, omegas, ShaperConfig(0.01, 2.0))

out_dir = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(out_dir, exist_ok=True)
path = os.path.join(out_dir, "design_sweep.csv")
emit_sweep(rows, path)
print(f"designed {sum(1 for r in rows if r.error is None)}/{len(rows)} cells -> {path}")

print("\nswitch time T [s] vs omega_n (columns pi..5pi), one row per zeta:")
for zeta in (0.0, 0.3, 0.7, 0.9):
    line = [r for r in rows if r.zeta == zeta][:5]
    cells = "  ".join(f"{r.switch_time:7.4f}" for r in line)
    print(f"  zeta={zeta:<4} {cells}")

print("\nmid amplitude A vs zeta at omega_n = 10*pi:")
col = [r for r in rows if r.omega_n == 10 * math.pi]
print("  " + "  ".join(f"{r.amplitude:6.4f}" for r in sorted(col, key=lambda r: r.zeta)))
