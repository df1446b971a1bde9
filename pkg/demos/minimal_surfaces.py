"""
Minimal surfaces: curvature checks and meshes
=============================================

Finite-difference curvature confirms H = 0 on the catalog of minimal
surfaces. The catenoid and helicoid share one metric, so catenoid rounds
and helicoid rows have the same lengths. Meshes are written as OBJ files
next to this script.
"""

import math
from pathlib import Path

import numpy as np

from curvelace import Bour, Catenoid, Enneper, Gauge, Helicoid, MeshSampling, Richmond, compile_pattern, export_obj

surfaces = [Enneper(2), Enneper(3), Richmond(1), Bour(), Catenoid(1.0), Helicoid(1.0)]
for s in surfaces:
    r = 0.6
    k1, k2 = s.principal_curvatures(r, 0.7)
    print(f"{s.family:9s} r={r}: H={s.mean_curvature(r, 0.7):+.2e}  K={s.gaussian_curvature(r, 0.7):+.4f}"
          f"  k1={k1:+.4f} k2={k2:+.4f}")

print()
cat, hel = Catenoid(1.0), Helicoid(1.0)
for r in np.linspace(0, 3, 4):
    print(f"r={r:.1f}: catenoid round {cat.circumference(r):.6f}  helicoid row {hel.row_length(r):.6f}"
          f"  2*pi*sqrt(r^2+1) {2 * math.pi * math.hypot(r, 1):.6f}")

gauge = Gauge(0.5, 0.5)
print("catenoid rounds:", compile_pattern(Catenoid(1.0, r_max=2.0, scale=2.0), gauge).counts)
print("helicoid rows:  ", compile_pattern(Helicoid(1.0, r_max=2.0, scale=2.0), gauge).counts)

out = Path(__file__).with_name("meshes")
out.mkdir(exist_ok=True)
for s, sampling in [(Enneper(2), MeshSampling(60, 120)), (Bour(), MeshSampling(60, 240)),
                    (Catenoid(1.0, r_max=1.5), MeshSampling(40, 80))]:
    path = out / f"{s.family}.obj"
    export_obj(s, sampling, path)
    print("wrote", path)
