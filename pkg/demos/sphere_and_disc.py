"""
Flat disc and round sphere
==========================

With square stitches a flat disc gains about 2*pi stitches per round. A
sphere grows like sin(R/S) and is closed by working the first half again in
reverse.
"""

import math

from curvelace import Disc, Gauge, Sphere, compile_pattern, plan_rounds

plans = plan_rounds(Disc(), Gauge(0.5, 0.5), rounds=51)
deltas = [p.delta for p in plans[1:]]
print("disc, first rounds:", [p.stitches for p in plans[:6]])
print(f"mean increase over 50 rounds: {sum(deltas) / 50:.3f} (2*pi = {2 * math.pi:.3f})")

for ratio in (0.8, 0.9):
    p = plan_rounds(Disc(), Gauge(0.5, 0.5 * ratio), rounds=51)
    print(f"H/W={ratio}: mean increase {(p[-1].stitches - p[0].stitches) / 50:.3f}")

sphere = compile_pattern(Sphere(4.0), Gauge(0.5, 0.5))
print()
print("sphere S=4 cm:", sphere.counts)
print("palindromic:", sphere.counts == sphere.counts[::-1], "| total", sphere.total_stitches)
