"""
Moebius band and knotted tubes
==============================

The ruled Moebius band is worked outward from its centre circle. Each round
follows the single boundary of a narrower band, so stitches are spaced by
arc length rather than by angle. The second half sizes tubes for knots from
their ropelength.
"""

from curvelace import Gauge, MobiusRuled, compile_pattern, min_tube_length, recommended_length, render_text
from curvelace.knots import builtin_table
from curvelace.verification import sector_deviation

band = MobiusRuled(0.5, scale=5.0)
pattern = compile_pattern(band, Gauge(0.5, 0.5))
print(render_text(pattern))
print(f"largest 30-degree sector deviation: {sector_deviation(band, Gauge(0.5, 0.5)):.3f} stitches")

table = builtin_table()
for d in (0.4, 0.8, 1.2):
    print(f"trefoil, tube {d} cm: minimum {min_tube_length(table['3_1'], d):.2f} cm")
for name in ("3_1", "4_1", "5_2", "7_4"):
    print(f"{name}: recommended {recommended_length(table[name], 0.8):.2f} cm at 0.8 cm")
