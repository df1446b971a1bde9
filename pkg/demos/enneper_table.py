"""
Enneper surface: stitch counts for three stitch heights
=======================================================

Fits the model scale to a published table of stitch counts and prints the
rounds side by side. The scale is found by scanning s in [1.5, 2.6].
"""

from curvelace import Enneper, Gauge, compile_pattern, render_text
from curvelace.verification import REFERENCE_ENNEPER_TABLE, fit_scale

for height, (reference, printed_total) in REFERENCE_ENNEPER_TABLE.items():
    fit = fit_scale(height)
    print(f"H={height} cm, W=0.5 cm: fitted scale {fit.scale:.3f}, "
          f"model total {fit.total} (printed {printed_total})")
    for ell, (model, ref) in enumerate(zip(fit.counts, reference), 1):
        flag = "" if model == ref else f"  <- table says {ref}"
        print(f"  round {ell:2d}: {model:4d}{flag}")

# full instructions for the first column
pattern = compile_pattern(Enneper(2, scale=2.11), Gauge(0.5, 0.4), rounds=18)
print()
print(render_text(pattern))
