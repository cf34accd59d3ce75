"""
Drawing real arrangements
=========================

SVG and TikZ output for arrangements with real coordinates. The Pappus
configuration is drawn with one of its extra collinearities dashed.
"""

from __future__ import annotations

from pathlib import Path

from linearr import generators as gen
from linearr import scene, to_svg, to_tikz

P = gen.pappus_P()
S = scene(P, dashed=[gen.pappus_span_line()], show_collinearities=True)
out = Path("pappus.svg")
out.write_text(to_svg(S))
print(f"wrote {out} with {len(S.points)} marked points")
print(to_tikz(scene(gen.boroczky(9)))[:400])
