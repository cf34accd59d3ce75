"""
Unexpected curves from supersolvable arrangements
=================================================

Dualize the lines of an arrangement to a point set Z. A curve of degree j is
unexpected when forms of degree j through Z with a general point of
multiplicity j - 1 exist beyond the expected count. For a supersolvable
arrangement with d lines and maximal multiplicity m this happens when
d > 2m. All ranks are computed exactly.
"""

from __future__ import annotations

from linearr import generators as gen
from linearr import DualPoints, supersolvable_criterion, unexpected_scan

for name, A in (
    ("extended Fermat n=3", gen.fermat_extended(3)),
    ("extended Fermat n=4", gen.fermat_extended(4)),
    ("B_6", gen.boroczky(6)),
    ("near pencil d=5", gen.near_pencil(5)),
):
    rep = unexpected_scan(DualPoints.of(A), seed=1)
    print(f"{name}: criterion {supersolvable_criterion(A)}, unexpected degrees {rep.degrees}")
    for row in rep.rows:
        print("   ", row)
