"""
Boroczky arrangements
=====================

B_n has floor(n(n-3)/6) + 1 triple points. Every line carries at least
floor((n-3)/2) of them, and some line carries one more. The number of double
points is n - 3 + eps(n); the run below tabulates eps(n).
"""

from __future__ import annotations

from linearr import generators as gen

print(" n   t2   t3  eps  triples per line")
for n in range(6, 25):
    B = gen.boroczky(n)
    W = B.weak_combinatorics
    per_line = sorted(sum(1 for p in ps if B.multiplicities[p] == 3) for ps in B.points_by_line)
    print(f"{n:2d} {W[2]:4d} {W[3]:4d} {W[2] - (n - 3):4d}  min {per_line[0]}, max {per_line[-1]}")
