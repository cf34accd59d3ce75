"""
Resolving B_12 by a cone
========================

For B_{6k} a cone over a suitable triple point O adds 6k^2 - 6k lines and
lands on a supersolvable arrangement with split Poincare polynomial. The
triple points qualifying as apexes are those whose three lines carry 3k
singular points each.
"""

from __future__ import annotations

from linearr import generators as gen
from linearr import b6k_apexes, b6k_resolution, b6k_rs_closed_form, extss_upper_bound, validate_chain

B = gen.boroczky(12)
apexes = b6k_apexes(B)
triples = [p for p, m in B.multiplicities.items() if m == 3]
print(f"{len(apexes)} of {len(triples)} triple points qualify")

chain = b6k_resolution(B)
report = validate_chain(chain)
print("added lines:", len(chain.added))
for i, W in enumerate(report.steps):
    print(f"step {i:2d}: {W}")
print("exponents:", tuple(report.exponents))
print("closed form:", b6k_rs_closed_form(2))

# %%
# Any singular apex gives an upper bound for extSS.
print("best cone over a singular point:", extss_upper_bound(B).k)
