"""
Klein and Wiman arrangements
============================

The reflection arrangements of the Klein group (21 lines over Q(zeta_7)) and
of the Valentiner group (45 lines over Q(zeta_15)) are built by closing the
generating matrices under multiplication. Coning over a high-multiplicity point
gives a supersolvable extension. Padding that cone with further lines through
the apex changes the second and third exponents.

The Wiman part takes around half a minute.
"""

from __future__ import annotations

from linearr import generators as gen
from linearr import cone_extension, extss_upper_bound, pad_pencil, validate_chain

for name, A, m, pad in (("Klein", gen.klein(), 4, 8), ("Wiman", gen.wiman(), 5, 40)):
    print(name, A.weak_combinatorics)
    O = next(p for p, r in A.multiplicities.items() if r == m)
    cone = cone_extension(A, O)
    rep = validate_chain(cone)
    print(f"  cone over a {m}-fold point: {rep.final}, exponents {tuple(rep.exponents)}")
    rep = validate_chain(pad_pencil(cone, pad))
    print(f"  padded by {pad}: {rep.final}, exponents {tuple(rep.exponents)}")
    best = extss_upper_bound(A)
    print(f"  best singular apex: {best.k} lines, multiplicity {A.multiplicities[best.apex]}")
