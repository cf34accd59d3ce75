"""
Fermat arrangements
===================

The Fermat arrangement F_n, cut out by (x^n - y^n)(y^n - z^n)(z^n - x^n), is
not supersolvable for n >= 3 but becomes so after adding two coordinate lines.
Coordinates live in the cyclotomic field Q(zeta_n).
"""

from __future__ import annotations

from linearr import generators as gen
from linearr import extss_exact, is_supersolvable, poincare, split_exponents

for n in (3, 4, 5):
    F = gen.fermat(n)
    E = gen.fermat_extended(n)
    w = is_supersolvable(E)
    print(f"n={n}: F_n {F.weak_combinatorics}, extSS = {extss_exact(F).k}")
    print(f"      extended {E.weak_combinatorics}")
    print(f"      modular point {w.point} (multiplicity {w.multiplicity})")
    print(f"      Poincare {poincare(E)}, exponents {tuple(split_exponents(poincare(E)))}")

# %%
# F_2 is already supersolvable and has the weak combinatorics of B_6.
F2 = gen.fermat(2)
print(F2.weak_combinatorics, gen.boroczky(6).weak_combinatorics, extss_exact(F2).k)
