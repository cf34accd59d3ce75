"""Supersolvability of plane arrangements via modular points.

For a line arrangement the intersection lattice is supersolvable exactly when
some intersection point is modular, i.e. joined by a line of the arrangement
to every other intersection point (Stanley, "Supersolvable lattices", 1972;
see also Orlik-Terao, Arrangements of Hyperplanes, Example 2.28).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import Arrangement
from .kernel import ProjPoint, join

__all__ = ["ModularWitness", "is_modular", "is_supersolvable", "modular_points"]


@dataclass(frozen=True)
class ModularWitness:
    point: ProjPoint
    multiplicity: int


def is_modular(A: Arrangement, p: ProjPoint) -> bool:
    """True iff every other singular point shares an arrangement line with ``p``."""
    inc = A.incidences
    mine = inc.get(p)
    if mine is None:
        return False
    return all(q == p or not mine.isdisjoint(s) for q, s in inc.items())


def modular_points(A: Arrangement) -> list[ProjPoint]:
    return [p for p in A.incidences if is_modular(A, p)]


def is_supersolvable(A: Arrangement) -> ModularWitness | None:
    """The canonically least modular point, or None."""
    for p, lines in A.incidences.items():
        if is_modular(A, p):
            return ModularWitness(p, len(lines))
    return None


def verify_witness(A: Arrangement, w: ModularWitness) -> bool:
    """Independent re-check of a witness by explicit joins."""
    if A.multiplicities.get(w.point) != w.multiplicity:
        return False
    for q in A.incidences:
        if q != w.point and join(w.point, q) not in A:
            return False
    return True
