"""Supersolvable resolutions built as cone extensions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .arrangement import Arrangement, ArrangementError, WeakCombinatorics
from .invariants import ExponentTriple, poincare, split_exponents
from .kernel import ProjLine, ProjPoint, incident, join
from .solver import cone_cost
from .supersolvable import is_modular, is_supersolvable

__all__ = [
    "ChainError",
    "ChainReport",
    "ResolutionChain",
    "b6k_apexes",
    "b6k_resolution",
    "cone_exponents",
    "cone_extension",
    "pad_pencil",
    "validate_chain",
]


class ChainError(ValueError):
    def __init__(self, step: int, message: str):
        super().__init__(f"step {step}: {message}")
        self.step = step


@dataclass(frozen=True)
class ResolutionChain:
    """Base arrangement plus the lines added one at a time."""

    base: Arrangement
    added: tuple[ProjLine, ...]
    apex: ProjPoint | None = None

    def __len__(self) -> int:
        return len(self.added)

    def prefix(self, i: int) -> Arrangement:
        """Y_i: the base with the first ``i`` added lines."""
        return self.base.extend(self.added[:i])

    @property
    def final(self) -> Arrangement:
        self.base.incidences
        return self.prefix(len(self.added))

    def to_json(self) -> dict:
        f = self.base.field
        return {
            "base": self.base.to_json(),
            "added": [l.to_json(f) for l in self.added],
            "apex": self.apex.to_json(f) if self.apex is not None else None,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ResolutionChain":
        base = Arrangement.from_json(obj["base"])
        f = base.field
        added = tuple(ProjLine(tuple(f.scalar_from_json(c) for c in row)) for row in obj["added"])
        apex = obj.get("apex")
        if apex is not None:
            apex = ProjPoint(tuple(f.scalar_from_json(c) for c in apex))
        return cls(base, added, apex)


def cone_extension(A: Arrangement, M: ProjPoint) -> ResolutionChain:
    """Add every missing join from ``M`` to Sing(A), in canonical order."""
    cc = cone_cost(A, M)
    return ResolutionChain(A, cc.missing_lines, M)


@dataclass
class ChainReport:
    steps: list[WeakCombinatorics] = field(default_factory=list)
    modular_point: ProjPoint | None = None
    exponents: ExponentTriple | None = None

    @property
    def final(self) -> WeakCombinatorics:
        return self.steps[-1]

    def to_json(self, f=None) -> dict:
        return {
            "steps": [w.to_json() for w in self.steps],
            "modular_point": self.modular_point.to_json(f) if self.modular_point else None,
            "exponents": list(self.exponents) if self.exponents else None,
        }


def validate_chain(C: ResolutionChain) -> ChainReport:
    """Check growth by one new line per step and supersolvability at the end."""
    seen = set(C.base.lines)
    for i, l in enumerate(C.added, start=1):
        if l in seen:
            raise ChainError(i, f"line {l} is already present")
        seen.add(l)
    report = ChainReport()
    Y = C.base
    report.steps.append(Y.weak_combinatorics)
    for i, l in enumerate(C.added, start=1):
        Y = Y.extend([l])
        if len(Y) != len(C.base) + i:
            raise ChainError(i, f"|Y_{i}| = {len(Y)}, expected {len(C.base) + i}")
        report.steps.append(Y.weak_combinatorics)
    if C.apex is not None and is_modular(Y, C.apex):
        report.modular_point = C.apex
    else:
        w = is_supersolvable(Y)
        if w is None:
            raise ChainError(len(C.added), "final arrangement is not supersolvable")
        report.modular_point = w.point
    exps = split_exponents(poincare(report.final))
    if not exps:
        raise ChainError(len(C.added), "Poincare polynomial of a supersolvable arrangement did not split")
    report.exponents = exps
    return report


def b6k_apexes(B: Arrangement) -> list[ProjPoint]:
    """Triple points of B_{6k} whose three lines each carry exactly 3k singular points.

    Only for these does the cone add 6k^2 - 6k lines; other triple points
    see extra collinearities and give cheaper cones.
    """
    n = len(B)
    if n % 6:
        raise ArrangementError("expected a Boroczky arrangement with 6k lines")
    per_line = [len(ps) for ps in B.points_by_line]
    return [
        p
        for p, s in B.incidences.items()
        if len(s) == 3 and all(per_line[i] == n // 2 for i in s)
    ]


def b6k_resolution(B: Arrangement, apex: ProjPoint | None = None) -> ResolutionChain:
    """Cone over a triple point of B_{6k}; defaults to the least of :func:`b6k_apexes`."""
    if apex is None:
        cands = b6k_apexes(B)
        if not cands:
            raise ArrangementError("no triple point with 3k singular points on each line")
        apex = cands[0]
    return cone_extension(B, apex)


def pad_pencil(C: ResolutionChain, count: int, *, start: int = 1) -> ResolutionChain:
    """Append ``count`` further lines through the apex avoiding all singular points.

    The apex stays modular, so the result is again a supersolvable resolution;
    each new line only adds double points.
    """
    if C.apex is None:
        raise ValueError("chain has no apex")
    Y = C.final
    K = Y.field
    others = [p for p in Y.singular_points if p != C.apex]
    added = list(C.added)
    present = set(Y.lines)
    t = start
    while count > 0:
        q = ProjPoint(K(t), K(t * t + 3), K(1))
        t += 1
        if q == C.apex:
            continue
        l = join(C.apex, q)
        if l in present or any(incident(p, l) for p in others):
            continue
        added.append(l)
        present.add(l)
        count -= 1
    return ResolutionChain(C.base, tuple(added), C.apex)


def cone_exponents(D: int, mu: int) -> ExponentTriple:
    """Exponents (1, D - mu, mu - 1) of a cone with apex multiplicity mu on D lines."""
    a, b = sorted((D - mu, mu - 1))
    return ExponentTriple(1, a, b)
