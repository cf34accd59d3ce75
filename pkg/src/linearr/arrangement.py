"""Line arrangements, their singular locus and weak combinatorics."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import cached_property
from math import comb
from pathlib import Path
from typing import Iterable, Mapping

from .kernel import (
    QQ,
    CyclotomicNumber,
    Field,
    ProjLine,
    ProjPoint,
    field_from_json,
    incident,
    meet,
)

__all__ = [
    "Arrangement",
    "ArrangementError",
    "WeakCombinatorics",
    "points_on_line",
    "same_weak_combinatorics",
    "singular_locus",
    "weak_combinatorics",
]


class ArrangementError(ValueError):
    pass


@dataclass(frozen=True)
class WeakCombinatorics:
    """Line count ``d`` plus ``t[r]``, the number of r-fold points."""

    d: int
    t: Mapping[int, int]

    def __post_init__(self):
        clean = {r: n for r, n in sorted(self.t.items()) if n}
        if any(r < 2 or n < 0 or r > self.d for r, n in clean.items()):
            raise ArrangementError(f"invalid multiplicity counts {clean}")
        object.__setattr__(self, "t", clean)

    def __getitem__(self, r: int) -> int:
        return self.t.get(r, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeakCombinatorics) and self.d == other.d and self.t == other.t

    def __hash__(self) -> int:
        return hash((self.d, tuple(self.t.items())))

    @property
    def max_multiplicity(self) -> int:
        return max(self.t, default=0)

    @property
    def num_points(self) -> int:
        return sum(self.t.values())

    def count_identity_holds(self) -> bool:
        """sum_r t_r * C(r, 2) == C(d, 2)."""
        return sum(n * comb(r, 2) for r, n in self.t.items()) == comb(self.d, 2)

    def to_json(self) -> dict:
        return {"d": self.d, "t": {str(r): n for r, n in self.t.items()}}

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["r", "t_r"])
        for r, n in self.t.items():
            writer.writerow([r, n])
        return buf.getvalue()

    def __repr__(self) -> str:
        ts = ", ".join(f"t{r}={n}" for r, n in sorted(self.t.items(), reverse=True))
        return f"WeakCombinatorics(d={self.d}, {ts})"


def _coerce_line(field: Field, line) -> ProjLine:
    coords = tuple(line.coords if isinstance(line, ProjLine) else line)
    if field is QQ:
        for c in coords:
            if isinstance(c, CyclotomicNumber) and not c.is_rational():
                raise ArrangementError("irrational coordinate in a rational arrangement")
        return ProjLine(tuple(QQ(c) for c in coords))
    return ProjLine(tuple(field(c) for c in coords))


class Arrangement:
    """A finite set of distinct lines over one field.

    The singular locus is computed on first access and cached; instances are
    never mutated afterwards.
    """

    def __init__(self, lines: Iterable, field: Field = QQ, *, allow_small: bool = False):
        self.field = field
        canon = tuple(_coerce_line(field, l) for l in lines)
        index: dict[ProjLine, int] = {}
        for i, l in enumerate(canon):
            if l in index:
                raise ArrangementError(f"duplicate line at positions {index[l]} and {i}: {l}")
            index[l] = i
        if len(canon) < 3 and not allow_small:
            raise ArrangementError(f"an arrangement needs at least 3 lines, got {len(canon)}")
        self.lines = canon
        self._index = index

    def __len__(self) -> int:
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)

    def __contains__(self, line) -> bool:
        return line in self._index

    def index(self, line: ProjLine) -> int:
        return self._index[line]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Arrangement)
            and self.field == other.field
            and set(self.lines) == set(other.lines)
        )

    def __hash__(self) -> int:
        return hash(frozenset(self.lines))

    def __repr__(self) -> str:
        return f"Arrangement(d={len(self)}, field={self.field!r})"

    def extend(self, lines: Iterable[ProjLine]) -> "Arrangement":
        """New arrangement with ``lines`` appended.

        If this arrangement's singular locus is already known, the new one is
        updated incrementally (one meet per old line for each new line).
        """
        out = Arrangement(list(self.lines) + list(lines), self.field)
        if "incidences" in self.__dict__:
            found = {p: set(s) for p, s in self.incidences.items()}
            for j in range(len(self.lines), len(out.lines)):
                lj = out.lines[j]
                for i in range(j):
                    p = meet(out.lines[i], lj)
                    s = found.get(p)
                    if s is None:
                        found[p] = {i, j}
                    else:
                        s.add(i)
                        s.add(j)
            out.__dict__["incidences"] = {p: frozenset(found[p]) for p in sorted(found)}
        return out

    def transformed(self, matrix) -> "Arrangement":
        """Image under the point map x -> matrix @ x."""
        from .kernel import transform_line

        return Arrangement([transform_line(matrix, l) for l in self.lines], self.field)

    # -- singular locus -----------------------------------------------------

    @cached_property
    def incidences(self) -> dict[ProjPoint, frozenset[int]]:
        """Singular point -> indices of the lines through it, in canonical order."""
        found: dict[ProjPoint, set[int]] = {}
        lines = self.lines
        for i in range(len(lines)):
            li = lines[i]
            for j in range(i + 1, len(lines)):
                p = meet(li, lines[j])
                s = found.get(p)
                if s is None:
                    found[p] = {i, j}
                else:
                    s.add(i)
                    s.add(j)
        return {p: frozenset(found[p]) for p in sorted(found)}

    @property
    def singular_points(self) -> list[ProjPoint]:
        return list(self.incidences)

    @cached_property
    def multiplicities(self) -> dict[ProjPoint, int]:
        return {p: len(s) for p, s in self.incidences.items()}

    @cached_property
    def weak_combinatorics(self) -> WeakCombinatorics:
        t: dict[int, int] = {}
        for m in self.multiplicities.values():
            t[m] = t.get(m, 0) + 1
        w = WeakCombinatorics(len(self), t)
        if not w.count_identity_holds():
            raise AssertionError(f"count identity violated for {w}")
        return w

    @cached_property
    def points_by_line(self) -> tuple[tuple[ProjPoint, ...], ...]:
        per: list[list[ProjPoint]] = [[] for _ in self.lines]
        for p, s in self.incidences.items():
            for i in s:
                per[i].append(p)
        return tuple(tuple(ps) for ps in per)

    def lines_through(self, p: ProjPoint) -> list[ProjLine]:
        s = self.incidences.get(p)
        if s is not None:
            return [self.lines[i] for i in sorted(s)]
        return [l for l in self.lines if incident(p, l)]

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "lines": [l.to_json(self.field) for l in self.lines],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Arrangement":
        if "lines" not in obj:
            raise ArrangementError("arrangement JSON needs a 'lines' array")
        field = field_from_json(obj.get("field", {"type": "rational"}))
        lines = []
        for k, row in enumerate(obj["lines"]):
            if len(row) != 3:
                raise ArrangementError(f"line {k} must have 3 coordinates")
            try:
                lines.append(tuple(field.scalar_from_json(c) for c in row))
            except (ValueError, TypeError, ZeroDivisionError) as exc:
                raise ArrangementError(f"line {k}: {exc}") from exc
        return cls(lines, field)

    def to_file(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=1) + "\n")

    @classmethod
    def from_file(cls, path) -> "Arrangement":
        text = Path(path).read_text()
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ArrangementError(
                f"{path}: parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
            ) from exc
        return cls.from_json(obj)


def singular_locus(A: Arrangement) -> dict[ProjPoint, int]:
    """Singular point -> multiplicity."""
    return A.multiplicities


def weak_combinatorics(A: Arrangement) -> WeakCombinatorics:
    return A.weak_combinatorics


def same_weak_combinatorics(A: Arrangement, B: Arrangement) -> bool:
    return A.weak_combinatorics == B.weak_combinatorics


def points_on_line(A: Arrangement, line: ProjLine, min_mult: int = 2) -> list[ProjPoint]:
    if line not in A:
        raise ArrangementError(f"{line} is not a line of the arrangement")
    mult = A.multiplicities
    return [p for p in A.points_by_line[A.index(line)] if mult[p] >= min_mult]
