"""Exact constructions of the arrangement families studied here."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

from .arrangement import Arrangement, ArrangementError
from .kernel import (
    QQ,
    CyclotomicField,
    ProjLine,
    ProjPoint,
    collinear,
    determinant,
    field_from_json,
    incident,
    is_zero,
    join,
    meet,
)

__all__ = [
    "ReflectionGroupData",
    "boroczky",
    "fermat",
    "fermat_extended",
    "from_file",
    "generic_arrangement",
    "klein",
    "load_group",
    "near_pencil",
    "paper_L",
    "pappus_P",
    "pappus_span_line",
    "reflection_arrangement",
    "to_file",
    "wiman",
]


def generic_arrangement(d: int, seed: int, *, bound: int = 10, max_tries: int = 1000) -> Arrangement:
    """``d`` rational lines with only double points, deterministic per seed.

    Lines are added one at a time with small integer coefficients and
    rejected when they pass through an existing intersection point.
    """
    if d < 3:
        raise ValueError("d must be at least 3")
    rng = random.Random(seed)
    lines: list[ProjLine] = []
    points: list[ProjPoint] = []
    tries = 0
    while len(lines) < d:
        tries += 1
        if tries > max_tries * d:
            raise RuntimeError(f"no generic arrangement found after {tries} samples")
        coords = [rng.randint(-bound, bound) for _ in range(3)]
        if not any(coords):
            continue
        cand = ProjLine(coords)
        if cand in lines or any(incident(p, cand) for p in points):
            continue
        new_pts = [meet(cand, l) for l in lines]
        if len(set(new_pts)) < len(new_pts):
            continue
        lines.append(cand)
        points.extend(new_pts)
    return Arrangement(lines, QQ)


def paper_L() -> Arrangement:
    """Six lines with 15 double points, coefficients as published.

    Three of the double points, (0:-2:1), (0:2:1) and (0:9:1), lie on x = 0.
    """
    return Arrangement(
        [(1, -1, 2), (1, -1, -2), (1, 1, -2), (1, 1, 2), (9, -1, 9), (9, 1, -9)], QQ
    )


PAPPUS_POINTS = {
    "top": [(8, 1), (12, 1), (14, 1)],
    "bottom": [(9, -4), (12, -4), (13, -4)],
}


def pappus_P() -> Arrangement:
    """Pappus configuration with the three Pappus lines removed.

    The six lines cross-join the collinear triples (8,1), (12,1), (14,1) and
    (9,-4), (12,-4), (13,-4); the three surviving meets of opposite pairs are
    collinear but that line is not in the arrangement.
    """
    a, b, c = (ProjPoint(x, y, 1) for x, y in PAPPUS_POINTS["top"])
    A, B, C = (ProjPoint(x, y, 1) for x, y in PAPPUS_POINTS["bottom"])
    lines = [join(a, B), join(a, C), join(b, A), join(b, C), join(c, A), join(c, B)]
    return Arrangement(lines, QQ)


def pappus_span_line() -> ProjLine:
    """The Pappus line through the meets of opposite cross-joins of ``pappus_P``.

    It carries three double points of the arrangement without being one of
    its lines (the dashed line of the usual picture).
    """
    a, b, c = (ProjPoint(x, y, 1) for x, y in PAPPUS_POINTS["top"])
    A, B, C = (ProjPoint(x, y, 1) for x, y in PAPPUS_POINTS["bottom"])
    p = meet(join(a, B), join(b, A))
    q = meet(join(a, C), join(c, A))
    r = meet(join(b, C), join(c, B))
    if not collinear(p, q, r):
        raise ArrangementError("Pappus points are not collinear")
    return join(p, q)


def fermat(n: int) -> Arrangement:
    """Linear factors of (x^n - y^n)(y^n - z^n)(z^n - x^n) over Q(zeta_n)."""
    if n < 2:
        raise ValueError("n must be at least 2")
    K = CyclotomicField(n)
    zero, one = K.zero, K.one
    lines = []
    for k in range(n):
        w = K.zeta(k)
        lines.append((one, -w, zero))
        lines.append((zero, one, -w))
        lines.append((-w, zero, one))
    return Arrangement(lines, K if n > 2 else QQ)


def fermat_extended(n: int) -> Arrangement:
    """The Fermat arrangement together with the lines x = 0 and y = 0."""
    F = fermat(n)
    return F.extend([ProjLine(1, 0, 0), ProjLine(0, 1, 0)])


def near_pencil(d: int) -> Arrangement:
    """d - 1 concurrent lines plus one general line."""
    if d < 3:
        raise ValueError("d must be at least 3")
    lines = [(1, k, 0) for k in range(d - 1)] + [(0, 0, 1)]
    return Arrangement(lines, QQ)


# ---------------------------------------------------------------------------
# Boroczky arrangements


def _boroczky_vertex(K: CyclotomicField, j: int) -> tuple:
    # image of (cos t, sin t, 1), t = j*pi/n, under diag(2, 2i, 2)
    z, zi = K.zeta(j), K.zeta(-j)
    return (z + zi, z - zi, K(2))


def boroczky(n: int) -> Arrangement:
    """The Boroczky arrangement B_n of n lines over Q(zeta_2n).

    Vertices of the regular 2n-gon are written in a chart where the unit
    circle becomes the conic X^2 - Y^2 - Z^2 = 0, which keeps every
    coordinate inside the cyclotomic field.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    m = 2 * n
    K = CyclotomicField(m)
    lines = []
    for k in range(n):
        # angles in units of pi/n: alpha = 2k, pi - 2*alpha = n - 4k
        a = (2 * k) % m
        b = (n - 4 * k) % m
        P = _boroczky_vertex(K, a)
        if a == b:
            X, Y, Z = P
            lines.append(ProjLine(X, -Y, -Z))
        else:
            lines.append(join(ProjPoint(P), ProjPoint(_boroczky_vertex(K, b))))
    if len(set(lines)) != n:
        raise ArrangementError("duplicate lines in Boroczky construction")
    return Arrangement(lines, K)


BOROCZKY_CHART = "circle"


# ---------------------------------------------------------------------------
# reflection groups


@dataclass(frozen=True)
class ReflectionGroupData:
    name: str
    conductor: int
    generators: tuple
    order: int | None = None
    source: str = ""

    @classmethod
    def from_json(cls, obj: dict) -> "ReflectionGroupData":
        field = field_from_json({"type": "cyclotomic", "conductor": obj["conductor"]})
        gens = tuple(
            tuple(tuple(field.scalar_from_json(c) for c in row) for row in g)
            for g in obj["generators"]
        )
        for g in gens:
            if len(g) != 3 or any(len(r) != 3 for r in g):
                raise ValueError("generators must be 3x3 matrices")
            if is_zero(determinant(g)):
                raise ValueError("singular generator matrix")
        return cls(obj["name"], int(obj["conductor"]), gens, obj.get("order"), obj.get("source", ""))

    def to_json(self) -> dict:
        K = CyclotomicField(self.conductor)
        return {
            "name": self.name,
            "conductor": self.conductor,
            "order": self.order,
            "source": self.source,
            "generators": [[[K.scalar_to_json(c) for c in row] for row in g] for g in self.generators],
        }


def load_group(name: str) -> ReflectionGroupData:
    path = resources.files("linearr") / "data" / f"{name}.json"
    return ReflectionGroupData.from_json(json.loads(path.read_text()))


def _mat_mul(a, b):
    return tuple(
        tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j] for j in range(3))
        for i in range(3)
    )


def _projective_normal(m):
    for row in m:
        for x in row:
            if not is_zero(x):
                inv = 1 / x
                return tuple(tuple(y * inv for y in r) for r in m)
    raise ValueError("zero matrix")


def group_closure(gens: Sequence, bound: int = 10000) -> list:
    """All elements of the group generated by ``gens``, modulo scalars.

    Breadth-first multiplication by generators; each class is represented by
    the matrix whose first nonzero entry is 1. Raises if more than ``bound``
    classes appear.
    """
    gens = [_projective_normal(g) for g in gens]
    one, zero = gens[0][0][0].field.one, gens[0][0][0].field.zero
    ident = tuple(tuple(one if i == j else zero for j in range(3)) for i in range(3))
    seen = {ident: None}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                p = _projective_normal(_mat_mul(g, h))
                if p not in seen:
                    seen[p] = None
                    nxt.append(p)
                    if len(seen) > bound:
                        raise RuntimeError(f"group closure exceeded {bound} elements")
        frontier = nxt
    return list(seen)


def reflection_line(g) -> ProjLine | None:
    """Mirror of ``g`` if some scalar multiple of ``g`` is a reflection.

    That is, if rank(g - c*I) == 1 for some c; the row space of g - c*I is then
    the mirror's coordinate vector.
    """
    cands = []
    for j, k in ((0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)):
        if not is_zero(g[j][k]):
            i = 3 - j - k
            # 2x2 minor of g - cI on rows {j, i}, columns {k, i} is linear in c
            cands.append(g[i][i] - g[j][i] * g[i][k] / g[j][k])
            break
    else:
        d = [g[0][0], g[1][1], g[2][2]]
        for a, b in ((0, 1), (0, 2), (1, 2)):
            if d[a] == d[b]:
                cands.append(d[a])
    for c in cands:
        n = [[g[r][s] - (c if r == s else 0) for s in range(3)] for r in range(3)]
        rows = [r for r in n if any(not is_zero(x) for x in r)]
        if not rows:
            continue  # scalar matrix
        first = ProjLine(rows[0])
        if all(ProjLine(r) == first for r in rows[1:]):
            return first
    return None


def reflection_arrangement(data: ReflectionGroupData, *, bound: int = 10000) -> Arrangement:
    K = CyclotomicField(data.conductor)
    elements = group_closure(data.generators, bound=bound)
    if data.order is not None and len(elements) != data.order:
        raise ArrangementError(
            f"{data.name}: closure has {len(elements)} classes, expected {data.order}"
        )
    mirrors = {m for g in elements if (m := reflection_line(g)) is not None}
    return Arrangement(sorted(mirrors), K)


def klein() -> Arrangement:
    return reflection_arrangement(load_group("klein"))


def wiman() -> Arrangement:
    return reflection_arrangement(load_group("wiman"))


# ---------------------------------------------------------------------------
# file round trip


def from_file(path) -> Arrangement:
    return Arrangement.from_file(path)


def to_file(A: Arrangement, path) -> None:
    A.to_file(path)
