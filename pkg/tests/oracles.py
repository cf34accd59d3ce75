"""Slow, independent reference implementations used only by the tests.

Nothing here imports the solver or the arrangement internals: points and
lines are plain integer triples (rational inputs only) and every quantity is
recomputed from the definitions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, lcm


def int_triple(coords) -> tuple[int, int, int]:
    fr = [Fraction(c) for c in coords]
    den = lcm(*(f.denominator for f in fr))
    v = [int(f * den) for f in fr]
    return normalize(v)


def normalize(v) -> tuple[int, int, int]:
    g = gcd(*v)
    if g == 0:
        raise ValueError("zero vector")
    v = [c // g for c in v]
    first = next(c for c in v if c)
    if first < 0:
        v = [-c for c in v]
    return tuple(v)


def cross(u, v) -> tuple[int, int, int]:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def on(p, l) -> bool:
    return p[0] * l[0] + p[1] * l[1] + p[2] * l[2] == 0


def singular_points(lines) -> dict[tuple, set[int]]:
    pts: dict[tuple, set[int]] = {}
    for i, j in combinations(range(len(lines)), 2):
        p = normalize(cross(lines[i], lines[j]))
        pts.setdefault(p, set()).update((i, j))
    return pts


def t_vector(lines) -> dict[int, int]:
    t: dict[int, int] = {}
    for s in singular_points(lines).values():
        t[len(s)] = t.get(len(s), 0) + 1
    return t


def naive_supersolvable(lines) -> bool:
    pts = singular_points(lines)
    return any(
        all(p == q or any(on(p, lines[i]) for i in s) for q, s in pts.items())
        for p in pts
    )


def naive_cone_cost(lines, M) -> int:
    line_set = set(lines)
    added = set()
    for q in singular_points(lines):
        if q == M:
            continue
        l = normalize(cross(M, q))
        if l not in line_set:
            added.add(l)
    return len(added)


def _samples_on(l, k: int):
    a, b, c = l
    basis = [v for v in ((0, c, -b), (-c, 0, a), (b, -a, 0)) if any(v)]
    u = basis[0]
    v = next(w for w in basis[1:] if normalize(w) != normalize(u))
    for t in range(k):
        yield normalize(tuple(x + t * y for x, y in zip(u, v)))


def naive_extss(lines) -> int:
    """Minimum cone cost over every meet of the augmented lines, several points
    on each augmented line and a few generic points."""
    lines = [tuple(l) for l in lines]
    sing = list(singular_points(lines))
    aug = set(lines)
    for p, q in combinations(sing, 2):
        aug.add(normalize(cross(p, q)))
    aug = sorted(aug)
    cands = set()
    for l, m in combinations(aug, 2):
        cands.add(normalize(cross(l, m)))
    for l in aug:
        cands.update(_samples_on(l, 4))
    cands.update([(1, 1000, 1000003), (1, -7919, 104729), (7, 13, 1)])
    return min(naive_cone_cost(lines, M) for M in cands)


def naive_rank(rows) -> int:
    """Fraction Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][c] != 0:
                f = m[i][c] / m[rank][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank
