"""Extension-to-supersolvability numbers.

A supersolvable extension Y of A has a modular point M, and M must be joined
inside Y to every singular point of A. So Y contains every join from M to
Sing(A), and |Y| - |A| >= cone_cost(A, M). Adding exactly those joins (the
cone over M) is supersolvable with M modular, so

    extSS(A) = min over points M of the plane of cone_cost(A, M).

The cost depends only on which lines of the *augmented* arrangement (lines of
A plus all spans of pairs of singular points) pass through M, so the minimum
is attained on a finite candidate set with one point per stratum: all
vertices of the augmented arrangement, one interior point per augmented line
and one point off every augmented line.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb, gcd
from typing import Iterable, Sequence

from .arrangement import Arrangement
from .kernel import (
    QQ,
    ProjLine,
    ProjPoint,
    _cross,
    _dot,
    _Projective,
    incident,
    is_zero,
    join,
    meet,
)
from .supersolvable import is_supersolvable

__all__ = [
    "BudgetExceeded",
    "CandidateSet",
    "ConeCost",
    "ExtSSResult",
    "augmented_lines",
    "candidate_set",
    "cone_cost",
    "extss_exact",
    "extss_upper_bound",
    "generic_bound",
]

DEFAULT_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    """The exact search would exceed its candidate budget."""


@dataclass(frozen=True)
class ConeCost:
    apex: ProjPoint
    missing_lines: tuple[ProjLine, ...]

    @property
    def cost(self) -> int:
        return len(self.missing_lines)


@dataclass(frozen=True)
class ExtSSResult:
    k: int
    apex: ProjPoint
    lines: tuple[ProjLine, ...]
    mode: str
    candidates: int = 0

    def to_json(self, field=None) -> dict:
        return {
            "extss": self.k if self.mode == "exact" else None,
            "upper_bound": self.k,
            "mode": self.mode,
            "apex": self.apex.to_json(field),
            "added_lines": [l.to_json(field) for l in self.lines],
        }


def _lines_through(A: Arrangement, M: ProjPoint) -> frozenset[int]:
    s = A.incidences.get(M)
    if s is not None:
        return s
    return frozenset(i for i, l in enumerate(A.lines) if incident(M, l))


# Joins are hashed through a per-field backend: over Q, primitive integer
# triples (no Fraction arithmetic in the inner loop); otherwise canonical
# cyclotomic coordinates.


def _int_triple(x: _Projective) -> tuple[int, int, int]:
    den = 1
    for c in x.coords:
        den = den * c.denominator // gcd(den, c.denominator)
    return tuple(int(c * den) for c in x.coords)


def _int_join(u, v) -> tuple[int, int, int]:
    a = u[1] * v[2] - u[2] * v[1]
    b = u[2] * v[0] - u[0] * v[2]
    c = u[0] * v[1] - u[1] * v[0]
    g = gcd(a, b, c)
    if (a or b or c) < 0:
        g = -g
    return (a // g, b // g, c // g)


def _cyclo_join(u, v) -> tuple:
    return ProjLine(_cross(u, v)).coords


def _int_dot_zero(u, v) -> bool:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] == 0


def _backend(field):
    if field is QQ:
        return _int_triple, _int_join, _int_dot_zero
    return (lambda x: x.coords), _cyclo_join, (lambda u, v: is_zero(_dot(u, v)))


def _missing_joins(
    M,
    through: frozenset[int],
    sing: Sequence[tuple[object, frozenset[int]]],
    join_fn,
    limit: int | None = None,
) -> set | None:
    """Join keys from M to uncovered singular points; None once more than ``limit``."""
    missing: set = set()
    for q, s in sing:
        if q == M or not through.isdisjoint(s):
            continue
        missing.add(join_fn(M, q))
        if limit is not None and len(missing) > limit:
            return None
    return missing


def cone_cost(A: Arrangement, M: ProjPoint) -> ConeCost:
    """Lines that must be added so that ``M`` becomes a modular point."""
    vec, join_fn, _ = _backend(A.field)
    sing = [(vec(q), s) for q, s in A.incidences.items()]
    missing = _missing_joins(vec(M), _lines_through(A, M), sing, join_fn)
    return ConeCost(M, tuple(sorted(ProjLine(k) for k in missing)))


def generic_bound(d: int) -> int:
    if d < 3:
        raise ValueError("d must be at least 3")
    return comb(d - 2, 2)


# ---------------------------------------------------------------------------
# candidate set


@dataclass(frozen=True)
class CandidateSet:
    augmented: tuple[ProjLine, ...]
    vertices: tuple[ProjPoint, ...]
    line_samples: tuple[ProjPoint, ...]
    generic: ProjPoint

    def __len__(self) -> int:
        return len(self.vertices) + len(self.line_samples) + 1

    def points(self) -> list[ProjPoint]:
        return [*self.vertices, *self.line_samples, self.generic]


def augmented_lines(A: Arrangement) -> list[ProjLine]:
    """Lines of A together with every span of two singular points."""
    inc = list(A.incidences.items())
    extra: set[ProjLine] = set()
    for i, (p, sp) in enumerate(inc):
        for q, sq in inc[i + 1:]:
            if sp.isdisjoint(sq):
                extra.add(join(p, q))
    return list(A.lines) + sorted(extra)


def _points_on(line: ProjLine) -> tuple[tuple, tuple]:
    a, b, c = line.coords
    zero = a - a
    cands = [(zero, c, -b), (-c, zero, a), (b, -a, zero)]
    basis = []
    for v in cands:
        if any(x != 0 for x in v):
            if not basis or ProjPoint(v) != ProjPoint(basis[0]):
                basis.append(v)
        if len(basis) == 2:
            break
    return basis[0], basis[1]


def _parameter_values():
    yield 0
    t = 1
    while True:
        yield t
        yield -t
        t += 1


def _sample_on_line(line: ProjLine, avoid: set[ProjPoint]) -> ProjPoint:
    u, v = _points_on(line)
    for t in _parameter_values():
        p = ProjPoint(tuple(x + t * y for x, y in zip(u, v)))
        if p not in avoid:
            return p
    raise AssertionError("unreachable")


def _generic_point(lines: Sequence[ProjLine], field) -> ProjPoint:
    r = 0
    while True:
        for x in range(-r, r + 1):
            for y in range(-r, r + 1):
                if max(abs(x), abs(y)) != r:
                    continue
                p = ProjPoint(field(x), field(y), field(1))
                if not any(incident(p, l) for l in lines):
                    return p
        r += 1


def candidate_set(A: Arrangement, budget: int = DEFAULT_BUDGET) -> CandidateSet:
    aug = augmented_lines(A)
    n = len(aug)
    estimate = comb(n, 2) + n + 1
    if estimate > budget:
        raise BudgetExceeded(
            f"{n} augmented lines give up to {estimate} candidates (budget {budget}); "
            "use extss_upper_bound instead"
        )
    verts: set[ProjPoint] = set()
    for i in range(n):
        li = aug[i]
        for j in range(i + 1, n):
            verts.add(meet(li, aug[j]))
    samples = []
    for l in aug:
        samples.append(_sample_on_line(l, verts))
    return CandidateSet(tuple(aug), tuple(sorted(verts)), tuple(samples), _generic_point(aug, A.field))


# ---------------------------------------------------------------------------
# search


def _best_in_chunk(field, lines: Sequence[ProjLine], sing, chunk: Iterable[ProjPoint], bound: int):
    vec, join_fn, on = _backend(field)
    line_vecs = [vec(l) for l in lines]
    sing = [(vec(q), s) for q, s in sing]
    best_cost = bound
    best_apex = None
    best_lines = None
    for M in chunk:
        m = vec(M)
        through = frozenset(i for i, l in enumerate(line_vecs) if on(m, l))
        missing = _missing_joins(m, through, sing, join_fn, best_cost)
        if missing is None:
            continue
        c = len(missing)
        if best_apex is None or c < best_cost or (c == best_cost and M < best_apex):
            best_cost, best_apex, best_lines = c, M, missing
    if best_apex is None:
        return None
    return best_cost, best_apex, tuple(sorted(ProjLine(k) for k in best_lines))


def _search(
    A: Arrangement,
    candidates: list[ProjPoint],
    workers: int,
    mode: str,
    incumbent: ExtSSResult | None = None,
) -> ExtSSResult:
    """Minimum cone cost over ``candidates``, ties broken by canonical apex order.

    Each chunk prunes against its own running minimum, so the reduction is
    the same for any number of workers.
    """
    sing = list(A.incidences.items())
    bound = incumbent.k if incumbent is not None else len(sing)
    workers = max(1, workers)
    if workers == 1 or len(candidates) < 64:
        results = [_best_in_chunk(A.field, A.lines, sing, candidates, bound)]
    else:
        chunks = [candidates[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futs = [pool.submit(_best_in_chunk, A.field, A.lines, sing, ch, bound) for ch in chunks]
            results = [f.result() for f in futs]
    results = [r for r in results if r is not None]
    if incumbent is not None:
        results.append((incumbent.k, incumbent.apex, incumbent.lines))
    cost, apex, lines = min(results, key=lambda r: (r[0], r[1].sort_key()))
    return ExtSSResult(cost, apex, lines, mode, len(candidates))


def extss_exact(A: Arrangement, *, budget: int = DEFAULT_BUDGET, workers: int = 1) -> ExtSSResult:
    """Exact extSS with the minimizing apex (least in canonical order) and its lines."""
    w = is_supersolvable(A)
    if w is not None:
        return ExtSSResult(0, w.point, (), "exact", 0)
    cands = candidate_set(A, budget)
    # singular apexes first: their best cost bounds the full sweep
    ub = extss_upper_bound(A, workers=workers)
    return _search(A, cands.points(), workers, "exact", ub)


def extss_upper_bound(A: Arrangement, *, workers: int = 1) -> ExtSSResult:
    """Best cone over a singular point of A; always >= extSS(A)."""
    return _search(A, list(A.incidences), workers, "upper")


def default_workers() -> int:
    return os.cpu_count() or 1
