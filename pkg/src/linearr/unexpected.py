"""Fat-point linear systems and unexpected curves of dual point sets.

All dimensions are exact: a form of degree ``deg`` vanishes to order ``m`` at
``P`` exactly when every partial derivative of order ``m - 1`` vanishes at
``P`` (Euler's relation takes care of the lower orders), so ``I(X)_deg`` is
the kernel of a matrix over the field of the points and its dimension is the
number of monomials minus an exact rank.

A "general" point is modelled by seeded random rational points. Special
points can only make the linear system larger, so agreement across several
independent trials is required before a verdict is returned.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .arrangement import Arrangement
from .kernel import QQ, CyclotomicNumber, Field, ProjLine, ProjPoint, is_zero
from .supersolvable import is_supersolvable

__all__ = [
    "DegreeRow",
    "DualPoints",
    "FatPointScheme",
    "TrialDisagreement",
    "UnexpectedReport",
    "admits_unexpected_curve",
    "condition_matrix",
    "divide_by_linear",
    "expected_dimension",
    "ideal_basis",
    "ideal_dimension",
    "line_product",
    "monomials",
    "multiple_point_scheme",
    "random_rational_point",
    "rank",
    "supersolvable_criterion",
    "unexpected_scan",
]

Monomial = tuple[int, int, int]
Form = dict  # Monomial -> field scalar


class TrialDisagreement(RuntimeError):
    """Random points gave different dimensions; at least one was not general."""


# ---------------------------------------------------------------------------
# schemes


@dataclass(frozen=True)
class FatPointScheme:
    """The scheme m_1 P_1 + ... + m_s P_s."""

    points: tuple[ProjPoint, ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        pts = tuple(self.points)
        ms = tuple(int(m) for m in self.multiplicities)
        if len(pts) != len(ms):
            raise ValueError("one multiplicity per point is required")
        if any(m < 1 for m in ms):
            raise ValueError("multiplicities must be positive")
        if len(set(pts)) != len(pts):
            raise ValueError("points of a fat point scheme must be distinct")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "multiplicities", ms)

    @classmethod
    def uniform(cls, points: Iterable[ProjPoint], m: int = 1) -> "FatPointScheme":
        pts = tuple(points)
        return cls(pts, (m,) * len(pts))

    def __len__(self) -> int:
        return len(self.points)

    def plus(self, point: ProjPoint, m: int) -> "FatPointScheme":
        """This scheme with one more fat point (multiplicities add if already present)."""
        if point in self.points:
            i = self.points.index(point)
            ms = list(self.multiplicities)
            ms[i] += m
            return FatPointScheme(self.points, tuple(ms))
        return FatPointScheme(self.points + (point,), self.multiplicities + (m,))

    def conditions(self) -> int:
        return sum(comb(m + 1, 2) for m in self.multiplicities)


@dataclass(frozen=True)
class DualPoints:
    """The points whose coordinates are the coefficients of an arrangement's lines."""

    points: tuple[ProjPoint, ...]
    field: Field = QQ

    @classmethod
    def of(cls, A: Arrangement) -> "DualPoints":
        return cls(tuple(l.dual() for l in A.lines), A.field)

    def __len__(self) -> int:
        return len(self.points)

    def to_arrangement(self) -> Arrangement:
        return Arrangement([p.dual() for p in self.points], self.field)

    def scheme(self) -> FatPointScheme:
        return FatPointScheme.uniform(self.points, 1)


def multiple_point_scheme(A: Arrangement, r: int, m: int | None = None) -> FatPointScheme:
    """The r-fold points of A, each with multiplicity ``m`` (default ``r``)."""
    pts = [p for p, k in A.multiplicities.items() if k == r]
    return FatPointScheme.uniform(pts, r if m is None else m)


# ---------------------------------------------------------------------------
# linear algebra


def monomials(deg: int) -> list[Monomial]:
    """Degree-``deg`` monomials in x, y, z, lexicographically descending."""
    return [(a, b, deg - a - b) for a in range(deg, -1, -1) for b in range(deg - a, -1, -1)]


def expected_dimension(X: FatPointScheme, deg: int) -> int:
    if deg < 0:
        raise ValueError("degree must be non-negative")
    return max(comb(deg + 2, 2) - X.conditions(), 0)


def _powers(x, n: int, one) -> list:
    out = [one]
    for _ in range(n):
        out.append(out[-1] * x)
    return out


def condition_matrix(X: FatPointScheme, deg: int, field: Field = QQ) -> list[list]:
    """Rows: derivative conditions of order min(m-1, deg) at each point.

    Each row is a scaled partial derivative d^i/dx d^j/dy d^k/dz, divided by
    i! j! k! to keep entries small, evaluated at the point.
    """
    mons = monomials(deg)
    one, zero = field.one, field.zero
    rows = []
    for P, m in zip(X.points, X.multiplicities):
        order = min(m - 1, deg)
        px, py, pz = (field(c) for c in P.coords)
        pw = [_powers(px, deg, one), _powers(py, deg, one), _powers(pz, deg, one)]
        for i, j, k in monomials(order):
            row = []
            for a, b, c in mons:
                if a < i or b < j or c < k:
                    row.append(zero)
                    continue
                coef = comb(a, i) * comb(b, j) * comb(c, k)
                row.append(pw[0][a - i] * pw[1][b - j] * pw[2][c - k] * coef)
            rows.append(row)
    return rows


def _echelon(rows: list[list]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form (in place on copies) and pivot columns."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if not is_zero(rows[i][col]):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        prow = [x * inv if not is_zero(x) else x for x in rows[r]]
        rows[r] = prow
        nz = [c for c in range(col, ncols) if not is_zero(prow[c])]
        for i in range(len(rows)):
            if i == r:
                continue
            f = rows[i][col]
            if is_zero(f):
                continue
            row = rows[i]
            for c in nz:
                row[c] = row[c] - f * prow[c]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in range(2, int(p**0.5) + 1):
        if p % q == 0:
            return False
    return True


def _good_prime(conductor: int, start: int = 2**30) -> tuple[int, int]:
    """A prime p = 1 mod conductor and an element of order ``conductor`` mod p."""
    p = start - start % conductor + 1
    while True:
        if _is_prime(p):
            for g in range(2, p):
                w = pow(g, (p - 1) // conductor, p)
                if all(pow(w, conductor // q, p) != 1 for q in range(2, conductor + 1)
                       if conductor % q == 0 and _is_prime(q)):
                    return p, w
        p += conductor


def _modular_rank(rows: list[list], field: Field) -> int | None:
    """Rank of the reduction mod a prime; None if some denominator vanishes there.

    Reduction is a ring map, so every minor reduces to the reduced minor and
    the rank mod p never exceeds the rank over the field.
    """
    conductor = getattr(field, "n", 1)
    p, w = _good_prime(conductor)
    wp = [pow(w, i, p) for i in range(max(conductor, 1))]

    def red(x) -> int:
        if isinstance(x, CyclotomicNumber):
            num, den = x.num, x.den
        else:
            x = Fraction(x)
            num, den = (x.numerator,), x.denominator
        if den % p == 0:
            raise ZeroDivisionError
        return sum(c * wp[i] for i, c in enumerate(num)) * pow(den, -1, p) % p

    try:
        mat = [[red(x) for x in row] for row in rows]
    except ZeroDivisionError:
        return None
    r = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][col], -1, p)
        prow = [x * inv % p for x in mat[r]]
        mat[r] = prow
        for i in range(r + 1, len(mat)):
            f = mat[i][col]
            if f:
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], prow)]
        r += 1
        if r == len(mat):
            break
    return r


def rank(rows: list[list], field: Field | None = None) -> int:
    """Exact rank; a full rank modulo a prime is accepted as a certificate."""
    if not rows:
        return 0
    if field is not None:
        full = min(len(rows), len(rows[0]))
        r = _modular_rank(rows, field)
        if r == full:
            return r
    return len(_echelon(rows)[1])


def _field_of(X: FatPointScheme, field: Field | None) -> Field:
    if field is not None:
        return field
    return X.points[0].field if X.points else QQ


def ideal_dimension(X: FatPointScheme, deg: int, field: Field | None = None) -> int:
    """Exact dim of I(X)_deg."""
    if deg < 0:
        raise ValueError("degree must be non-negative")
    K = _field_of(X, field)
    n = comb(deg + 2, 2)
    rows = condition_matrix(X, deg, K)
    return n - rank(rows, K)


def ideal_basis(X: FatPointScheme, deg: int, field: Field | None = None) -> list[Form]:
    """A basis of I(X)_deg as forms {monomial: coefficient}."""
    K = _field_of(X, field)
    mons = monomials(deg)
    ech, pivots = _echelon(condition_matrix(X, deg, K))
    free = [c for c in range(len(mons)) if c not in set(pivots)]
    basis = []
    for fcol in free:
        form = {mons[fcol]: K.one}
        for row, pcol in zip(ech, pivots):
            v = row[fcol]
            if not is_zero(v):
                form[mons[pcol]] = -v
        basis.append(form)
    return basis


# ---------------------------------------------------------------------------
# forms


def _form_mul_linear(f: Form, l: ProjLine) -> Form:
    out: Form = {}
    for (a, b, c), v in f.items():
        for shift, w in zip(((1, 0, 0), (0, 1, 0), (0, 0, 1)), l.coords):
            if is_zero(w):
                continue
            key = (a + shift[0], b + shift[1], c + shift[2])
            out[key] = out[key] + v * w if key in out else v * w
    return {k: v for k, v in out.items() if not is_zero(v)}


def line_product(lines: Sequence[ProjLine], field: Field = QQ) -> Form:
    f: Form = {(0, 0, 0): field.one}
    for l in lines:
        f = _form_mul_linear(f, l)
    return f


def divide_by_linear(f: Form, l: ProjLine) -> tuple[Form, Form]:
    """Quotient and remainder of ``f`` by the linear form ``l``.

    The division is in the variable with the first nonzero coefficient of
    ``l``; the remainder does not involve that variable and vanishes exactly
    when ``l`` divides ``f``.
    """
    v = next(i for i, c in enumerate(l.coords) if not is_zero(c))
    lead = l.coords[v]
    rest = [(i, c) for i, c in enumerate(l.coords) if i != v and not is_zero(c)]
    f = dict(f)
    q: Form = {}
    while True:
        cands = [m for m, c in f.items() if m[v] > 0 and not is_zero(c)]
        if not cands:
            break
        mon = max(cands, key=lambda m: (m[v], m))
        c = f.pop(mon) / lead
        qm = list(mon)
        qm[v] -= 1
        qm = tuple(qm)
        q[qm] = q[qm] + c if qm in q else c
        for i, w in rest:
            tm = list(qm)
            tm[i] += 1
            tm = tuple(tm)
            f[tm] = f[tm] - c * w if tm in f else -c * w
    return q, {m: c for m, c in f.items() if not is_zero(c)}


def _proportional(f: Form, g: Form) -> bool:
    f = {m: c for m, c in f.items() if not is_zero(c)}
    g = {m: c for m, c in g.items() if not is_zero(c)}
    if f.keys() != g.keys() or not f:
        return False
    m0 = next(iter(f))
    ratio = f[m0] / g[m0]
    return all(f[m] == ratio * g[m] for m in f)


# ---------------------------------------------------------------------------
# unexpected curves


def random_rational_point(rng: random.Random, avoid: Iterable[ProjPoint] = (), bound: int = 10**6) -> ProjPoint:
    """A point (x : y : 1) with nonzero rational x, y of height up to ``bound``.

    Small or zero coordinates put the point on the coordinate lines and
    other low-height curves where linear systems jump, so both are avoided.
    """
    avoid = set(avoid)

    def coord() -> Fraction:
        return Fraction(rng.choice((-1, 1)) * rng.randint(1, bound), rng.randint(1, bound))

    while True:
        x, y = coord(), coord()
        p = ProjPoint(x, y, Fraction(1))
        if p not in avoid:
            return p


@dataclass(frozen=True)
class DegreeRow:
    deg: int
    expdim: int
    dim_without: int
    dim_with: int
    bound: int
    unexpected: bool

    def to_json(self) -> dict:
        return {
            "deg": self.deg,
            "expdim": self.expdim,
            "dim_without_P": self.dim_without,
            "dim_with_P": self.dim_with,
            "bound": self.bound,
            "unexpected": self.unexpected,
        }


def _degree_row(Z: DualPoints, deg: int, trials: int, seed: int) -> DegreeRow:
    if deg < 2:
        raise ValueError("degree must be at least 2")
    if trials < 1:
        raise ValueError("at least one trial is required")
    K = Z.field
    base = Z.scheme()
    without = ideal_dimension(base, deg, K)
    bound = max(without - comb(deg, 2), 0)
    dims = set()
    for t in range(trials):
        rng = random.Random(f"{seed}:{deg}:{t}")
        P = random_rational_point(rng, Z.points)
        P = ProjPoint(tuple(K(c) for c in P.coords))
        dims.add(ideal_dimension(base.plus(P, deg - 1), deg, K))
    if len(dims) > 1:
        raise TrialDisagreement(f"degree {deg}: dimensions {sorted(dims)} across trials; re-run with another seed")
    (with_p,) = dims
    expdim = max(comb(deg + 2, 2) - base.conditions() - comb(deg, 2), 0)
    return DegreeRow(deg, expdim, without, with_p, bound, with_p > bound)


def admits_unexpected_curve(Z: DualPoints, deg: int, trials: int = 3, seed: int = 0) -> bool:
    """Whether Z admits an unexpected curve of degree ``deg`` with a general (deg-1)-fold point."""
    return _degree_row(Z, deg, trials, seed).unexpected


@dataclass
class UnexpectedReport:
    rows: list[DegreeRow] = field(default_factory=list)

    @property
    def degrees(self) -> list[int]:
        """Degrees in which an unexpected curve was detected."""
        return [r.deg for r in self.rows if r.unexpected]

    @property
    def any(self) -> bool:
        return bool(self.degrees)

    def to_json(self) -> dict:
        return {"rows": [r.to_json() for r in self.rows], "unexpected_degrees": self.degrees}


def unexpected_scan(
    Z: DualPoints,
    degrees: Iterable[int] | None = None,
    *,
    trials: int = 3,
    seed: int = 0,
) -> UnexpectedReport:
    """Per-degree table; degrees default to 2 .. |Z| - 1."""
    if degrees is None:
        degrees = range(2, len(Z))
    return UnexpectedReport([_degree_row(Z, d, trials, seed) for d in degrees])


def supersolvable_criterion(A: Arrangement) -> bool:
    """d > 2m for a supersolvable arrangement with maximal multiplicity m."""
    if is_supersolvable(A) is None:
        raise ValueError("the criterion only applies to supersolvable arrangements")
    return len(A) > 2 * A.weak_combinatorics.max_multiplicity
