"""Poincare polynomial of a line arrangement and its integer splitting."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .arrangement import Arrangement, WeakCombinatorics

__all__ = [
    "ExponentTriple",
    "NotSplit",
    "PoincarePolynomial",
    "b6k_rs_closed_form",
    "poincare",
    "split_exponents",
]


@dataclass(frozen=True)
class PoincarePolynomial:
    """Coefficients (c0, c1, c2, c3) of a cubic in t."""

    coeffs: tuple[int, int, int, int]

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __call__(self, t):
        c0, c1, c2, c3 = self.coeffs
        return c0 + t * (c1 + t * (c2 + t * c3))

    def quotient_by_one_plus_t(self) -> tuple[int, int, int]:
        """(q0, q1, q2) with self = (1 + t)(q0 + q1 t + q2 t^2)."""
        c0, c1, c2, c3 = self.coeffs
        q0 = c0
        q1 = c1 - q0
        q2 = c2 - q1
        if c3 != q2:
            raise ValueError(f"{self} is not divisible by 1 + t")
        return q0, q1, q2

    def __str__(self) -> str:
        return " + ".join(f"{c}t^{i}" if i else str(c) for i, c in enumerate(self.coeffs))


class _NotSplit:
    """Sentinel: the quadratic cofactor has no integer linear factors."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "NotSplit"

    def __bool__(self) -> bool:
        return False


NotSplit = _NotSplit()


@dataclass(frozen=True)
class ExponentTriple:
    d1: int
    d2: int
    d3: int

    def __post_init__(self):
        if self.d1 != 1 or not (0 <= self.d2 <= self.d3):
            raise ValueError(f"invalid exponents {self.astuple()}")

    def astuple(self) -> tuple[int, int, int]:
        return (self.d1, self.d2, self.d3)

    def __iter__(self):
        return iter(self.astuple())

    def __eq__(self, other) -> bool:
        if isinstance(other, tuple):
            return self.astuple() == other
        if isinstance(other, ExponentTriple):
            return self.astuple() == other.astuple()
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.astuple())


def poincare(W: WeakCombinatorics | Arrangement) -> PoincarePolynomial:
    if isinstance(W, Arrangement):
        W = W.weak_combinatorics
    d = W.d
    b2 = sum((r - 1) * n for r, n in W.t.items())
    return PoincarePolynomial((1, d, b2, b2 + 1 - d))


def split_exponents(P: PoincarePolynomial) -> ExponentTriple | _NotSplit:
    """Exponents (1, d2, d3) if P = (1 + t)(1 + d2 t)(1 + d3 t) over Z."""
    q0, s, p = P.quotient_by_one_plus_t()
    if q0 != 1:
        return NotSplit
    # 1 + s t + p t^2 = (1 + a t)(1 + b t)  <=>  a + b = s, ab = p
    disc = s * s - 4 * p
    if disc < 0:
        return NotSplit
    r = isqrt(disc)
    if r * r != disc or (s + r) % 2:
        return NotSplit
    a, b = (s - r) // 2, (s + r) // 2
    if a < 0:
        return NotSplit
    return ExponentTriple(1, a, b)


def b6k_rs_closed_form(k: int) -> tuple[WeakCombinatorics, ExponentTriple]:
    """Combinatorics and exponents of the cone resolution of B_{6k}."""
    if k < 2:
        raise ValueError("k must be at least 2")
    d = 6 * k * k
    apex = 3 + 6 * k * k - 6 * k
    t = {
        apex: 1,
        4: 6 * (k - 1) ** 2,
        3: 15 * k - 12,
        2: 36 * k**3 - 72 * k**2 + 42 * k - 3,
    }
    return WeakCombinatorics(d, t), ExponentTriple(1, 6 * k - 3, 6 * k * k - 6 * k + 2)
