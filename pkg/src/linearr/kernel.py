"""Exact scalars and homogeneous projective primitives.

Two kinds of field are supported: the rationals (scalars are
:class:`fractions.Fraction`) and cyclotomic fields Q(zeta_n) whose elements
are :class:`CyclotomicNumber` residues modulo the n-th cyclotomic polynomial.
Everything downstream only uses ``+ - * /``, :func:`is_zero` and the field
descriptor, so it is generic over both.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence, Union

__all__ = [
    "CyclotomicField",
    "CyclotomicNumber",
    "ConductorMismatch",
    "Field",
    "ProjLine",
    "ProjPoint",
    "QQ",
    "RationalField",
    "cyclotomic_polynomial",
    "collinear",
    "determinant",
    "euler_phi",
    "field_from_json",
    "incident",
    "is_zero",
    "join",
    "meet",
    "transform_line",
    "transform_point",
]


class ConductorMismatch(ValueError):
    """Raised when combining cyclotomic numbers of different conductors."""


# ---------------------------------------------------------------------------
# integer polynomials (coefficient lists, lowest degree first)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    >>> cyclotomic_polynomial(12)
    (1, 0, -1, 0, 1)
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


# ---------------------------------------------------------------------------
# fields


class RationalField:
    """The field Q; scalars are ``Fraction`` instances."""

    conductor = 1

    def __call__(self, value) -> Fraction:
        if isinstance(value, CyclotomicNumber):
            return value.to_rational()
        if isinstance(value, str):
            return Fraction(value)
        return Fraction(value)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def sort_key(self, x: Fraction):
        return x

    def to_json(self) -> dict:
        return {"type": "rational"}

    def scalar_to_json(self, x) -> str:
        return str(Fraction(x))

    def scalar_from_json(self, obj) -> Fraction:
        if isinstance(obj, dict):
            value = CyclotomicNumber.from_json(obj)
            return value.to_rational()
        return Fraction(obj) if not isinstance(obj, float) else _reject_float(obj)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def __repr__(self) -> str:
        return "QQ"


def _reject_float(obj):
    raise TypeError(f"floating-point scalar {obj!r} is not exact")


QQ = RationalField()


class CyclotomicField:
    """Q(zeta_n) as Q[x]/(Phi_n). Instances are cached per conductor."""

    _cache: dict[int, "CyclotomicField"] = {}

    def __new__(cls, n: int):
        if n < 1:
            raise ValueError("conductor must be positive")
        try:
            return cls._cache[n]
        except KeyError:
            pass
        self = super().__new__(cls)
        self.n = n
        self.conductor = n
        self.modulus = cyclotomic_polynomial(n)
        self.degree = len(self.modulus) - 1
        self._init_tables()
        cls._cache[n] = self
        return self

    def __getnewargs__(self):
        return (self.n,)

    def _init_tables(self) -> None:
        n, phi, mod = self.n, self.degree, self.modulus
        # powers[j] = zeta^j reduced, for 0 <= j < max(n, 2*phi - 1)
        size = max(n, 2 * phi - 1)
        powers = []
        vec = [0] * phi
        vec[0] = 1
        for _ in range(size):
            powers.append(tuple(vec))
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for j in range(phi):
                    vec[j] -= top * mod[j]
        self._powers = powers
        self._galois_chain = _subgroup_chain(n)

    def __call__(self, value) -> "CyclotomicNumber":
        if isinstance(value, CyclotomicNumber):
            if value.field is not self:
                raise ConductorMismatch(f"conductor {value.field.n} != {self.n}")
            return value
        return CyclotomicNumber.from_rational(self, Fraction(value))

    def element(self, coeffs: Iterable) -> "CyclotomicNumber":
        """Element sum(coeffs[i] * zeta^i); any length, reduced on the way in."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in fr]
        return CyclotomicNumber._make(self, self._reduce(ints), den)

    def zeta(self, k: int = 1) -> "CyclotomicNumber":
        return CyclotomicNumber._make(self, list(self._powers[k % self.n]), 1)

    @property
    def zero(self) -> "CyclotomicNumber":
        return CyclotomicNumber._make(self, [0] * self.degree, 1)

    @property
    def one(self) -> "CyclotomicNumber":
        return self.zeta(0)

    def _reduce(self, ints: list[int]) -> list[int]:
        phi = self.degree
        if len(ints) <= phi:
            return ints + [0] * (phi - len(ints))
        out = ints[:phi]
        powers = self._powers
        for k in range(phi, len(ints)):
            c = ints[k]
            if c:
                pk = powers[k % self.n]
                for j in range(phi):
                    out[j] += c * pk[j]
        return out

    def sort_key(self, x: "CyclotomicNumber"):
        return x.sort_key()

    def to_json(self) -> dict:
        return {"type": "cyclotomic", "conductor": self.n}

    def scalar_to_json(self, x) -> dict:
        return self(x).to_json()

    def scalar_from_json(self, obj) -> "CyclotomicNumber":
        if isinstance(obj, dict):
            return self(CyclotomicNumber.from_json(obj))
        if isinstance(obj, float):
            _reject_float(obj)
        return self(Fraction(obj))

    def __repr__(self) -> str:
        return f"CyclotomicField({self.n})"

    def __reduce__(self):
        return (CyclotomicField, (self.n,))


Field = Union[RationalField, CyclotomicField]


def field_from_json(obj: dict) -> Field:
    kind = obj.get("type", "rational")
    if kind == "rational":
        return QQ
    if kind == "cyclotomic":
        return CyclotomicField(int(obj["conductor"]))
    raise ValueError(f"unknown field type {kind!r}")


class CyclotomicNumber:
    """Element of Q(zeta_n) stored as integer numerators over one denominator.

    The representation is canonical: ``den > 0`` and the gcd of all
    numerators with ``den`` is 1, so equality is tuple equality.
    """

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, conductor: int, coeffs: Sequence):
        f = CyclotomicField(conductor)
        if len(coeffs) != f.degree:
            raise ValueError(f"expected {f.degree} coefficients, got {len(coeffs)}")
        other = f.element(coeffs)
        self.field, self.num, self.den = f, other.num, other.den
        self._hash = None

    @classmethod
    def _make(cls, field: CyclotomicField, ints: list[int], den: int) -> "CyclotomicNumber":
        self = object.__new__(cls)
        if den < 0:
            ints = [-c for c in ints]
            den = -den
        g = gcd(den, *ints)
        if g != 1:
            ints = [c // g for c in ints]
            den //= g
        self.field = field
        self.num = tuple(ints)
        self.den = den
        self._hash = None
        return self

    @classmethod
    def from_rational(cls, field: CyclotomicField, q: Fraction) -> "CyclotomicNumber":
        ints = [0] * field.degree
        ints[0] = q.numerator
        return cls._make(field, ints, q.denominator)

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> "CyclotomicNumber | None":
        if isinstance(other, CyclotomicNumber):
            if other.field is not self.field:
                raise ConductorMismatch(
                    f"conductor {self.field.n} != {other.field.n}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.field, Fraction(other))
        return None

    @property
    def conductor(self) -> int:
        return self.field.n

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.num[0], self.den)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return CyclotomicNumber._make(
                self.field, [a + b for a, b in zip(self.num, o.num)], self.den
            )
        return CyclotomicNumber._make(
            self.field,
            [a * o.den + b * self.den for a, b in zip(self.num, o.num)],
            self.den * o.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber._make(self.field, [-a for a in self.num], self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.num, o.num
        if not any(a[1:]):
            c = a[0]
            return CyclotomicNumber._make(self.field, [c * x for x in b], self.den * o.den)
        if not any(b[1:]):
            c = b[0]
            return CyclotomicNumber._make(self.field, [c * x for x in a], self.den * o.den)
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        return CyclotomicNumber._make(self.field, self.field._reduce(prod), self.den * o.den)

    __rmul__ = __mul__

    def galois(self, k: int) -> "CyclotomicNumber":
        """Image under the automorphism zeta -> zeta^k (gcd(k, n) = 1)."""
        f = self.field
        if gcd(k, f.n) != 1:
            raise ValueError("k must be coprime to the conductor")
        out = [0] * f.degree
        for i, c in enumerate(self.num):
            if c:
                p = f._powers[(i * k) % f.n]
                for j in range(f.degree):
                    out[j] += c * p[j]
        return CyclotomicNumber._make(f, out, self.den)

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugation zeta -> zeta^-1."""
        return self.galois(-1 % self.field.n) if self.field.n > 2 else self

    def norm(self) -> Fraction:
        return self._norm_and_cofactor()[0]

    def _norm_and_cofactor(self):
        # x runs through products of a over a growing chain of subgroups of
        # the Galois group; cof tracks x / a.
        x, cof = self, self.field.one
        for h, e in self.field._galois_chain:
            if e & (e - 1) == 0:
                step = h
                while e > 1:
                    y = x.galois(step)
                    cof = cof * y
                    x = x * y
                    step = step * step % self.field.n
                    e >>= 1
            else:
                acc, y = x, x
                for _ in range(e - 1):
                    y = y.galois(h)
                    acc = acc * y
                    cof = cof * y
                x = acc
        return x.to_rational(), cof

    def inverse(self) -> "CyclotomicNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if not any(self.num[1:]):
            return CyclotomicNumber.from_rational(self.field, Fraction(self.den, self.num[0]))
        norm, cof = self._norm_and_cofactor()
        return cof * (1 / norm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        acc, base = self.field.one, self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclotomicNumber):
            return self.field is other.field and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.field.n, self.num, self.den))
        return self._hash

    def __bool__(self) -> bool:
        return any(self.num)

    def sort_key(self) -> tuple:
        return self.coefficients

    def __complex__(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.field.n)
        return sum(c * z**i for i, c in enumerate(self.num)) / self.den

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "conductor": self.field.n,
            "coeffs": [str(c) for c in self.coefficients],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CyclotomicNumber":
        return cls(int(obj["conductor"]), [Fraction(c) for c in obj["coeffs"]])

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z{self.field.n}^{i}")
        return " + ".join(terms) if terms else "0"


def _subgroup_chain(n: int) -> list[tuple[int, int]]:
    """Pairs (h_j, e_j) with H_j = <H_{j-1}, h_j> and e_j = [H_j : H_{j-1}].

    H runs from the trivial group to all of (Z/n)^*.
    """
    units = [k for k in range(1, n) if gcd(k, n) == 1] or [1]
    sub = {1 % n if n > 1 else 0}
    chain = []
    for h in units:
        if h in sub:
            continue
        e, hp = 1, h
        while hp not in sub:
            hp = hp * h % n
            e += 1
        powers = [pow(h, i, n) for i in range(e)]
        sub = {a * b % n for a in sub for b in powers}
        chain.append((h, e))
    return chain


def is_zero(x) -> bool:
    if isinstance(x, CyclotomicNumber):
        return not any(x.num)
    return x == 0


# ---------------------------------------------------------------------------
# projective points and lines


def _canonical(coords: Sequence) -> tuple:
    if len(coords) != 3:
        raise ValueError("homogeneous coordinates must be a triple")
    for i, c in enumerate(coords):
        if not is_zero(c):
            if isinstance(c, CyclotomicNumber):
                inv = c.inverse()
                rest = tuple(x * inv for x in coords[i + 1:])
                one = c.field.one
                zero = c.field.zero
                return (zero,) * i + (one,) + tuple(
                    x if isinstance(x, CyclotomicNumber) else c.field(x) for x in rest
                )
            tail = []
            for x in coords[i + 1:]:
                if isinstance(x, CyclotomicNumber):
                    # mixed rational/cyclotomic triple: work in the cyclotomic field
                    return _canonical(tuple(x.field(y) for y in coords))
                tail.append(Fraction(x) / c)
            return (Fraction(0),) * i + (Fraction(1),) + tuple(tail)
    raise ValueError("homogeneous coordinates must not all vanish")


class _Projective:
    """Point or line of P^2 in leading-one canonical form."""

    __slots__ = ("coords", "_key", "_hash")

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = tuple(coords[0])
        self.coords = _canonical(coords)
        self._key = None
        self._hash = hash(self.coords)

    @classmethod
    def _raw(cls, canonical: tuple):
        self = object.__new__(cls)
        self.coords = canonical
        self._key = None
        self._hash = hash(canonical)
        return self

    @property
    def field(self) -> Field:
        for c in self.coords:
            if isinstance(c, CyclotomicNumber):
                return c.field
        return QQ

    def sort_key(self) -> tuple:
        if self._key is None:
            self._key = tuple(
                c.sort_key() if isinstance(c, CyclotomicNumber) else (c,) for c in self.coords
            )
        return self._key

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self.coords == other.coords

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other) -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other) -> bool:
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other) -> bool:
        return self.sort_key() > other.sort_key()

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def dual(self):
        raise NotImplementedError

    def to_json(self, field: Field | None = None) -> list:
        field = field or self.field
        return [field.scalar_to_json(c) for c in self.coords]

    def __reduce__(self):
        return (self.__class__._raw, (self.coords,))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join(map(_short, self.coords))})"


def _short(c) -> str:
    return str(c) if not isinstance(c, CyclotomicNumber) else f"[{c!r}]"


class ProjPoint(_Projective):
    __slots__ = ()

    def dual(self) -> "ProjLine":
        return ProjLine._raw(self.coords)


class ProjLine(_Projective):
    __slots__ = ()

    def dual(self) -> ProjPoint:
        return ProjPoint._raw(self.coords)


def _cross(u: Sequence, v: Sequence) -> tuple:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u: Sequence, v: Sequence):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    """The line through two distinct points."""
    if p == q:
        raise ValueError("join of a point with itself is undefined")
    return ProjLine(_cross(p.coords, q.coords))


def meet(l: ProjLine, m: ProjLine) -> ProjPoint:
    """The intersection point of two distinct lines."""
    if l == m:
        raise ValueError("meet of a line with itself is undefined")
    return ProjPoint(_cross(l.coords, m.coords))


def incident(p: ProjPoint, l: ProjLine) -> bool:
    return is_zero(_dot(p.coords, l.coords))


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    return is_zero(_dot(_cross(p.coords, q.coords), r.coords))


def transform_point(matrix: Sequence[Sequence], p: ProjPoint) -> ProjPoint:
    return ProjPoint(tuple(_dot(row, p.coords) for row in matrix))


def transform_line(matrix: Sequence[Sequence], l: ProjLine) -> ProjLine:
    """Image of a line under the point map x -> matrix @ x.

    Lines transform by the inverse transpose; the adjugate is used instead so
    no division is needed.
    """
    adj = _adjugate(matrix)
    # new line u' satisfies u'^T (M x) = u^T x, i.e. u' = M^{-T} u ~ adj(M)^T u
    return ProjLine(tuple(_dot([adj[r][c] for r in range(3)], l.coords) for c in range(3)))


def _adjugate(m: Sequence[Sequence]) -> list[list]:
    cof = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [x for x in range(3) if x != i]
            c = [x for x in range(3) if x != j]
            minor = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
            cof[i][j] = minor if (i + j) % 2 == 0 else -minor
    return [[cof[j][i] for j in range(3)] for i in range(3)]


def determinant(m: Sequence[Sequence]):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
