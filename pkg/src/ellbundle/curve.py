"""Exact arithmetic on Weierstrass cubics ``Y^2 Z = 4X^3 - g2 X Z^2 - g3 Z^3``.

Coefficients live in the rationals or in a prime field of characteristic
greater than three.  The group law on the smooth locus is the chord-tangent
rule with identity ``p0 = [0:1:0]``; the same formulas serve smooth, nodal
and cuspidal curves.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import (
    EllBundleError,
    FieldMismatchError,
    NotOnCurveError,
    SingularPointError,
    UnsupportedError,
)

__all__ = [
    "Field",
    "QQ",
    "GF",
    "FieldElem",
    "FiberType",
    "WeierstrassCurve",
    "CurvePoint",
    "discriminant",
    "parse_rational",
    "format_rational",
    "rational_roots",
]


def parse_rational(text) -> Fraction:
    """Parse ``"-3/2"`` (ASCII or unicode minus), ints and Fractions."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text.strip().replace("−", "-"))
    raise TypeError(f"cannot read a rational from {text!r}")


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """The rationals (``p is None``) or the prime field of order ``p``."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not _is_prime(self.p):
                raise EllBundleError(f"{self.p} is not prime")
            if self.p <= 3:
                raise UnsupportedError("characteristic 2 and 3 are not supported")

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def name(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatchError(f"{value.field.name} element used in {self.name}")
            return value
        q = parse_rational(value)
        if self.p is None:
            return FieldElem(self, q)
        if q.denominator % self.p == 0:
            raise EllBundleError(f"{q} has no image in {self.name}")
        return FieldElem(self, q.numerator * pow(q.denominator, -1, self.p) % self.p)

    def elements(self) -> Iterator["FieldElem"]:
        if self.p is None:
            raise UnsupportedError("cannot enumerate the rationals")
        for v in range(self.p):
            yield FieldElem(self, v)

    @classmethod
    def from_name(cls, name: str) -> "Field":
        name = name.strip()
        if name in ("Q", "QQ"):
            return QQ
        for prefix in ("GF(", "F_", "F"):
            if name.startswith(prefix):
                return cls(int(name[len(prefix):].rstrip(")")))
        raise EllBundleError(f"unknown field {name!r}")

    def __repr__(self):
        return self.name


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


class FieldElem:
    """An exact element of :class:`Field`; rationals or residues mod ``p``."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine {self.field.name} and {other.field.name}")
            return other
        return self.field(other)

    def _make(self, v) -> "FieldElem":
        if self.field.p is not None:
            v %= self.field.p
        return FieldElem(self.field, v)

    def __add__(self, other):
        return self._make(self.value + self._coerce(other).value)

    __radd__ = __add__

    def __sub__(self, other):
        return self._make(self.value - self._coerce(other).value)

    def __rsub__(self, other):
        return self._make(self._coerce(other).value - self.value)

    def __mul__(self, other):
        return self._make(self.value * self._coerce(other).value)

    __rmul__ = __mul__

    def __neg__(self):
        return self._make(-self.value)

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.field.p is None:
            return FieldElem(self.field, 1 / self.value)
        return FieldElem(self.field, pow(self.value, -1, self.field.p))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if self.field.p is None:
            return FieldElem(self.field, self.value ** k)
        return FieldElem(self.field, pow(self.value, k, self.field.p))

    def is_zero(self) -> bool:
        return self.value == 0

    def is_square(self) -> bool:
        if self.is_zero():
            return True
        if self.field.p is None:
            q = self.value
            if q < 0:
                return False
            return (math.isqrt(q.numerator) ** 2 == q.numerator
                    and math.isqrt(q.denominator) ** 2 == q.denominator)
        return pow(self.value, (self.field.p - 1) // 2, self.field.p) == 1

    def sqrt(self) -> "FieldElem | None":
        """A square root, or ``None``; brute force in the prime field case."""
        if not self.is_square():
            return None
        if self.field.p is None:
            q = self.value
            return FieldElem(self.field, Fraction(math.isqrt(q.numerator), math.isqrt(q.denominator)))
        p = self.field.p
        for y in range(p):
            if y * y % p == self.value:
                return FieldElem(self.field, y)
        return None  # pragma: no cover

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self.field(other).value
            except EllBundleError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.value))

    def __str__(self):
        return format_rational(self.value)

    def __repr__(self):
        return f"{self.field.name}({self})"


class FiberType(str, enum.Enum):
    SMOOTH = "Smooth"
    NODAL = "Nodal"
    CUSPIDAL = "Cuspidal"

    def __str__(self):
        return self.value


def discriminant(g2: FieldElem, g3: FieldElem) -> FieldElem:
    """``g2^3 - 27 g3^2``."""
    if not (isinstance(g2, FieldElem) and isinstance(g3, FieldElem)):
        raise TypeError("discriminant expects FieldElem arguments")
    if g2.field != g3.field:
        raise FieldMismatchError("g2 and g3 live in different fields")
    return g2 ** 3 - 27 * g3 ** 2


@dataclass(frozen=True)
class CurvePoint:
    """A point ``[X:Y:Z]`` normalized to ``Z = 1`` or the identity ``[0:1:0]``."""

    x: FieldElem
    y: FieldElem
    z: FieldElem
    is_singular: bool = False

    @property
    def is_identity(self) -> bool:
        return self.z.is_zero()

    @property
    def field(self) -> Field:
        return self.x.field

    def sort_key(self):
        if self.is_identity:
            return (0, 0, 0)
        return (1, self.x.value, self.y.value)

    def to_json(self) -> dict:
        return {"X": str(self.x), "Y": str(self.y), "Z": str(self.z)}

    def __str__(self):
        if self.is_identity:
            return "p0"
        return f"({self.x}, {self.y})"

    def __repr__(self):
        return f"CurvePoint{self}"


class WeierstrassCurve:
    """The cubic ``y^2 = 4x^3 - g2 x - g3`` with marked point ``p0 = [0:1:0]``."""

    def __init__(self, g2, g3, field: Field = QQ):
        self.field = field
        self.g2 = field(g2)
        self.g3 = field(g3)

    def __eq__(self, other):
        return (isinstance(other, WeierstrassCurve) and self.field == other.field
                and self.g2 == other.g2 and self.g3 == other.g3)

    def __hash__(self):
        return hash((self.field, self.g2, self.g3))

    def __repr__(self):
        return f"WeierstrassCurve(g2={self.g2}, g3={self.g3}, field={self.field.name})"

    # -- invariants ---------------------------------------------------------

    @cached_property
    def discriminant(self) -> FieldElem:
        return discriminant(self.g2, self.g3)

    @cached_property
    def fiber_type(self) -> FiberType:
        if not self.discriminant.is_zero():
            return FiberType.SMOOTH
        if self.g2.is_zero() and self.g3.is_zero():
            return FiberType.CUSPIDAL
        return FiberType.NODAL

    def classify(self) -> FiberType:
        return self.fiber_type

    @property
    def is_smooth(self) -> bool:
        return self.fiber_type is FiberType.SMOOTH

    @cached_property
    def singular_point(self) -> CurvePoint | None:
        """The double root ``x0`` of ``4x^3 - g2 x - g3`` as ``(x0, 0)``."""
        kind = self.fiber_type
        if kind is FiberType.SMOOTH:
            return None
        zero = self.field(0)
        if kind is FiberType.CUSPIDAL:
            return CurvePoint(zero, zero, self.field(1), True)
        x0 = -3 * self.g3 / (2 * self.g2)
        return CurvePoint(x0, zero, self.field(1), True)

    @cached_property
    def node_is_split(self) -> bool | None:
        """Whether the tangent slopes at the node are defined over the field.

        Near the node ``y^2 = 4u^2(u + 3x0)``, so the slopes are
        ``+-2 sqrt(3 x0)``.  ``None`` unless the curve is nodal.
        """
        if self.fiber_type is not FiberType.NODAL:
            return None
        return (3 * self.singular_point.x).is_square()

    # -- points ---------------------------------------------------------------

    @cached_property
    def identity(self) -> CurvePoint:
        return CurvePoint(self.field(0), self.field(1), self.field(0))

    def rhs(self, x: FieldElem) -> FieldElem:
        return 4 * x ** 3 - self.g2 * x - self.g3

    def contains(self, x, y) -> bool:
        x, y = self.field(x), self.field(y)
        return y * y == self.rhs(x)

    def point(self, x, y) -> CurvePoint:
        x, y = self.field(x), self.field(y)
        if y * y != self.rhs(x):
            raise NotOnCurveError(f"({x}, {y}) is not on {self!r}")
        sing = self.singular_point
        is_sing = sing is not None and sing.x == x and y.is_zero()
        return CurvePoint(x, y, self.field(1), is_sing)

    def point_from_json(self, obj: dict) -> CurvePoint:
        z = self.field(obj.get("Z", "1"))
        if z.is_zero():
            if not self.field(obj.get("X", "0")).is_zero():
                raise NotOnCurveError("the only point at infinity is [0:1:0]")
            return self.identity
        return self.point(self.field(obj["X"]) / z, self.field(obj["Y"]) / z)

    def _check(self, P: CurvePoint) -> None:
        if P.field != self.field:
            raise FieldMismatchError("point and curve live in different fields")
        if P.is_identity:
            return
        if P.is_singular:
            raise SingularPointError("the singular point is not in the group")
        if P.y * P.y != self.rhs(P.x):
            raise NotOnCurveError(f"{P} is not on {self!r}")

    # -- group law ------------------------------------------------------------

    def neg(self, P: CurvePoint) -> CurvePoint:
        self._check(P)
        if P.is_identity:
            return P
        return CurvePoint(P.x, -P.y, P.z)

    def add(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        self._check(P)
        self._check(Q)
        if P.is_identity:
            return Q
        if Q.is_identity:
            return P
        if P.x == Q.x:
            if (P.y + Q.y).is_zero():
                return self.identity
            # tangent at P (P == Q, y != 0)
            slope = (12 * P.x * P.x - self.g2) / (2 * P.y)
        else:
            slope = (Q.y - P.y) / (Q.x - P.x)
        x3 = slope * slope / 4 - P.x - Q.x
        y3 = -(slope * (x3 - P.x) + P.y)
        return CurvePoint(x3, y3, self.field(1))

    def sub(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        return self.add(P, self.neg(Q))

    def scalar_mul(self, k: int, P: CurvePoint) -> CurvePoint:
        self._check(P)
        if k < 0:
            return self.scalar_mul(-k, self.neg(P))
        result, base = self.identity, P
        while k:
            if k & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            k >>= 1
        return result

    def sum(self, points: Iterable[CurvePoint]) -> CurvePoint:
        total = self.identity
        for P in points:
            total = self.add(total, P)
        return total

    # -- enumeration ----------------------------------------------------------

    def points(self) -> list[CurvePoint]:
        """All points over a prime field, identity first, singular point included."""
        if not self.field.is_finite:
            raise UnsupportedError("point enumeration needs a prime field")
        p = self.field.p
        roots: dict[int, list[int]] = {}
        for y in range(p):
            roots.setdefault(y * y % p, []).append(y)
        out = [self.identity]
        for x in self.field.elements():
            for y in roots.get(self.rhs(x).value, ()):
                out.append(self.point(x, y))
        return out

    def smooth_points(self) -> list[CurvePoint]:
        return [P for P in self.points() if not P.is_singular]

    def group_order(self) -> int:
        return len(self.smooth_points())

    def order(self, P: CurvePoint) -> int:
        """Order of ``P`` by repeated addition (prime field use)."""
        self._check(P)
        k, Q = 1, P
        while not Q.is_identity:
            Q = self.add(Q, P)
            k += 1
            if k > 10 ** 6:  # pragma: no cover
                raise UnsupportedError("order too large to find by iteration")
        return k

    def torsion_points(self, n: int) -> set[CurvePoint]:
        """All smooth points ``P`` with ``n P = p0``.

        Prime fields are handled by enumeration; over the rationals ``n <= 4``
        is solved through division polynomials and rational roots.
        """
        if n < 1:
            raise EllBundleError("n must be positive")
        if n == 1:
            return {self.identity}
        if self.field.is_finite:
            return {P for P in self.smooth_points() if self.scalar_mul(n, P).is_identity}
        if n > 4:
            raise UnsupportedError("rational torsion is only solved for n <= 4")
        xs: set[Fraction] = set()
        for m in range(2, n + 1):
            if n % m == 0:
                xs.update(rational_roots(self._division_factor(m)))
        out = {self.identity}
        for x in xs:
            x = self.field(x)
            y = self.rhs(x).sqrt()
            if y is None:
                continue
            for cand in {y, -y}:
                P = self.point(x, cand)
                if not P.is_singular and self.scalar_mul(n, P).is_identity:
                    out.add(P)
        return out

    def _division_factor(self, m: int) -> list[Fraction]:
        """Coefficients (highest degree first) of the x-polynomial of exact-order-m points.

        Uses ``Y = y/2`` to reach ``Y^2 = x^3 + A x + B``.
        """
        A = -self.g2.value / 4
        B = -self.g3.value / 4
        if m == 2:
            return [Fraction(4), Fraction(0), -self.g2.value, -self.g3.value]
        if m == 3:
            return [Fraction(3), Fraction(0), 6 * A, 12 * B, -A * A]
        if m == 4:
            return [Fraction(1), Fraction(0), 5 * A, 20 * B, -5 * A * A, -4 * A * B,
                    -8 * B * B - A ** 3]
        raise UnsupportedError(f"no division polynomial for m={m}")  # pragma: no cover

    def in_linear_system(self, points: Sequence[CurvePoint], n: int) -> bool:
        """Whether the multiset of ``n`` smooth points sums to ``p0``."""
        if len(points) != n:
            raise EllBundleError(f"expected {n} points, got {len(points)}")
        return self.sum(points).is_identity

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"field": self.field.name, "g2": str(self.g2), "g3": str(self.g3)}

    @classmethod
    def from_json(cls, obj: dict) -> "WeierstrassCurve":
        field = Field.from_name(str(obj.get("field", "Q")))
        return cls(parse_rational(str(obj["g2"])), parse_rational(str(obj["g3"])), field)


def _divisors(m: int) -> list[int]:
    m = abs(m)
    small = [d for d in range(1, math.isqrt(m) + 1) if m % d == 0]
    return sorted(set(small + [m // d for d in small]))


def rational_roots(coeffs: Sequence[Fraction]) -> set[Fraction]:
    """Rational roots of a polynomial given highest degree first."""
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if len(coeffs) <= 1:
        return set()
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    roots: set[Fraction] = set()
    while ints and ints[-1] == 0:
        roots.add(Fraction(0))
        ints.pop()
    if len(ints) <= 1:
        return roots

    def value(x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in ints:
            acc = acc * x + c
        return acc

    for p in _divisors(ints[-1]):
        for q in _divisors(ints[0]):
            for s in (1, -1):
                x = Fraction(s * p, q)
                if value(x) == 0:
                    roots.add(x)
    return roots
