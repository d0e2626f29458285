"""Semistable degree-zero bundles on a Weierstrass cubic in Atiyah normal form.

A bundle is a direct sum of ``I_r(lambda)``: for each degree-zero sheaf
``lambda`` a partition listing the sizes ``r`` of its indecomposable blocks.
Line bundles ``O(e - p0)`` are keyed by their point ``e``; the rank one
torsion free sheaf at the singular point is :data:`F`.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .curve import CurvePoint, WeierstrassCurve
from .errors import EllBundleError, SingularPointError, TorsionSheafError


@dataclass(frozen=True)
class LineBundle:
    """``O_E(e - p0)`` for a smooth point ``e``."""

    point: CurvePoint

    def __post_init__(self):
        if self.point.is_singular:
            raise SingularPointError("line bundles are indexed by smooth points")

    def sort_key(self):
        return (0,) + self.point.sort_key()

    def to_json(self):
        return self.point.to_json()

    def __str__(self):
        return f"O({self.point} - p0)"


@dataclass(frozen=True)
class TorsionF:
    """The rank one torsion free, non locally free sheaf at the singular point."""

    def sort_key(self):
        return (1, 0, 0)

    def to_json(self):
        return "F"

    def __str__(self):
        return "F"


F = TorsionF()
DegreeZeroSheaf = Union[LineBundle, TorsionF]


def _partition(parts: Iterable[int]) -> tuple:
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if not parts or any(p < 1 for p in parts):
        raise EllBundleError(f"partition must consist of positive integers, got {parts}")
    return parts


def as_sheaf(curve: WeierstrassCurve, obj) -> DegreeZeroSheaf:
    if isinstance(obj, (LineBundle, TorsionF)):
        return obj
    if isinstance(obj, CurvePoint):
        return LineBundle(obj)
    if obj == "F":
        return F
    raise EllBundleError(f"cannot read a degree-zero sheaf from {obj!r}")


@dataclass(frozen=True)
class AtiyahBundle:
    curve: WeierstrassCurve
    components: tuple  # ((sheaf, partition), ...) in canonical order

    def __post_init__(self):
        merged: dict = {}
        for sheaf, parts in self.components:
            if isinstance(sheaf, LineBundle) and sheaf.point.field != self.curve.field:
                raise EllBundleError("component point is over another field")
            merged.setdefault(sheaf, []).extend(parts)
        if F in merged and self.curve.is_smooth:
            raise TorsionSheafError("F only exists on singular curves")
        comps = tuple(sorted(((s, _partition(p)) for s, p in merged.items()),
                             key=lambda c: c[0].sort_key()))
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_map(cls, curve: WeierstrassCurve, comps: Mapping) -> "AtiyahBundle":
        return cls(curve, tuple((as_sheaf(curve, s), tuple(p)) for s, p in comps.items()))

    @classmethod
    def I(cls, curve: WeierstrassCurve, r: int, sheaf=None) -> "AtiyahBundle":
        """``I_r(lambda)``; ``lambda`` defaults to the trivial bundle."""
        sheaf = LineBundle(curve.identity) if sheaf is None else as_sheaf(curve, sheaf)
        return cls(curve, ((sheaf, (r,)),))

    @property
    def rank(self) -> int:
        return sum(sum(p) for _, p in self.components)

    def partition_at(self, sheaf) -> tuple:
        sheaf = as_sheaf(self.curve, sheaf)
        for s, p in self.components:
            if s == sheaf:
                return p
        return ()

    def has_torsion_sheaf(self) -> bool:
        return any(s == F for s, _ in self.components)

    def _reject_F(self, what: str) -> None:
        if self.has_torsion_sheaf():
            raise TorsionSheafError(f"{what} is not defined here for components at F")

    def __add__(self, other: "AtiyahBundle") -> "AtiyahBundle":
        if other.curve != self.curve:
            raise EllBundleError("bundles live on different curves")
        return AtiyahBundle(self.curve, self.components + other.components)

    def __str__(self):
        if not self.components:
            return "0"
        pieces = []
        for s, parts in self.components:
            for r in parts:
                pieces.append(f"I_{r}({s})")
        return " + ".join(pieces)

    def to_json(self) -> dict:
        return {"curve": self.curve.to_json(),
                "components": [{"point": s.to_json(), "partition": list(p)}
                               for s, p in self.components]}

    @classmethod
    def from_json(cls, obj: dict, curve: WeierstrassCurve | None = None) -> "AtiyahBundle":
        curve = curve or WeierstrassCurve.from_json(obj["curve"])
        comps = []
        for c in obj["components"]:
            pt = c["point"]
            sheaf = F if pt == "F" else LineBundle(curve.point_from_json(pt))
            comps.append((sheaf, tuple(c["partition"])))
        return cls(curve, tuple(comps))


def direct_sum(*bundles: AtiyahBundle) -> AtiyahBundle:
    if not bundles:
        raise EllBundleError("empty direct sum")
    out = bundles[0]
    for b in bundles[1:]:
        out = out + b
    return out


@dataclass(frozen=True)
class LinearSystemDivisor:
    """A degree-``n`` divisor ``sum d_i e_i + m * (singular point)``.

    ``det_class`` is the group-law sum of the smooth part (``None`` when the
    singular point occurs); the divisor lies in ``|n p0|`` exactly when that
    sum is ``p0`` and the singular multiplicity is zero.
    """

    curve: WeierstrassCurve
    n: int
    smooth_part: tuple  # ((point, multiplicity), ...) sorted
    singular_mult: int = 0

    def __post_init__(self):
        counts: Counter = Counter()
        for P, m in self.smooth_part:
            if P.is_singular:
                raise SingularPointError("use singular_mult for the singular point")
            if m < 1:
                raise EllBundleError("multiplicities must be positive")
            counts[P] += m
        parts = tuple(sorted(counts.items(), key=lambda pm: pm[0].sort_key()))
        object.__setattr__(self, "smooth_part", parts)
        if self.singular_mult < 0:
            raise EllBundleError("singular multiplicity must be nonnegative")
        if self.singular_mult and self.curve.is_smooth:
            raise EllBundleError("smooth curves have no singular point")
        if sum(m for _, m in parts) + self.singular_mult != self.n:
            raise EllBundleError("multiplicities must add up to n")

    @classmethod
    def from_points(cls, curve: WeierstrassCurve, points: Sequence[CurvePoint]) -> "LinearSystemDivisor":
        sing = sum(1 for P in points if P.is_singular)
        return cls(curve, len(points), tuple((P, 1) for P in points if not P.is_singular), sing)

    @property
    def det_class(self) -> CurvePoint | None:
        if self.singular_mult:
            return None
        return self.curve.sum(self.curve.scalar_mul(m, P) for P, m in self.smooth_part)

    @property
    def in_linear_system(self) -> bool:
        return self.singular_mult == 0 and self.det_class.is_identity

    def points(self) -> list:
        """Smooth points repeated by multiplicity."""
        return [P for P, m in self.smooth_part for _ in range(m)]

    def support(self) -> set:
        return {P for P, _ in self.smooth_part}

    def multiplicity(self, P: CurvePoint) -> int:
        for Q, m in self.smooth_part:
            if Q == P:
                return m
        return 0

    def __add__(self, other: "LinearSystemDivisor") -> "LinearSystemDivisor":
        if other.curve != self.curve:
            raise EllBundleError("divisors live on different curves")
        return LinearSystemDivisor(self.curve, self.n + other.n,
                                   self.smooth_part + other.smooth_part,
                                   self.singular_mult + other.singular_mult)

    def __str__(self):
        terms = [(f"{m}*{P}" if m > 1 else str(P)) for P, m in self.smooth_part]
        if self.singular_mult:
            terms.append(f"{self.singular_mult}*sing")
        return " + ".join(terms)

    def to_json(self) -> dict:
        det = self.det_class
        return {
            "n": self.n,
            "points": [{"point": P.to_json(), "multiplicity": m} for P, m in self.smooth_part],
            "singularMultiplicity": self.singular_mult,
            "class": det.to_json() if det is not None else None,
            "inLinearSystem": self.in_linear_system,
        }


# -- operations ---------------------------------------------------------------


def zeta(V: AtiyahBundle) -> LinearSystemDivisor:
    """Each ``lambda = O(e - p0)`` of total multiplicity ``d`` contributes ``d e``;
    components at ``F`` contribute to the singular multiplicity."""
    smooth, sing = [], 0
    for s, parts in V.components:
        if s == F:
            sing += sum(parts)
        else:
            smooth.append((s.point, sum(parts)))
    return LinearSystemDivisor(V.curve, V.rank, tuple(smooth), sing)


def dim_hom(V: AtiyahBundle, W: AtiyahBundle) -> int:
    """``sum_lambda sum_{j,k} min(r_j, s_k)``; distinct line bundles contribute 0."""
    if V.curve != W.curve:
        raise EllBundleError("bundles live on different curves")
    V._reject_F("dim Hom")
    W._reject_F("dim Hom")
    total = 0
    for s, parts in V.components:
        other = W.partition_at(s)
        total += sum(min(r, q) for r in parts for q in other)
    return total


def is_regular(V: AtiyahBundle) -> bool:
    V._reject_F("regularity")
    return all(len(parts) == 1 for _, parts in V.components)


def h0_twist(V: AtiyahBundle, sheaf) -> int:
    """``h^0(V (x) lambda^{-1})``: the number of blocks at ``lambda``."""
    sheaf = as_sheaf(V.curve, sheaf)
    if not isinstance(sheaf, LineBundle):
        raise TorsionSheafError("h0_twist needs a line bundle")
    return len(V.partition_at(sheaf))


def regular_representative(D: LinearSystemDivisor) -> AtiyahBundle:
    """The regular bundle with ``zeta = D``: ``I_d(O(e - p0))`` per point of multiplicity ``d``."""
    if D.singular_mult:
        raise TorsionSheafError("divisors meeting the singular point are not handled")
    return AtiyahBundle(D.curve, tuple((LineBundle(P), (m,)) for P, m in D.smooth_part))


def dual(V: AtiyahBundle) -> AtiyahBundle:
    """``I_r(lambda)^dual = I_r(lambda^{-1})``; ``F`` is self-dual."""
    comps = []
    for s, parts in V.components:
        comps.append((s if s == F else LineBundle(V.curve.neg(s.point)), parts))
    return AtiyahBundle(V.curve, tuple(comps))


def det_point(V: AtiyahBundle) -> CurvePoint:
    """``det V = O(e - p0)`` with ``e = sum r_i e_i`` in the group law."""
    V._reject_F("det_point")
    C = V.curve
    return C.sum(C.scalar_mul(sum(parts), s.point) for s, parts in V.components)


def h0_bound(profile: Sequence[tuple]) -> Fraction:
    """``max(mu_0, 1) * rank`` for a Harder-Narasimhan profile ``[(rank, degree), ...]``.

    ``mu_0`` is the largest slope; slopes must be strictly decreasing.
    """
    if not profile:
        raise EllBundleError("empty profile")
    slopes = []
    for r, d in profile:
        if r < 1:
            raise EllBundleError("ranks must be positive")
        slopes.append(Fraction(d, r))
    if any(a <= b for a, b in zip(slopes, slopes[1:])):
        raise EllBundleError("slopes of a Harder-Narasimhan profile must strictly decrease")
    rank = sum(r for r, _ in profile)
    return max(slopes[0], Fraction(1)) * rank


def h0_bound_check(profile: Sequence[tuple], h0: int) -> bool:
    return h0 <= h0_bound(profile)


def partitions(n: int, largest: int | None = None):
    """All partitions of ``n`` as descending tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def all_bundles(curve: WeierstrassCurve, sheaves: Sequence, rank: int):
    """Every bundle of the given rank supported on a subset of ``sheaves``."""
    sheaves = [as_sheaf(curve, s) for s in sheaves]

    def rec(i, left):
        if i == len(sheaves):
            if left == 0:
                yield ()
            return
        yield from rec(i + 1, left)
        for k in range(1, left + 1):
            for p in partitions(k):
                for rest in rec(i + 1, left - k):
                    yield ((sheaves[i], p),) + rest

    for comps in rec(0, rank):
        yield AtiyahBundle(curve, comps)
