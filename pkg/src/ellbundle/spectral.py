"""The spectral cover ``T -> |n p0|`` described through its fibers.

The fiber over ``D = sum d_i e_i`` is the set of distinct ``e_i`` with
ramification index ``d_i``; nothing here builds ``T`` as a variety.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from .bundles import LinearSystemDivisor
from .curve import CurvePoint, WeierstrassCurve
from .errors import EllBundleError, SingularPointError, TorsionSheafError, UnsupportedError


@dataclass(frozen=True)
class SpectralFiber:
    divisor: LinearSystemDivisor
    points: tuple  # ((point, ramification index), ...)

    @property
    def degree(self) -> int:
        return sum(i for _, i in self.points)

    @property
    def is_ramified(self) -> bool:
        return any(i > 1 for _, i in self.points)

    @property
    def max_index(self) -> int:
        return max(i for _, i in self.points)

    def to_json(self) -> list:
        return [{"point": P.to_json(), "index": i} for P, i in self.points]

    def __str__(self):
        return ", ".join(f"{P}^{i}" if i > 1 else str(P) for P, i in self.points)


def fiber(D: LinearSystemDivisor) -> SpectralFiber:
    if D.singular_mult:
        raise TorsionSheafError("fibers over divisors meeting the singular point are not modelled")
    if not D.in_linear_system:
        raise EllBundleError(f"{D} is not in |{D.n} p0|")
    return SpectralFiber(D, D.smooth_part)


def full_ramification_locus(curve: WeierstrassCurve, n: int) -> set:
    """``{n e : e in E[n]}``, the fibers ramified to order ``n``."""
    if not curve.is_smooth:
        raise UnsupportedError("the ramification locus is computed for smooth curves")
    return {LinearSystemDivisor(curve, n, ((e, n),)) for e in curve.torsion_points(n)}


def linear_system(curve: WeierstrassCurve, n: int) -> set:
    """All divisors of ``|n p0|`` with smooth support, by enumeration over a prime field."""
    if not curve.field.is_finite:
        raise UnsupportedError("enumerating |n p0| needs a prime field")
    pts = sorted(curve.smooth_points(), key=CurvePoint.sort_key)
    out = set()
    for head in combinations_with_replacement(pts, n - 1):
        last = curve.neg(curve.sum(head))
        out.add(LinearSystemDivisor.from_points(curve, list(head) + [last]))
    return out


def ramified_divisors(curve: WeierstrassCurve, n: int, order: int | None = None) -> set:
    """Divisors of ``|n p0|`` with a point of multiplicity at least ``order`` (default n)."""
    order = n if order is None else order
    return {D for D in linear_system(curve, n) if fiber(D).max_index >= order}


def fiber_of_r(curve: WeierstrassCurve, n: int, e: CurvePoint, samples: int = 20,
               seed: int = 0, pool: Sequence[CurvePoint] | None = None) -> set:
    """Sample divisors ``D in |n p0|`` that contain ``e``.

    The remaining points are drawn from ``pool`` (all smooth points over a
    prime field by default) and the last one is forced by the group law.
    """
    if n < 2:
        raise EllBundleError("n must be at least 2")
    if e.is_singular:
        raise SingularPointError("e must be a smooth point")
    curve.neg(e)  # validates e
    if n == 2:
        return {LinearSystemDivisor.from_points(curve, [e, curve.neg(e)])}
    if pool is None:
        if not curve.field.is_finite:
            pool = [curve.identity, e, curve.neg(e)]
        else:
            pool = curve.smooth_points()
    pool = sorted(pool, key=CurvePoint.sort_key)
    rng = random.Random(seed)
    out = set()
    for _ in range(samples):
        chosen = [e] + [rng.choice(pool) for _ in range(n - 2)]
        last = curve.neg(curve.sum(chosen))
        out.add(LinearSystemDivisor.from_points(curve, chosen + [last]))
    return out


def _sub_sums(curve: WeierstrassCurve, D: LinearSystemDivisor, r: int) -> set:
    pts = D.points()
    return {curve.sum(c) for c in combinations(pts, r)}


def cover_is_irreducible(family: Sequence[LinearSystemDivisor]) -> bool:
    """Desk test for irreducibility of a spectral cover over a parameter line.

    A degree-``r`` subcover picks ``r`` points in every fiber; their sum is a
    map from the line to ``E`` and therefore constant.  If some value is an
    ``r``-subsum in every sampled fiber the family is reported reducible
    (a heuristic certificate, exact for split families); otherwise no such
    subcover exists and the answer is ``True``.
    """
    if not family:
        raise EllBundleError("empty family")
    curve, n = family[0].curve, family[0].n
    for D in family:
        if D.n != n or D.curve != curve:
            raise EllBundleError("family members have inconsistent ranks or curves")
        if D.singular_mult:
            raise TorsionSheafError("fibers at the singular point are not modelled")
    for r in range(1, n // 2 + 1):  # complements give the same answer
        common = _sub_sums(curve, family[0], r)
        for D in family[1:]:
            common &= _sub_sums(curve, D, r)
            if not common:
                break
        if common:
            return False
    return True


def ramification_profile(D: LinearSystemDivisor) -> Counter:
    """Histogram of ramification indices in the fiber over ``D``."""
    return Counter(i for _, i in fiber(D).points)
