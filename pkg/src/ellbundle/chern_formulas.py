"""Characteristic classes of the universal bundles.

Single curve: classes live in ``Q[t, h] / (t^2, h^n)`` where ``h`` is the
hyperplane class of ``P^{n-1}`` and ``t`` the class of ``p0`` on ``E``.

Fibrations: classes live in ``Q[sigma, zeta, L] / (sigma^2 + L sigma)`` where
``sigma`` is the section, ``zeta`` the relative hyperplane class and ``L`` the
fundamental line bundle of the base.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .cohomology import (
    ChernData,
    GradedClass,
    P,
    chern_class,
    curve_ring,
    exp,
    fibration_ring,
    series_ratio,
)
from .errors import EllBundleError, RangeError


def _check_n(n: int, low: int = 2) -> None:
    if not isinstance(n, int) or n < low:
        raise RangeError(f"n must be an integer >= {low}, got {n!r}")


def _check_d(n: int, d: int) -> None:
    _check_n(n)
    if not 1 <= d <= n - 1:
        raise RangeError(f"d must satisfy 1 <= d <= n-1, got d={d}, n={n}")


def signed_product(f: Callable[[int], GradedClass], m: int, M: int, one: GradedClass) -> GradedClass:
    """``prod_{s=m}^{M} f(s)`` with the convention that makes ranges additive.

    ``M = m - 1`` is the empty product; for ``M < m - 1`` the result is
    ``prod_{s=M+1}^{m-1} f(s)^{-1}``, so that
    ``prod_m^M * prod_{M+1}^{K} = prod_m^K`` for every ``M``.
    """
    out = one
    if M >= m:
        for s in range(m, M + 1):
            out = out * f(s)
    elif M < m - 1:
        for s in range(M + 1, m):
            out = out * f(s).inverse()
    return out


# -- single curve -----------------------------------------------------------


def _curve(n: int, truncation: int | None):
    R = curve_ring(n, truncation)
    return R, R.gen("t"), R.gen("h")


def ch_U0_singlecurve(n: int, truncation: int | None = None) -> ChernData:
    """``ch U_0 = n e^{-h} + (1 - t)(1 - e^{-h})``."""
    _check_n(n)
    R, t, h = _curve(n, truncation)
    eh = exp(-h)
    return ChernData(n, eh.scale(n) + (1 - t) * (1 - eh), "ch")


def c_U0_singlecurve(n: int, truncation: int | None = None) -> ChernData:
    """``c(U_0) = (1 - h + t h)(1 - h)^{n-2}``."""
    return c_Ua_singlecurve(n, 0, truncation)


def c_Ua_singlecurve(n: int, a: int, truncation: int | None = None) -> ChernData:
    """``c(U_a) = (1 - h + t h)(1 - h)^{a+n-2}``; negative powers are series."""
    _check_n(n)
    R, t, h = _curve(n, truncation)
    return ChernData(n, (1 - h + t * h) * (1 - h) ** (a + n - 2), "c")


def ch_Ua_twist_singlecurve(n: int, a: int, b: int = 0,
                            truncation: int | None = None) -> ChernData:
    """``ch(U_a (x) O(b)) = n e^{(b-1)h} + (1 - a - t)(e^{bh} - e^{(b-1)h})``."""
    _check_n(n)
    R, t, h = _curve(n, truncation)
    e0, e1 = exp(h.scale(b - 1)), exp(h.scale(b))
    return ChernData(n, e0.scale(n) + (1 - a - t) * (e1 - e0), "ch")


def twist_c1_vanishes(n: int, a: int, b: int) -> bool:
    """``c_1(U_a (x) O(b)) = 0`` exactly when ``a - 1 = n (b - 1)``."""
    return a - 1 == n * (b - 1)


def ch_U_poincare(n: int, truncation: int | None = None) -> ChernData:
    """``ch U = n + t (1 - e^h)`` for ``U = U_1 (x) O(1)``."""
    _check_n(n)
    R, t, h = _curve(n, truncation)
    return ChernData(n, n + t * (1 - exp(h)), "ch")


def c_U_poincare(n: int, truncation: int | None = None) -> ChernData:
    """``c_1(U) = 0`` and ``c_k(U) = (-1)^k h^{k-1} t`` for ``k >= 2``."""
    _check_n(n)
    R, t, h = _curve(n, truncation)
    total = R.one()
    for k in range(2, R.truncation + 1):
        total = total + (h ** (k - 1) * t).scale((-1) ** k)
    return ChernData(n, total, "c")


def ch_Ud_singlecurve(n: int, d: int, truncation: int | None = None) -> ChernData:
    """``ch U(d) = (d - t) e^h + (n - d) + t``."""
    _check_d(n, d)
    R, t, h = _curve(n, truncation)
    return ChernData(n, (d - t) * exp(h) + (n - d) + t, "ch")


def c_Ud_singlecurve(n: int, d: int, truncation: int | None = None) -> ChernData:
    """``c(U(d)) = (1 - t + h)(1 + h)^{d-1}(1 + t) = (1 + h + h t)(1 + h)^{d-1}``."""
    _check_d(n, d)
    R, t, h = _curve(n, truncation)
    return ChernData(n, (1 + h + h * t) * (1 + h) ** (d - 1), "c")


# -- fibrations -----------------------------------------------------------


def _fib(truncation: int | None):
    R = fibration_ring(truncation)
    sigma, zeta, L = R.gens()
    return R, sigma, zeta, L


def ch_Ud_fibration(n: int, d: int, truncation: int | None = None) -> GradedClass:
    """``(e^{-sigma} + sum_{j=1}^{d-1} e^{-jL}) e^{zeta-L}
    + (e^{sigma} + sum_{j=1}^{n-d-1} e^{jL})``."""
    _check_d(n, d)
    R, sigma, zeta, L = _fib(truncation)
    left = exp(-sigma)
    for j in range(1, d):
        left = left + exp(L.scale(-j))
    right = exp(sigma)
    for j in range(1, n - d):
        right = right + exp(L.scale(j))
    return left * exp(zeta - L) + right


def ratio(c: int, L: GradedClass) -> GradedClass:
    """``(1 - e^{cL}) / (1 - e^L)``."""
    return series_ratio(c, L)


def ch_Ua_fibration(n: int, a: int, truncation: int | None = None) -> GradedClass:
    """``e^{-zeta} R(a+n) - R(a) + e^{-sigma}(1 - e^{-zeta})`` with
    ``R(c) = (1 - e^{cL}) / (1 - e^L)``."""
    _check_n(n)
    R, sigma, zeta, L = _fib(truncation)
    ez = exp(-zeta)
    return ez * ratio(a + n, L) - ratio(a, L) + exp(-sigma) * (1 - ez)


def hyperplane_class(n: int, truncation: int | None = None) -> GradedClass:
    """``[H] = zeta - n L``."""
    R, sigma, zeta, L = _fib(truncation)
    return zeta - L.scale(n)


def modification_increment(n: int, a: int, truncation: int | None = None) -> GradedClass:
    """``ch U_a - ch U_{a-1} = -e^{(a-1)L}(1 - e^{-[H]})``."""
    R, sigma, zeta, L = _fib(truncation)
    return -exp(L.scale(a - 1)) * (1 - exp(-hyperplane_class(n, truncation)))


def c1_Ua_displayed(n: int, a: int, truncation: int | None = None) -> GradedClass:
    """``[a n + (n^2 - n)/2] L - (n + a - 1) zeta``."""
    R, sigma, zeta, L = _fib(truncation)
    return L.scale(a * n + Fraction(n * n - n, 2)) - zeta.scale(n + a - 1)


def c2_Ua_displayed(n: int, a: int, truncation: int | None = None) -> GradedClass:
    """The displayed second Chern class of ``U_a``, including ``P(c)``."""
    R, sigma, zeta, L = _fib(truncation)
    k = a * n + Fraction(n * n - n, 2)
    return ((zeta * zeta).scale(Fraction((a + n - 1) * (a + n - 2), 2))
            - (zeta * L).scale(Fraction((n * n + 2 * a * n - 2 * n - a) * (a + n - 1), 2))
            + (L * L).scale(k * k / 2 - P(a + n) + P(a))
            + sigma * zeta)


def c_Ud_fibration(n: int, d: int, truncation: int | None = None) -> GradedClass:
    """``(1 + zeta - L + zeta sigma) prod_{r=1}^{d-1}(1 - (r+1)L + zeta)
    prod_{s=1}^{n-d-1}(1 + sL)``."""
    _check_d(n, d)
    R, sigma, zeta, L = _fib(truncation)
    one = R.one()
    out = 1 + zeta - L + zeta * sigma
    out = out * signed_product(lambda r: 1 - L.scale(r + 1) + zeta, 1, d - 1, one)
    return out * signed_product(lambda s: 1 + L.scale(s), 1, n - d - 1, one)


C_UA_BRANCHES = ("nonnegative", "middle", "negative")


def c_Ua_branch_for(n: int, a: int) -> str:
    """The range of ``a`` each product formula is stated for."""
    if a >= 0:
        return "nonnegative"
    if a >= -(n - 1):
        return "middle"
    return "negative"


def c_Ua_fibration(n: int, a: int, truncation: int | None = None,
                   branch: str | None = None) -> GradedClass:
    """Total Chern class of ``U_a`` by one of three product formulas.

    * ``a >= 0``:  lead * prod_{s=1}^{n+a-2}(1 + (s+1)L - zeta) * prod_{r=1}^{a-1}(1 + rL)^{-1}
    * ``-(n-1) <= a < 0``: lead * prod_{s=1}^{n+a-2}(1 + (s+1)L - zeta) * prod_{r=1}^{-a}(1 - rL)
    * ``a < -(n-1)``: lead * prod_{s=0}^{1-n-a}(1 - (s-1)L - zeta)^{-1} * prod_{r=1}^{-a}(1 - rL)

    with ``lead = 1 - zeta + L + zeta sigma``.  ``branch`` defaults to the
    one matching ``a``; any branch may be evaluated at any ``a`` since the
    products use :func:`signed_product`.
    """
    _check_n(n)
    branch = branch or c_Ua_branch_for(n, a)
    if branch not in C_UA_BRANCHES:
        raise EllBundleError(f"unknown branch {branch!r}")
    R, sigma, zeta, L = _fib(truncation)
    one = R.one()
    out = 1 - zeta + L + zeta * sigma
    if branch in ("nonnegative", "middle"):
        out = out * signed_product(lambda s: 1 + L.scale(s + 1) - zeta, 1, n + a - 2, one)
    else:
        out = out * signed_product(lambda s: (1 - L.scale(s - 1) - zeta).inverse(),
                                   0, 1 - n - a, one)
    if branch == "nonnegative":
        out = out * signed_product(lambda r: (1 + L.scale(r)).inverse(), 1, a - 1, one)
    else:
        out = out * signed_product(lambda r: 1 - L.scale(r), 1, -a, one)
    return out


def ch_Vn(n: int, truncation: int | None = None, ring=None) -> GradedClass:
    """``ch V_n = 1 + sum_{i=2}^{n} e^{-iL}`` (the splitting of pi_* O(n sigma))."""
    _check_n(n)
    R = ring or fibration_ring(truncation)
    L = R.gen("L")
    out = R.one()
    for i in range(2, n + 1):
        out = out + exp(L.scale(-i))
    return out


def ch_Wn(n: int, truncation: int | None = None) -> GradedClass:
    """``ch W_n = e^{sigma} + sum_{j=1}^{n-1} e^{jL}``."""
    _check_n(n, 1)
    R, sigma, zeta, L = _fib(truncation)
    out = exp(sigma)
    for j in range(1, n):
        out = out + exp(L.scale(j))
    return out


def ch_Wn_on_sigma(n: int, truncation: int | None = None) -> GradedClass:
    """``ch(W_n | sigma) = e^{-L} + sum_{i=1}^{n-1} e^{iL}``."""
    _check_n(n, 1)
    R, sigma, zeta, L = _fib(truncation)
    out = exp(-L)
    for i in range(1, n):
        out = out + exp(L.scale(i))
    return out


def specialize(x: GradedClass, n: int, truncation: int | None = None) -> GradedClass:
    """Restrict a fibration class to a single curve: ``L -> 0, sigma -> t, zeta -> h``."""
    target = curve_ring(n, truncation if truncation is not None else x.ring.truncation)
    return x.substitute({"L": 0, "sigma": target.gen("t"), "zeta": target.gen("h")}, target)


def c_from_ch(ch: GradedClass) -> GradedClass:
    return chern_class(ch)[0]


# -- identifiers -----------------------------------------------------------


class Family(str, enum.Enum):
    UA_CURVE = "U_a-singlecurve"
    UD_CURVE = "U(d)-singlecurve"
    POINCARE = "U-Poincare"
    UA_FIBRATION = "Ua-fibration"
    UD_FIBRATION = "U(d)-fibration"


@dataclass(frozen=True)
class UniversalBundleId:
    """Names one of the universal bundles together with its parameters."""

    family: Family
    n: int
    a: int | None = None
    d: int | None = None
    b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        _check_n(self.n)
        if self.family in (Family.UD_CURVE, Family.UD_FIBRATION):
            if self.d is None:
                raise RangeError("d is required")
            _check_d(self.n, self.d)
        if self.family in (Family.UA_CURVE, Family.UA_FIBRATION) and self.a is None:
            raise RangeError("a is required")

    def ch(self, truncation: int | None = None) -> GradedClass:
        f, n = self.family, self.n
        if f is Family.UA_CURVE:
            return ch_Ua_twist_singlecurve(n, self.a, self.b, truncation).total
        if f is Family.UD_CURVE:
            return ch_Ud_singlecurve(n, self.d, truncation).total
        if f is Family.POINCARE:
            return ch_U_poincare(n, truncation).total
        if f is Family.UA_FIBRATION:
            return ch_Ua_fibration(n, self.a, truncation)
        return ch_Ud_fibration(n, self.d, truncation)

    def c(self, truncation: int | None = None) -> GradedClass:
        f, n = self.family, self.n
        if f is Family.UA_CURVE:
            if self.b == 0:
                return c_Ua_singlecurve(n, self.a, truncation).total
            return c_from_ch(self.ch(truncation))
        if f is Family.UD_CURVE:
            return c_Ud_singlecurve(n, self.d, truncation).total
        if f is Family.POINCARE:
            return c_U_poincare(n, truncation).total
        if f is Family.UA_FIBRATION:
            return c_Ua_fibration(n, self.a, truncation)
        return c_Ud_fibration(n, self.d, truncation)
