"""Nilpotent exponentials, inverses and formal power-series ratios."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..errors import EllBundleError
from .ring import GradedClass


def _horner(x: GradedClass, coeffs) -> GradedClass:
    """``sum coeffs[k] x^k`` by Horner's rule."""
    ring = x.ring
    acc = ring.const(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def exp(x: GradedClass) -> GradedClass:
    """``sum x^k / k!``; ``x`` must have zero constant term (so it is nilpotent)."""
    if x.constant_term() != 0:
        raise EllBundleError("exp needs a class with zero constant term")
    N = x.ring.truncation
    return _horner(x, [Fraction(1, factorial(k)) for k in range(N + 1)])


def inverse(x: GradedClass) -> GradedClass:
    """Inverse of a class with nonzero constant term by the geometric series."""
    c = x.constant_term()
    if c == 0:
        raise EllBundleError("a class with zero constant term is not invertible")
    y = x.scale(1 / c) - 1
    N = x.ring.truncation
    return _horner(y, [(-1) ** k for k in range(N + 1)]).scale(1 / c)


@lru_cache(maxsize=None)
def ratio_coefficients(c: int, N: int) -> tuple:
    """Coefficients ``q_0..q_N`` of ``(1 - e^{cx}) / (1 - e^x)``.

    Both series have vanishing constant term, so after dividing through by
    ``x`` this is ordinary long division: numerator ``a_k = -c^{k+1}/(k+1)!``,
    denominator ``b_k = -1/(k+1)!``.
    """
    a = [Fraction(-(c ** (k + 1)), factorial(k + 1)) for k in range(N + 1)]
    b = [Fraction(-1, factorial(k + 1)) for k in range(N + 1)]
    q: list = []
    for k in range(N + 1):
        s = a[k] - sum(b[j] * q[k - j] for j in range(1, k + 1))
        q.append(s / b[0])
    return tuple(q)


def series_ratio(c: int, x: GradedClass) -> GradedClass:
    """``(1 - e^{cx}) / (1 - e^x)`` evaluated on a class without constant term."""
    if x.constant_term() != 0:
        raise EllBundleError("series_ratio needs a class with zero constant term")
    return _horner(x, list(ratio_coefficients(c, x.ring.truncation)))


def P(c) -> Fraction:
    """Weight-two coefficient of the ratio: ``c (2c - 1)(c - 1) / 12``."""
    c = Fraction(c)
    return c * (2 * c - 1) * (c - 1) / 12
