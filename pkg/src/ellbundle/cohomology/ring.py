"""Truncated graded-commutative rings with monomial rewrite rules.

Every generator has weight 1 (half the cohomological degree).  A ring is
described by a :class:`RingSpec`: the ordered generator names, a list of
homogeneous rewrite rules ``monomial -> integer polynomial`` and a truncation
weight ``N``.  Classes are dense vectors of integer numerators over a common
denominator, indexed by the normal-form monomials of weight at most ``N``.
Products go through a precomputed multiplication table (see ``_backend``).
"""
from __future__ import annotations

import math
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from ..errors import EllBundleError, RingMismatchError
from . import _backend

Monomial = tuple  # exponent vector, one entry per generator

DEFAULT_TRUNCATION = 8
TRUNCATION_ENV = "ELLBUNDLE_TRUNCATION"


def default_truncation() -> int:
    """Truncation weight, overridable with ``ELLBUNDLE_TRUNCATION``."""
    raw = os.environ.get(TRUNCATION_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_TRUNCATION
    try:
        value = int(raw)
    except ValueError:
        raise EllBundleError(f"{TRUNCATION_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise EllBundleError(f"{TRUNCATION_ENV} must be positive")
    return value


def _weight(m: Monomial) -> int:
    return sum(m)


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class Rule:
    """Rewrite ``lhs -> sum(coeff * monomial)``; an empty ``rhs`` kills ``lhs``."""

    lhs: Monomial
    rhs: tuple = ()  # tuple of (monomial, int)


@dataclass(frozen=True)
class RingSpec:
    generators: tuple
    rules: tuple = ()
    truncation: int = DEFAULT_TRUNCATION
    name: str = ""

    def __post_init__(self):
        k = len(self.generators)
        if len(set(self.generators)) != k:
            raise EllBundleError("generator names must be distinct")
        if self.truncation < 0:
            raise EllBundleError("truncation weight must be nonnegative")
        for rule in self.rules:
            if len(rule.lhs) != k or _weight(rule.lhs) == 0:
                raise EllBundleError(f"malformed rule {rule}")
            for mono, coeff in rule.rhs:
                if len(mono) != k or not isinstance(coeff, int):
                    raise EllBundleError(f"rule {rule} needs integer coefficients")
                # homogeneous and strictly smaller: rewriting terminates
                if _weight(mono) != _weight(rule.lhs) or not mono < rule.lhs:
                    raise EllBundleError(f"rule {rule} is not weight-preserving and decreasing")

    # -- monomial bookkeeping -----------------------------------------------

    def index_of(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise EllBundleError(f"ring {self.label} has no generator {name!r}") from None

    @property
    def label(self) -> str:
        return self.name or "Q[" + ",".join(self.generators) + "]"

    def is_normal(self, m: Monomial) -> bool:
        return not any(_divides(r.lhs, m) for r in self.rules)

    def reduce(self, m: Monomial, rng: random.Random | None = None) -> dict:
        """Normal form of a monomial as ``{monomial: int}``.

        With ``rng`` the applicable rule is picked at random, which is how the
        confluence tests exercise different reduction orders.
        """
        if rng is None:
            return dict(self._reduce_cached(m))
        return self._reduce(m, rng)

    @lru_cache(maxsize=None)
    def _reduce_cached(self, m: Monomial) -> tuple:
        return tuple(sorted(self._reduce(m, None).items()))

    def _reduce(self, m: Monomial, rng) -> dict:
        out: dict = {}
        stack = [(m, 1)]
        while stack:
            mono, coeff = stack.pop()
            if _weight(mono) > self.truncation:
                continue
            applicable = [r for r in self.rules if _divides(r.lhs, mono)]
            if not applicable:
                out[mono] = out.get(mono, 0) + coeff
                continue
            rule = rng.choice(applicable) if rng is not None else applicable[0]
            rest = tuple(x - y for x, y in zip(mono, rule.lhs))
            for rm, rc in rule.rhs:
                stack.append((tuple(x + y for x, y in zip(rm, rest)), coeff * rc))
        return {k: v for k, v in out.items() if v}

    @cached_property
    def basis(self) -> tuple:
        """Normal-form monomials of weight <= N in canonical order."""
        k = len(self.generators)
        monos = [m for m in product(range(self.truncation + 1), repeat=k)
                 if _weight(m) <= self.truncation and self.is_normal(m)]
        monos.sort(key=monomial_sort_key)
        return tuple(monos)

    @cached_property
    def index(self) -> dict:
        return {m: i for i, m in enumerate(self.basis)}

    @cached_property
    def table(self) -> "_backend.MulTable":
        """CSR table over pairs ``i * size + j`` of basis products."""
        basis, index = self.basis, self.index
        size = len(basis)
        ptr, col, val = [0], [], []
        for a in basis:
            wa = _weight(a)
            for b in basis:
                if wa + _weight(b) <= self.truncation:
                    prod = tuple(x + y for x, y in zip(a, b))
                    for mono, c in sorted(self._reduce_cached(prod)):
                        col.append(index[mono])
                        val.append(c)
                ptr.append(len(col))
        return _backend.MulTable(size, ptr, col, val)

    # -- constructors -------------------------------------------------------

    def zero(self) -> "GradedClass":
        return GradedClass(self, (0,) * len(self.basis), 1)

    def const(self, value) -> "GradedClass":
        return self.from_terms({(0,) * len(self.generators): value})

    def one(self) -> "GradedClass":
        return self.const(1)

    def gen(self, name: str) -> "GradedClass":
        e = [0] * len(self.generators)
        e[self.index_of(name)] = 1
        return self.from_terms({tuple(e): 1})

    def gens(self) -> tuple:
        return tuple(self.gen(g) for g in self.generators)

    def monomial(self, exps: Mapping[str, int] | Sequence[int], coeff=1) -> "GradedClass":
        if isinstance(exps, Mapping):
            e = [0] * len(self.generators)
            for name, k in exps.items():
                e[self.index_of(name)] += k
            exps = e
        return self.from_terms({tuple(exps): coeff})

    def from_terms(self, terms: Mapping) -> "GradedClass":
        """Build a class from arbitrary (not necessarily normal) monomials."""
        acc: dict = {}
        for mono, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            mono = tuple(mono)
            if len(mono) != len(self.generators) or min(mono, default=0) < 0:
                raise EllBundleError(f"bad exponent vector {mono} for {self.label}")
            for nm, c in self._reduce_cached(mono):
                acc[nm] = acc.get(nm, 0) + c * coeff
        return self._from_fraction_map(acc)

    def _from_fraction_map(self, acc: Mapping) -> "GradedClass":
        den = 1
        for v in acc.values():
            den = math.lcm(den, Fraction(v).denominator)
        num = [0] * len(self.basis)
        for mono, v in acc.items():
            v = Fraction(v)
            num[self.index[mono]] += v.numerator * (den // v.denominator)
        return GradedClass.normalized(self, num, den)

    def random_class(self, rng: random.Random, density: float = 0.5, span: int = 5) -> "GradedClass":
        terms = {m: Fraction(rng.randint(-span, span), rng.randint(1, 3))
                 for m in self.basis if rng.random() < density}
        return self.from_terms(terms)

    def check_same(self, other: "RingSpec") -> None:
        if self != other:
            raise RingMismatchError(f"classes from {self.label} and {other.label} do not mix")

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "truncation": self.truncation,
            "rules": [
                {"lhs": format_monomial(self.generators, r.lhs),
                 "rhs": [[format_monomial(self.generators, m), c] for m, c in r.rhs]}
                for r in self.rules
            ],
        }

    def __repr__(self):
        return f"RingSpec({self.label}, N={self.truncation})"


def monomial_sort_key(m: Monomial):
    """Weight first, then lexicographically descending (sigma-first)."""
    return (_weight(m), tuple(-x for x in m))


def format_monomial(gens: Sequence[str], m: Monomial) -> str:
    parts = []
    for name, e in zip(gens, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def _fmt_coeff(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GradedClass:
    """Immutable element of a truncated ring; integer numerators over ``den``."""

    __slots__ = ("ring", "num", "den", "_hash")

    def __init__(self, ring: RingSpec, num: tuple, den: int):
        self.ring = ring
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def normalized(cls, ring: RingSpec, num: Sequence[int], den: int) -> "GradedClass":
        if den < 0:
            num, den = [-x for x in num], -den
        g = math.gcd(den, *num) if num else den
        if g > 1:
            num = [x // g for x in num]
            den //= g
        if not any(num):
            den = 1
        return cls(ring, tuple(num), den)

    # -- coefficient access -------------------------------------------------

    def coefficients(self) -> dict:
        """``{monomial: Fraction}`` over nonzero terms in canonical order."""
        return {m: Fraction(c, self.den) for m, c in zip(self.ring.basis, self.num) if c}

    def terms(self) -> list:
        return list(self.coefficients().items())

    def coefficient(self, mono: Mapping[str, int] | Sequence[int]) -> Fraction:
        if isinstance(mono, Mapping):
            e = [0] * len(self.ring.generators)
            for name, k in mono.items():
                e[self.ring.index_of(name)] += k
            mono = e
        i = self.ring.index.get(tuple(mono))
        if i is None:
            raise EllBundleError(f"{mono} is not a normal-form monomial of {self.ring.label}")
        return Fraction(self.num[i], self.den)

    def constant_term(self) -> Fraction:
        return Fraction(self.num[0], self.den) if self.ring.basis else Fraction(0)

    def weight_part(self, k: int) -> "GradedClass":
        num = [c if _weight(m) == k else 0 for m, c in zip(self.ring.basis, self.num)]
        return GradedClass.normalized(self.ring, num, self.den)

    def truncate(self, k: int) -> "GradedClass":
        num = [c if _weight(m) <= k else 0 for m, c in zip(self.ring.basis, self.num)]
        return GradedClass.normalized(self.ring, num, self.den)

    def is_zero(self) -> bool:
        return not any(self.num)

    def max_weight(self) -> int:
        return max((_weight(m) for m, c in zip(self.ring.basis, self.num) if c), default=-1)

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other) -> "GradedClass":
        if isinstance(other, GradedClass):
            self.ring.check_same(other.ring)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        raise TypeError(f"cannot combine GradedClass with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        den = math.lcm(self.den, other.den)
        fa, fb = den // self.den, den // other.den
        return GradedClass.normalized(
            self.ring, [a * fa + b * fb for a, b in zip(self.num, other.num)], den)

    __radd__ = __add__

    def __neg__(self):
        return GradedClass(self.ring, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, q) -> "GradedClass":
        q = Fraction(q)
        return GradedClass.normalized(
            self.ring, [a * q.numerator for a in self.num], self.den * q.denominator)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, GradedClass):
            return NotImplemented
        self.ring.check_same(other.ring)
        out = _backend.mul(self.num, other.num, self.ring.table)
        return GradedClass.normalized(self.ring, out, self.den * other.den)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            from .series import inverse
            return inverse(self) ** (-k)
        result, base = self.ring.one(), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exp(self) -> "GradedClass":
        from .series import exp
        return exp(self)

    def inverse(self) -> "GradedClass":
        from .series import inverse
        return inverse(self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self.ring == other.ring and self.den == other.den and self.num == other.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.num, self.den))
        return self._hash

    # -- substitution ---------------------------------------------------------

    def substitute(self, mapping: Mapping[str, "GradedClass | int | Fraction"],
                   target: RingSpec) -> "GradedClass":
        """Ring map sending each generator to a class of ``target``.

        Generators missing from ``mapping`` are sent to the generator of the
        same name in ``target``.
        """
        images = []
        for name in self.ring.generators:
            if name in mapping:
                img = mapping[name]
                if isinstance(img, GradedClass):
                    target.check_same(img.ring)
                else:
                    img = target.const(img)
            else:
                img = target.gen(name)
            images.append(img)
        powers = [[target.one()] for _ in images]
        result = target.zero()
        for mono, coeff in self.coefficients().items():
            term = target.const(coeff)
            for i, e in enumerate(mono):
                while len(powers[i]) <= e:
                    powers[i].append(powers[i][-1] * images[i])
                if e:
                    term = term * powers[i][e]
            result = result + term
        return result

    def change_ring(self, target: RingSpec) -> "GradedClass":
        """Reinterpret in a ring with the same generator names."""
        idx = [target.index_of(g) for g in self.ring.generators]
        terms = {}
        for mono, coeff in self.coefficients().items():
            e = [0] * len(target.generators)
            for i, k in zip(idx, mono):
                e[i] = k
            terms[tuple(e)] = coeff
        return target.from_terms(terms)

    # -- output -------------------------------------------------------------

    def __str__(self):
        pieces = []
        for mono, q in self.coefficients().items():
            name = format_monomial(self.ring.generators, mono)
            mag = abs(q)
            if name == "1":
                body = _fmt_coeff(mag)
            elif mag == 1:
                body = name
            else:
                body = f"{_fmt_coeff(mag)}*{name}"
            pieces.append(("-" if q < 0 else "+", body))
        if not pieces:
            return "0"
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"GradedClass({self})"

    def to_json(self) -> dict:
        gens = self.ring.generators
        return {
            "ring": list(gens),
            "truncation": self.ring.truncation,
            "terms": [
                {"monomial": {g: e for g, e in zip(gens, m) if e}, "coeff": _fmt_coeff(q)}
                for m, q in self.coefficients().items()
            ],
        }


# -- standard rings ------------------------------------------------------------

def _mono(gens: Sequence[str], **exps) -> Monomial:
    return tuple(exps.get(g, 0) for g in gens)


def sigma_rule(gens: Sequence[str]) -> Rule:
    """``sigma^2 -> -L sigma``."""
    return Rule(_mono(gens, sigma=2), ((_mono(gens, sigma=1, L=1), -1),))


def base_dimension_rules(gens: Sequence[str], base_gens: Iterable[str], dim: int) -> list:
    """Kill every monomial of degree ``dim + 1`` in the base generators."""
    base_gens = list(base_gens)
    rules = []
    for combo in product(range(dim + 2), repeat=len(base_gens)):
        if sum(combo) == dim + 1:
            rules.append(Rule(_mono(gens, **dict(zip(base_gens, combo)))))
    return rules


@lru_cache(maxsize=None)
def fibration_ring(truncation: int | None = None) -> RingSpec:
    """``Q[sigma, zeta, L] / (sigma^2 + L sigma)`` truncated at weight N."""
    gens = ("sigma", "zeta", "L")
    N = default_truncation() if truncation is None else truncation
    return RingSpec(gens, (sigma_rule(gens),), N, "fibration")


@lru_cache(maxsize=None)
def section_ring(truncation: int | None = None, base_dim: int | None = None) -> RingSpec:
    """``Q[sigma, alpha, L] / (sigma^2 + L sigma)``, optionally killing
    base classes above the base dimension."""
    gens = ("sigma", "alpha", "L")
    N = default_truncation() if truncation is None else truncation
    rules = [sigma_rule(gens)]
    name = "section"
    if base_dim is not None:
        rules += base_dimension_rules(gens, ("alpha", "L"), base_dim)
        name = f"section(dimB={base_dim})"
    return RingSpec(gens, tuple(rules), N, name)


@lru_cache(maxsize=None)
def curve_ring(n: int, truncation: int | None = None) -> RingSpec:
    """``Q[t, h] / (t^2, h^n)``: the even cohomology of E x P^{n-1}."""
    if n < 1:
        raise EllBundleError("n must be positive")
    gens = ("t", "h")
    N = default_truncation() if truncation is None else truncation
    rules = (Rule(_mono(gens, t=2)), Rule(_mono(gens, h=n)))
    return RingSpec(gens, rules, N, f"curve(n={n})")
