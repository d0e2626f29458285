"""Conversion between total Chern classes and Chern characters.

With power sums ``p_k = k! ch_k`` Newton's identities read
``p_k = sum_{i<k} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ..errors import EllBundleError
from .ring import GradedClass


@dataclass(frozen=True)
class ChernData:
    """Rank plus either the total Chern class or the Chern character."""

    rank: int
    total: GradedClass
    kind: str  # "c" or "ch"

    def __post_init__(self):
        if self.kind not in ("c", "ch"):
            raise EllBundleError(f"unknown Chern data kind {self.kind!r}")

    @property
    def ring(self):
        return self.total.ring

    def part(self, k: int) -> GradedClass:
        return self.total.weight_part(k)

    def to_c(self) -> "ChernData":
        return self if self.kind == "c" else ch_to_c(self)

    def to_ch(self) -> "ChernData":
        return self if self.kind == "ch" else c_to_ch(self)

    def c(self, k: int) -> GradedClass:
        return self.to_c().part(k)

    def ch(self, k: int) -> GradedClass:
        return self.to_ch().part(k)

    def to_json(self) -> dict:
        return {"rank": self.rank, "kind": self.kind, "class": self.total.to_json()}


def chern_character(c: GradedClass, rank: int) -> GradedClass:
    ring = c.ring
    N = ring.truncation
    cs = [c.weight_part(k) for k in range(N + 1)]
    if cs[0] != 1:
        raise EllBundleError("total Chern class must start with 1")
    p = [ring.const(rank)]
    for k in range(1, N + 1):
        acc = cs[k].scale((-1) ** (k - 1) * k)
        for i in range(1, k):
            acc = acc + (cs[i] * p[k - i]).scale((-1) ** (i - 1))
        p.append(acc)
    out = ring.const(rank)
    for k in range(1, N + 1):
        out = out + p[k].scale(Fraction(1, factorial(k)))
    return out


def chern_class(ch: GradedClass) -> tuple[GradedClass, int]:
    """Total Chern class and rank from a Chern character."""
    ring = ch.ring
    N = ring.truncation
    r = ch.constant_term()
    if r.denominator != 1:
        raise EllBundleError("rank must be an integer")
    p = [None] + [ch.weight_part(k).scale(factorial(k)) for k in range(1, N + 1)]
    cs = [ring.one()]
    for k in range(1, N + 1):
        acc = ring.zero()
        for i in range(1, k + 1):
            acc = acc + (cs[k - i] * p[i]).scale((-1) ** (i - 1))
        cs.append(acc.scale(Fraction(1, k)))
    total = ring.zero()
    for x in cs:
        total = total + x
    return total, int(r)


def c_to_ch(data: ChernData) -> ChernData:
    if data.kind == "ch":
        return data
    return ChernData(data.rank, chern_character(data.total, data.rank), "ch")


def ch_to_c(data: ChernData) -> ChernData:
    if data.kind == "c":
        return data
    total, rank = chern_class(data.total)
    if rank != data.rank:
        raise EllBundleError(f"character has rank {rank}, data says {data.rank}")
    return ChernData(data.rank, total, "c")
