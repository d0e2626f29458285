"""Stability numerics on elliptic surfaces ``Z -> B`` with ``dim B = 1``.

Divisors are integer vectors in a Neron-Severi model whose Gram matrix
contains the section ``sigma`` and the fiber ``f`` with ``sigma^2 = -deg L``,
``sigma.f = 1`` and ``f^2 = 0``.  Polarizations are ``H_t = H0 + t f``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import EllBundleError, RangeError

Vector = tuple


@dataclass(frozen=True)
class SurfaceLattice:
    generators: tuple
    gram: tuple  # tuple of row tuples
    H0: Vector
    deg_L: int

    def __post_init__(self):
        gens = tuple(self.generators)
        k = len(gens)
        gram = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "H0", tuple(int(x) for x in self.H0))
        if len(gram) != k or any(len(row) != k for row in gram):
            raise EllBundleError("Gram matrix must be square of generator size")
        if any(gram[i][j] != gram[j][i] for i in range(k) for j in range(k)):
            raise EllBundleError("Gram matrix must be symmetric")
        if "sigma" not in gens or "f" not in gens:
            raise EllBundleError("lattice needs generators 'sigma' and 'f'")
        s, f = gens.index("sigma"), gens.index("f")
        if gram[s][s] != -self.deg_L or gram[s][f] != 1 or gram[f][f] != 0:
            raise EllBundleError("sigma and f must satisfy sigma^2 = -deg L, sigma.f = 1, f^2 = 0")
        if len(self.H0) != k:
            raise EllBundleError("H0 has the wrong length")
        if self.dot(self.H0, self.f) <= 0:
            raise EllBundleError("H0 . f must be positive")

    @property
    def rank(self) -> int:
        return len(self.generators)

    def basis_vector(self, name: str) -> Vector:
        v = [0] * self.rank
        v[self.generators.index(name)] = 1
        return tuple(v)

    @property
    def sigma(self) -> Vector:
        return self.basis_vector("sigma")

    @property
    def f(self) -> Vector:
        return self.basis_vector("f")

    def dot(self, u: Sequence[int], v: Sequence[int]) -> int:
        g = self.gram
        return sum(u[i] * g[i][j] * v[j] for i in range(len(u)) if u[i] for j in range(len(v)) if v[j])

    def square(self, u: Sequence[int]) -> int:
        return self.dot(u, u)

    def polarization(self, t) -> tuple:
        """``H0 + t f`` with rational ``t`` (entries may be Fractions)."""
        t = Fraction(t)
        return tuple(Fraction(h) + t * x for h, x in zip(self.H0, self.f))

    @property
    def threshold_certified(self) -> bool:
        """Whether ``H0 . f = 1``, the normalization the threshold relies on."""
        return self.dot(self.H0, self.f) == 1

    def vector(self, obj) -> Vector:
        """A vector from a list or a ``{generator: coefficient}`` map."""
        if isinstance(obj, dict):
            v = [0] * self.rank
            for name, c in obj.items():
                if name not in self.generators:
                    raise EllBundleError(f"unknown generator {name!r}")
                v[self.generators.index(name)] += int(c)
            return tuple(v)
        v = tuple(int(x) for x in obj)
        if len(v) != self.rank:
            raise EllBundleError(f"expected {self.rank} coordinates")
        return v

    def to_json(self) -> dict:
        return {"generators": list(self.generators), "gram": [list(r) for r in self.gram],
                "H0": list(self.H0), "degL": self.deg_L}

    @classmethod
    def from_json(cls, obj: dict) -> "SurfaceLattice":
        try:
            return cls(tuple(obj["generators"]), tuple(tuple(r) for r in obj["gram"]),
                       tuple(obj["H0"]), int(obj["degL"]))
        except KeyError as exc:
            raise EllBundleError(f"lattice JSON is missing {exc}") from None


def rational_elliptic_surface() -> SurfaceLattice:
    """``sigma^2 = -1`` (deg L = 1) with ``H0 = sigma + 2f``."""
    return SurfaceLattice(("sigma", "f"), ((-1, 1), (1, 0)), (1, 2), 1)


def k3_like_surface() -> SurfaceLattice:
    """``sigma^2 = -2`` (deg L = 2) with ``H0 = sigma + 3f``."""
    return SurfaceLattice(("sigma", "f"), ((-2, 1), (1, 0)), (1, 3), 2)


def rank3_surface() -> SurfaceLattice:
    """Rational elliptic surface lattice plus a fiber component ``e`` with ``e^2 = -2``."""
    return SurfaceLattice(("sigma", "f", "e"),
                          ((-1, 1, 0), (1, 0, 0), (0, 0, -2)), (1, 2, 0), 1)


SHIPPED_LATTICES = {
    "rational": rational_elliptic_surface,
    "k3": k3_like_surface,
    "rank3": rank3_surface,
}


@dataclass(frozen=True)
class BundleNumerics:
    rank: int
    c1: Vector
    c2: int

    def __post_init__(self):
        if self.rank < 1:
            raise RangeError("rank must be positive")
        object.__setattr__(self, "c1", tuple(self.c1))


def slope(lattice: SurfaceLattice, W: BundleNumerics, polarization: Sequence) -> Fraction:
    """``c_1(W) . H / rank W``."""
    if W.rank == 0:  # pragma: no cover - rejected by BundleNumerics
        raise RangeError("rank 0 has no slope")
    if lattice.dot(polarization, lattice.f) < 0:
        raise EllBundleError("polarization must meet f nonnegatively")
    return Fraction(lattice.dot(W.c1, polarization)) / W.rank


def bogomolov(lattice: SurfaceLattice, W: BundleNumerics) -> int:
    """``B(W) = 2 r c_2 - (r - 1) c_1^2``."""
    return 2 * W.rank * W.c2 - (W.rank - 1) * lattice.square(W.c1)


def whitney_sum(lattice: SurfaceLattice, V1: BundleNumerics, V2: BundleNumerics) -> BundleNumerics:
    c1 = tuple(x + y for x, y in zip(V1.c1, V2.c1))
    return BundleNumerics(V1.rank + V2.rank, c1, V1.c2 + V2.c2 + lattice.dot(V1.c1, V2.c1))


def destabilizing_divisor(V1: BundleNumerics, V2: BundleNumerics) -> Vector:
    """``D = r' c_1(V'') - r'' c_1(V')``."""
    return tuple(V1.rank * y - V2.rank * x for x, y in zip(V1.c1, V2.c1))


def bogomolov_identity_check(lattice: SurfaceLattice, V1: BundleNumerics,
                             V2: BundleNumerics) -> bool:
    """``B(V) = (n/r') B(V') + (n/r'') B(V'') - D^2 / (r' r'')`` for ``V = V' + V''``."""
    V = whitney_sum(lattice, V1, V2)
    n, r1, r2 = V.rank, V1.rank, V2.rank
    D = destabilizing_divisor(V1, V2)
    rhs = (Fraction(n, r1) * bogomolov(lattice, V1) + Fraction(n, r2) * bogomolov(lattice, V2)
           - Fraction(lattice.square(D), r1 * r2))
    return bogomolov(lattice, V) == rhs


def d2_lower_bound(lattice: SurfaceLattice, V1: BundleNumerics, V2: BundleNumerics) -> int:
    """``-r' r'' B(V)``; equals ``-r' r'' 2 n c_2`` when ``c_1(V)^2 = 0``."""
    V = whitney_sum(lattice, V1, V2)
    return -V1.rank * V2.rank * bogomolov(lattice, V)


def d2_bound_holds(lattice: SurfaceLattice, V1: BundleNumerics, V2: BundleNumerics) -> bool:
    """If both pieces are Bogomolov-nonnegative then ``D^2 >= -r' r'' B(V)``."""
    if bogomolov(lattice, V1) < 0 or bogomolov(lattice, V2) < 0:
        return True
    D = destabilizing_divisor(V1, V2)
    return lattice.square(D) >= d2_lower_bound(lattice, V1, V2)


def stability_threshold(n: int, c2: int) -> Fraction:
    """``t0 = n^3 c_2 / 4``."""
    if c2 < 0:
        raise RangeError("c2 must be nonnegative for a bundle with fiberwise semistable restriction")
    if n < 1:
        raise RangeError("n must be positive")
    return Fraction(n ** 3 * c2, 4)


def wall_search(lattice: SurfaceLattice, n: int, c2: int, t, bound: int) -> list:
    """All ``D`` in ``[-bound, bound]^k`` with ``D.f > 0``,
    ``-(n^3/2) c_2 <= D^2 < 0`` and ``D.(H0 + t f) <= 0``.

    Comparisons are exact: with ``t = p/q`` the last test is
    ``q D.H0 + p D.f <= 0`` and the middle one ``-n^3 c_2 <= 2 D^2``.
    """
    if bound < 0:
        raise RangeError("bound must be nonnegative")
    t = Fraction(t)
    p, q = t.numerator, t.denominator
    lower = -(n ** 3) * c2  # compared against 2 D^2
    k = lattice.rank
    g = lattice.gram
    fvec = [sum(g[i][j] * lattice.f[j] for j in range(k)) for i in range(k)]
    hvec = [sum(g[i][j] * lattice.H0[j] for j in range(k)) for i in range(k)]
    out = []
    for D in itertools.product(range(-bound, bound + 1), repeat=k):
        df = sum(a * b for a, b in zip(D, fvec))
        if df <= 0:
            continue
        dh = sum(a * b for a, b in zip(D, hvec))
        if q * dh + p * df > 0:
            continue
        d2 = lattice.square(D)
        if d2 >= 0 or 2 * d2 < lower:
            continue
        out.append(D)
    return out


def threshold_holds(lattice: SurfaceLattice, n: int, c2: int, bound: int) -> bool:
    """Whether the wall search at ``t0`` finds nothing inside the box."""
    return not wall_search(lattice, n, c2, stability_threshold(n, c2), bound)


def hodge_index_holds(lattice: SurfaceLattice, bound: int) -> bool:
    """Every nonzero ``D`` in the box with ``D.H0 = 0`` has ``D^2 < 0``."""
    for D in itertools.product(range(-bound, bound + 1), repeat=lattice.rank):
        if any(D) and lattice.dot(D, lattice.H0) == 0 and lattice.square(D) >= 0:
            return False
    return True


@dataclass(frozen=True)
class ModificationStep:
    c2: int
    floor_violated: bool  # c2 < 0 contradicts the Bogomolov-type inequality


def allowable_modification_c2(c2: int, e: int) -> ModificationStep:
    """``c_2(V') = c_2(V) + e`` for the degree ``e < 0`` of the destabilizing quotient."""
    if e >= 0:
        raise RangeError("an allowable modification needs e < 0")
    new = c2 + e
    return ModificationStep(new, new < 0)


def modification_sequence(c2: int, e: int) -> list:
    """Apply allowable modifications while the floor ``c_2 >= 0`` allows it."""
    if c2 < 0:
        raise RangeError("c2 must be nonnegative")
    seq = [c2]
    while True:
        step = allowable_modification_c2(seq[-1], e)
        if step.floor_violated:
            return seq
        seq.append(step.c2)
