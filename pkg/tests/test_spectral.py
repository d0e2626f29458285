import random

import pytest

from ellbundle.bundles import LinearSystemDivisor
from ellbundle.curve import GF, WeierstrassCurve
from ellbundle.errors import SingularPointError, TorsionSheafError
from ellbundle.spectral import (
    cover_is_irreducible,
    fiber,
    fiber_of_r,
    full_ramification_locus,
    linear_system,
    ramification_profile,
    ramified_divisors,
)

EQ = WeierstrassCurve(4, 0)
E5 = WeierstrassCurve(4, 0, GF(5))


def test_fiber_examples():
    D = LinearSystemDivisor(EQ, 3, ((EQ.identity, 3),))
    f = fiber(D)
    assert f.points == ((EQ.identity, 3),) and f.max_index == 3
    P, Q = E5.point(2, 2), E5.point(2, 3)
    f = fiber(LinearSystemDivisor.from_points(E5, [P, Q]))
    assert sorted(i for _, i in f.points) == [1, 1] and not f.is_ramified
    D = LinearSystemDivisor(EQ, 3, ((EQ.point(0, 0), 2), (EQ.identity, 1)))
    assert sorted(ramification_profile(D).elements()) == [1, 2]


def test_fiber_two_e_plus_e_prime():
    E = WeierstrassCurve(1, 1, GF(13))
    pts = E.smooth_points()
    e = pts[3]
    e2 = E.neg(E.scalar_mul(2, e))
    assert e2 != e
    f = fiber(LinearSystemDivisor(E, 3, ((e, 2), (e2, 1))))
    assert sorted(i for _, i in f.points) == [1, 2]


def test_full_ramification_locus_over_Q():
    locus = full_ramification_locus(EQ, 2)
    expected = {LinearSystemDivisor(EQ, 2, ((P, 2),)) for P in
                (EQ.identity, EQ.point(0, 0), EQ.point(1, 0), EQ.point(-1, 0))}
    assert locus == expected and len(locus) == 4
    assert full_ramification_locus(EQ, 1) == {LinearSystemDivisor(EQ, 1, ((EQ.identity, 1),))}


def test_ramification_over_F5_matches_locus():
    assert ramified_divisors(E5, 2) == full_ramification_locus(E5, 2)
    assert len(ramified_divisors(E5, 2)) == 4


@pytest.mark.parametrize("p", (5, 7, 11))
def test_full_ramification_is_n_torsion(p):
    E = WeierstrassCurve(1, 2, GF(p)) if p != 5 else E5
    for n in (2, 3):
        assert ramified_divisors(E, n) == {LinearSystemDivisor(E, n, ((e, n),)) for e in E.torsion_points(n)}


def test_linear_system_members_sum_to_p0():
    for D in linear_system(E5, 3):
        assert D.in_linear_system and D.n == 3


def test_fiber_of_r():
    (D,) = fiber_of_r(EQ, 2, EQ.point(0, 0))
    assert D == LinearSystemDivisor(EQ, 2, ((EQ.point(0, 0), 2),))
    E = WeierstrassCurve(1, 1, GF(13))
    e = E.smooth_points()[5]
    for D in fiber_of_r(E, 3, e, samples=30):
        assert e in D.support() and D.in_linear_system
    N = WeierstrassCurve(3, 1)
    with pytest.raises(SingularPointError):
        fiber_of_r(N, 3, N.singular_point)


def _random_family(E, n, size, rng, fixed=()):
    pts = E.smooth_points()
    fam = []
    for _ in range(size):
        chosen = list(fixed) + [rng.choice(pts) for _ in range(n - 1 - len(fixed))]
        fam.append(LinearSystemDivisor.from_points(E, chosen + [E.neg(E.sum(chosen))]))
    return fam


def test_cover_irreducibility():
    E = WeierstrassCurve(1, 1, GF(13))
    rng = random.Random(7)
    assert cover_is_irreducible(_random_family(E, 3, 12, rng))
    assert not cover_is_irreducible(_random_family(E, 3, 12, rng, fixed=(E.identity,)))
    pts = E.smooth_points()[1:4]
    split = LinearSystemDivisor.from_points(E, list(pts) + [E.neg(E.sum(pts))])
    assert not cover_is_irreducible([split] * 5)


def test_singular_fibers_rejected():
    N = WeierstrassCurve(3, 1)
    D = LinearSystemDivisor(N, 2, (), 2)
    with pytest.raises(TorsionSheafError):
        fiber(D)
    with pytest.raises(TorsionSheafError):
        cover_is_irreducible([D])
