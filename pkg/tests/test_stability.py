import random
from fractions import Fraction

import pytest

from ellbundle import stability as stab
from ellbundle.errors import EllBundleError, RangeError

RES = stab.rational_elliptic_surface()


def test_slope_examples():
    n = 3
    zero = stab.BundleNumerics(n, (0, 0), 0)
    assert stab.slope(RES, zero, RES.sigma) == 0
    assert stab.slope(RES, stab.BundleNumerics(n, RES.f, 0), RES.sigma) == Fraction(1, n)
    assert stab.slope(RES, stab.BundleNumerics(n, RES.sigma, 0), RES.f) == Fraction(1, n)


def test_bogomolov_examples():
    assert stab.bogomolov(RES, stab.BundleNumerics(2, (0, 0), 1)) == 4
    assert stab.bogomolov(RES, stab.BundleNumerics(1, (3, 1), 5)) == 10
    assert stab.bogomolov(RES, stab.BundleNumerics(3, RES.f, 2)) == 12


def test_bogomolov_identity_random_splits():
    lat = stab.rank3_surface()
    rng = random.Random(0)
    for _ in range(1000):
        V1 = stab.BundleNumerics(rng.randint(1, 3), tuple(rng.randint(-4, 4) for _ in range(3)), rng.randint(-5, 5))
        V2 = stab.BundleNumerics(rng.randint(1, 3), tuple(rng.randint(-4, 4) for _ in range(3)), rng.randint(-5, 5))
        assert stab.bogomolov_identity_check(lat, V1, V2)
        assert stab.d2_bound_holds(lat, V1, V2)


def test_identity_degenerates_for_equal_pieces():
    V = stab.BundleNumerics(1, (1, 2), 0)
    assert stab.destabilizing_divisor(V, V) == (0, 0)
    assert stab.bogomolov_identity_check(RES, V, V)


def test_threshold_examples():
    assert stab.stability_threshold(2, 1) == 2
    assert stab.stability_threshold(2, 0) == 0
    assert stab.stability_threshold(3, 4) == 27
    with pytest.raises(RangeError):
        stab.stability_threshold(2, -1)


def test_wall_search_examples():
    assert stab.wall_search(RES, 2, 1, 2, 10) == []
    walls = stab.wall_search(RES, 2, 1, 0, 10)
    assert (1, -1) in walls
    D = (1, -1)
    assert RES.dot(D, RES.f) > 0 and -4 <= RES.square(D) < 0 and RES.dot(D, RES.H0) <= 0
    for t in (0, 1, 5, Fraction(7, 3)):
        assert stab.wall_search(RES, 2, 0, t, 6) == []


def test_wall_search_matches_brute_force():
    # independent oracle: Fraction arithmetic on the polarization vector
    for t in (0, Fraction(1, 2), 1, Fraction(3, 2)):
        H = RES.polarization(t)
        expected = []
        for a in range(-6, 7):
            for b in range(-6, 7):
                D = (a, b)
                d2 = RES.square(D)
                dH = sum(D[i] * RES.gram[i][j] * H[j] for i in range(2) for j in range(2))
                if RES.dot(D, RES.f) > 0 and Fraction(-8, 2) <= d2 < 0 and dH <= 0:
                    expected.append(D)
        assert stab.wall_search(RES, 2, 1, t, 6) == expected


@pytest.mark.parametrize("name", sorted(stab.SHIPPED_LATTICES))
def test_threshold_holds_on_shipped_lattices(name):
    lat = stab.SHIPPED_LATTICES[name]()
    assert lat.threshold_certified
    bound = 20
    for n, c2 in [(2, 1), (2, 2), (3, 1)]:
        assert stab.threshold_holds(lat, n, c2, bound)
    assert stab.hodge_index_holds(lat, 6)


def test_threshold_needs_unit_h0_dot_f():
    lat = stab.SurfaceLattice(("sigma", "f"), ((-1, 1), (1, 0)), (3, 4), 1)
    assert not lat.threshold_certified
    assert (1, -1) in stab.wall_search(lat, 2, 1, stab.stability_threshold(2, 1), 10)


def test_modification_examples():
    assert stab.allowable_modification_c2(5, -2) == stab.ModificationStep(3, False)
    assert stab.allowable_modification_c2(0, -1).floor_violated
    seq = stab.modification_sequence(3, -1)
    assert seq == [3, 2, 1, 0] and len(seq) - 1 <= 3
    with pytest.raises(RangeError):
        stab.allowable_modification_c2(3, 0)


def test_lattice_validation_and_json():
    with pytest.raises(EllBundleError):
        stab.SurfaceLattice(("sigma", "f"), ((-1, 2), (1, 0)), (1, 2), 1)
    with pytest.raises(EllBundleError):
        stab.SurfaceLattice(("sigma", "f"), ((-2, 1), (1, 0)), (1, 2), 1)
    lat = stab.rank3_surface()
    assert stab.SurfaceLattice.from_json(lat.to_json()) == lat
    assert lat.vector({"sigma": 1, "e": 2}) == (1, 0, 2)
    with pytest.raises(EllBundleError):
        lat.vector({"g": 1})
