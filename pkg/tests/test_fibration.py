import itertools
import random
from fractions import Fraction

import pytest

from ellbundle import chern_formulas as cf
from ellbundle import fibration as fb
from ellbundle.cohomology import exp, section_ring
from ellbundle.errors import EllBundleError, RangeError

N = 8
S = section_ring(N)
sigma, alpha, L = S.gens()


def section(L_vec, alpha_vec, n, **kw):
    return fb.SectionSpec(fb.PicModel(len(L_vec), tuple(L_vec), tuple(alpha_vec)), n, **kw)


def test_trivial_section_examples():
    assert fb.ch_trivial_section(2, 0, N) == 1 + exp(L)
    sec = section([1], [0], 2)
    assert fb.ch_VAa_section(sec, 0, N) == 1 + exp(L)
    for n in range(1, 6):
        assert fb.ch_VAa(n, 0, N).constant_term() == n


def test_ch_VAa_is_ch_Ua_with_alpha():
    for n in range(2, 6):
        for a in range(-3, 4):
            assert cf.ch_Ua_fibration(n, a, N).substitute({"zeta": alpha}, S) == fb.ch_VAa(n, a, N)


def test_det_examples():
    sec = section([0, 1], [1, 0], 2)
    assert fb.det_VAa(sec, 1) == (-2, 3)
    for n in range(1, 6):
        assert fb.det_VAa(section([1], [0], n), 0) == ((n * n - n) // 2,)


def test_det_matches_weight_one():
    rng = random.Random(8)
    for _ in range(50):
        n, a = rng.randint(1, 6), rng.randint(-4, 4)
        sec = section([rng.randint(-3, 3) for _ in range(2)], [rng.randint(-3, 3) for _ in range(2)], n)
        assert fb.class_to_pic(fb.ch_VAa(n, a, N), sec) == fb.det_VAa(sec, a)


def test_trivial_det_examples():
    for alpha_v in ([0], [1], [5], [-2]):
        sol = fb.trivial_det_solve(section([1], alpha_v, 3))
        assert sol is not None and sol.a == 1
    sol = fb.trivial_det_solve(section([1], [3], 2))
    assert sol.a == 0 and sol.N0 == (1,) and sol.det == (-2,)
    assert fb.trivial_det_solve(section([1], [2], 2)) is None


def test_trivial_det_exhaustive():
    for n in range(1, 7):
        for v in itertools.product(range(-3, 4), repeat=4):
            sec = section(v[:2], v[2:], n)
            sol = fb.trivial_det_solve(sec)
            if fb.trivial_det_guaranteed(sec):
                assert sol is not None
            if sol is not None:
                assert all(x == -n * y for x, y in zip(sol.det, sol.N0))
                assert fb.congruence_holds(sec, sol.a)


def test_c1_twist():
    sec = section([1], [3], 2)
    assert fb.c1_VA0_twist(sec, [0]) == fb.det_VAa(sec, 0)
    assert fb.c1_VA0_twist(sec, [5]) == (-3 + 1 + 5,)
    x, y = (2,), (-7,)
    base = fb.c1_VA0_twist(sec, [0])
    assert fb.c1_VA0_twist(sec, [x[0] + y[0]])[0] - base[0] == (fb.c1_VA0_twist(sec, x)[0] - base[0]) + (fb.c1_VA0_twist(sec, y)[0] - base[0])


def test_parity():
    assert fb.symmetric_parity_check(section([1], [1], 3)) == fb.ParityVerdict.FAILS
    assert fb.symmetric_parity_check(section([1, 2], [1, 2], 2)) == fb.ParityVerdict.NECESSARY_HOLDS
    assert fb.symmetric_parity_check(section([1, 0], [3, 4], 4)) == fb.ParityVerdict.NECESSARY_HOLDS
    assert str(fb.ParityVerdict.FAILS) == "Fails"


def test_reducible_recursion():
    for n in range(2, 7):
        for a in range(-3, 4):
            assert fb.ch_VAa(n, a, N) - fb.ch_VAa(n - 1, a, N) == fb.reducible_increment(n, a, N)
    step = fb.reducible_step(section([0, 1], [1, 0], 2), 0, N)
    assert step.D == (1, -1) and step.D_coefficients == (1, -1)
    for n in range(2, 5):
        sec = fb.trivial_section([1], n)
        inc = fb.restrict_to_section(fb.reducible_increment(n, 0, N), sec)
        assert inc == exp(L.scale(n - 1))


def test_plus_sign_increment_fails():
    for n in range(2, 5):
        wrong = exp(L.scale(n - 1) + alpha)
        assert fb.ch_VAa(n, 0, N) - fb.ch_VAa(n - 1, 0, N) != wrong


def test_spectral_cover_class():
    assert fb.spectral_cover_class(section([1], [2], 1)) == fb.SpectralCoverClass(1, (2,))
    assert fb.spectral_cover_class(fb.trivial_section([1], 4)).sigma_multiple == 4
    assert fb.spectral_cover_class(section([1], [3], 3)) == fb.SpectralCoverClass(3, (3,))


def test_normal_bundle():
    assert fb.normal_bundle_ch(2, N) == exp(alpha) + exp(alpha - L.scale(2)) - 1
    for n in range(2, 6):
        assert fb.normal_bundle_ch(n, N).constant_term() == n - 1
        assert fb.normal_bundle_ch_section(section([0], [0], n), N) == S.const(n - 1)


def test_surface_c2():
    for n in range(1, 7):
        for a in range(-3, 4):
            assert fb.surface_c2(n, a) == 1


def test_splitting_examples():
    assert fb.splitting_type_slice(3, 0).degrees == (0, -1, -1)
    assert fb.splitting_type_slice(3, 1, at_p0=True, generic_line=True).degrees == (0, -1, -2)
    with pytest.raises(RangeError):
        fb.splitting_type_slice(3, 3)


def test_splitting_degree_sum():
    for n in range(2, 7):
        for a in range(-6, 7):
            for at_p0 in (False, True):
                st = fb.splitting_type_slice(n, a, at_p0, generic_line=True)
                assert st.rank == n
                assert st.degree_sum == -(n + a - 1)
                # c1(U_a) restricted to a line: the zeta coefficient
                assert cf.c1_Ua_displayed(n, a, N).coefficient({"zeta": 1}) == st.degree_sum


def test_section_json_round_trip():
    sec = section([1, 2], [0, 3], 4, lies_in_H=True)
    assert fb.SectionSpec.from_json(sec.to_json()) == sec
    with pytest.raises(EllBundleError):
        fb.SectionSpec.from_json({"picRank": 1, "L": [1]})
    with pytest.raises(EllBundleError):
        section([1], [1], 2, is_trivial_section=True)
    assert Fraction(fb.det_coefficients(2, 1)[1]) == 3
