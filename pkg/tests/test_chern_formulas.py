from fractions import Fraction

import pytest
import sympy

from ellbundle import chern_formulas as cf
from ellbundle.cohomology import curve_ring, exp, fibration_ring
from ellbundle.errors import EllBundleError, RangeError

N = 8
R = fibration_ring(N)
sigma, zeta, L = R.gens()
S, Z, LL = sympy.symbols("sigma zeta L")


def sympy_class(expr, trunc):
    """Expand a sympy expression in sigma, zeta, L as a truncated class of fibration_ring(trunc)."""
    ser = sympy.expand(sympy.series(expr.subs({S: S * sympy.Symbol("u"), Z: Z * sympy.Symbol("u"),
                                               LL: LL * sympy.Symbol("u")}),
                                    sympy.Symbol("u"), 0, trunc + 1).removeO().subs(sympy.Symbol("u"), 1))
    ring = fibration_ring(trunc)
    terms = {}
    for (a, b, c), q in sympy.Poly(ser, S, Z, LL).terms():
        terms[(a, b, c)] = Fraction(int(q.p), int(q.q))
    return ring.from_terms(terms)


@pytest.mark.parametrize("n,a", [(2, 0), (3, -2), (3, 2), (4, 1)])
def test_ch_Ua_matches_sympy_series(n, a):
    # R(c) written as a finite geometric sum of exponentials
    def Rc(c):
        if c >= 0:
            return sum((sympy.exp(j * LL) for j in range(c)), sympy.Integer(0))
        return -sum((sympy.exp(j * LL) for j in range(c, 0)), sympy.Integer(0))

    expr = sympy.exp(-Z) * Rc(a + n) - Rc(a) + sympy.exp(-S) * (1 - sympy.exp(-Z))
    assert cf.ch_Ua_fibration(n, a, 4) == sympy_class(expr, 4)


def test_single_curve_examples():
    C = curve_ring(2, N)
    t, h = C.gens()
    assert cf.c_U0_singlecurve(2, N).total == 1 - h + t * h
    assert cf.ch_U0_singlecurve(4, N).part(0) == 4
    assert cf.ch_Ua_twist_singlecurve(3, 0, 0, N).total == cf.ch_U0_singlecurve(3, N).total
    C3 = curve_ring(3, N)
    t3, h3 = C3.gens()
    assert cf.ch_U_poincare(3, N).total == 3 + t3 * (1 - exp(h3))
    assert cf.ch_Ud_singlecurve(2, 1, N).total == (1 - t) * exp(h) + 1 + t


def test_poincare_chern_classes():
    C = curve_ring(4, N)
    t, h = C.gens()
    data = cf.ch_U_poincare(4, N).to_c()
    assert data.part(1) == C.zero()
    assert data.part(2) == h * t
    assert data.part(3) == -(h * h * t)


def test_c_Ud_degree_one():
    for n in range(2, 7):
        C = curve_ring(n, N)
        for d in range(1, n):
            assert cf.c_Ud_singlecurve(n, d, N).part(1) == C.gen("h").scale(d)


def test_uncorrected_c_Ud_disagrees_with_ch():
    # reading c(U(d)) as (1 + h + t)(1 + h)^{d-1} gives c_1 = d h + t, but ch U(d) has c_1 = d h
    for n in range(2, 5):
        C = curve_ring(n, N)
        t, h = C.gens()
        for d in range(1, n):
            literal = (1 + h + t) * (1 + h) ** (d - 1)
            newton = cf.c_from_ch(cf.ch_Ud_singlecurve(n, d, N).total)
            assert newton == cf.c_Ud_singlecurve(n, d, N).total
            assert literal != newton


def test_twist_c1_vanishes():
    for n in range(2, 6):
        for a in range(-5, 6):
            for b in range(-2, 3):
                c1 = cf.ch_Ua_twist_singlecurve(n, a, b, N).part(1)
                assert (c1 == curve_ring(n, N).zero()) == cf.twist_c1_vanishes(n, a, b)


def test_ch_Ud_fibration_examples():
    assert cf.ch_Ud_fibration(3, 1, N).weight_part(0) == 3
    # the weight-one part at d = 1, n = 2 is zeta - L
    assert cf.ch_Ud_fibration(2, 1, N).weight_part(1) == zeta - L
    assert cf.ch_Ud_fibration(2, 1, N) == cf.ch_Ua_fibration(2, 0, N) * exp(zeta - L)


def test_ch_Ua_fibration_rank_and_c1():
    for n in range(2, 7):
        for a in range(-4, 5):
            ch = cf.ch_Ua_fibration(n, a, N)
            assert ch.constant_term() == n
            assert ch.weight_part(1) == cf.c1_Ua_displayed(n, a, N)


def test_c2_U0_n2():
    assert cf.c2_Ua_displayed(2, 0, N) == sigma * zeta


def test_recursion_examples():
    for n in range(2, 5):
        for a in range(-3, 4):
            diff = cf.ch_Ua_fibration(n, a, N) - cf.ch_Ua_fibration(n, a - 1, N)
            assert diff == -exp(L.scale(a - 1)) * (1 - exp(-(zeta - L.scale(n))))
    assert cf.hyperplane_class(3, N) == zeta - L.scale(3)


def test_branches_agree_everywhere():
    for n in range(2, 6):
        for a in range(-6, 6):
            target = cf.c_from_ch(cf.ch_Ua_fibration(n, a, N))
            for br in cf.C_UA_BRANCHES:
                assert cf.c_Ua_fibration(n, a, N, br) == target


def test_literal_empty_product_fails_at_boundary():
    # at a = -(n-1) the upper limit n+a-2 is -1; an empty-product reading drops a factor
    for n in range(2, 6):
        a = -(n - 1)
        one = R.one()
        lead = 1 - zeta + L + zeta * sigma
        literal = lead * cf.signed_product(lambda r: 1 - L.scale(r), 1, -a, one)
        target = cf.c_from_ch(cf.ch_Ua_fibration(n, a, N))
        assert literal != target
        assert cf.c_Ua_fibration(n, a, N, "middle") == target


def test_signed_product_additive():
    f = lambda s: 1 + L.scale(s) - zeta
    one = R.one()
    for m in range(-2, 3):
        for M in range(-4, 4):
            for K in range(-4, 4):
                assert (cf.signed_product(f, m, M, one) * cf.signed_product(f, M + 1, K, one)
                        == cf.signed_product(f, m, K, one))


def test_branch_selection():
    assert cf.c_Ua_branch_for(4, 0) == "nonnegative"
    assert cf.c_Ua_branch_for(4, -3) == "middle"
    assert cf.c_Ua_branch_for(4, -4) == "negative"
    with pytest.raises(EllBundleError):
        cf.c_Ua_fibration(3, 0, N, "sideways")


def test_c_Ud_fibration_matches_ch():
    for n in range(2, 6):
        for d in range(1, n):
            assert cf.c_from_ch(cf.ch_Ud_fibration(n, d, N)) == cf.c_Ud_fibration(n, d, N)


def test_specialization():
    for n in range(2, 6):
        for a in range(-4, 5):
            assert (cf.specialize(cf.ch_Ua_fibration(n, a, N), n)
                    == cf.ch_Ua_twist_singlecurve(n, a, 0, N).total)
        assert cf.specialize(cf.ch_Ua_fibration(n, 0, N), n) == cf.ch_U0_singlecurve(n, N).total


def test_Vn_and_Wn():
    assert cf.ch_Vn(2, N) == 1 + exp(L.scale(-2))
    for n in range(1, 6):
        assert cf.ch_Wn(n, N).constant_term() == n
        assert cf.ch_Wn_on_sigma(n, N).constant_term() == n
        assert cf.ch_Wn(n, N) * sigma == cf.ch_Wn_on_sigma(n, N) * sigma


def test_universal_bundle_ids():
    ident = cf.UniversalBundleId("Ua-fibration", 3, a=1)
    assert ident.c(N) == cf.c_from_ch(ident.ch(N))
    ident = cf.UniversalBundleId("U(d)-singlecurve", 4, d=2)
    assert ident.c(N) == cf.c_from_ch(ident.ch(N))
    with pytest.raises(RangeError):
        cf.UniversalBundleId("U(d)-fibration", 3, d=3)
    with pytest.raises(RangeError):
        cf.ch_Ua_fibration(1, 0, N)
