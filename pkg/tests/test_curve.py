import random
from fractions import Fraction

import pytest
import sympy

from ellbundle.curve import (
    GF,
    QQ,
    CurvePoint,
    Field,
    FiberType,
    WeierstrassCurve,
    discriminant,
    parse_rational,
    rational_roots,
)
from ellbundle.errors import (
    FieldMismatchError,
    NotOnCurveError,
    SingularPointError,
    UnsupportedError,
)

PRIMES = (5, 7, 11, 13)


def curves_of_each_type(p):
    """One smooth, one nodal and one cuspidal curve over GF(p)."""
    F = GF(p)
    smooth = next(WeierstrassCurve(a, b, F) for a in range(p) for b in range(p)
                  if discriminant(F(a), F(b)) != 0)
    nodal = next(WeierstrassCurve(a, b, F) for a in range(1, p) for b in range(p)
                 if discriminant(F(a), F(b)) == 0)
    return smooth, nodal, WeierstrassCurve(0, 0, F)


def test_discriminant_examples():
    assert discriminant(QQ(1), QQ(0)) == 1
    assert discriminant(QQ(0), QQ(0)) == 0
    assert discriminant(QQ(4), QQ(0)) == 64


def test_classify_examples():
    assert WeierstrassCurve(1, 0).classify() is FiberType.SMOOTH
    assert WeierstrassCurve(0, 0).classify() is FiberType.CUSPIDAL
    assert WeierstrassCurve(3, 1).classify() is FiberType.NODAL


def test_singular_point_examples():
    assert WeierstrassCurve(1, 0).singular_point is None
    cusp = WeierstrassCurve(0, 0).singular_point
    assert (cusp.x, cusp.y) == (QQ(0), QQ(0))
    node = WeierstrassCurve(3, 1).singular_point
    assert (node.x, node.y) == (QQ("-1/2"), QQ(0))


def test_node_matches_sympy_oracle():
    x = sympy.symbols("x")
    p = 4 * x ** 3 - 3 * x - 1
    common = sympy.solve([p, sympy.diff(p, x)], x)
    assert [Fraction(int(r[0].p), int(r[0].q)) for r in common] == [Fraction(-1, 2)]


def test_group_law_examples():
    E = WeierstrassCurve(4, 0)
    P, Q = E.point(-1, 0), E.point(0, 0)
    assert E.add(P, Q) == E.point(1, 0)
    assert E.add(P, E.identity) == P
    assert E.scalar_mul(2, Q).is_identity
    for x in (-1, 0, 1):
        assert E.scalar_mul(2, E.point(x, 0)).is_identity


def test_chord_matches_sympy_line_intersection():
    # third intersection of the line through two points, then negate
    E = WeierstrassCurve(-4, 4)
    x = sympy.symbols("x")
    P, Q = E.point(1, 2), E.point(2, 6)
    lam = sympy.Rational(6 - 2, 2 - 1)
    line = 2 + lam * (x - 1)
    roots = sympy.roots(sympy.expand(line ** 2 - (4 * x ** 3 + 4 * x - 4)), x)
    third = [r for r, m in roots.items() for _ in range(m)]
    third.remove(1)
    third.remove(2)
    x3 = third[0]
    y3 = -line.subs(x, x3)
    R = E.add(P, Q)
    assert (R.x.value, R.y.value) == (Fraction(int(x3.p), int(x3.q)), Fraction(int(y3.p), int(y3.q)))


@pytest.mark.parametrize("p", PRIMES)
def test_group_axioms_random_triples(p):
    rng = random.Random(p)
    for E in curves_of_each_type(p):
        pts = E.smooth_points()
        for _ in range(1000):
            P, Q, R = (rng.choice(pts) for _ in range(3))
            assert E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R))
            assert E.add(P, Q) == E.add(Q, P)
            assert E.add(P, E.identity) == P
            assert E.add(P, E.neg(P)).is_identity


@pytest.mark.parametrize("p", PRIMES)
def test_singular_group_orders(p):
    smooth, nodal, cusp = curves_of_each_type(p)
    assert cusp.group_order() == p
    assert nodal.group_order() == (p - 1 if nodal.node_is_split else p + 1)
    assert smooth.node_is_split is None


@pytest.mark.parametrize("p", PRIMES)
def test_split_and_nonsplit_nodes_both_occur(p):
    F = GF(p)
    seen = set()
    for a in range(1, p):
        for b in range(p):
            if discriminant(F(a), F(b)) == 0:
                E = WeierstrassCurve(a, b, F)
                seen.add(E.node_is_split)
                assert E.group_order() == (p - 1 if E.node_is_split else p + 1)
    assert seen == {True, False}


def test_classify_agrees_with_discriminant():
    rng = random.Random(1)
    F = GF(13)
    for _ in range(10_000):
        a, b = rng.randrange(13), rng.randrange(13)
        E = WeierstrassCurve(a, b, F)
        t = E.classify()
        if discriminant(F(a), F(b)) != 0:
            assert t is FiberType.SMOOTH
        elif a == 0 and b == 0:
            assert t is FiberType.CUSPIDAL
        else:
            assert t is FiberType.NODAL


@pytest.mark.parametrize("p", PRIMES)
def test_order_divides_group_order(p):
    E = curves_of_each_type(p)[0]
    N = E.group_order()
    for P in E.smooth_points():
        k = E.order(P)
        assert N % k == 0 and E.scalar_mul(k, P).is_identity


def test_scalar_mul_negative_and_zero():
    E = WeierstrassCurve(-4, 4)
    P = E.point(1, 2)
    assert E.scalar_mul(0, P).is_identity
    assert E.scalar_mul(-3, P) == E.neg(E.scalar_mul(3, P))
    assert E.scalar_mul(5, P) == E.add(E.scalar_mul(2, P), E.scalar_mul(3, P))


def test_torsion_examples():
    E = WeierstrassCurve(4, 0)
    assert E.torsion_points(1) == {E.identity}
    assert E.torsion_points(2) == {E.identity, E.point(0, 0), E.point(1, 0), E.point(-1, 0)}
    E5 = WeierstrassCurve(4, 0, GF(5))
    assert len(E5.torsion_points(2)) == 4


@pytest.mark.parametrize("p", PRIMES)
def test_torsion_matches_scalar_mul(p):
    E = curves_of_each_type(p)[0]
    for n in (2, 3, 4):
        expected = {P for P in E.smooth_points() if E.scalar_mul(n, P).is_identity}
        assert E.torsion_points(n) == expected


def test_rational_torsion_matches_sympy():
    x = sympy.symbols("x")
    for g2, g3 in [(4, 0), (0, -1), (0, -4), (-4, 8)]:
        E = WeierstrassCurve(g2, g3)
        psi3 = 48 * x ** 4 - 24 * g2 * x ** 2 - 48 * g3 * x - g2 ** 2
        xs = {Fraction(int(r.p), int(r.q)) for r in sympy.roots(sympy.Poly(psi3, x), filter="Q")}
        got = {P.x.value for P in E.torsion_points(3) if not P.is_identity}
        assert got == {X for X in xs if E.rhs(QQ(X)).is_square()}


def test_rational_roots():
    assert rational_roots([Fraction(2), Fraction(-3), Fraction(1)]) == {1, Fraction(1, 2)}
    assert rational_roots([Fraction(4), Fraction(0), Fraction(-1)]) == {Fraction(1, 2), Fraction(-1, 2)}
    assert rational_roots([Fraction(1), Fraction(0), Fraction(1)]) == set()


def test_in_linear_system_examples():
    E = WeierstrassCurve(4, 0)
    assert E.in_linear_system([E.identity] * 3, 3)
    assert E.in_linear_system([E.point(0, 0), E.point(1, 0), E.point(-1, 0)], 3)
    assert not E.in_linear_system([E.point(0, 0), E.point(1, 0)], 2)


def test_json_round_trip():
    E = WeierstrassCurve("-1/2", 3, GF(7))
    assert WeierstrassCurve.from_json(E.to_json()) == E
    for P in E.points():
        assert E.point_from_json(P.to_json()) == P
    Eq = WeierstrassCurve(4, 0)
    P = Eq.point(-1, 0)
    assert Eq.point_from_json(P.to_json()) == P


def test_parse_rational_accepts_unicode_minus():
    assert parse_rational("−3/4") == Fraction(-3, 4)


def test_field_errors():
    with pytest.raises(UnsupportedError):
        GF(3)
    with pytest.raises(Exception):
        Field(9)
    with pytest.raises(FieldMismatchError):
        GF(5)(GF(7)(1))


def test_cross_field_point_rejected():
    E5, E7 = WeierstrassCurve(1, 1, GF(5)), WeierstrassCurve(1, 1, GF(7))
    P = E7.smooth_points()[1]
    with pytest.raises(FieldMismatchError):
        E5.add(P, P)


def test_not_on_curve():
    with pytest.raises(NotOnCurveError):
        WeierstrassCurve(4, 0).point(2, 2)


def test_singular_point_rejected_by_group_law():
    E = WeierstrassCurve(3, 1)
    S = E.singular_point
    with pytest.raises(SingularPointError):
        E.add(S, E.identity)


def test_points_enumeration_counts_identity():
    E = WeierstrassCurve(4, 0, GF(5))
    pts = E.points()
    assert E.identity in pts and len(pts) == len(set(pts))
    assert all(isinstance(P, CurvePoint) for P in pts)
