"""Symbol sums: residues, ramification divisors, reciprocity, equality."""

import random
from fractions import Fraction

import pytest

from brauercalc.brauer import (
    BrauerClass,
    as_ratfunc,
    classes_equal,
    constant_is_trivial,
    is_symbol_regular,
    ramification_divisor,
    ramification_points,
    reciprocity_check,
    regular_rational_points,
    residue_at,
    specialize,
)
from brauercalc.errors import NotSymbolRegular, ScopeError
from brauercalc.points import ClosedPoint, Q_BASE, residue_field
from brauercalc.poly import Poly, QQ, RationalFunction

from _gen import F7, F13, random_class
from _oracles import classes_equal_oracle

T = Poly.gen(QQ)


def q_poly(*coeffs):
    """Ascending integer coefficients over Q."""
    return Poly.from_ints(QQ, list(coeffs))


def canon(cls_):
    return {x: rc.canonical_value() for x, rc in ramification_divisor(cls_)}


def test_divisor_constant_times_t():
    c = BrauerClass.make(Q_BASE, 2, [(5, T)])
    inf = ClosedPoint.infinity(Q_BASE)
    zero_pt = ClosedPoint.finite(Q_BASE, T)
    assert canon(c) == {zero_pt: Fraction(5), inf: Fraction(5)}
    assert reciprocity_check(c)


def test_divisor_t_t():
    c = BrauerClass.make(Q_BASE, 2, [(T, T)])
    inf = ClosedPoint.infinity(Q_BASE)
    zero_pt = ClosedPoint.finite(Q_BASE, T)
    assert canon(c) == {zero_pt: Fraction(-1), inf: Fraction(-1)}


def test_divisor_with_quadratic_point():
    c = BrauerClass.make(Q_BASE, 2, [(T, q_poly(-2, 0, 1))])
    quad = ClosedPoint.finite(Q_BASE, q_poly(-2, 0, 1))
    zero_pt = ClosedPoint.finite(Q_BASE, T)
    div = ramification_divisor(c)
    assert set(div.support()) == {zero_pt, quad}
    assert div.residue(zero_pt).canonical_value() == Fraction(-2)
    # at t^2 - 2 the residue is the image of t, a square root of 2
    theta = residue_field(quad).gen_elem()
    assert div.residue(quad).value == theta
    assert not div.residue(quad).is_trivial()
    assert reciprocity_check(c)


def test_steinberg_class_is_zero():
    c = BrauerClass.make(Q_BASE, 2, [(T, q_poly(1, -1))])
    assert ramification_divisor(c).is_empty
    assert classes_equal(c, BrauerClass.zero(Q_BASE, 2))


def test_ramification_points_cover_entry_factors():
    c = BrauerClass.make(Q_BASE, 2, [(q_poly(-1, 0, 1), T)])
    pts = ramification_points(c)
    polys = {x.poly for x in pts if not x.is_infinity}
    assert ClosedPoint.infinity(Q_BASE) in pts
    assert polys == {q_poly(-1, 1), q_poly(1, 1), T}
    assert set(ramification_divisor(c).support()) <= set(pts)


def test_residue_is_multiplicative():
    rng = random.Random(101)
    for base, p in ((Q_BASE, 2), (F7, 2), (F7, 3)):
        for _ in range(10):
            c1 = random_class(rng, base, p, 2, 3, height=9)
            c2 = random_class(rng, base, p, 2, 3, height=9)
            for x in ramification_points(c1 + c2):
                r12 = residue_at(c1 + c2, x)
                r1, r2 = residue_at(c1, x), residue_at(c2, x)
                assert r12.value == r1.value * r2.value


def test_residue_respects_scaling():
    rng = random.Random(103)
    for base, p in ((F7, 3), (F13, 3), (Q_BASE, 2)):
        for _ in range(8):
            c = random_class(rng, base, p, 2, 3, height=9)
            k = rng.randrange(1, p)
            for x in ramification_points(c):
                assert residue_at(c.scale(k), x).value == residue_at(c, x).value ** k


def test_reciprocity_random_classes():
    rng = random.Random(107)
    for base, p in ((Q_BASE, 2), (F7, 2), (F7, 3), (F13, 3)):
        for _ in range(15):
            c = random_class(rng, base, p, 3, 3, height=12)
            assert reciprocity_check(c)


def test_equal_frozen_cases():
    z = BrauerClass.zero(Q_BASE, 2)
    doubled = BrauerClass.make(Q_BASE, 2, [(T, -1), (T, -1)])
    assert classes_equal(doubled, z)
    five = BrauerClass.make(Q_BASE, 2, [(5, T)])
    three = BrauerClass.make(Q_BASE, 2, [(3, T)])
    assert not classes_equal(five, three)
    assert not classes_equal(BrauerClass.make(Q_BASE, 2, [(T, q_poly(-2, 0, 1))]), z)


def test_equal_frozen_finite():
    f = F7.field
    t7 = Poly.gen(f)
    a = BrauerClass.make(F7, 2, [(3, t7)])
    b = BrauerClass.make(F7, 2, [(Poly.from_ints(f, [0, 0, 3]), t7)])
    assert classes_equal(a, b)
    assert not classes_equal(a, BrauerClass.zero(F7, 2))


def test_equal_matches_reference():
    rng = random.Random(109)
    for base, p in ((Q_BASE, 2), (F7, 2)):
        for _ in range(18):
            a = random_class(rng, base, p, 2, 2, height=8)
            kind = rng.randrange(3)
            if kind == 0:
                b = a
            elif kind == 1:
                s = random_class(rng, base, p, 1, 2, height=8)
                b = a + s + s
            else:
                b = a + random_class(rng, base, p, 1, 2, height=8)
            expected = classes_equal_oracle(a, b)
            assert classes_equal(a, b) == expected
            if kind in (0, 1):
                assert expected


def test_difference_with_self_vanishes():
    rng = random.Random(113)
    for base, p in ((Q_BASE, 2), (F7, 3)):
        for _ in range(6):
            a = random_class(rng, base, p, 2, 2, height=7)
            assert classes_equal(a - a, BrauerClass.zero(base, p))
            assert a.scale(p).symbols == ()
            assert classes_equal(a.scale(1), a)


def test_specialize_and_regular_points():
    c = BrauerClass.make(Q_BASE, 2, [(T, q_poly(1, -1))])
    with pytest.raises(NotSymbolRegular):
        specialize(c, 0)
    with pytest.raises(NotSymbolRegular):
        specialize(c, 1)
    assert specialize(c, -1) == ((Fraction(-1), Fraction(2)),)
    assert not is_symbol_regular(c, 0)
    assert regular_rational_points(c, 3) == [-1, 2, -2]
    cc = BrauerClass.make(Q_BASE, 2, [(T, T)])
    assert regular_rational_points(cc, 3) == [1, -1, 2]


def test_constant_triviality():
    assert constant_is_trivial(F7, [(F7.field.from_int(3), F7.field.from_int(5))], 2)
    assert constant_is_trivial(Q_BASE, [(Fraction(-1), Fraction(2))], 2)
    assert not constant_is_trivial(Q_BASE, [(Fraction(-1), Fraction(-1))], 2)
    with pytest.raises(ScopeError):
        constant_is_trivial(Q_BASE, [(Fraction(2), Fraction(3))], 3)
    with pytest.raises(ValueError):
        constant_is_trivial(Q_BASE, [(Fraction(0), Fraction(3))], 2)


def test_divisor_agreement_up_to_squares():
    a = BrauerClass.make(Q_BASE, 2, [(5, T)])
    b = BrauerClass.make(Q_BASE, 2, [(20, T)])
    c = BrauerClass.make(Q_BASE, 2, [(3, T)])
    da, db, dc = map(ramification_divisor, (a, b, c))
    assert da.agrees_with(db)
    assert not da.agrees_with(dc)
    assert not da.agrees_with(ramification_divisor(BrauerClass.zero(Q_BASE, 2)))


def test_construction_guards():
    with pytest.raises(ValueError):
        BrauerClass.make(Q_BASE, 2, [(0, T)])
    with pytest.raises(ScopeError):
        BrauerClass.make(Q_BASE, 3, [(2, T)])
    with pytest.raises(ScopeError):
        BrauerClass.make(F7, 5, [(3, 2)])
    with pytest.raises(TypeError):
        as_ratfunc(F7, T)
    a = BrauerClass.make(Q_BASE, 2, [(5, T)])
    with pytest.raises(ValueError):
        a + BrauerClass.zero(F7, 2)
    with pytest.raises(ValueError):
        residue_at(a, ClosedPoint.rational(F7, 0))


def test_negation_inverts_second_entry():
    a = BrauerClass.make(Q_BASE, 2, [(5, T)])
    (pair,) = (-a).pairs()
    assert pair[0] == as_ratfunc(Q_BASE, 5)
    assert pair[1] == as_ratfunc(Q_BASE, T).inverse()
