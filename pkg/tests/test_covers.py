"""Kummer covers: splitting witnesses and unramifying covers.

Frozen examples pin the exact cover equations; random loops then lean
on the library's own verifiers, which recompute valuations and residues
from scratch rather than trusting the construction.
"""

import random
from fractions import Fraction

import pytest

from brauercalc.brauer import BrauerClass, as_ratfunc, ramification_divisor
from brauercalc.covers import (
    KummerCoverDatum,
    Reparametrization,
    make_unramified_cover,
    pullback_class,
    splitting_witness,
    unramified_cover_certificates,
    verify_splitting_witness,
)
from brauercalc.points import ClosedPoint, Q_BASE
from brauercalc.poly import Poly, QQ, RationalFunction

from _gen import F7, nonsquare_rational, nonzero_rational, rational

T = Poly.gen(QQ)


def q_poly(*coeffs):
    return Poly.from_ints(QQ, list(coeffs))


def test_witness_five_t():
    w = splitting_witness(Q_BASE, 2, 5, T)
    assert w.kind == "splitting" and w.m == 2
    assert w.basepoint_t == Fraction(0)
    assert w.g == RationalFunction(Poly(QQ, [Fraction(0), Fraction(-1, 5)]))
    # rational parametrization t = -5 s^2
    assert w.reparam.subst == RationalFunction(q_poly(0, 0, -5))
    assert w.fiber_root == Fraction(0)
    cls = BrauerClass.make(Q_BASE, 2, [(5, T)])
    report = verify_splitting_witness(cls, w)
    assert report.mode == "full" and report.ok
    assert [c.name for c in report.checks] == [
        "cover-vanishes-simply-at-point",
        "fiber-root",
        "pullback-unramified-above-point",
        "pullback-divisor-empty",
        "pullback-constant-trivial",
    ]
    assert report.notes == ()


def test_witness_minus_one_t():
    w = splitting_witness(Q_BASE, 2, -1, T)
    assert w.g == RationalFunction(T)
    assert w.reparam.subst == RationalFunction(q_poly(0, 0, 1))


def test_witness_absorbs_unit():
    w = splitting_witness(Q_BASE, 2, 3, q_poly(30, -15))
    assert w.basepoint_t == Fraction(2)
    assert w.g == RationalFunction(q_poly(-10, 5))
    assert w.reparam.subst == RationalFunction(
        Poly(QQ, [Fraction(2), Fraction(0), Fraction(1, 5)])
    )
    cls = BrauerClass.make(Q_BASE, 2, [(3, q_poly(30, -15))])
    report = verify_splitting_witness(cls, w)
    assert report.mode == "full" and report.ok


def test_witness_not_bare_symbol():
    w = splitting_witness(Q_BASE, 2, 5, T)
    cls = BrauerClass.make(Q_BASE, 2, [(5, T), (3, 7)])
    report = verify_splitting_witness(cls, w)
    assert report.mode == "full" and report.ok
    assert len(report.checks) == 3
    assert any("bare" in n for n in report.notes)


def test_witness_odd_p_certificates_only():
    t7 = Poly.gen(F7.field)
    w = splitting_witness(F7, 3, 3, t7)
    assert w.m == 3 and w.reparam is None
    cls = BrauerClass.make(F7, 3, [(3, t7)])
    report = verify_splitting_witness(cls, w)
    assert report.mode == "certificates-only" and report.ok
    assert any("p = 2" in n for n in report.notes)


def test_witness_input_guards():
    with pytest.raises(ValueError):
        splitting_witness(Q_BASE, 2, 4, T)  # 4 is a square: unramified
    with pytest.raises(ValueError):
        splitting_witness(Q_BASE, 2, 5, q_poly(0, 0, 1))
    with pytest.raises(ValueError):
        splitting_witness(Q_BASE, 2, T, T)
    with pytest.raises(ValueError):
        splitting_witness(Q_BASE, 2, 5, 3)
    with pytest.raises(ValueError):
        splitting_witness(Q_BASE, 2, 0, T)


def test_witness_random_units():
    rng = random.Random(211)
    for _ in range(25):
        a = nonsquare_rational(rng, 30)
        u = nonzero_rational(rng, 20)
        c = rational(rng, 20)
        lin = RationalFunction(Poly(QQ, [-c, QQ.one])) * RationalFunction.constant(
            QQ, u
        )
        w = splitting_witness(Q_BASE, 2, a, lin)
        assert w.basepoint_t == c
        cls = BrauerClass.make(Q_BASE, 2, [(a, lin)])
        report = verify_splitting_witness(cls, w)
        assert report.mode == "full" and report.ok, (a, u, c)


def test_unramified_cover_infinite_pole():
    cls = BrauerClass.make(Q_BASE, 2, [(T, q_poly(-2, 0, 1))])
    w = make_unramified_cover(cls, 1)
    assert w.kind == "unramified" and w.m == 2
    assert w.f == RationalFunction(q_poly(0, -2, 0, 1))  # t(t^2 - 2)
    assert w.fiber_root == Fraction(-1)
    report = unramified_cover_certificates(cls, w)
    assert report.ok
    names = [c.name for c in report.checks]
    assert names.count("eisenstein-valuation") == 2
    assert "basepoint-regular" in names and "fiber-root" in names


def test_unramified_cover_needs_finite_pole_when_infinity_ramifies():
    cls = BrauerClass.make(Q_BASE, 2, [(5, T)])
    with pytest.raises(ValueError):
        make_unramified_cover(cls, 2)
    bpt = ClosedPoint.rational(Q_BASE, 1)
    w = make_unramified_cover(cls, 2, bpt)
    assert w.f == RationalFunction(T, q_poly(1, -2, 1))  # t / (t-1)^2
    report = unramified_cover_certificates(cls, w)
    assert report.ok
    # both ramified points, including infinity, get simple zeros
    from brauercalc.points import valuation_at

    assert valuation_at(w.g, ClosedPoint.infinity(Q_BASE)) == 1


def test_unramified_cover_quadratic_pole_point():
    cls = BrauerClass.make(Q_BASE, 2, [(T, q_poly(-2, 0, 1))])
    bpt = ClosedPoint.finite(Q_BASE, q_poly(1, 0, 1))
    w = make_unramified_cover(cls, 1, bpt)
    report = unramified_cover_certificates(cls, w)
    assert report.ok
    from brauercalc.points import valuation_at

    assert valuation_at(w.f, bpt) < 0
    for pt in ramification_divisor(cls).support():
        assert valuation_at(w.g, pt) == 1


def test_unramified_cover_finite_base():
    t7 = Poly.gen(F7.field)
    cls = BrauerClass.make(F7, 3, [(3, t7)])
    bpt = ClosedPoint.rational(F7, 1)
    w = make_unramified_cover(cls, 3, bpt)
    report = unramified_cover_certificates(cls, w)
    assert report.ok


def test_unramified_cover_rejects_bad_points():
    cls = BrauerClass.make(Q_BASE, 2, [(T, q_poly(-2, 0, 1))])
    with pytest.raises(ValueError):
        make_unramified_cover(cls, 0)  # basepoint inside the locus
    with pytest.raises(ValueError):
        make_unramified_cover(cls, 1, ClosedPoint.finite(Q_BASE, q_poly(-2, 0, 1)))
    with pytest.raises(ValueError):
        make_unramified_cover(cls, 1, ClosedPoint.rational(Q_BASE, 1))


def test_pullback_substitutes_entries():
    cls = BrauerClass.make(Q_BASE, 2, [(T, T)])
    rep = Reparametrization(RationalFunction(q_poly(0, 0, 1)))
    pulled = pullback_class(cls, rep)
    sq = as_ratfunc(Q_BASE, q_poly(0, 0, 1))
    assert pulled.pairs() == ((sq, sq),)


def test_datum_guards():
    t7 = Poly.gen(F7.field)
    with pytest.raises(ValueError):
        KummerCoverDatum(
            kind="unramified",
            base=F7,
            m=7,
            g=as_ratfunc(F7, t7),
            basepoint_t=F7.field.zero,
            fiber_root=F7.field.zero,
        )
    with pytest.raises(ValueError):
        Reparametrization(RationalFunction.constant(QQ, Fraction(2)))
