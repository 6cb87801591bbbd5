"""Discriminant valuations, field discriminant ledger, genus, unit rank."""

import random

import pytest

from funcfields import (
    GF,
    CubicModel,
    FinitePlace,
    FqPoly,
    QuarticModel,
    disc_valuation_cubic,
    disc_valuation_quartic,
    field_discriminant,
    genus,
    monic_irreducibles,
    parse_poly,
    unit_rank,
)
from funcfields.poly import HypothesisRefused, UnknownSignature
from funcfields.units import construct_rank2

F3 = GF(3)
F5 = GF(5)
F7 = GF(7)


def pp(s, F=F7):
    return parse_poly(F, s)


# -- cubic discriminant valuations (Llorente-Nart style criterion) -----------------


def test_cubic_disc_valuation_both_divisible():
    X = pp("x")
    m = CubicModel(X, X)  # v_x(A) = v_x(B) = 1
    assert disc_valuation_cubic(m, X) == 2


def test_cubic_disc_valuation_odd_vD():
    X = pp("x")
    m = CubicModel(X, pp("x^2"))  # v(D) = v(4x^3 - 27x^4) = 3
    assert disc_valuation_cubic(m, X) == 1


def test_cubic_disc_valuation_even_vD_unramified():
    # m1 = m0 = 0, v_P(D) even > 0 somewhere
    rng = random.Random(3)
    hits = 0
    while hits < 3:
        A = FqPoly(F7, [rng.randrange(7) for _ in range(3)])
        B = FqPoly(F7, [rng.randrange(7) for _ in range(4)])
        try:
            m = CubicModel(A, B)
        except Exception:
            continue
        D = m.discriminant()
        for P in monic_irreducibles(F7, 1):
            v = FinitePlace(P).val(D)
            if v > 0 and v % 2 == 0 and not (A % P).is_zero() and not (B % P).is_zero():
                val = disc_valuation_cubic(m, P)
                assert val in (0, 2) and val == (0 if True else 2)
                # v_P(A) v_P(B) = 0 here, so the criterion gives 0
                assert val == 0
                hits += 1


def test_field_discriminant_squarefree_D():
    m = CubicModel(pp("x^2"), FqPoly.one(F7))
    rep = field_discriminant(m)
    assert rep.complete
    assert rep.Delta == m.discriminant().monic()
    assert rep.index == FqPoly.one(F7)


def test_field_discriminant_ledger_identities():
    rng = random.Random(17)
    checked = 0
    while checked < 25:
        A = FqPoly(F7, [rng.randrange(7) for _ in range(rng.randrange(1, 4))])
        B = FqPoly(F7, [rng.randrange(7) for _ in range(rng.randrange(1, 5))])
        try:
            m = CubicModel(A, B)
        except Exception:
            continue
        rep = field_discriminant(m)  # internally asserts v(D) = 2v(I) + v(Delta)
        assert rep.complete
        assert rep.D.degree == 2 * rep.index.degree + rep.Delta.degree
        prod = rep.index * rep.index * rep.Delta
        assert (rep.D % prod).is_zero()
        checked += 1


def test_prop_241_shape_gives_constant_index():
    # D = D1 D2^2 with D2 | B forces I constant; Thm 2.4.7 models satisfy it
    model, _ = construct_rank2(F7, FqPoly.x(F7))
    rep = field_discriminant(model)
    assert rep.index.degree == 0


def test_char2_discriminant_cases():
    F2 = GF(2)
    X = parse_poly(F2, "x")
    # case 1: 3 v(A) > 2 v(B), v(B) = 1 -> v(Delta) = 2, v(I) = 0
    m = CubicModel(parse_poly(F2, "x"), parse_poly(F2, "x"))
    rep = field_discriminant(m)
    assert rep.complete
    row = [r for r in rep.rows if r.P == X][0]
    assert row.vDelta == 2 and row.vI == 0
    # v(B) = 2 in case 1 gives v(I) = 1 (the relation B^2 = I^2 Delta forces it)
    m2 = CubicModel(parse_poly(F2, "x^3 + x^2"), parse_poly(F2, "x^2"))
    rep2 = field_discriminant(m2)
    assert rep2.complete
    row2 = [r for r in rep2.rows if r.P == X][0]
    assert (row2.vD, row2.vI, row2.vDelta) == (4, 1, 2)


def test_char2_case22_square_test():
    F2 = GF(2)
    # v_x(B) = 2, v_x(A) = 0: v(I) = 1 iff A is a square mod x^2; squares mod
    # x^2 over F_2 are exactly the constants 0, 1, so A = x^2 + x + 1 gives v(I) = 0
    m = CubicModel(parse_poly(F2, "x^2 + x + 1"), parse_poly(F2, "x^2"))
    rep = field_discriminant(m)
    assert rep.complete
    row = [r for r in rep.rows if r.P == parse_poly(F2, "x")][0]
    assert 2 * row.vI + row.vDelta == row.vD == 4
    assert row.vI == 0


def test_char3_discriminant_requires_A_cubefree():
    m = CubicModel(parse_poly(F3, "x"), parse_poly(F3, "x^3 + 2*x + 1"))
    rep = field_discriminant(m)
    assert rep.complete
    with pytest.raises(HypothesisRefused):
        field_discriminant(CubicModel(FqPoly.zero(F3), parse_poly(F3, "x^2 + 1"), _skip_checks=True))


def test_char3_case_22_cube_test():
    # v_P(A) = 2, v_P(B) = 0 at P = x: v(I) = 1 iff B a cube mod P^2
    m = CubicModel(parse_poly(F3, "x^2"), parse_poly(F3, "x^3 + 2*x + 1"))
    rep = field_discriminant(m)
    assert rep.complete
    for row in rep.rows:
        assert row.vD == 2 * row.vI + row.vDelta


# -- quartic discriminant valuations ------------------------------------------------


def test_quartic_disc_valuation_totally_ramified():
    X = pp("x")
    m = QuarticModel(pp("x^2 + x"), pp("x + x^2"), pp("x + x^3"))
    assert disc_valuation_quartic(m, X) == 3  # (4,1) tame defect


def test_quartic_disc_valuation_biquadratic_case21():
    zero = FqPoly.zero(F7)
    # v_P(A^2 - 4C) odd at a place with m2 = m0 = 0 gives v(Delta) = 2
    A = pp("x + 1")
    C = (A * A - pp("x")).scale(F7.inv(4))  # A^2 - 4C = x
    m = QuarticModel(A, zero, C)
    assert disc_valuation_quartic(m, pp("x")) == 2


def test_quartic_disc_valuation_leftover_parity():
    m = QuarticModel(pp("x"), pp("1"), pp("x^2"))
    D = m.discriminant()
    for P, mult in [(P, FinitePlace(P).val(D)) for P in monic_irreducibles(F7, 1)]:
        if mult:
            v = disc_valuation_quartic(m, P)
            assert 0 <= v <= mult


# -- genus ---------------------------------------------------------------------------


def test_genus_purely_cubic_formula():
    # y^3 = B, squarefree, 3 does not divide deg B: g = deg B - 1
    for Btxt in ("x^2 + x", "x^2 + 1", "x^4 + x + 1"):
        B = pp(Btxt)
        m = CubicModel(FqPoly.zero(F7), -B)
        assert genus(m).genus == B.degree - 1


def test_genus_rational_degenerate():
    m = CubicModel(FqPoly.zero(F7), -pp("x"))
    assert genus(m).genus == 0


def test_genus_rank2_family_closed_form():
    # Thm 2.4.7 models: g = 3 n1/2 - 2 with n1 = 2 deg A
    model, _ = construct_rank2(F7, FqPoly.x(F7))
    assert genus(model).genus == 3 * 2 // 2 - 2 == 1


def test_genus_refuses_wild_infinite_place():
    F2 = GF(2)
    m = CubicModel(parse_poly(F2, "x^3"), parse_poly(F2, "x"))  # (1,1,2,1) wild at infinity
    with pytest.raises(UnknownSignature):
        genus(m)


# -- unit rank -----------------------------------------------------------------------


def test_unit_rank_examples():
    assert unit_rank(CubicModel(pp("x"), pp("x^2 + x"))) == 0  # (3,1)
    assert unit_rank(CubicModel(pp("x^3"), pp("x"))) == 1  # (1,1,2,1)
    model, _ = construct_rank2(F7, FqPoly.x(F7))
    assert unit_rank(model) == 2
