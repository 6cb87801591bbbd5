"""Model-independence: invariants agree across presentations of one field.

Substituting y -> y + t (or rescaling) gives a different defining equation
for the same function field, usually routed through different rows of the
case tables.  Genus, class number, unit rank, per-place ramification
defects and the discriminant degree ledger must all be unchanged.
"""

import random

from funcfields import (
    GF,
    CubicModel,
    FqPoly,
    QuarticModel,
    ZetaData,
    exact_h,
    field_discriminant,
    genus,
    minimal_polynomial_fq,
    parse_poly,
    unit_rank,
)
from funcfields.models import OrderElement, reduce_cubic, reduce_quartic
from funcfields.poly import FuncFieldError, HypothesisRefused, UnknownSignature


def _shifted_cubic(model, t):
    """Model of y + t for polynomial t (same field, different table rows)."""
    alpha = OrderElement(model, [t, FqPoly.one(model.field), FqPoly.zero(model.field)])
    mp = minimal_polynomial_fq(alpha)
    # T^3 + c2 T^2 + c1 T + c0 with c2 = -3t; depress by the cubic shift
    F = model.field
    third = F.inv(F.from_int(3))
    shift = mp[2].scale(F.neg(third))
    from funcfields.models import _binom_shift

    comp = _binom_shift(list(mp), shift)
    assert comp[2].is_zero()
    A2, B2, _ = reduce_cubic(-comp[1], comp[0])
    return CubicModel(A2, B2)


def _shifted_quartic(model, t):
    zero = FqPoly.zero(model.field)
    alpha = OrderElement(model, [t, FqPoly.one(model.field), zero, zero])
    mp = minimal_polynomial_fq(alpha)
    F = model.field
    quarter = F.inv(F.from_int(4))
    shift = mp[3].scale(F.neg(quarter))
    from funcfields.models import _binom_shift

    comp = _binom_shift(list(mp), shift)
    assert comp[3].is_zero()
    A2, B2, C2, _ = reduce_quartic(-comp[2], -comp[1], comp[0])
    return QuarticModel(A2, B2, C2)


def _full_data(model):
    rep = field_discriminant(model)
    rep.require_complete()
    g = genus(model, rep).genus
    r = unit_rank(model)
    if g > 4:
        return g, r, rep.Delta.degree, None
    h = exact_h(model, genus_value=g).h
    return g, r, rep.Delta.degree, h


def test_cubic_invariants_survive_generator_shift():
    rng = random.Random(31415)
    F7 = GF(7)
    checked = 0
    while checked < 12:
        A = FqPoly(F7, [rng.randrange(7) for _ in range(rng.randrange(1, 4))])
        B = FqPoly(F7, [rng.randrange(7) for _ in range(rng.randrange(1, 5))])
        try:
            m = CubicModel(A, B)
            base = _full_data(m)
        except (FuncFieldError, HypothesisRefused, UnknownSignature):
            continue
        t = FqPoly(F7, [rng.randrange(7) for _ in range(rng.randrange(1, 3))])
        m2 = _shifted_cubic(m, t)
        try:
            other = _full_data(m2)
        except (HypothesisRefused, UnknownSignature):
            continue
        assert base == other, (m, m2, base, other)
        checked += 1


def test_cubic_invariants_survive_rescaling():
    rng = random.Random(2718)
    F5 = GF(5)
    checked = 0
    while checked < 8:
        A = FqPoly(F5, [rng.randrange(5) for _ in range(rng.randrange(1, 3))])
        B = FqPoly(F5, [rng.randrange(5) for _ in range(rng.randrange(1, 5))])
        try:
            m = CubicModel(A, B)
            base = _full_data(m)
        except (FuncFieldError, HypothesisRefused, UnknownSignature):
            continue
        # y -> y / Q for a random nonconstant Q scales (A, B) to (A Q^2, B Q^3)
        Q = FqPoly(F5, [rng.randrange(5), 1])
        A2, B2, _ = reduce_cubic(m.A * Q * Q, m.B * Q ** 3)
        m2 = CubicModel(A2, B2)
        try:
            other = _full_data(m2)
        except (HypothesisRefused, UnknownSignature):
            continue
        assert base == other, (m, m2, base, other)
        checked += 1


def test_quartic_invariants_survive_generator_shift():
    rng = random.Random(1618)
    F7 = GF(7)
    checked = 0
    attempts = 0
    while checked < 8 and attempts < 3000:
        attempts += 1
        A = FqPoly(F7, [rng.randrange(7) for _ in range(rng.randrange(1, 3))])
        B = FqPoly(F7, [rng.randrange(7) for _ in range(rng.randrange(1, 3))])
        C = FqPoly(F7, [rng.randrange(7) for _ in range(rng.randrange(1, 4))])
        try:
            m = QuarticModel(A, B, C)
            base = _full_data(m)
        except (FuncFieldError, HypothesisRefused, UnknownSignature):
            continue
        t = FqPoly(F7, [rng.randrange(7) for _ in range(rng.randrange(1, 3))])
        try:
            m2 = _shifted_quartic(m, t)
            other = _full_data(m2)
        except (FuncFieldError, HypothesisRefused, UnknownSignature):
            continue
        assert base == other, (m, m2, base, other)
        checked += 1
    assert checked >= 5


def test_unit_rank2_family_h_consistent_with_regulator():
    # h = (R / f) h' with h' integral: for the rank-2 family R = 3, f = 1,
    # so the exact class number must be divisible by 3
    from funcfields.units import construct_rank2
    from funcfields.class_number import h_prime

    F7 = GF(7)
    model, cert = construct_rank2(F7, FqPoly.x(F7))
    h = exact_h(model).h
    hp = h_prime(h, cert.regulator_R, 1)
    assert hp * cert.regulator_R == h
    assert h % 3 == 0


def test_rank1_family_h_consistent_with_regulator():
    from funcfields.units import construct_rank1
    from funcfields.class_number import h_prime

    F7 = GF(7)
    model, cert = construct_rank1(F7, parse_poly(F7, "x^3"), FqPoly.x(F7), 1, "Thm245")
    h = exact_h(model).h
    hp = h_prime(h, cert.regulator_R, 1)
    assert hp >= 1 and hp * cert.regulator_R == h
