import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betafin import polys as P
from betafin.errors import FieldMismatch, NoRootAboveOne, Reducible
from betafin.field import (
    cubic_pisot_criterion,
    is_pisot,
    make_field,
    unit_disk_profile,
)

TRIBONACCI = (1, 1, 1)
MINIMAL_PISOT = (1, 1, 0)


def family(t):
    return (t, -2 * t, 2 * t)


def bisect_oracle(poly_coeffs, lo, hi, width=Q(1, 1000)):
    """Independent root bracket by plain rational bisection on p."""
    p = P.poly(poly_coeffs)
    lo, hi = Q(lo), Q(hi)
    assert P.eval_at(p, lo) * P.eval_at(p, hi) < 0
    while hi - lo > width:
        mid = (lo + hi) / 2
        if P.eval_at(p, mid) == 0:
            return mid, mid
        if (P.eval_at(p, mid) > 0) == (P.eval_at(p, lo) > 0):
            lo = mid
        else:
            hi = mid
    return lo, hi


def test_make_field_examples():
    trib = make_field(TRIBONACCI)
    lo, hi = bisect_oracle((-1, -1, -1, 1), 1, 2)
    # beta in (1.8, 1.9) per the bracket
    assert Q(18, 10) < lo and hi < Q(19, 10)
    assert trib.from_rational(Q(18, 10)) < trib.beta() < trib.from_rational(Q(19, 10))

    fam = make_field(family(2))
    assert fam.from_rational(2) < fam.beta() < fam.from_rational(3)

    minp = make_field(MINIMAL_PISOT)
    assert minp.from_rational(Q(13, 10)) < minp.beta() < minp.from_rational(Q(14, 10))


def test_make_field_errors():
    with pytest.raises(NoRootAboveOne):
        make_field((-1, -3))  # x^2+3x+1
    with pytest.raises(Reducible):
        make_field((-2, 3))  # (x-1)(x-2)
    with pytest.raises(Reducible):
        make_field((0, 1, 1))  # zero constant term
    prod = P.mul(P.poly((-1, -1, 1)), P.poly((-2, 0, 1)))
    with pytest.raises(Reducible):
        make_field([-int(c) for c in prod[:-1]])


def test_defining_relation():
    trib = make_field(TRIBONACCI)
    b = trib.beta()
    assert b * b * b == b * b + b + 1
    assert (b - b).is_zero()


@pytest.mark.parametrize("t", [2, 3, 5])
def test_family_beta_inverse_identity(t):
    f = make_field(family(t))
    bi = f.beta_inverse()
    assert 2 * t * bi - 2 * t * bi**2 + t * bi**3 == f.one()


coords3 = st.tuples(*[st.fractions(min_value=-5, max_value=5) for _ in range(3)])


@settings(max_examples=40, deadline=None)
@given(coords3, coords3, coords3)
def test_ring_axioms(ca, cb, cc):
    f = make_field(TRIBONACCI)
    a, b, c = f.from_coords(ca), f.from_coords(cb), f.from_coords(cc)
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


def test_sign_examples():
    for t in range(2, 21):
        f = make_field(family(t))
        assert (f.beta() - (2 * t - 2)).sign() == 1
        assert (f.beta() - (2 * t - 1)).sign() == -1
    assert make_field(TRIBONACCI).zero().sign() == 0


def test_sign_transitivity_random():
    rng = random.Random(11)
    f = make_field(TRIBONACCI)
    for _ in range(60):
        a, b, c = (
            f.from_coords([Q(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(3)])
            for _ in range(3)
        )
        if (a - b).sign() == 1 and (b - c).sign() == 1:
            assert (a - c).sign() == 1


def test_floor_examples():
    for t in range(2, 21):
        assert make_field(family(t)).floor_beta() == 2 * t - 2
    trib = make_field(TRIBONACCI)
    assert trib.from_rational(Q(7, 2)).floor() == 3
    assert trib.from_rational(Q(-7, 2)).floor() == -4
    # derived: bisection oracle puts tribonacci beta in (1.8, 1.9)
    assert trib.floor_beta() == 1
    assert make_field(MINIMAL_PISOT).floor_beta() == 1


def test_floor_bracketing_property():
    rng = random.Random(5)
    f = make_field(family(3))
    for _ in range(30):
        a = f.from_coords([Q(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3)])
        n = a.floor()
        assert (a - n).sign() >= 0
        assert (a - (n + 1)).sign() < 0


def test_interval_refinement_halves():
    f = make_field(TRIBONACCI)
    lo, hi = f.interval
    width = hi - lo
    for k in range(1, 6):
        f.refine()
        lo, hi = f.interval
        assert hi - lo == width / 2**k


def test_field_mismatch():
    a = make_field(TRIBONACCI).one()
    b = make_field(MINIMAL_PISOT).one()
    with pytest.raises(FieldMismatch):
        a + b


def test_division_and_powers():
    f = make_field(family(2))
    b = f.beta()
    x = f.from_coords((Q(3, 7), Q(-1, 2), Q(5)))
    assert x / x == f.one()
    assert b ** (-3) == f.beta_inverse() ** 3
    assert b**4 * b ** (-4) == f.one()


def test_is_pisot_examples():
    assert is_pisot(make_field(family(2)))
    assert is_pisot(make_field(MINIMAL_PISOT))
    # derived oracle: x^2-3x+1 has roots in (0,1) and (2,3) by sign changes
    p = P.poly((1, -3, 1))
    assert P.eval_at(p, 0) > 0 > P.eval_at(p, 1)
    assert P.eval_at(p, 2) < 0 < P.eval_at(p, 3)
    assert is_pisot(make_field((-1, 3)))


def test_boundary_root_reported():
    # reciprocal quartic with a conjugate pair on the circle
    salem = make_field((-1, 1, 1, 1))
    assert unit_disk_profile(salem) == (1, 2, 1)
    assert not is_pisot(salem)


def test_pisot_grid_matches_cubic_criterion():
    # small sweep here; the acceptance suite runs the full |a|,|b|,|c| <= 6 grid
    for a in range(-3, 4):
        for b in range(-3, 4):
            for c in range(-3, 4):
                coeffs = (c, b, a)
                irreducible, verified = P.irreducible_over_q((-c, -b, -a, 1))
                if not (irreducible and verified):
                    continue
                try:
                    f = make_field(coeffs)
                except (NoRootAboveOne, Reducible):
                    continue
                assert is_pisot(f) == cubic_pisot_criterion(a, b, c), (a, b, c)
