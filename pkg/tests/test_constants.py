"""Tests for rational intervals, the two constant enclosures, and digits.

The digit strings pinned below were frozen from an independent scan of the
growth constraints with Fraction arithmetic, written before this module,
and are compared as literal text; nothing here is allowed to round.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divgap.constants import (
    DEFAULT_TERMS,
    K3_SCALE,
    c_digits,
    c_enclosure,
    k3_digits,
    k3_enclosure,
    relation_check,
)
from divgap.errors import EmptyIntersection
from divgap.intervals import DigitCertificate, RationalInterval, render_digits

# 34 certified places of the growth constant from the 200-term enclosure
C_200 = "0.3605045561966149591015446628665164"
# the first 26 of those places, quoted independently as the reference value
C_REFERENCE_26 = "0.36050455619661495910154466"
# leading digits of the seed-2 iteration's growth constant
K3_PREFIX = "1.62227050288476731595695098"


# --- RationalInterval ---


def test_interval_basics():
    iv = RationalInterval(Fraction(1, 3), Fraction(1, 2))
    assert iv.width == Fraction(1, 6)
    assert iv.contains(Fraction(2, 5))
    assert not iv.contains(Fraction(2, 3))
    assert iv.encloses(RationalInterval(Fraction(1, 3), Fraction(2, 5)))


def test_interval_coerces_and_validates():
    iv = RationalInterval(1, 2)
    assert iv.lo == Fraction(1) and iv.hi == Fraction(2)
    with pytest.raises(ValueError):
        RationalInterval(2, 1)


def test_interval_scale_and_intersect():
    iv = RationalInterval(2, 4).scale(Fraction(1, 2))
    assert (iv.lo, iv.hi) == (1, 2)
    a = RationalInterval(0, 2)
    b = RationalInterval(1, 3)
    got = a.intersect(b)
    assert (got.lo, got.hi) == (1, 2)
    assert a.intersect(RationalInterval(5, 6)) is None
    assert a.overlaps(b)
    assert not a.overlaps(RationalInterval(3, 4))


def test_interval_hull():
    h = RationalInterval(0, 1).hull(RationalInterval(3, 4))
    assert (h.lo, h.hi) == (0, 4)


def test_point_interval():
    pt = RationalInterval(Fraction(1, 3), Fraction(1, 3))
    assert pt.width == 0
    assert pt.contains(Fraction(1, 3))


# --- render_digits ---


def test_render_digits_truncates_never_rounds():
    iv = RationalInterval(Fraction(1999, 1000), Fraction(19999, 10000))
    cert = render_digits(iv, 10)
    # common truncation prefix of 1.999 and 1.9999 at 3 places
    assert cert.decimal_prefix == "1.999"
    assert cert.certified_places == 3


def test_render_digits_integer_parts_must_agree():
    iv = RationalInterval(Fraction(9, 10), Fraction(11, 10))
    assert render_digits(iv, 5) == DigitCertificate("", 0)


def test_render_digits_point_interval_hits_the_cap():
    pt = RationalInterval(Fraction(1, 3), Fraction(1, 3))
    cert = render_digits(pt, 12)
    assert cert.decimal_prefix == "0.333333333333"
    assert cert.certified_places == 12


def test_render_digits_respects_the_cap():
    iv = c_enclosure(100)
    assert render_digits(iv, 5).certified_places == 5


@settings(max_examples=200, deadline=None)
@given(
    st.fractions(min_value=0, max_value=50),
    st.fractions(min_value=0, max_value=50),
    st.integers(min_value=1, max_value=25),
)
def test_render_digits_is_a_common_truncation_prefix(x, y, places):
    lo, hi = min(x, y), max(x, y)
    cert = render_digits(RationalInterval(lo, hi), places)
    if cert.certified_places == 0:
        if int(lo) != int(hi):
            assert cert.decimal_prefix == ""
        else:
            assert cert.decimal_prefix == str(int(lo))
        return
    d = cert.certified_places
    scaled_lo = (lo.numerator * 10**d) // lo.denominator
    scaled_hi = (hi.numerator * 10**d) // hi.denominator
    assert scaled_lo == scaled_hi
    whole, frac = divmod(scaled_lo, 10**d)
    assert cert.decimal_prefix == f"{whole}.{frac:0{d}d}"
    # maximality: one more place must disagree, unless the cap cut it off
    if d < places:
        e = d + 1
        assert (lo.numerator * 10**e) // lo.denominator != (
            hi.numerator * 10**e
        ) // hi.denominator


# --- the growth-constant enclosure ---


def test_c_enclosure_digits_at_200_terms():
    cert = c_digits(200)
    assert cert.decimal_prefix == C_200
    assert cert.certified_places == 34
    assert cert.decimal_prefix.startswith(C_REFERENCE_26)


def test_c_enclosure_width_law():
    for n in (1, 5, 20, 90, 200):
        assert c_enclosure(n).width <= Fraction(2, 3) ** n


def test_c_enclosure_nesting():
    outer = None
    for n in (1, 3, 10, 40, 120, 300):
        iv = c_enclosure(n)
        assert iv.width >= 0  # non-empty by construction
        if outer is not None:
            assert outer.encloses(iv)
        outer = iv


def test_c_enclosure_more_terms_certify_more_digits():
    assert c_digits(300).decimal_prefix.startswith(C_200)
    assert c_digits(300).certified_places >= 50


def test_c_enclosure_validates():
    with pytest.raises(ValueError):
        c_enclosure(0)


def test_c_enclosure_reports_first_violation():
    from divgap.constants import _intersect_growth_constraints

    # a fabricated second term far outside the first term's band
    with pytest.raises(EmptyIntersection) as info:
        _intersect_growth_constraints([1, 100])
    assert info.value.index == 2


# --- the ceiling-iteration constant ---


def test_k3_enclosure_digits():
    cert = k3_digits(200)
    assert cert.decimal_prefix.startswith(K3_PREFIX)
    assert cert.certified_places >= 30


def test_k3_enclosure_width_is_exact():
    for n in (1, 7, 33, 128):
        assert k3_enclosure(n).width == 2 * Fraction(2, 3) ** n


def test_k3_enclosure_nesting():
    outer = None
    for n in (1, 4, 16, 64, 256):
        iv = k3_enclosure(n)
        if outer is not None:
            assert outer.encloses(iv)
        outer = iv


def test_k3_seed_choice_is_the_shifted_seed1_iteration():
    from divgap.josephus import ow_sequence

    # the seed-1 iterate one index later gives the same enclosure endpoints
    n = 50
    e_seed1 = ow_sequence(3, 1, n + 1).terms[-1]
    iv = k3_enclosure(n)
    assert iv.lo == e_seed1 * Fraction(2, 3) ** n


# --- the relation between the two constants ---


def test_relation_at_200_terms():
    rep = relation_check(200)
    assert rep.overlap
    assert rep.agreeing_places == 34
    assert rep.c_interval.overlaps(rep.k3_scaled_interval)


def test_relation_at_50_terms():
    rep = relation_check(50)
    assert rep.overlap
    assert rep.agreeing_places == 8


def test_relation_scaling_factor():
    assert K3_SCALE == Fraction(2, 9)
    rep = relation_check(80)
    want = k3_enclosure(80).scale(Fraction(2, 9))
    assert rep.k3_scaled_interval.lo == want.lo
    assert rep.k3_scaled_interval.hi == want.hi


def test_relation_agreement_grows_with_terms():
    places = [relation_check(n).agreeing_places for n in (25, 50, 100, 200)]
    assert places == sorted(places)


def test_default_terms():
    assert DEFAULT_TERMS == 200
