"""Tests for the gap sequence a, the ceiling recurrence b, and their product.

Pinned prefixes were frozen from a standalone brute-force enumeration before
this package existed; the three computation paths must reproduce them and
each other.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from divgap.errors import InsufficientPrecision, OracleBoundExceeded, ResourceLimit
from divgap.intervals import RationalInterval
from divgap.sequences import (
    A_PATHS,
    FACTORED_TERM_LIMIT,
    a_seq,
    b_closed_form,
    b_seq,
    partial_product,
    verify_theorem,
)

A_PREFIX = [4, 3, 4, 2, 4, 8, 16, 64]
B_PREFIX = [1, 1, 1, 2, 3, 4, 6, 9, 14]


def naive_b(count):
    """Re-derive b directly from its definition: b_n = ceil((sum of earlier b)/2)."""
    terms = [1]
    while len(terms) < count:
        s = sum(terms)
        terms.append((s + 1) // 2)
    return terms


# --- pinned prefixes ---


@pytest.mark.parametrize("path", A_PATHS)
def test_a_prefix_on_every_path(path):
    rep = a_seq(7, path)
    assert rep.terms == A_PREFIX
    assert rep.name == "a"
    assert rep.start_index == 0
    assert rep.path == path


def test_b_prefix():
    rep = b_seq(9)
    assert rep.terms == B_PREFIX
    assert rep.name == "b"
    assert rep.start_index == 1


def test_b_matches_its_definition():
    assert b_seq(60).terms == naive_b(60)


def test_report_indexing():
    rep = b_seq(9)
    assert rep.term(1) == 1
    assert rep.term(9) == 14
    assert rep.last_index == 9
    assert len(rep) == 9
    assert list(rep) == B_PREFIX
    with pytest.raises(IndexError):
        rep.term(0)
    with pytest.raises(IndexError):
        rep.term(10)


def test_a_seq_rejects_bad_arguments():
    with pytest.raises(ValueError):
        a_seq(-1, "oracle")
    with pytest.raises(ValueError):
        a_seq(5, "telepathy")
    with pytest.raises(ValueError):
        b_seq(0)


# --- path equivalence ---


def test_paths_agree_to_ten():
    oracle = a_seq(10, "oracle").terms
    factored = a_seq(10, "factored").terms
    fast = a_seq(10, "fast").terms
    assert oracle == factored == fast


def test_factored_and_fast_agree_to_forty():
    factored = a_seq(40, "factored")
    fast = a_seq(40, "fast")
    for n in range(41):
        assert factored.term(n) == fast.term(n)


def test_oracle_path_stops_at_its_bound():
    # the 11th partial product is 3 * 2^64, far past trial division
    with pytest.raises(OracleBoundExceeded):
        a_seq(11, "oracle")


def test_factored_path_has_a_term_limit():
    with pytest.raises(ResourceLimit):
        a_seq(FACTORED_TERM_LIMIT + 1, "factored")


def test_fast_path_reaches_two_hundred():
    # late terms are astronomically large; they stay exponents and are
    # checked against the ceiling recurrence without materializing
    rep = a_seq(200, "fast")
    b = b_seq(200).terms
    assert list(rep.exponents) == b[2:]
    assert rep.term(3) == 2
    assert rep.term(45) == 1 << b[44]


# --- growth and structure ---


def test_b_is_nondecreasing():
    terms = b_seq(200).terms
    assert all(x <= y for x, y in zip(terms, terms[1:]))


def test_a_is_nondecreasing_from_three():
    rep = a_seq(120, "fast")
    exps = rep.exponents  # exponents of the terms from index 3 on
    assert all(x <= y for x, y in zip(exps, exps[1:]))


def test_theorem_links_a_to_b():
    b = b_seq(40).terms
    fast = a_seq(40, "fast")
    for n in range(3, 41):
        assert fast.term(n) == 1 << b[n - 1]


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=300))
def test_b_recurrence_rederivable_from_emitted_terms(n):
    terms = b_seq(n).terms
    s = sum(terms[: n - 1])
    assert terms[n - 1] == (s + 1) // 2


# --- partial products ---


def test_partial_product_small_values():
    # p_n = product of the first n gap terms; frozen by direct multiplication
    expected = {1: 4, 2: 12, 3: 48, 4: 96, 5: 384, 6: 3072, 7: 49152}
    for n, want in expected.items():
        for path in A_PATHS:
            state = partial_product(n, path)
            assert state.n == n
            assert state.factorization.value() == want


def test_partial_product_structure():
    state = partial_product(1, "fast")
    assert state.factorization.pairs == ((2, 2),)
    for n in range(2, 30):
        pairs = partial_product(n, "fast").factorization.pairs
        assert len(pairs) == 2
        assert pairs[0][0] == 2 and pairs[1] == (3, 1)


def test_partial_product_exponent_bookkeeping():
    b = b_seq(60).terms
    for n in range(3, 60):
        e = partial_product(n, "fast").factorization.pairs[0][1]
        assert e == 2 + sum(b[: n - 1])
    # consecutive exponents differ by exactly b_n
    e_prev = partial_product(10, "fast").factorization.pairs[0][1]
    e_next = partial_product(11, "fast").factorization.pairs[0][1]
    assert e_next - e_prev == b[9]


def test_partial_product_running_sum():
    b = b_seq(30).terms
    state = partial_product(30, "fast")
    assert state.running_b_sum == sum(b[:29])


def test_partial_product_paths_agree():
    for n in range(1, 12):
        want = partial_product(n, "oracle").factorization
        assert partial_product(n, "factored").factorization == want
        assert partial_product(n, "fast").factorization == want


def test_partial_product_known_large_exponent():
    # frozen from an earlier run of the recurrence alone
    state = partial_product(40, "fast")
    assert state.factorization.pairs[0] == (2, 7972439)


# --- theorem verification ---


def test_verify_theorem_oracle_range():
    rep = verify_theorem(10, "oracle")
    assert rep.all_passed
    assert [r.index for r in rep.records] == list(range(3, 11))


def test_verify_theorem_factored_range():
    rep = verify_theorem(40, "factored")
    assert rep.all_passed
    assert len(rep.records) == 38


def test_verify_theorem_rejects_bad_range():
    with pytest.raises(ValueError):
        verify_theorem(2, "factored")
    with pytest.raises(ValueError):
        verify_theorem(10, "fast")  # fast assumes the theorem; not a check


# --- closed form for b ---


def test_closed_form_round_trip():
    from divgap.constants import c_enclosure

    enc = c_enclosure(200)
    b = b_seq(100).terms
    for n in range(1, 101):
        assert b_closed_form(n, enc) == b[n - 1]


def test_closed_form_needs_precision():
    wide = RationalInterval(1, 2)
    with pytest.raises(InsufficientPrecision):
        b_closed_form(50, wide)


def test_closed_form_rejects_bad_index():
    from divgap.constants import c_enclosure

    with pytest.raises(ValueError):
        b_closed_form(0, c_enclosure(50))
