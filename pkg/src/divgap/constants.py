"""Certified rational enclosures of the two limit constants and their relation.

The growth constant c of the half-sum ceiling recurrence satisfies
b(n) = ceil(c * (3/2)**n - 1/2) for every n, so each computed term pins c
inside an interval of width (2/3)**n; intersecting them certifies digits.
The circle-game constant K3 is the limit of e(n) * (2/3)**n for the q = 3
ceiling iteration seeded at 2, which nests by construction. relation_check
compares c against (2/9) * K3 with no rounding anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyIntersection
from .intervals import DigitCertificate, RationalInterval, render_digits
from .josephus import ow_sequence
from .sequences import b_seq

DEFAULT_TERMS = 200
K3_SCALE = Fraction(2, 9)


def _intersect_growth_constraints(terms: list[int]) -> RationalInterval:
    """Intersect the per-index constraints ((b - 1/2), (b + 1/2)] * (2/3)^n.

    An empty running intersection would falsify the ceiling closed form for
    the supplied terms, so it aborts with the first violating index instead
    of clamping.
    """
    lo = hi = None
    scale = Fraction(1)
    two_thirds = Fraction(2, 3)
    half = Fraction(1, 2)
    for n, b in enumerate(terms, start=1):
        scale *= two_thirds
        cand_lo = (b - half) * scale
        cand_hi = (b + half) * scale
        lo = cand_lo if lo is None else max(lo, cand_lo)
        hi = cand_hi if hi is None else min(hi, cand_hi)
        if lo > hi:
            raise EmptyIntersection(
                f"constraint {n} (term {b}) empties the intersection", index=n
            )
    return RationalInterval(lo, hi)


def c_enclosure(n_terms: int) -> RationalInterval:
    """Enclosure of the growth constant from the first n_terms recurrence terms.

    Monotone in n_terms: more terms always give a subinterval. Width after n
    terms is at most (2/3)**n.
    """
    if n_terms < 1:
        raise ValueError(f"n_terms must be at least 1, got {n_terms}")
    return _intersect_growth_constraints(b_seq(n_terms).terms)


def k3_enclosure(n_terms: int) -> RationalInterval:
    """Enclosure of the circle-game constant from the seed-2 ceiling iteration.

    With e the n-th iterate, the limit lies in
    [e * (2/3)**n, (e + 2) * (2/3)**n]; the lower bounds rise and the upper
    bounds fall, so the intervals nest and the width is exactly 2 * (2/3)**n.
    """
    if n_terms < 1:
        raise ValueError(f"n_terms must be at least 1, got {n_terms}")
    e = ow_sequence(3, 2, n_terms).terms[-1]
    scale = Fraction(2, 3) ** n_terms
    return RationalInterval(e * scale, (e + 2) * scale)


@dataclass(frozen=True)
class RelationReport:
    """Comparison of the growth constant against (2/9) times the game constant."""

    c_interval: RationalInterval
    k3_scaled_interval: RationalInterval
    overlap: bool
    agreeing_places: int


def relation_check(n_terms: int) -> RelationReport:
    """Compare the two enclosures at matched precision.

    agreeing_places counts the decimal places shared by every member of both
    intervals (the certificate of their hull). Non-overlap is reported, not
    raised: it would be a mathematically meaningful negative result.
    """
    if n_terms < 1:
        raise ValueError(f"n_terms must be at least 1, got {n_terms}")
    c_iv = c_enclosure(n_terms)
    scaled = k3_enclosure(n_terms).scale(K3_SCALE)
    hull = c_iv.hull(scaled)
    places = render_digits(hull, max(n_terms, 1)).certified_places
    return RelationReport(c_iv, scaled, c_iv.overlaps(scaled), places)


def c_digits(n_terms: int, max_places: int | None = None) -> DigitCertificate:
    """Certified decimal digits of the growth constant."""
    cap = max_places if max_places is not None else max(n_terms, 1)
    return render_digits(c_enclosure(n_terms), cap)


def k3_digits(n_terms: int, max_places: int | None = None) -> DigitCertificate:
    """Certified decimal digits of the circle-game constant."""
    cap = max_places if max_places is not None else max(n_terms, 1)
    return render_digits(k3_enclosure(n_terms), cap)
