"""Exact rational intervals and certified decimal rendering.

Everything here is closed-endpoint Fraction arithmetic. No floats enter any
computation; a digit is reported only when truncation of both endpoints
agrees on it, so every printed digit is a proof, not an estimate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def encloses(self, other: RationalInterval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def scale(self, factor) -> RationalInterval:
        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError(f"scale factor must be positive, got {factor}")
        return RationalInterval(self.lo * factor, self.hi * factor)

    def intersect(self, other: RationalInterval) -> RationalInterval | None:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        return RationalInterval(lo, hi) if lo <= hi else None

    def hull(self, other: RationalInterval) -> RationalInterval:
        return RationalInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def overlaps(self, other: RationalInterval) -> bool:
        return max(self.lo, other.lo) <= min(self.hi, other.hi)


@dataclass(frozen=True)
class DigitCertificate:
    """A decimal prefix every member of an interval shares.

    decimal_prefix is empty when even the integer parts disagree; otherwise
    it carries the integer part and exactly certified_places decimals.
    """

    decimal_prefix: str
    certified_places: int


def _truncate(x: Fraction, places: int) -> int:
    return (x.numerator * 10**places) // x.denominator


def render_digits(iv: RationalInterval, max_places: int) -> DigitCertificate:
    """Longest common truncated-decimal prefix of the interval, capped.

    Pure integer arithmetic: place d is certified when floor(lo * 10^d) and
    floor(hi * 10^d) coincide. Agreement is monotone in d, so the maximal
    certified depth is found by binary search. Zero certified places is a
    valid result for wide intervals.
    """
    if max_places < 1:
        raise ValueError(f"max_places must be at least 1, got {max_places}")
    if iv.lo < 0:
        raise ValueError("render_digits requires a nonnegative interval")
    if _truncate(iv.lo, 0) != _truncate(iv.hi, 0):
        return DigitCertificate("", 0)
    lo_d, hi_d = 0, max_places
    while lo_d < hi_d:
        mid = (lo_d + hi_d + 1) // 2
        if _truncate(iv.lo, mid) == _truncate(iv.hi, mid):
            lo_d = mid
        else:
            hi_d = mid - 1
    places = lo_d
    whole = _truncate(iv.lo, 0)
    if places == 0:
        return DigitCertificate(str(whole), 0)
    tail = _truncate(iv.lo, places) - whole * 10**places
    return DigitCertificate(f"{whole}.{tail:0{places}d}", places)
