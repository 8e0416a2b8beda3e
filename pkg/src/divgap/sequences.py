"""The divisor-gap sequence, its exponent sequence, and their partial products.

The gap sequence starts at 4 and extends by the smallest complementary-divisor
difference above 1 of the product of all earlier terms. The exponent sequence
follows the half-sum ceiling recurrence b(1) = 1, b(n) = ceil(sum/2). From
index 3 on the gap terms are exactly 2**b(n); verify_theorem recomputes the
gaps from the divisor definition and checks that identity index by index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .divisors import (
    ORACLE_BOUND,
    Factorization,
    delta_above,
    factorize,
)
from .errors import InsufficientPrecision, ResourceLimit
from .intervals import RationalInterval
from .report import CheckRecord, VerificationReport

A_PATHS = ("oracle", "factored", "fast")
# The factored route materializes every term; near index 60 a single term
# passes a gigabyte, so the route refuses well before that.
FACTORED_TERM_LIMIT = 50


@dataclass(frozen=True)
class SequenceReport:
    """A computed sequence prefix with the path that produced it.

    Fast-path gap terms are held as exponents and turned into 2**e only when
    read; a term near index 60 already needs megabytes, so iterate or index
    instead of materializing when the range is large.
    """

    name: str
    start_index: int
    path: str
    prefix: tuple[int, ...]
    exponents: tuple[int, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.prefix) + len(self.exponents)

    def term(self, n: int) -> int:
        i = n - self.start_index
        if not 0 <= i < len(self):
            raise IndexError(f"index {n} outside [{self.start_index}, {self.last_index}]")
        if i < len(self.prefix):
            return self.prefix[i]
        return 1 << self.exponents[i - len(self.prefix)]

    def term_bits(self, n: int) -> int:
        """Bit length of term n without materializing it."""
        i = n - self.start_index
        if not 0 <= i < len(self):
            raise IndexError(f"index {n} outside [{self.start_index}, {self.last_index}]")
        if i < len(self.prefix):
            return self.prefix[i].bit_length()
        return self.exponents[i - len(self.prefix)] + 1

    def __iter__(self):
        yield from self.prefix
        for e in self.exponents:
            yield 1 << e

    @property
    def last_index(self) -> int:
        return self.start_index + len(self) - 1

    @property
    def terms(self) -> list[int]:
        return list(self)


@dataclass(frozen=True)
class PartialProductState:
    """Product of the gap terms before index n, kept in factored form."""

    n: int
    factorization: Factorization
    running_b_sum: int


def _extend_product(f: Factorization, a: int) -> Factorization:
    # The primes already present make exact-division hints, so smooth gap
    # terms factor in time linear in their bit length.
    return f.multiply(factorize(a, hints=tuple(p for p, _ in f.pairs)))


def b_seq(n_max: int) -> SequenceReport:
    """Indices 1..n_max of the half-sum ceiling recurrence."""
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    terms = [1]
    s = 1
    for _ in range(n_max - 1):
        t = (s + 1) // 2
        terms.append(t)
        s += t
    return SequenceReport("b", 1, "recurrence", tuple(terms))


def _a_seq_oracle(n_max: int, oracle_bound: int) -> SequenceReport:
    terms = [4]
    p = 4
    for _ in range(n_max):
        a = delta_above(p, 1, oracle_bound=oracle_bound).difference
        terms.append(a)
        p *= a
    return SequenceReport("a", 0, "oracle", tuple(terms))


def _a_seq_factored(n_max: int) -> SequenceReport:
    if n_max > FACTORED_TERM_LIMIT:
        raise ResourceLimit(
            f"factored path is limited to {FACTORED_TERM_LIMIT} terms; "
            f"term {n_max} would need square roots of integers beyond 10^8 bits, "
            "use the fast path instead"
        )
    terms = [4]
    f = Factorization.from_mapping({2: 2})
    for _ in range(n_max):
        a = delta_above(f, 1).difference
        terms.append(a)
        f = _extend_product(f, a)
    return SequenceReport("a", 0, "factored", tuple(terms))


def _a_seq_fast(n_max: int) -> SequenceReport:
    prefix = (4, 3, 4)[: n_max + 1]
    if n_max < 3:
        return SequenceReport("a", 0, "fast", prefix)
    bs = b_seq(n_max)
    return SequenceReport("a", 0, "fast", prefix, tuple(bs.term(n) for n in range(3, n_max + 1)))


def a_seq(n_max: int, path: str = "factored", *, oracle_bound: int = ORACLE_BOUND) -> SequenceReport:
    """Indices 0..n_max of the gap sequence via the chosen path.

    oracle: products as plain integers, gaps by trial division (honest up to
    index 10 with the default bound). factored: products as factorizations,
    gaps by the descending divisor walk (works to index 50). fast: trusts the
    power-of-two identity and only runs the b recurrence; cross-validation
    against the other paths lives in verify_theorem and the test suite.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    if path == "oracle":
        return _a_seq_oracle(n_max, oracle_bound)
    if path == "factored":
        return _a_seq_factored(n_max)
    if path == "fast":
        return _a_seq_fast(n_max)
    raise ValueError(f"unknown path {path!r}, expected one of {A_PATHS}")


def partial_product(n: int, path: str = "factored", *, oracle_bound: int = ORACLE_BOUND) -> PartialProductState:
    """Factored product of gap terms 0..n-1, plus the running b sum.

    The fast path builds the factorization structurally (2^2, then 2^2 * 3,
    then 3 * 2^(4 + b(3) + ... + b(n-1))); the other paths multiply the
    factorizations of recomputed terms.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    bs = b_seq(max(n - 1, 1))
    b_sum = sum(bs.term(k) for k in range(1, n))
    if path == "fast":
        if n == 1:
            f = Factorization.from_mapping({2: 2})
        elif n == 2:
            f = Factorization.from_mapping({2: 2, 3: 1})
        else:
            e = 4 + sum(bs.term(k) for k in range(3, n))
            f = Factorization.from_mapping({2: e, 3: 1})
    else:
        f = Factorization(())
        for a in a_seq(n - 1, path, oracle_bound=oracle_bound):
            f = _extend_product(f, a)
    return PartialProductState(n, f, b_sum)


def _power_of_two_record(n: int, a: int, b_n: int) -> CheckRecord:
    # Terms reach millions of bits, so the record stores exponents: the
    # comparison a == 2**b_n is exact either way, and an exponent prints.
    is_pow2 = a & (a - 1) == 0
    actual = a.bit_length() - 1 if is_pow2 else None
    return CheckRecord(n, is_pow2 and actual == b_n, b_n, actual)


def verify_theorem(n_max: int, check_path: str = "factored", *, oracle_bound: int = ORACLE_BOUND) -> VerificationReport:
    """Check gap term == 2**b(n) for n = 3..n_max.

    Each gap term is recomputed from the divisor definition along the chosen
    path; nothing is assumed from the identity being checked. Failures are
    recorded, not raised; records hold the exponents being compared (actual
    is None for a term that is not a power of two at all).
    """
    if n_max < 3:
        raise ValueError(f"n_max must be at least 3, got {n_max}")
    if check_path not in ("oracle", "factored"):
        raise ValueError(f"check_path must be 'oracle' or 'factored', got {check_path!r}")
    bs = b_seq(n_max)
    records = []
    if check_path == "oracle":
        p = 48
        for n in range(3, n_max + 1):
            a = delta_above(p, 1, oracle_bound=oracle_bound).difference
            records.append(_power_of_two_record(n, a, bs.term(n)))
            p *= a
    else:
        if n_max > FACTORED_TERM_LIMIT:
            raise ResourceLimit(
                f"factored path is limited to {FACTORED_TERM_LIMIT} terms; "
                f"got n_max={n_max}"
            )
        f = Factorization.from_mapping({2: 4, 3: 1})
        for n in range(3, n_max + 1):
            a = delta_above(f, 1).difference
            records.append(_power_of_two_record(n, a, bs.term(n)))
            f = _extend_product(f, a)
    return VerificationReport(f"gap term = 2^b(n) via {check_path} path", tuple(records))


def b_closed_form(n: int, c_enc: RationalInterval) -> int:
    """Evaluate ceil(x * (3/2)**n - 1/2) at both endpoints of an enclosure.

    Returns the common value, raising InsufficientPrecision when the
    enclosure is too wide to pin a single integer at this index.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    r = Fraction(3, 2) ** n
    half = Fraction(1, 2)
    at_lo = ceil(c_enc.lo * r - half)
    at_hi = ceil(c_enc.hi * r - half)
    if at_lo != at_hi:
        raise InsufficientPrecision(
            f"enclosure of width {c_enc.width} spans {at_hi - at_lo + 1} candidates "
            f"at index {n}; tighten it with more terms"
        )
    return at_lo
