"""Survivor computations for the circle-elimination game, three ways.

n people stand in a circle, counting starts at person 1, and every q-th
person leaves until one remains. The three routes are independent: a
survivor recurrence, an explicit elimination of the circle, and a ceiling
iteration that jumps straight to the answer. Their pairwise agreement is a
test obligation, not an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SimulationCapExceeded

SIMULATION_CAP = 10**6


@dataclass(frozen=True)
class SurvivorResult:
    n: int
    q: int
    survivor: int
    algorithm: str

    def __post_init__(self):
        if not 1 <= self.survivor <= self.n:
            raise ValueError(f"survivor {self.survivor} outside 1..{self.n}")


@dataclass(frozen=True)
class CeilingIteration:
    """Terms of x -> ceil(q*x / (q-1)) from a positive seed."""

    q: int
    seed: int
    _terms: tuple[int, ...]

    @property
    def terms(self) -> list[int]:
        return list(self._terms)


def _validate(n: int, q: int) -> None:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")


def survivor_recurrence(n: int, q: int) -> SurvivorResult:
    """Fold the one-smaller-circle recurrence up from a single person."""
    _validate(n, q)
    pos = 0
    for m in range(2, n + 1):
        pos = (pos + q) % m
    return SurvivorResult(n, q, pos + 1, "recurrence")


def survivor_simulation(n: int, q: int, *, simulation_cap: int = SIMULATION_CAP) -> SurvivorResult:
    """Eliminate the explicit circle until one person remains.

    One pass around the circle removes every q-th survivor in a single slice
    deletion; the carry tracks counts that spill into the next pass. This is
    the same elimination order as removing people one at a time, just
    processed lap by lap.
    """
    _validate(n, q)
    if n > simulation_cap:
        raise SimulationCapExceeded(
            f"n={n} exceeds the simulation cap {simulation_cap}; "
            "raise it with --sim-cap or use the recurrence"
        )
    seg = list(range(1, n + 1))
    carry = 0
    while len(seg) > 1:
        size = len(seg)
        first = (q - 1 - carry) % q
        if first < size:
            del seg[first::q]
        carry = (carry + size) % q
    return SurvivorResult(n, q, seg[0], "simulation")


def ow_sequence(q: int, seed: int, count: int) -> CeilingIteration:
    """First count terms of x -> ceil(q*x / (q-1)) starting at seed."""
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    if seed < 1:
        raise ValueError(f"seed must be at least 1, got {seed}")
    if count < 1:
        raise ValueError(f"count must be at least 1, got {count}")
    terms = [seed]
    x = seed
    for _ in range(count - 1):
        x = (q * x + q - 2) // (q - 1)
        terms.append(x)
    return CeilingIteration(q, seed, tuple(terms))


def survivor_via_ow(n: int, q: int) -> SurvivorResult:
    """Survivor from the ceiling iteration alone.

    Iterate x -> ceil(q*x / (q-1)) from 1 until the term exceeds (q-1)*n;
    the survivor is q*n + 1 minus that term. The first such term never
    overshoots q*n, so the result always lands in 1..n.
    """
    _validate(n, q)
    bound = (q - 1) * n
    term = 1
    while term <= bound:
        term = (q * term + q - 2) // (q - 1)
    return SurvivorResult(n, q, q * n + 1 - term, "ow_formula")
