"""Sufficient conditions for solvability and an exact decision procedure."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .core import CoprimeTuple, instance_params
from .denumerant import count_structural

EXACT_POSITIVE = "EXACT_POSITIVE_COUNT"
EXACT_ZERO = "EXACT_ZERO_COUNT"


class InconsistentVerdict(RuntimeError):
    """A sufficient condition fired on an equation with no solutions."""


@dataclass(frozen=True)
class SolvabilityVerdict:
    solvable: bool
    certificates: tuple[str, ...]
    count: Optional[int] = None


def sufficient_thm2(t: CoprimeTuple, b: int) -> bool:
    p = instance_params(t, b)
    return p.b_prime >= p.s


def sufficient_thm3(t: CoprimeTuple, b: int) -> bool:
    return b >= t.n * t.M - t.sum_a


def sufficient_thm4(t: CoprimeTuple, b: int) -> bool:
    return b >= (t.n - 1) * t.M


def coprime_pairs(t: CoprimeTuple):
    """Yield ``(i, j, a_i*a_j - a_i - a_j)`` for coprime pairs, 1-based ``i < j``."""
    a = t.coeffs
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            if gcd(a[i], a[j]) == 1:
                yield i + 1, j + 1, a[i] * a[j] - a[i] - a[j]


def sufficient_thm5(t: CoprimeTuple, b: int) -> Optional[tuple[int, int]]:
    """Coprime pair ``(i, j)`` (1-based) whose two-coin Frobenius number is below b.

    Picks the pair with the smallest such number; ties go to the
    lexicographically first pair.
    """
    best = None
    for i, j, f in coprime_pairs(t):
        if b > f and (best is None or f < best[0]):
            best = (f, i, j)
    return None if best is None else (best[1], best[2])


def sufficient_thm6(t: CoprimeTuple, b: int) -> bool:
    return t.condition8 and b > (t.n - 1) * t.M - t.sum_a


def certificates(t: CoprimeTuple, b: int) -> list[str]:
    """Tags of every sufficient condition that holds at (t, b)."""
    tags = []
    if sufficient_thm2(t, b):
        tags.append("THM2")
    if sufficient_thm3(t, b):
        tags.append("THM3")
    if sufficient_thm4(t, b):
        tags.append("THM4")
    pair = sufficient_thm5(t, b)
    if pair is not None:
        tags.append(f"THM5({pair[0]},{pair[1]})")
    if sufficient_thm6(t, b):
        tags.append("THM6")
    return tags


def decide(t: CoprimeTuple, b: int) -> SolvabilityVerdict:
    tags = certificates(t, b)
    count = count_structural(t, b).total
    if count == 0:
        if tags:
            raise InconsistentVerdict(f"{tags} fired for {t}, b={b} but the count is 0")
        return SolvabilityVerdict(False, (EXACT_ZERO,), 0)
    return SolvabilityVerdict(True, tuple(tags) + (EXACT_POSITIVE,), count)
