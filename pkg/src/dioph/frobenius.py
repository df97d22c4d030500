"""Frobenius numbers: exact computation and the available upper bounds."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .core import CoprimeTuple
from .solvability import coprime_pairs, decide


class NotCoprimePair(ValueError):
    pass


@dataclass(frozen=True)
class FrobeniusReport:
    exact: int
    method: str  # residue_shortest_path | all_representable
    bound_thm8: Optional[int] = None
    bound_r0: Optional[int] = None
    r0_sharp: Optional[bool] = None
    closed_form_thm7: Optional[int] = None

    def gaps(self) -> dict[str, int]:
        out = {}
        if self.bound_thm8 is not None:
            out["thm8"] = self.bound_thm8 - self.exact
        if self.bound_r0 is not None:
            out["r0"] = self.bound_r0 - self.exact
        return out


def apery_set(t: CoprimeTuple) -> list[int]:
    """Least representable number in each residue class modulo ``min(a)``."""
    a_min = min(t.coeffs)
    steps = sorted({a for a in t.coeffs if a != a_min})
    dist: list[Optional[int]] = [None] * a_min
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, rho = heapq.heappop(heap)
        if d != dist[rho]:
            continue
        for a in steps:
            nd = d + a
            nxt = nd % a_min
            if dist[nxt] is None or nd < dist[nxt]:
                dist[nxt] = nd
                heapq.heappush(heap, (nd, nxt))
    # gcd 1 makes every class reachable
    assert all(d is not None for d in dist), t.coeffs
    return dist  # type: ignore[return-value]


def frobenius_exact(t: CoprimeTuple) -> int:
    """Largest b with no non-negative solution, or -1 if every b >= 0 has one."""
    return max(apery_set(t)) - min(t.coeffs)


def bound_thm8(t: CoprimeTuple) -> Optional[int]:
    values = [f for _, _, f in coprime_pairs(t)]
    return min(values) if values else None


def bound_r0(t: CoprimeTuple) -> Optional[int]:
    if not t.condition8:
        return None
    return (t.n - 1) * t.M - t.sum_a


def closed_form_thm7(a1: int, a2: int, n: int) -> int:
    if a1 < 2 or a2 < 2:
        raise ValueError(f"both coefficients must be at least 2, got {a1}, {a2}")
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if gcd(a1, a2) != 1:
        raise NotCoprimePair(f"gcd({a1}, {a2}) = {gcd(a1, a2)}")
    return a1 * a2 - a1 - a2


def thm7_tuple(a1: int, a2: int, n: int) -> CoprimeTuple:
    return CoprimeTuple((a1, a2) + (a1 * a2,) * (n - 2))


def _thm7_shape(t: CoprimeTuple) -> Optional[tuple[int, int]]:
    # any order: two coprime entries >= 2, everything else equal to their product
    a = t.coeffs
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            x, y = a[i], a[j]
            if x < 2 or y < 2 or gcd(x, y) != 1:
                continue
            rest = a[:i] + a[i + 1 : j] + a[j + 1 :]
            if all(v == x * y for v in rest):
                return x, y
    return None


def frobenius_scan(t: CoprimeTuple) -> int:
    """Independent route: walk down from the best upper bound using ``decide``."""
    candidates = [(t.n - 1) * t.M - 1]
    for bound in (bound_thm8(t), bound_r0(t)):
        if bound is not None:
            candidates.append(bound)
    b = min(candidates)
    while b >= 0:
        if not decide(t, b).solvable:
            return b
        b -= 1
    return -1


def frobenius_report(t: CoprimeTuple) -> FrobeniusReport:
    exact = frobenius_exact(t)
    r0 = bound_r0(t)
    # exact <= r0 always, so r0 is itself unrepresentable iff they coincide
    sharp = None if r0 is None else exact == r0
    shape = _thm7_shape(t)
    return FrobeniusReport(
        exact=exact,
        method="all_representable" if 1 in t.coeffs else "residue_shortest_path",
        bound_thm8=bound_thm8(t),
        bound_r0=r0,
        r0_sharp=sharp,
        closed_form_thm7=None if shape is None else closed_form_thm7(*shape, t.n),
    )
