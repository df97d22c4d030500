"""Counting non-negative solutions of ``sum(a_i x_i) = b``.

Three routes are provided and are expected to agree:

* ``count_bruteforce``: plain coin-change dynamic program over 0..b. Ground truth.
* ``count_structural``: split each ``x_i = t_i + (M/a_i) y_i`` with ``t_i`` in the
  box ``[0, M/a_i - 1]``; the box part contributes the weights ``l_k`` and the
  free part a stars-and-bars binomial.
* ``count_special_case``: closed forms valid when ``sum(a) >= (n-2)M + 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional, Sequence

from .core import CoprimeTuple, cbar, instance_params, truncation_index

DEFAULT_BRUTEFORCE_CAP = 10_000_000


class CapExceeded(RuntimeError):
    pass


class Condition8NotSatisfied(ValueError):
    pass


@dataclass(frozen=True)
class LVector:
    r: int
    values: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True)
class CountBreakdown:
    total: int
    route: str  # bruteforce | structural | special_eq11 | special_eq13
    l_vector: Optional[LVector] = None
    # (k, l_k, binomial factor) for the structural route
    terms: Optional[tuple[tuple[int, int, int], ...]] = None


# -- brute force oracle ------------------------------------------------------


def bruteforce_table(t: CoprimeTuple, upto: int, cap: int = DEFAULT_BRUTEFORCE_CAP) -> list[int]:
    """Return ``[P(0), P(1), ..., P(upto)]`` by unbounded coin-change DP."""
    if upto < 0:
        raise ValueError(f"upper limit must be non-negative, got {upto}")
    cells = t.n * (upto + 1)
    if cells > cap:
        raise CapExceeded(
            f"brute force needs {cells} cells for b={upto}, cap is {cap}; use count_structural"
        )
    ways = [0] * (upto + 1)
    ways[0] = 1
    for a in t.coeffs:
        for v in range(a, upto + 1):
            ways[v] += ways[v - a]
    return ways


def count_bruteforce(t: CoprimeTuple, b: int, cap: int = DEFAULT_BRUTEFORCE_CAP) -> int:
    return bruteforce_table(t, b, cap)[b]


# -- box-constrained counts --------------------------------------------------


@lru_cache(maxsize=256)
def _box_table(coeffs: tuple[int, ...], bounds: tuple[int, ...]) -> tuple[int, ...]:
    # Number of (t_1..t_n), 0 <= t_i <= bounds[i], for every target 0..sum(a_i*bounds[i]).
    top = sum(a * u for a, u in zip(coeffs, bounds))
    ways = [0] * (top + 1)
    ways[0] = 1
    for a, u in zip(coeffs, bounds):
        if u == 0:
            continue
        span = a * (u + 1)
        nxt = [0] * (top + 1)
        # sliding window of width u+1 along each residue chain mod a
        for v in range(top + 1):
            acc = ways[v]
            if v >= a:
                acc += nxt[v - a]
            if v >= span:
                acc -= ways[v - span]
            nxt[v] = acc
        ways = nxt
    return tuple(ways)


def count_bounded(t: CoprimeTuple, target: int) -> int:
    """Solutions of ``sum(a_i t_i) = target`` with ``0 <= t_i <= M/a_i - 1``."""
    if target < 0:
        return 0
    table = _box_table(t.coeffs, t.box_bounds)
    return table[target] if target < len(table) else 0


def _check_residue(t: CoprimeTuple, r: int) -> None:
    if not 0 <= r < t.M:
        raise ValueError(f"residue {r} outside [0, {t.M})")


def l_vector_direct(t: CoprimeTuple, r: int) -> LVector:
    _check_residue(t, r)
    s = truncation_index(t, r)
    return LVector(r, tuple(count_bounded(t, r + t.M * k) for k in range(s + 1)))


def l_vector_inclusion_exclusion(
    t: CoprimeTuple,
    r: int,
    cap: int = DEFAULT_BRUTEFORCE_CAP,
    p_table: Optional[Sequence[int]] = None,
) -> LVector:
    """Recover the weights from unrestricted counts by alternating binomial sums.

    ``p_table`` may carry precomputed brute-force counts ``P(0..N)``; it is
    recomputed when absent or too short.
    """
    _check_residue(t, r)
    s = truncation_index(t, r)
    table = p_table
    if table is None or len(table) <= r + s * t.M:
        table = bruteforce_table(t, r + s * t.M, cap)
    p = [table[r + j * t.M] for j in range(s + 1)]
    values = tuple(
        sum((-1) ** j * comb(t.n, j) * p[k - j] for j in range(k + 1)) for k in range(s + 1)
    )
    return LVector(r, values)


def check_mass_identity(t: CoprimeTuple, r: int) -> bool:
    q, rem = divmod(t.M ** (t.n - 1), t.prod_a)
    return rem == 0 and sum(l_vector_direct(t, r).values) == q


# -- structural count --------------------------------------------------------


def count_structural(t: CoprimeTuple, b: int) -> CountBreakdown:
    p = instance_params(t, b)
    lv = l_vector_direct(t, p.r)
    terms = []
    for k, lk in enumerate(lv.values):
        terms.append((k, lk, cbar(p.b_prime + t.n - 1 - k, t.n - 1)))
    total = sum(lk * c for _, lk, c in terms)
    return CountBreakdown(total, "structural", lv, tuple(terms))


def count_special_case(
    t: CoprimeTuple, b: int, cap: int = DEFAULT_BRUTEFORCE_CAP, p_r: Optional[int] = None
) -> CountBreakdown:
    """Closed-form count under ``sum(a) >= (n-2)M + 2``.

    Above the threshold residue ``r0`` every box weight sits at k=0 and the
    count is ``K * C(b'+n-1, n-1)`` with ``K = M^(n-1)/prod(a)``. At or below it
    the count is ``P(r) * C(b'+n-2, n-2) + K * Cbar(b'+n-2, n-1)``.
    ``P(r)`` comes from the brute-force oracle unless passed as ``p_r``.
    """
    if not t.condition8:
        raise Condition8NotSatisfied(
            f"sum(a)={t.sum_a} < (n-2)M+2={(t.n - 2) * t.M + 2} for {t}"
        )
    p = instance_params(t, b)
    n, bp, K = t.n, p.b_prime, t.box_mass
    if p.r > p.r0:
        return CountBreakdown(K * comb(bp + n - 1, n - 1), "special_eq11")
    pr = count_bruteforce(t, p.r, cap) if p_r is None else p_r
    total = pr * comb(bp + n - 2, n - 2) + K * cbar(bp + n - 2, n - 1)
    two_term = pr * comb(bp + n - 1, n - 1) + (K - pr) * cbar(bp + n - 2, n - 1)
    if total != two_term:
        raise AssertionError(f"closed forms disagree for {t}, b={b}: {total} != {two_term}")
    return CountBreakdown(total, "special_eq13")


def theorem6_lower_bound(t: CoprimeTuple, b: int) -> Optional[int]:
    """Guaranteed minimum count for ``b >= M`` with residue at or below ``r0``.

    Only defined under ``sum(a) >= (n-2)M + 2``; None otherwise.
    """
    if not t.condition8:
        return None
    p = instance_params(t, b)
    if p.b_prime < 1 or p.r > p.r0:
        return None
    return t.box_mass * comb(p.b_prime + t.n - 2, t.n - 1)
