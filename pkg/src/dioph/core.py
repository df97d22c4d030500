"""Coefficient tuples and the per-instance parameters derived from them.

Everything here is exact integer arithmetic. Floors are integer division.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, gcd, lcm, prod
from typing import Iterable


class TupleError(ValueError):
    """Base class for rejected coefficient tuples."""


class EmptyOrSingleton(TupleError):
    pass


class NonPositiveCoefficient(TupleError):
    pass


class NotSetwiseCoprime(TupleError):
    pass


@dataclass(frozen=True)
class CoprimeTuple:
    """A validated coefficient vector ``a_1..a_n`` with gcd 1.

    Order and duplicates are preserved as given.
    """

    coeffs: tuple[int, ...]
    M: int = field(init=False)
    sum_a: int = field(init=False)
    prod_a: int = field(init=False)
    box_bounds: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        if len(coeffs) < 2:
            raise EmptyOrSingleton(f"need at least 2 coefficients, got {len(coeffs)}")
        for a in coeffs:
            if isinstance(a, bool) or not isinstance(a, int):
                raise TypeError(f"coefficient {a!r} is not an integer")
            if a <= 0:
                raise NonPositiveCoefficient(f"coefficient {a} is not positive")
        g = gcd(*coeffs)
        if g != 1:
            raise NotSetwiseCoprime(f"not setwise coprime: gcd{coeffs} = {g}")
        M = lcm(*coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "sum_a", sum(coeffs))
        object.__setattr__(self, "prod_a", prod(coeffs))
        object.__setattr__(self, "box_bounds", tuple(M // a - 1 for a in coeffs))
        # Holds for every gcd-1 tuple; a failure here is a bug, not bad input.
        assert check_proposition1(self), coeffs

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def box_mass(self) -> int:
        """``M^(n-1) / prod(a_i)``: the number of points in the box, divided by M."""
        q, rem = divmod(self.M ** (self.n - 1), self.prod_a)
        assert rem == 0, self.coeffs
        return q

    @property
    def condition8(self) -> bool:
        """True when ``sum(a) >= (n-2)M + 2``, the regime with closed-form counts."""
        return self.sum_a >= (self.n - 2) * self.M + 2

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.coeffs)) + ")"


def new_coprime_tuple(coeffs: Iterable[int]) -> CoprimeTuple:
    return CoprimeTuple(tuple(coeffs))


@dataclass(frozen=True)
class InstanceParams:
    b: int
    r: int
    b_prime: int
    s: int
    r0: int


def instance_params(t: CoprimeTuple, b: int) -> InstanceParams:
    if b < 0:
        raise ValueError(f"right-hand side must be non-negative, got {b}")
    b_prime, r = divmod(b, t.M)
    return InstanceParams(
        b=b, r=r, b_prime=b_prime, s=truncation_index(t, r), r0=(t.n - 1) * t.M - t.sum_a
    )


def truncation_index(t: CoprimeTuple, r: int) -> int:
    """``floor(n - (sum(a) + r) / M)``, the last k with a non-empty box slice."""
    return (t.n * t.M - t.sum_a - r) // t.M


def cbar(m: int, k: int) -> int:
    """Binomial ``C(m, k)`` when ``m >= k``, otherwise 0."""
    if k < 0 or m < k:
        return 0
    return comb(m, k)


def check_proposition1(t: CoprimeTuple) -> bool:
    return t.sum_a <= (t.n - 1) * t.M + 1
