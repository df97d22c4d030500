"""Seeded property sweep cross-checking every formula against the oracles."""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from itertools import combinations_with_replacement
from math import gcd, lcm

from .core import CoprimeTuple, check_proposition1, instance_params
from .denumerant import (
    bruteforce_table,
    count_special_case,
    count_structural,
    l_vector_direct,
    l_vector_inclusion_exclusion,
    theorem6_lower_bound,
)
from .frobenius import (
    bound_r0,
    bound_thm8,
    closed_form_thm7,
    frobenius_exact,
    frobenius_scan,
    thm7_tuple,
)
from .solvability import (
    sufficient_thm2,
    sufficient_thm3,
    sufficient_thm4,
    sufficient_thm5,
    sufficient_thm6,
)

EXHAUSTIVE_MAX_N = 3
EXHAUSTIVE_MAX_COEFF = 10
THM7_MAX_PRODUCT = 100


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 5
    max_coeff: int = 30
    max_lcm: int = 60
    samples: int = 500
    seed: int = 0
    b_multiplier: int = 3


@dataclass
class PropertyResult:
    passed: int = 0
    failed: int = 0
    first_failure: str | None = None
    _key: tuple | None = field(default=None, repr=False)

    def record(self, ok: bool, key: tuple, describe) -> None:
        if ok:
            self.passed += 1
            return
        self.failed += 1
        # keep the smallest failing instance for reproduction
        if self._key is None or key < self._key:
            self._key = key
            self.first_failure = describe()


@dataclass
class SweepReport:
    config: SweepConfig
    tuples: int
    properties: dict[str, PropertyResult]

    @property
    def ok(self) -> bool:
        return all(p.failed == 0 for p in self.properties.values())

    def to_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "tuples": self.tuples,
            "ok": self.ok,
            "properties": {
                name: {
                    "passed": p.passed,
                    "failed": p.failed,
                    "first_failure": p.first_failure,
                }
                for name, p in self.properties.items()
            },
        }

    def lines(self) -> list[str]:
        out = [f"tuples checked: {self.tuples}"]
        width = max(len(name) for name in self.properties)
        for name, p in self.properties.items():
            status = "PASS" if p.failed == 0 else "FAIL"
            out.append(f"{status}  {name:<{width}}  passed={p.passed} failed={p.failed}")
            if p.first_failure:
                out.append(f"      minimal failing instance: {p.first_failure}")
        out.append("all properties pass" if self.ok else "PROPERTY FAILURES")
        return out


def exhaustive_tuples(max_n: int = EXHAUSTIVE_MAX_N, max_coeff: int = EXHAUSTIVE_MAX_COEFF):
    for n in range(2, max_n + 1):
        for combo in combinations_with_replacement(range(1, max_coeff + 1), n):
            if gcd(*combo) == 1:
                yield CoprimeTuple(combo)


def random_tuples(count: int, seed: int, max_n: int, max_coeff: int, max_lcm: int):
    """Rejection-sample ``count`` setwise-coprime tuples with lcm <= max_lcm."""
    rng = random.Random(seed)
    produced = attempts = 0
    while produced < count:
        attempts += 1
        if attempts > 1000 * count + 10_000:
            raise RuntimeError(
                f"could not draw {count} tuples with n<={max_n}, a<={max_coeff}, M<={max_lcm}"
            )
        n = rng.randint(2, max_n)
        coeffs = tuple(rng.randint(1, max_coeff) for _ in range(n))
        if gcd(*coeffs) != 1 or lcm(*coeffs) > max_lcm:
            continue
        produced += 1
        yield CoprimeTuple(coeffs)


def corpus(config: SweepConfig) -> list[CoprimeTuple]:
    small_n = min(config.max_n, EXHAUSTIVE_MAX_N)
    small_coeff = min(config.max_coeff, EXHAUSTIVE_MAX_COEFF)
    tuples = list(exhaustive_tuples(small_n, small_coeff))
    if config.samples > 0 and config.max_n >= 2:
        tuples.extend(
            random_tuples(
                config.samples, config.seed, config.max_n, config.max_coeff, config.max_lcm
            )
        )
    return tuples


PROPERTIES = (
    "proposition1",
    "instance_params",
    "three_way_count",
    "l_vector_routes",
    "mass_identity",
    "residue_monotone",
    "sufficient_soundness",
    "implication_chain",
    "theorem6_lower_bound",
    "frobenius_two_routes",
    "frobenius_bounds",
    "frobenius_definition",
    "pair_law",
    "theorem7_law",
)


def check_tuple(t: CoprimeTuple, props: dict[str, PropertyResult], b_multiplier: int = 3) -> None:
    M, n = t.M, t.n
    key = (n, t.sum_a, t.coeffs)
    props["proposition1"].record(check_proposition1(t), key, lambda: f"a={t}")

    top = max(b_multiplier * M, n * M)
    table = bruteforce_table(t, top)
    K = t.box_mass

    for r in range(M):
        p = instance_params(t, r)
        ok = 0 <= p.s <= n - 1
        if t.condition8:
            ok = ok and p.s == (0 if r > p.r0 else 1)
        props["instance_params"].record(ok, key + (r,), lambda: f"a={t} r={r} s={p.s}")
        direct = l_vector_direct(t, r)
        ie = l_vector_inclusion_exclusion(t, r, p_table=table)
        props["l_vector_routes"].record(
            direct == ie, key + (r,), lambda: f"a={t} r={r} direct={direct.values} ie={ie.values}"
        )
        ok = all(v >= 0 for v in direct.values) and sum(direct.values) == K
        ok = ok and direct.values[0] == table[r]
        props["mass_identity"].record(ok, key + (r,), lambda: f"a={t} r={r} l={direct.values}")

    frob = frobenius_exact(t)
    for b in range(b_multiplier * M + 1):
        truth = table[b]
        bkey = key + (b,)
        structural = count_structural(t, b).total
        ok = structural == truth
        if t.condition8:
            r = b % M
            ok = ok and count_special_case(t, b, p_r=table[r]).total == truth
        props["three_way_count"].record(
            ok, bkey, lambda: f"a={t} b={b} bruteforce={truth} structural={structural}"
        )
        props["residue_monotone"].record(
            not (table[b % M] > 0 and truth == 0), bkey, lambda: f"a={t} b={b}"
        )

        t2, t3, t4 = sufficient_thm2(t, b), sufficient_thm3(t, b), sufficient_thm4(t, b)
        fired = t2 or t3 or t4 or sufficient_thm5(t, b) is not None or sufficient_thm6(t, b)
        props["sufficient_soundness"].record(
            not fired or truth > 0, bkey, lambda: f"a={t} b={b} fired but P(b)=0"
        )
        props["implication_chain"].record(
            (not t3 or t2) and (not t4 or t2), bkey, lambda: f"a={t} b={b} thm3={t3} thm4={t4} thm2={t2}"
        )
        lower = theorem6_lower_bound(t, b)
        if lower is not None:
            props["theorem6_lower_bound"].record(
                truth >= lower, bkey, lambda: f"a={t} b={b} P={truth} bound={lower}"
            )
        # above frob everything is solvable, at frob nothing is
        props["frobenius_definition"].record(
            truth > 0 if b > frob else (b != frob or truth == 0),
            bkey,
            lambda: f"a={t} b={b} frob={frob} P={truth}",
        )

    scan = frobenius_scan(t)
    props["frobenius_two_routes"].record(
        scan == frob, key, lambda: f"a={t} shortest_path={frob} scan={scan}"
    )
    ok = all(bound is None or frob <= bound for bound in (bound_thm8(t), bound_r0(t)))
    ok = ok and frob < (n - 1) * M
    props["frobenius_bounds"].record(ok, key, lambda: f"a={t} frob={frob}")


def check_pair_law(max_coeff: int, props: dict[str, PropertyResult]) -> None:
    for a1 in range(2, max_coeff + 1):
        for a2 in range(a1 + 1, max_coeff + 1):
            if gcd(a1, a2) != 1:
                continue
            got = frobenius_exact(CoprimeTuple((a1, a2)))
            props["pair_law"].record(
                got == a1 * a2 - a1 - a2, (a1, a2), lambda: f"a=({a1}, {a2}) frob={got}"
            )


def check_theorem7_law(max_n: int, props: dict[str, PropertyResult]) -> None:
    for a1 in range(2, THM7_MAX_PRODUCT + 1):
        for a2 in range(a1 + 1, THM7_MAX_PRODUCT // a1 + 1):
            if gcd(a1, a2) != 1:
                continue
            for n in range(2, max(max_n, 2) + 1):
                t = thm7_tuple(a1, a2, n)
                got = frobenius_exact(t)
                props["theorem7_law"].record(
                    got == closed_form_thm7(a1, a2, n),
                    (n, a1, a2),
                    lambda: f"a={t} frob={got}",
                )


def run_sweep(config: SweepConfig) -> SweepReport:
    props = {name: PropertyResult() for name in PROPERTIES}
    tuples = corpus(config)
    for t in tuples:
        check_tuple(t, props, config.b_multiplier)
    check_pair_law(config.max_coeff, props)
    check_theorem7_law(config.max_n, props)
    return SweepReport(config, len(tuples), props)
