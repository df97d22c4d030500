"""``dioph``: count, decide and analyse ``a_1 x_1 + ... + a_n x_n = b`` over x >= 0.

Exit codes: 0 ok/solvable, 1 unsolvable or property failure, 2 usage or
validation error. With ``--json`` exactly one JSON document goes to stdout;
integers in it are decimal strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .core import TupleError, instance_params, new_coprime_tuple
from .denumerant import (
    DEFAULT_BRUTEFORCE_CAP,
    CapExceeded,
    count_bruteforce,
    count_special_case,
    count_structural,
    theorem6_lower_bound,
)
from .frobenius import frobenius_report
from .solvability import decide
from .verify import SweepConfig, run_sweep

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _lossless(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _lossless(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_lossless(v) for v in obj]
    return obj


def _equation(t) -> str:
    return " + ".join(f"{a}*x{i}" for i, a in enumerate(t.coeffs, 1))


def _count_payload(t, b: int, cap: int) -> tuple[dict, list[str]]:
    p = instance_params(t, b)
    structural = count_structural(t, b)
    result: dict[str, Any] = {
        "total": structural.total,
        "routes": ["structural"],
        "params": {"M": t.M, "r": p.r, "b_prime": p.b_prime, "s": p.s, "r0": p.r0},
        "terms": [
            {"k": k, "l_k": lk, "binomial": c, "binomial_args": [p.b_prime + t.n - 1 - k, t.n - 1]}
            for k, lk, c in structural.terms
        ],
        "condition8": t.condition8,
    }
    lines = [
        f"P({b}) = {structural.total} for {_equation(t)} = {b}",
        f"structural route: M={t.M} r={p.r} b'={p.b_prime} s={p.s}",
    ]
    for k, lk, c in structural.terms:
        lines.append(f"  k={k}  l_k={lk}  C({p.b_prime + t.n - 1 - k},{t.n - 1})={c}")
    agree = True
    if t.condition8:
        try:
            special = count_special_case(t, b, cap)
        except CapExceeded as exc:
            lines.append(f"closed-form route skipped: {exc}")
        else:
            result["routes"].append(special.route)
            result["special_total"] = special.total
            agree = special.total == structural.total
            lines.append(f"closed-form route {special.route}: {special.total}")
        lower = theorem6_lower_bound(t, b)
        if lower is not None:
            result["lower_bound"] = lower
            lines.append(f"guaranteed lower bound: {lower}")
    try:
        brute = count_bruteforce(t, b, cap)
    except CapExceeded:
        lines.append("brute-force cross-check skipped (above --max-bruteforce)")
    else:
        result["routes"].append("bruteforce")
        result["bruteforce_total"] = brute
        agree = agree and brute == structural.total
        lines.append(f"brute-force route: {brute}")
    result["agreement"] = agree
    lines.append(f"routes agree: {str(agree).lower()}")
    return result, lines


def _solvable_payload(t, b: int) -> tuple[dict, list[str]]:
    verdict = decide(t, b)
    result = {"solvable": verdict.solvable, "count": verdict.count}
    word = "solvable" if verdict.solvable else "not solvable"
    lines = [f"{_equation(t)} = {b} is {word}", "certificates: " + " ".join(verdict.certificates)]
    return result | {"certificates": list(verdict.certificates)}, lines


def _frobenius_payload(t) -> tuple[dict, list[str]]:
    rep = frobenius_report(t)
    gaps = rep.gaps()
    bounds: dict[str, Any] = {}
    if rep.bound_thm8 is not None:
        bounds["thm8"] = {"value": rep.bound_thm8, "gap": gaps["thm8"]}
    if rep.bound_r0 is not None:
        bounds["r0"] = {"value": rep.bound_r0, "gap": gaps["r0"], "sharp": rep.r0_sharp}
    if rep.closed_form_thm7 is not None:
        bounds["thm7_closed_form"] = {"value": rep.closed_form_thm7}
    result = {"exact": rep.exact, "method": rep.method}
    lines = [f"Frob{t} = {rep.exact} ({rep.method})"]
    if rep.bound_thm8 is None:
        lines.append("pairwise bound: none (no coprime pair)")
    else:
        lines.append(f"pairwise bound: {rep.bound_thm8} (gap {gaps['thm8']})")
    if rep.bound_r0 is not None:
        sharp = "sharp" if rep.r0_sharp else "not sharp"
        lines.append(f"r0 bound: {rep.bound_r0} (gap {gaps['r0']}, {sharp})")
    if rep.closed_form_thm7 is not None:
        lines.append(f"closed form for (a1, a2, a1*a2, ...): {rep.closed_form_thm7}")
    return {"result": result, "bounds": bounds}, lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dioph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
        p.add_argument(
            "--max-bruteforce",
            type=int,
            default=DEFAULT_BRUTEFORCE_CAP,
            metavar="N",
            help="cell cap for the brute-force oracle",
        )

    for name, needs_b, help_ in (
        ("count", True, "count non-negative solutions"),
        ("solvable", True, "decide solvability and list certificates"),
        ("analyze", True, "count + solvable + frobenius in one report"),
        ("frobenius", False, "Frobenius number and its bounds"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("coeffs", nargs="+", type=int, metavar="a")
        if needs_b:
            p.add_argument("--b", type=int, required=True, metavar="N")
        common(p)

    v = sub.add_parser("verify", help="run the seeded property sweep")
    defaults = SweepConfig()
    v.add_argument("--max-n", type=int, default=defaults.max_n, metavar="N")
    v.add_argument("--max-coeff", type=int, default=defaults.max_coeff, metavar="N")
    v.add_argument("--max-lcm", type=int, default=defaults.max_lcm, metavar="N")
    v.add_argument("--samples", type=int, default=defaults.samples, metavar="N")
    v.add_argument("--seed", type=int, default=defaults.seed, metavar="N")
    v.add_argument("--b-multiplier", type=int, default=defaults.b_multiplier, metavar="N")
    common(v)
    return parser


def _run(args: argparse.Namespace) -> tuple[int, dict, list[str]]:
    if args.command == "verify":
        if args.max_n < 2 or args.max_coeff < 1 or args.samples < 0 or args.b_multiplier < 0:
            raise UsageError("need --max-n >= 2, --max-coeff >= 1, --samples >= 0, --b-multiplier >= 0")
        config = SweepConfig(
            max_n=args.max_n,
            max_coeff=args.max_coeff,
            max_lcm=args.max_lcm,
            samples=args.samples,
            seed=args.seed,
            b_multiplier=args.b_multiplier,
        )
        report = run_sweep(config)
        doc = {"status": "ok", "command": "verify", "result": report.to_dict()}
        return (EXIT_OK if report.ok else EXIT_NEGATIVE), doc, report.lines()

    t = new_coprime_tuple(args.coeffs)
    b = getattr(args, "b", None)
    if b is not None and b < 0:
        raise UsageError(f"--b must be non-negative, got {b}")
    doc: dict[str, Any] = {"status": "ok", "command": args.command, "tuple": list(t.coeffs)}
    if b is not None:
        doc["b"] = b
    code = EXIT_OK

    if args.command == "count":
        doc["result"], lines = _count_payload(t, b, args.max_bruteforce)
    elif args.command == "solvable":
        result, lines = _solvable_payload(t, b)
        doc["certificates"] = result.pop("certificates")
        doc["result"] = result
        code = EXIT_OK if result["solvable"] else EXIT_NEGATIVE
    elif args.command == "frobenius":
        payload, lines = _frobenius_payload(t)
        doc.update(payload)
    else:  # analyze
        count, count_lines = _count_payload(t, b, args.max_bruteforce)
        verdict, verdict_lines = _solvable_payload(t, b)
        frob, frob_lines = _frobenius_payload(t)
        doc["certificates"] = verdict.pop("certificates")
        doc["result"] = {"count": count, "solvability": verdict, "frobenius": frob["result"]}
        doc["bounds"] = frob["bounds"]
        lines = count_lines + verdict_lines + frob_lines
    return code, doc, lines


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, doc, lines = _run(args)
    except (TupleError, UsageError, ValueError) as exc:
        reason = str(exc).splitlines()[0]
        print(f"dioph: error: {reason}", file=sys.stderr)
        if args.json:
            print(json.dumps({"status": "error", "command": args.command, "error": reason}))
        return EXIT_USAGE

    if args.json:
        print(json.dumps(_lossless(doc), indent=2))
        if "certificates" in doc:
            print("certificates: " + " ".join(doc["certificates"]), file=sys.stderr)
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
