"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 enumeration cap exceeded,
4 cross-validation mismatch under ``--check``.
"""
from __future__ import annotations

import argparse
import os
import sys
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import closed_form, exact_enum, greedy, montecarlo
from .core import Preferences, Regularity, classify, left_distance, natural_pairs, right_distance
from .report import METHODS, QUANTITIES, SweepRow, fmt_exact, fmt_float, meta_header, render, render_sweep
from .stability import CapExceeded, OutcomeKind, stable_set, zone_decomposition

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4

DEFAULT_METHOD = {
    "f": "closed_form",
    "g": "closed_form",
    "greedy_expected": "recursion",
    "greedy_per_person": "recursion",
    "greedy_perfect": "recursion",
}

# which exact methods --check compares for each quantity
CHECK_PAIR = {
    "f": ("closed_form", "enumeration"),
    "g": ("closed_form", "enumeration"),
    "greedy_expected": ("closed_form", "recursion"),
    "greedy_per_person": ("closed_form", "recursion"),
}


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _exact_value(quantity: str, n: int, method: str, enum_cap: int) -> Fraction:
    if quantity in ("f", "g"):
        if method == "closed_form":
            return closed_form.f_closed(n) if quantity == "f" else closed_form.g_closed(n)
        if method == "enumeration":
            try:
                report = exact_enum.enumerate_report(n, cap=enum_cap)
            except CapExceeded as exc:
                raise CliError(str(exc), EXIT_CAP) from exc
            return report.unmatched_probability if quantity == "f" else report.perfect_probability
    else:
        if n < 3:
            raise CliError(f"{quantity} needs n >= 3, got {n}")
        if quantity == "greedy_expected":
            if method == "closed_form":
                return closed_form.greedy_sum(n)
            if method == "recursion":
                return greedy.cycle_expected_unmatched(n)
        elif quantity == "greedy_per_person":
            if method == "closed_form":
                return closed_form.greedy_unmatched_probability(n)
            if method == "recursion":
                return greedy.cycle_unmatched_probability(n)
        elif quantity == "greedy_perfect" and method == "recursion":
            return greedy.cycle_perfect_probability(n, lenient=True)
    raise CliError(f"method {method!r} is not available for {quantity}")


def compute_row(quantity: str, n: int, method: str, args: argparse.Namespace) -> SweepRow:
    if n < 1:
        raise CliError(f"n must be >= 1, got {n}")
    if method != "montecarlo":
        return SweepRow.exact_row(n, quantity, _exact_value(quantity, n, method, args.enum_cap), method)
    if quantity == "f":
        est = montecarlo.sample_f(n, args.seed, args.samples).estimate
    elif quantity == "g":
        est = montecarlo.sample_g(n, args.seed, args.samples).estimate
    else:
        if n < 3:
            raise CliError(f"{quantity} needs n >= 3, got {n}")
        sim = greedy.simulate_greedy_cycle(n, args.seed, args.samples)
        est = {
            "greedy_expected": sim.estimate * n,
            "greedy_per_person": sim.estimate,
            "greedy_perfect": sim.perfect_estimate,
        }[quantity]
    return SweepRow.sampled_row(n, quantity, est, args.samples, args.seed)


def _emit(text: str, output: str | None) -> None:
    if not output:
        sys.stdout.write(text)
        return
    path = Path(output)
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def _meta(args: argparse.Namespace, command: str) -> dict | None:
    if args.no_meta:
        return None
    return meta_header(command, {"seed": args.seed, "samples": args.samples, "rng": montecarlo.RNG_ID})


def _check_rows(quantity: str, n: int, rows: list[SweepRow], args: argparse.Namespace) -> None:
    exact = {r.method: r.exact for r in rows if r.exact != "NA"}
    pair = CHECK_PAIR.get(quantity)
    if pair is not None:
        for method in pair:
            if method in exact:
                continue
            if method == "enumeration" and n > args.enum_cap:
                continue
            exact[method] = fmt_exact(_exact_value(quantity, n, method, args.enum_cap))
    if len(set(exact.values())) > 1:
        detail = ", ".join(f"{m}={v}" for m, v in exact.items())
        raise CliError(f"check failed at n={n}: {detail}", EXIT_MISMATCH)


def cmd_value(args: argparse.Namespace) -> int:
    method = args.method or DEFAULT_METHOD[args.quantity]
    row = compute_row(args.quantity, args.n, method, args)
    if args.check:
        _check_rows(args.quantity, args.n, [row], args)
    _emit(render_sweep([row], args.format, _meta(args, "value")), args.output)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.n_lo < 1 or args.n_hi < args.n_lo:
        raise CliError(f"need 1 <= n_lo <= n_hi, got {args.n_lo}..{args.n_hi}")
    methods = [m.strip() for m in (args.methods or DEFAULT_METHOD[args.quantity]).split(",") if m.strip()]
    rows: list[SweepRow] = []
    for n in range(args.n_lo, args.n_hi + 1):
        if args.even_only and n % 2:
            continue
        if args.quantity.startswith("greedy") and n < 3:
            continue
        block = [compute_row(args.quantity, n, m, args) for m in methods]
        if args.check:
            _check_rows(args.quantity, n, block, args)
        rows.extend(block)
    _emit(render_sweep(rows, args.format, _meta(args, "sweep")), args.output)
    return EXIT_OK


COMPARE_COLUMNS = [
    "n", "stable_exact", "stable_float", "greedy_exact", "greedy_float",
    "difference_float", "stable_limit", "greedy_limit",
]


def compare_rows(n_lo: int, n_hi: int) -> list[list[str]]:
    lim = closed_form.limits()
    stable_lim, greedy_lim = fmt_float(lim.stable), fmt_float(lim.greedy)
    rows = []
    for n in range(n_lo, n_hi + 1):
        s = closed_form.f_closed(n)
        g = greedy.cycle_unmatched_probability(n)
        rows.append([str(n), fmt_exact(s), fmt_float(float(s)), fmt_exact(g), fmt_float(float(g)),
                     fmt_float(float(g - s)), stable_lim, greedy_lim])
    rows.append(["limit", "1/9", stable_lim, "NA", greedy_lim,
                 fmt_float(lim.greedy - lim.stable), stable_lim, greedy_lim])
    return rows


def cmd_compare(args: argparse.Namespace) -> int:
    if args.n_lo < 3 or args.n_hi < args.n_lo:
        raise CliError(f"need 3 <= n_lo <= n_hi, got {args.n_lo}..{args.n_hi}")
    text = render(COMPARE_COLUMNS, compare_rows(args.n_lo, args.n_hi), args.format, _meta(args, "compare"))
    _emit(text, args.output)
    return EXIT_OK


def describe(prefs: Preferences) -> str:
    n = prefs.n
    lines = [
        "preferences: " + prefs.labels,
        "diagram:     " + "  ".join(f"{i}→" if prefs.prefers_right(i) else f"←{i}" for i in range(n)),
    ]
    kind = classify(prefs)
    outcome = stable_set(prefs)
    if kind is Regularity.REGULAR:
        pairs = natural_pairs(prefs)
        lines.append("natural pairs: " + " ".join(f"({a},{b})" for a, b in pairs))
        for st in zone_decomposition(prefs):
            seats = st.seats(n)
            lines.append(
                f"stretch from seat {st.start}, {st.length} seats: "
                f"zone1={seats[:st.zone1]} zone2={st.zone2.value or 'empty'} "
                f"zone3={seats[st.length - st.zone3:]}"
            )
        m = outcome.matchings[0]
        lines.append("stable matching (unique): " + str(m))
        alone = m.unmatched()
        if alone:
            for i in alone:
                lines.append(f"unmatched: seat {i} (s={left_distance(prefs, i)} t={right_distance(prefs, i)})")
        else:
            lines.append("unmatched: none")
    elif outcome.kind is OutcomeKind.TWO_PERFECT:
        lines.append("natural pairs: none (irregular)")
        label = "perfect stable matching" if len(outcome.matchings) == 1 else "two perfect stable matchings"
        lines.append(f"{label}: " + " | ".join(str(m) for m in outcome.matchings))
        lines.append("unmatched: none")
    else:
        lines.append("natural pairs: none (irregular)")
        lines.append("no stable matching (irregular, odd n)")
    return "\n".join(lines) + "\n"


def cmd_show(args: argparse.Namespace) -> int:
    try:
        prefs = Preferences.parse(args.prefs)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    _emit(describe(prefs), args.output)
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise CliError(f"n must be >= 1, got {args.n}")
    if args.samples < 1:
        raise CliError("samples must be >= 1")
    if args.quantity == "f":
        stats = montecarlo.sample_f(args.n, args.seed, args.samples)
    elif args.quantity == "g":
        stats = montecarlo.sample_g(args.n, args.seed, args.samples)
    else:
        if args.n < 3:
            raise CliError(f"greedy needs n >= 3, got {args.n}")
        stats = greedy.simulate_greedy_cycle(args.n, args.seed, args.samples)
    d = stats.to_dict()
    d = {"quantity": args.quantity, **d, "within_4se": stats.within(4.0)}
    for k, v in d.items():
        if isinstance(v, float):
            d[k] = fmt_float(v)
    text = render(list(d), [list(d.values())], args.format, _meta(args, "simulate"))
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--seed", type=int, default=1)
    common.add_argument("--samples", type=int, default=100_000)
    common.add_argument("--enum-cap", type=int, default=exact_enum.DEFAULT_ENUM_CAP)
    common.add_argument("--check", action="store_true", help="cross-validate exact methods")
    common.add_argument("--no-meta", action="store_true", help="omit the metadata header")
    common.add_argument("--output", default=None, help="write here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="circletable",
        description="Stable and greedy matchings at a circular table with random L/R preferences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", parents=[common], help="one quantity at one table size")
    p.add_argument("quantity", choices=QUANTITIES)
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=METHODS)
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("sweep", parents=[common], help="one quantity over a range of sizes")
    p.add_argument("quantity", choices=QUANTITIES)
    p.add_argument("n_lo", type=int)
    p.add_argument("n_hi", type=int)
    p.add_argument("--methods", default=None, help="comma list of closed_form,enumeration,recursion,montecarlo")
    p.add_argument("--even-only", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("compare", parents=[common], help="stable vs randomized greedy, per seat")
    p.add_argument("n_lo", type=int)
    p.add_argument("n_hi", type=int)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("show", parents=[common], help="explain one preference string")
    p.add_argument("prefs")
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("simulate", parents=[common], help="seeded Monte Carlo")
    p.add_argument("quantity", choices=["f", "g", "greedy"])
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"circletable: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
