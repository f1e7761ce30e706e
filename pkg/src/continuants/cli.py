"""Batch command-line front end.

Subcommands: continuant, periodic, qrat, qfib, quatpow, chebyshev, bench,
verify.  Coefficient data comes from small key=value config files (grammar
in docs/config.md); all output is canonical and deterministic, so golden
files stay byte-stable.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from .bench import render_table, run_bench
from .chebyshev import u_coeffs
from .continuant import (
    PeriodicAlpha,
    cf_eval,
    continuant_det_oracle,
    continuant_rec,
    shift_check,
    transfer_matrix,
)
from .mat2 import mat_power_cheb
from .periodic import closed_form_general, closed_form_klm
from .qrational import cf_digits, q_fibonacci, q_rational
from .quaternion import Quaternion, quat_power_cheb, quat_power_naive
from .ring import DEFAULT_MODULUS, ModInt, ring_by_name


class ConfigError(ValueError):
    """Raised for malformed config files; the message names line and field."""


@dataclass
class AlphaConfig:
    """Parsed coefficient config: ring name, period, base and raw arrays."""

    ring: str
    l: int
    p: int
    a: list[str]
    b: list[str]
    c: list[str]
    modulus: int | None = None

    def ring_spec(self):
        return ring_by_name(self.ring, self.modulus)

    def to_alpha(self) -> PeriodicAlpha:
        spec = self.ring_spec()
        parsed = {}
        for field in ("a", "b", "c"):
            parsed[field] = [spec.parse(s) for s in getattr(self, field)]
        return PeriodicAlpha(parsed["a"], parsed["b"], parsed["c"], base=self.p)


_REQUIRED_KEYS = ("ring", "l", "p", "a", "b", "c")


def parse_config(text: str) -> AlphaConfig:
    """Parse key=value config text into a validated AlphaConfig."""
    entries: dict[str, tuple[int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value, got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _REQUIRED_KEYS + ("modulus",):
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in entries:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        entries[key] = (lineno, value)

    for key in _REQUIRED_KEYS:
        if key not in entries:
            raise ConfigError(f"missing required key {key!r}")

    def int_field(key: str) -> int:
        lineno, value = entries[key]
        try:
            return int(value)
        except ValueError:
            raise ConfigError(f"line {lineno}: field {key!r} must be an integer") from None

    ring = entries["ring"][1]
    if ring not in ("rational", "laurent", "modint"):
        raise ConfigError(f"line {entries['ring'][0]}: unknown ring {ring!r}")
    l = int_field("l")
    if l < 1:
        raise ConfigError(f"line {entries['l'][0]}: field 'l' must be >= 1")
    p = int_field("p")
    modulus = int_field("modulus") if "modulus" in entries else None
    if modulus is not None and ring != "modint":
        raise ConfigError(
            f"line {entries['modulus'][0]}: 'modulus' only applies to ring=modint")

    arrays = {}
    for key in ("a", "b", "c"):
        lineno, value = entries[key]
        if not (value.startswith("[") and value.endswith("]")):
            raise ConfigError(f"line {lineno}: field {key!r} must be a [..] array")
        items = [s.strip() for s in value[1:-1].split(",")] if value[1:-1].strip() else []
        if len(items) != l:
            raise ConfigError(
                f"line {lineno}: field {key!r} has {len(items)} elements, expected l={l}")
        arrays[key] = items

    cfg = AlphaConfig(ring, l, p, arrays["a"], arrays["b"], arrays["c"], modulus)
    spec = cfg.ring_spec()
    for key in ("a", "b", "c"):
        lineno, _ = entries[key]
        for i, item in enumerate(arrays[key]):
            try:
                spec.parse(item)
            except ValueError as exc:
                raise ConfigError(
                    f"line {lineno}: field {key!r}[{i}]: {exc}") from None
    return cfg


def load_config(path: str) -> AlphaConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())


# --- cross-strategy verification ------------------------------------------


def general_matpow(alpha: PeriodicAlpha, p: int, m: int, j: int):
    """K_{lm+j}(p-j) via a Chebyshev matrix power of the period matrix."""
    power = mat_power_cheb(transfer_matrix(alpha, p, alpha.l), m)
    top, bottom = power.a, power.c  # k_{lm}(p) = first column acting on (1, 0)
    if j == -1:
        return bottom
    vec = transfer_matrix(alpha, p - j, j).apply((top, bottom))
    return vec[0]


def run_verify(alpha: PeriodicAlpha, n_max: int = 8, m_max: int = 4):
    """Cross-strategy agreement suite; returns (identity, status, detail) rows.

    Status is PASS, FAIL or SKIP (the continued-fraction quotient needs
    every c = -1 and nonvanishing intermediate denominators).
    """
    results = []
    base = alpha.base
    l = alpha.l

    def record(name: str, failures: list, total: int, skipped: int = 0):
        if failures:
            results.append((name, "FAIL", f"{len(failures)}/{total} cases; first: {failures[0]}"))
        elif total == 0 or skipped == total:
            results.append((name, "SKIP", "no applicable cases"))
        else:
            note = f"{total} cases" + (f", {skipped} skipped" if skipped else "")
            results.append((name, "PASS", note))

    failures = []
    total = 0
    for p in range(base, base + l):
        for n in range(-1, n_max + 1):
            total += 1
            rec = continuant_rec(alpha, p, n)
            orc = continuant_det_oracle(alpha, p, n)
            if rec != orc:
                failures.append(f"p={p} n={n}: rec={rec} oracle={orc}")
    record("recurrence=oracle", failures, total)

    failures = []
    total = 0
    for m in range(m_max + 1):
        for j in range(-1, l - 1):
            total += 1
            closed = closed_form_general(alpha, base, m, j)
            rec = continuant_rec(alpha, base - j, l * m + j)
            if closed != rec:
                failures.append(f"m={m} j={j}: closed={closed} rec={rec}")
    record("closed=recurrence", failures, total)

    failures = []
    total = 0
    for n in range(0, min(n_max, 6) + 1):
        for m in range(0, n + 1):
            total += 1
            if not shift_check(alpha, base, n, m):
                failures.append(f"n={n} m={m}")
    record("shift", failures, total)

    failures = []
    total = 0
    for n in range(1, n_max + 1):
        total += 1
        mat = transfer_matrix(alpha, base, n)
        bc = alpha.b_at(base + n - 1) * alpha.c_at(base + n - 1)
        expected = (
            continuant_rec(alpha, base, n),
            -(bc * continuant_rec(alpha, base, n - 1)),
            continuant_rec(alpha, base + 1, n - 1),
            -(bc * continuant_rec(alpha, base + 1, n - 2)),
        )
        det = alpha.one()
        for i in range(n):
            det = det * (alpha.b_at(base + i) * alpha.c_at(base + i))
        trace_ok = mat.trace() == expected[0] + expected[3]
        if (mat.a, mat.b, mat.c, mat.d) != expected or mat.det() != det or not trace_ok:
            failures.append(f"n={n}")
    record("trace/det", failures, total)

    failures = []
    skipped = 0
    total = 0
    neg_one = -alpha.one()
    if all(c == neg_one for c in alpha.c):
        for n in range(1, n_max + 1):
            total += 1
            try:
                quotient = cf_eval(alpha, base, n)
            except ZeroDivisionError:
                skipped += 1
                continue
            lhs = quotient * continuant_rec(alpha, base + 1, n - 1)
            if lhs != continuant_rec(alpha, base, n):
                failures.append(f"n={n}")
        record("cf-quotient", failures, total, skipped)
    else:
        results.append(("cf-quotient", "SKIP", "requires every c = -1"))

    failures = []
    total = 0
    for m in range(m_max + 1):
        total += 1
        period = transfer_matrix(alpha, base, l)
        if mat_power_cheb(period, m) != transfer_matrix(alpha, base, l * m):
            failures.append(f"m={m}")
    record("matpow-periods", failures, total)

    return results


# --- subcommand handlers ---------------------------------------------------


def _cmd_continuant(args) -> int:
    cfg = load_config(args.config)
    alpha = cfg.to_alpha()
    p = args.p if args.p is not None else cfg.p
    if args.strategy == "rec":
        value = continuant_rec(alpha, p, args.n)
    elif args.strategy == "oracle":
        value = continuant_det_oracle(alpha, p, args.n)
    else:  # transfer
        if args.n >= 1:
            value = transfer_matrix(alpha, p, args.n).a
        else:
            value = alpha.one() if args.n == 0 else alpha.zero()
    print(cfg.ring_spec().format(value))
    return 0


def _cmd_periodic(args) -> int:
    cfg = load_config(args.config)
    alpha = cfg.to_alpha()
    p = args.p if args.p is not None else cfg.p
    if args.j is None:
        # Plain K_{lm}; an explicit --j goes through the bilinear form with
        # its -1 <= j <= l-2 domain.
        closed = lambda: closed_form_klm(alpha, p, args.m)
        j = 0
    else:
        closed = lambda: closed_form_general(alpha, p, args.m, args.j)
        j = args.j
    strategies = {
        "closed": closed,
        "rec": lambda: continuant_rec(alpha, p - j, alpha.l * args.m + j),
        "oracle": lambda: continuant_det_oracle(alpha, p - j, alpha.l * args.m + j),
        "matpow": lambda: general_matpow(alpha, p, args.m, j),
    }
    value = strategies[args.strategy]()
    print(cfg.ring_spec().format(value))
    if args.verify:
        status = 0
        for name, fn in strategies.items():
            other = fn()
            ok = other == value
            print(f"{'PASS' if ok else 'FAIL'} {name} = {cfg.ring_spec().format(other)}")
            if not ok:
                status = 1
        return status
    return 0


def _cmd_qrat(args) -> int:
    digits = cf_digits(args.r, args.s)
    value = q_rational(digits)
    print(f"digits: {list(digits)}")
    print(f"numerator: {value.num}")
    print(f"denominator: {value.den}")
    return 0


def _cmd_qfib(args) -> int:
    print(q_fibonacci(args.n))
    return 0


def _cmd_quatpow(args) -> int:
    parts = [s.strip() for s in args.q.split(",")]
    if len(parts) != 4:
        raise ValueError("--q expects four comma-separated rationals a,b,c,d")
    x = Quaternion(*(Fraction(s) for s in parts))
    value = quat_power_cheb(x, args.n)
    assert value == quat_power_naive(x, args.n)
    print(value)
    return 0


def _cmd_chebyshev(args) -> int:
    print(u_coeffs(args.n))
    return 0


def _random_modint_alpha(l: int, seed: int, modulus: int) -> PeriodicAlpha:
    rng = random.Random(seed)
    mk = lambda: ModInt(rng.randrange(1, 100), modulus)
    return PeriodicAlpha([mk() for _ in range(l)], [mk() for _ in range(l)],
                         [mk() for _ in range(l)], base=1)


def _cmd_bench(args) -> int:
    m_list = [int(s) for s in args.m_list.split(",") if s.strip()]
    if args.config:
        cfg = load_config(args.config)
        if cfg.ring != "modint":
            raise ValueError("bench configs must use ring=modint")
        alpha = cfg.to_alpha()
    else:
        alpha = _random_modint_alpha(args.l, args.seed, args.modulus)
    reports = run_bench(alpha, m_list)
    if args.csv:
        print("strategy,l,m,ns,ops,digest")
        for r in reports:
            print(r.csv_row())
    else:
        print(render_table(reports))
    return 0


def _cmd_verify(args) -> int:
    cfg = load_config(args.config)
    alpha = cfg.to_alpha()
    results = run_verify(alpha, n_max=args.n_max, m_max=args.m_max)
    status = 0
    for name, outcome, detail in results:
        print(f"{outcome} {name}: {detail}")
        if outcome == "FAIL":
            status = 1
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="continuants",
        description="Exact continuants, Chebyshev closed forms, q-rationals "
                    "and quaternion powers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cont = sub.add_parser("continuant", help="evaluate K_n for a config")
    p_cont.add_argument("--config", required=True)
    p_cont.add_argument("--p", type=int, default=None)
    p_cont.add_argument("--n", type=int, required=True)
    p_cont.add_argument("--strategy", choices=("oracle", "rec", "transfer"),
                        default="rec")
    p_cont.set_defaults(func=_cmd_continuant)

    p_per = sub.add_parser("periodic", help="evaluate K_{lm+j} closed forms")
    p_per.add_argument("--config", required=True)
    p_per.add_argument("--p", type=int, default=None)
    p_per.add_argument("--m", type=int, required=True)
    p_per.add_argument("--j", type=int, default=None,
                       help="offset in -1..l-2; omit for plain K_{lm}")
    p_per.add_argument("--strategy", choices=("closed", "rec", "oracle", "matpow"),
                       default="closed")
    p_per.add_argument("--verify", action="store_true",
                       help="also check all strategies agree")
    p_per.set_defaults(func=_cmd_periodic)

    p_qrat = sub.add_parser("qrat", help="q-deformation of a rational r/s")
    p_qrat.add_argument("--r", type=int, required=True)
    p_qrat.add_argument("--s", type=int, required=True)
    p_qrat.set_defaults(func=_cmd_qrat)

    p_qfib = sub.add_parser("qfib", help="q-Fibonacci polynomial F_n(q)")
    p_qfib.add_argument("--n", type=int, required=True)
    p_qfib.set_defaults(func=_cmd_qfib)

    p_quat = sub.add_parser("quatpow", help="exact quaternion power")
    p_quat.add_argument("--q", required=True, help="components a,b,c,d")
    p_quat.add_argument("--n", type=int, required=True)
    p_quat.set_defaults(func=_cmd_quatpow)

    p_cheb = sub.add_parser("chebyshev", help="coefficients of U_n(x)")
    p_cheb.add_argument("--n", type=int, required=True)
    p_cheb.set_defaults(func=_cmd_chebyshev)

    p_bench = sub.add_parser("bench", help="compare evaluation strategies")
    p_bench.add_argument("--l", type=int, default=3)
    p_bench.add_argument("--m-list", required=True, help="comma-separated m values")
    p_bench.add_argument("--config", default=None)
    p_bench.add_argument("--seed", type=int, default=12345)
    p_bench.add_argument("--modulus", type=int, default=DEFAULT_MODULUS)
    p_bench.add_argument("--csv", action="store_true")
    p_bench.set_defaults(func=_cmd_bench)

    p_ver = sub.add_parser("verify", help="cross-strategy agreement suite")
    p_ver.add_argument("--config", required=True)
    p_ver.add_argument("--n-max", type=int, default=8)
    p_ver.add_argument("--m-max", type=int, default=4)
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
