"""Command-line front end: deterministic CSV/JSON tables for every harness.

Output discipline: identical arguments produce byte-identical output.  All
rational values are rendered as fixed 6-fractional-digit decimals computed
from exact integers with round-half-even, so no float formatting is on the
byte path.  Files are written to a temporary sibling and renamed into place;
a failed run never leaves a partial file.

Exit codes: 0 success, 2 for domain/usage errors (bad arguments, violated
preconditions), 1 for internal failures (no decomposition found, engine
contradictions, unexpected exceptions).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from fractions import Fraction
from typing import Any, Sequence

from .errors import DecompositionError, DomainError, InvariantViolationError
from .goldbach import decompose_m, sn_scan, tail_frobenius, ternary_decomp
from .intervals import (
    build_interval_semigroup,
    figure_grid,
    parse_lambda,
    ratio_scan,
    scan_rows_csv,
    staircase,
)
from .primes import DEFAULT_LIMIT, PrimeTable, build_table, extend_table, table_for_nth_prime
from .semigroup import GeneratorSet, apery_set, atoms, normalize_generators
from .wilf import density, verify_sp_range

ENV_SIEVE_LIMIT = "PRIMEFROB_SIEVE_LIMIT"
ENV_THREADS = "PRIMEFROB_THREADS"


def decimal6(value: Fraction | int) -> str:
    """Exact decimal with 6 fractional digits, round-half-even, no floats."""
    fr = Fraction(value)
    sign = "-" if fr < 0 else ""
    num, den = abs(fr.numerator) * 10**6, fr.denominator
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q % 2 == 1):
        q += 1
    return f"{sign}{q // 10**6}.{q % 10**6:06d}"


def _cell_csv(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return decimal6(v)
    return str(v)


def _cell_json(v: Any) -> Any:
    if isinstance(v, Fraction):
        return decimal6(v)
    return v


def _render(rows: list[dict], columns: list[str], fmt: str) -> str:
    if fmt == "json":
        out = []
        for row in rows:
            out.append(
                json.dumps({c: _cell_json(row.get(c)) for c in columns})
            )
        return "\n".join(out) + ("\n" if out else "")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell_csv(row.get(c)) for c in columns])
    return buf.getvalue()


def _write_atomically(path: str, content: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".primefrob-", dir=directory)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(args, rows: list[dict], columns: list[str], summary: str | None = None) -> None:
    content = _render(rows, columns, args.format)
    if args.output:
        _write_atomically(args.output, content)
        if summary:
            print(summary)
    else:
        sys.stdout.write(content)
        if summary:
            print(summary, file=sys.stderr)


def _resolve_sieve_limit(args) -> tuple[int, bool]:
    """(limit, explicit): explicit limits are respected strictly and a
    computation that needs more becomes a domain error instead of growing."""
    if getattr(args, "sieve_limit", None) is not None:
        return args.sieve_limit, True
    env = os.environ.get(ENV_SIEVE_LIMIT)
    if env:
        try:
            return int(env), True
        except ValueError:
            raise DomainError(f"{ENV_SIEVE_LIMIT}={env!r} is not an integer") from None
    return DEFAULT_LIMIT, False


def _resolve_threads(args) -> int:
    if getattr(args, "threads", None) is not None:
        value = args.threads
    else:
        env = os.environ.get(ENV_THREADS)
        if env:
            try:
                value = int(env)
            except ValueError:
                raise DomainError(f"{ENV_THREADS}={env!r} is not an integer") from None
        else:
            value = os.cpu_count() or 1
    if value < 1:
        raise DomainError(f"thread count must be >= 1, got {value}")
    return value


def _table_reaching(args, needed: int) -> PrimeTable:
    limit, explicit = _resolve_sieve_limit(args)
    if needed > limit:
        if explicit:
            raise DomainError(
                f"computation needs primes up to {needed}, beyond the "
                f"configured sieve limit {limit}"
            )
        limit = needed
    return build_table(limit)


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo_s, hi_s = text.split(":", 1)
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise DomainError(f"range must look like LO:HI, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise DomainError(f"bad range [{lo}, {hi}]")
    return lo, hi


def _cmd_frobenius(args) -> int:
    if args.gens:
        try:
            raw = [int(tok) for tok in args.gens.split(",")]
        except ValueError:
            raise DomainError(f"--gens must be comma-separated integers, got {args.gens!r}") from None
        gens = normalize_generators(raw)
        profile = apery_set(gens)
        at = atoms(profile, gens)
        row = {
            "m": profile.multiplicity,
            "f": profile.frobenius,
            "g": profile.genus,
            "e": at.embedding_dimension,
            "sporadic": 1 + profile.frobenius - profile.genus,
        }
        _emit(args, [row], list(row.keys()),
              summary=f"f={row['f']} g={row['g']} e={row['e']} sporadic={row['sporadic']}")
        return 0
    if args.p is None or args.lam is None:
        raise DomainError("provide either --gens or both --p and --lambda")
    lam = parse_lambda(args.lam)
    needed = ((1 + lam).numerator * args.p) // (1 + lam).denominator + 1
    table = _table_reaching(args, needed)
    ls = build_interval_semigroup(table, args.p, lam)
    at = atoms(ls.profile, GeneratorSet(ls.generators))
    row = {
        "p": ls.p,
        "a": lam.numerator,
        "b": lam.denominator,
        "f": ls.frobenius,
        "g": ls.genus,
        "e": at.embedding_dimension,
        "sporadic": 1 + ls.frobenius - ls.genus,
    }
    _emit(args, [row], list(row.keys()),
          summary=f"f={row['f']} g={row['g']} e={row['e']} sporadic={row['sporadic']}")
    return 0


SCAN_COLUMNS = ["p", "a", "b", "x", "f", "ratio", "staircase", "two_primes"]


def _cmd_lambda_scan(args) -> int:
    if args.gnuplot and not args.output:
        raise DomainError("--gnuplot needs --output so the script has data to plot")
    x_max = parse_lambda(args.x_max)
    if args.figure_mode:
        needed = (x_max.numerator * args.p) // x_max.denominator + 1
        table = _table_reaching(args, needed)
        xs = figure_grid(table, args.p, x_max)
    elif args.x:
        xs = [parse_lambda(x) for x in args.x]
        needed = max((x.numerator * args.p) // x.denominator for x in xs) + 1
        table = _table_reaching(args, needed)
    else:
        raise DomainError("provide --figure-mode or at least one --x")
    points = ratio_scan(table, args.p, xs)
    rows = scan_rows_csv(points)
    skipped = sum(1 for pt in points if pt.skipped)
    summary = f"{len(points)} grid points at p={args.p}" + (
        f" ({skipped} below two primes, kept with empty f)" if skipped else ""
    )
    _emit(args, rows, SCAN_COLUMNS, summary=summary)
    if args.gnuplot:
        _write_atomically(args.gnuplot, _gnuplot_script(args.output, args.p))
    return 0


def _gnuplot_script(csv_path: str, p: int) -> str:
    return "\n".join(
        [
            "set datafile separator ','",
            "set datafile missing ''",
            "set key left top",
            "set xlabel 'x = 1 + lambda'",
            f"set ylabel 'f/{p} and staircase'",
            f"plot '{csv_path}' every ::1 using 4:6 with steps title 'f/p at p={p}', \\",
            f"     '{csv_path}' every ::1 using 4:7 with steps title 'staircase'",
            "",
        ]
    )


WILF_COLUMNS = [
    "n", "p", "e", "f", "g", "sporadic", "lhs", "rhs", "holds",
    "improved_rhs", "f_lt_improved_rhs",
]


def _cmd_wilf(args) -> int:
    n_lo, n_hi = _parse_range(args.range)
    threads = _resolve_threads(args)
    limit, explicit = _resolve_sieve_limit(args)
    table = build_table(limit)
    if not explicit:
        table = table_for_nth_prime(table, n_hi)
        table = extend_table(table, 2 * table.nth_prime(n_hi) + 1)
    rows_data = verify_sp_range(table, n_lo, n_hi, workers=threads)
    rows = [
        {
            "n": r.n, "p": r.p, "e": r.e, "f": r.f, "g": r.g,
            "sporadic": r.sporadic, "lhs": r.lhs, "rhs": r.rhs, "holds": r.holds,
            "improved_rhs": r.improved_rhs, "f_lt_improved_rhs": r.f_lt_improved_rhs,
        }
        for r in rows_data
    ]
    holding = sum(1 for r in rows_data if r.holds)
    verdict = "all hold" if holding == len(rows) else f"only {holding} hold"
    _emit(args, rows, WILF_COLUMNS, summary=f"{len(rows)} semigroups, {verdict}")
    return 0 if holding == len(rows) else 1


TABLE3_COLUMNS = ["n", "p", "f", "f_odd", "delta_next", "pass"]


def _cmd_table3(args) -> int:
    n_lo, n_hi = _parse_range(args.range)
    if n_lo < 5:
        raise DomainError(f"scan starts at n = 5, got {n_lo}")
    threads = _resolve_threads(args)
    limit, _ = _resolve_sieve_limit(args)
    table = build_table(limit)
    rows_data = sn_scan(table, n_lo, n_hi, workers=threads)
    rows = [
        {
            "n": r.n, "p": r.p_n, "f": r.f_n, "f_odd": r.f_odd,
            "delta_next": r.delta_next, "pass": r.passes,
        }
        for r in rows_data
    ]
    passing = sum(1 for r in rows_data if r.passes)
    verdict = "all rows pass" if passing == len(rows) else f"only {passing} pass"
    _emit(args, rows, TABLE3_COLUMNS, summary=f"{len(rows)} rows, {verdict}")
    return 0 if passing == len(rows) else 1


GOLDBACH_COLUMNS = ["N", "m", "parts", "max_deviation", "bound_type", "bound_limit", "strict", "valid"]


def _cmd_goldbach(args) -> int:
    n = args.N
    table = _table_reaching(args, n + 16)
    if args.delta is not None:
        delta = Fraction(parse_lambda(args.delta))
        cert = decompose_m(table, n, args.m, delta, theta=args.theta)
    else:
        if args.m != 3:
            raise DomainError("an m != 3 decomposition needs --delta")
        cert = ternary_decomp(table, n, theta=args.theta)
    row = {
        "N": cert.N,
        "m": cert.m,
        "parts": list(cert.parts) if args.format == "json" else ";".join(map(str, cert.parts)),
        "max_deviation": cert.max_deviation,
        "bound_type": cert.bound_type,
        "bound_limit": str(cert.bound_limit),
        "strict": cert.strict,
        "valid": cert.validate(table),
    }
    _emit(args, [row], GOLDBACH_COLUMNS)
    return 0 if row["valid"] else 1


def _cmd_density(args) -> int:
    table = _table_reaching(args, 2 * args.p + 1)
    d = density(table, args.p)
    row = {"p": args.p, "density": d}
    _emit(args, [row], ["p", "density"], summary=f"density({args.p}) = {decimal6(d)}")
    return 0


SN_COLUMNS = ["n", "p", "truncation", "f", "certificate_ok"]


def _cmd_sn(args) -> int:
    limit, _ = _resolve_sieve_limit(args)
    table = build_table(limit)
    tp = tail_frobenius(table, args.n)
    row = {
        "n": tp.n, "p": tp.p_n, "truncation": tp.truncation,
        "f": tp.f, "certificate_ok": tp.certificate_ok,
    }
    _emit(args, [row], SN_COLUMNS, summary=f"f_{tp.n} = {tp.f} (truncation {tp.truncation})")
    return 0


def _add_common(sub: argparse.ArgumentParser, default_format: str = "csv") -> None:
    sub.add_argument("--output", "-o", help="write the table here (atomic rename)")
    sub.add_argument("--format", choices=("csv", "json"), default=default_format)
    sub.add_argument("--sieve-limit", type=int, default=None,
                     help=f"hard sieve ceiling (or ${ENV_SIEVE_LIMIT})")
    sub.add_argument("--threads", type=int, default=None,
                     help=f"worker processes for scans (or ${ENV_THREADS})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primefrob",
        description="Exact invariants of semigroups generated by primes in intervals",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_frob = subs.add_parser("frobenius", help="f, genus, atoms of one semigroup")
    p_frob.add_argument("--gens", help="comma-separated generators, e.g. 3,5")
    p_frob.add_argument("--p", type=int, help="prime start of the interval")
    p_frob.add_argument("--lambda", dest="lam", help="interval ratio, e.g. 1 or 1/2")
    _add_common(p_frob)
    p_frob.set_defaults(handler=_cmd_frobenius)

    p_scan = subs.add_parser("lambda-scan", help="f/p across a grid of interval ratios")
    p_scan.add_argument("--p", type=int, required=True)
    p_scan.add_argument("--figure-mode", action="store_true",
                        help="grid of all x with x*p prime")
    p_scan.add_argument("--x", action="append",
                        help="explicit grid point x = 1 + lambda (repeatable)")
    p_scan.add_argument("--x-max", default="3", help="grid ceiling in figure mode")
    p_scan.add_argument("--gnuplot", help="also write a gnuplot script here")
    _add_common(p_scan)
    p_scan.set_defaults(handler=_cmd_lambda_scan)

    p_wilf = subs.add_parser("wilf", help="Wilf quotient across S(p_n) for a range of n")
    p_wilf.add_argument("--range", required=True, help="n range as LO:HI, e.g. 8:675")
    _add_common(p_wilf)
    p_wilf.set_defaults(handler=_cmd_wilf)

    p_t3 = subs.add_parser("table3", help="tail semigroup scan: parity of f_n and candidate jumps")
    p_t3.add_argument("--range", required=True, help="n range as LO:HI, e.g. 5:1000")
    _add_common(p_t3)
    p_t3.set_defaults(handler=_cmd_table3)

    p_gold = subs.add_parser("goldbach", help="almost-equal prime decomposition certificate")
    p_gold.add_argument("--N", type=int, required=True)
    p_gold.add_argument("--m", type=int, default=3, help="number of parts (default 3)")
    p_gold.add_argument("--delta", help="relative deviation bound as a fraction, e.g. 1/20")
    p_gold.add_argument("--theta", type=float, default=0.6,
                        help="window exponent for three-part splits")
    _add_common(p_gold, default_format="json")
    p_gold.set_defaults(handler=_cmd_goldbach)

    p_dens = subs.add_parser("density", help="sporadic density of the primes-in-[p,2p] semigroup")
    p_dens.add_argument("--p", type=int, required=True)
    _add_common(p_dens)
    p_dens.set_defaults(handler=_cmd_density)

    p_sn = subs.add_parser("sn", help="Frobenius number of the all-primes-from-p_n semigroup")
    p_sn.add_argument("--n", type=int, required=True)
    _add_common(p_sn)
    p_sn.set_defaults(handler=_cmd_sn)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"primefrob: {exc}", file=sys.stderr)
        return 2
    except (DecompositionError, InvariantViolationError) as exc:
        print(f"primefrob: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - last resort
        print(f"primefrob: internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
