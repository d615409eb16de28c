"""Command-line front end wiring the library into reproducible experiments.

Every subcommand is deterministic: identical flags produce byte-identical
output.  Ladder arguments take the form ``2^a..2^b[:step]`` (powers of
two, step applied to the exponent) or a single integer point; ``a..a``
with a raw integer is accepted as a single point.
"""

import argparse
import json
import sys

from .digitseq import eps, class_of
from .correlation import corr_naive, corr_fast, build_transfer
from .spectral import DEFAULT_SEED, spectral_report
from .expsum import RationalPhase, scan_alpha
from .counting import count_classes_naive, count_classes_fast, count_adjacent
from .report import (SumLadder, emit, fit_exponent, format_number)

NAIVE_CHECK_LIMIT = 10**5


def _parse_point(token: str) -> int:
    if token.startswith("2^"):
        return 2 ** int(token[2:])
    return int(token)


def parse_ladder(spec: str) -> list[int]:
    """Expand a ladder argument into a sorted list of X values."""
    body, step = spec, 1
    if ":" in spec:
        body, step_text = spec.rsplit(":", 1)
        step = int(step_text)
        if step < 1:
            raise ValueError("ladder step must be >= 1")
    if ".." in body:
        lo_text, hi_text = body.split("..", 1)
        if lo_text.startswith("2^") and hi_text.startswith("2^"):
            lo_exp, hi_exp = int(lo_text[2:]), int(hi_text[2:])
            if hi_exp < lo_exp:
                raise ValueError("ladder upper exponent below lower")
            return [2 ** e for e in range(lo_exp, hi_exp + 1, step)]
        lo, hi = _parse_point(lo_text), _parse_point(hi_text)
        if lo != hi:
            raise ValueError("raw integer ranges must be single points; "
                             "use 2^a..2^b for geometric ladders")
        return [lo]
    point = _parse_point(body)
    if point < 0:
        raise ValueError("ladder points must be nonnegative")
    return [point]


def _parse_shifts(text: str, q: int, extension: bool | None = None) -> list[int]:
    if text == "all":
        return list(range(q))
    r = int(text)
    if r < 0 or (not extension and r >= q):
        hint = "; pass --extension for exploratory r >= q" if extension is False else ""
        raise ValueError(f"shift must satisfy 0 <= r < q, got r={r} q={q}{hint}")
    return [r]


def _csv_lines(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(format_number(v) if isinstance(v, (int, float))
                              else str(v) for v in row))
    return "\n".join(lines) + "\n"


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def cmd_eps(args) -> str:
    n = _parse_point(args.n)
    return f"{eps(n):+d} class={class_of(n)} bits={n.bit_count()}\n"


def cmd_corr(args) -> str:
    q = args.q
    if q < 1 or q % 2 == 0:
        raise ValueError("multiplier must be odd")
    ladder = parse_ladder(args.ladder)
    shifts = _parse_shifts(args.shift, q)
    rows = []
    for X in ladder:
        for r in shifts:
            value = corr_fast(q, r, X)
            row = {"X": X, "r": r, "value": value}
            if args.naive_check:
                if X <= NAIVE_CHECK_LIMIT:
                    if corr_naive(q, r, X) != value:
                        raise RuntimeError(f"fast/naive mismatch at q={q} r={r} X={X}")
                    row["check"] = "ok"
                else:
                    row["check"] = "skipped"
            rows.append(row)
    if args.format == "json":
        return _json_text({"q": q, "shifts": shifts, "rows": rows})
    header = ["X", "r", "value"] + (["check"] if args.naive_check else [])
    return _csv_lines(header, [[row[h] for h in header] for row in rows])


def cmd_eigen(args) -> str:
    if args.format == "csv":
        raise ValueError("eigen output is json only")
    system = build_transfer(args.q)
    rep = spectral_report(system, seed=args.seed)
    payload = {
        "q": args.q,
        "char_poly": list(rep.poly.coeffs),
        "roots": [{"re": float(f"{z.real:.12g}"), "im": float(f"{z.imag:.12g}"),
                   "multiplicity": m} for z, m in rep.roots],
        "radius": float(f"{rep.radius:.12g}"),
        "exponent": float(f"{rep.exponent:.12g}"),
    }
    return _json_text(payload)


def _deviation_fit(label: str, by_X: dict[int, float]):
    xs = sorted(by_X)
    if len(xs) < 3 or any(x < 2 for x in xs):
        return None
    ladder = SumLadder(label=label, samples=tuple((x, by_X[x]) for x in xs))
    fit = fit_exponent(ladder)
    return {"slope": float(f"{fit.slope:.12g}"),
            "intercept": float(f"{fit.intercept:.12g}"),
            "max_residual": float(f"{fit.max_residual:.12g}"),
            "n_samples": fit.n_samples,
            "n_clamped": fit.n_clamped}


def cmd_count(args) -> str:
    q = args.q
    if q < 1 or q % 2 == 0:
        raise ValueError("multiplier must be odd")
    ladder = parse_ladder(args.ladder)
    shifts = _parse_shifts(args.shift, q, extension=args.extension)
    rows = []
    worst_by_X: dict[int, float] = {}
    for X in ladder:
        for r in shifts:
            if r < q:
                table = count_classes_fast(q, r, X)
            else:
                table = count_classes_naive(q, r, X, extension=True)
            for i in (0, 1):
                for k in (0, 1):
                    rows.append({"X": X, "q": q, "r": r, "i": i, "k": k,
                                 "cell": table.cells[i][k],
                                 "deviation": table.deviation(i, k)})
            worst = table.max_abs_deviation()
            worst_by_X[X] = max(worst_by_X.get(X, 0.0), worst)
    if args.format == "json":
        payload = {"q": q, "shifts": shifts, "extension": bool(args.extension),
                   "rows": rows}
        fit = _deviation_fit(f"count q={q} deviations", worst_by_X)
        if fit is not None:
            payload["deviation_fit"] = fit
        return _json_text(payload)
    header = ["X", "q", "r", "i", "k", "cell", "deviation"]
    return _csv_lines(header, [[row[h] for h in header] for row in rows])


def cmd_adjacent(args) -> str:
    ladder = parse_ladder(args.ladder)
    rows = []
    worst_by_X: dict[int, float] = {}
    for X in ladder:
        F = count_adjacent(X)
        for i in (0, 1):
            for k in (0, 1):
                main = X / 6 if i == k else X / 3
                dev = F[i][k] - main
                rows.append({"X": X, "i": i, "k": k, "count": F[i][k],
                             "main": float(f"{main:.12g}"),
                             "deviation": float(f"{dev:.12g}")})
                worst_by_X[X] = max(worst_by_X.get(X, 0.0), abs(dev))
    if args.format == "json":
        payload = {"rows": rows}
        fit = _deviation_fit("adjacent deviations", worst_by_X)
        if fit is not None:
            payload["deviation_fit"] = fit
        return _json_text(payload)
    header = ["X", "i", "k", "count", "main", "deviation"]
    return _csv_lines(header, [[row[h] for h in header] for row in rows])


def cmd_scan(args) -> str:
    X = _parse_point(args.X)
    result = scan_alpha(X, args.grid)
    payload = {"X": result.X, "grid": result.grid,
               "max_modulus": float(f"{result.max_modulus:.12g}"),
               "p": result.argmax_p,
               "alpha": f"{RationalPhase(result.argmax_p, result.grid).p}"
                        f"/{RationalPhase(result.argmax_p, result.grid).q}"}
    if args.format == "json":
        return _json_text(payload)
    header = ["X", "grid", "max_modulus", "p"]
    return _csv_lines(header, [[payload[h] for h in header]])


def cmd_fit(args) -> str:
    import csv as _csv
    with open(args.path, newline="", encoding="utf-8") as fh:
        reader = _csv.DictReader(fh)
        if reader.fieldnames is None:
            raise ValueError("need >= 3 samples")
        for col in ("value", "deviation", "count"):
            if col in reader.fieldnames:
                break
        else:
            raise ValueError("no value/deviation/count column to fit")
        if "X" not in reader.fieldnames:
            raise ValueError("no X column to fit against")
        by_X: dict[int, float] = {}
        for row in reader:
            X = int(row["X"])
            v = abs(float(row[col]))
            by_X[X] = max(by_X.get(X, 0.0), v)
    if len(by_X) < 3:
        raise ValueError("need >= 3 samples")
    ladder = SumLadder(label=f"max |{col}| from {args.path}",
                       samples=tuple((x, by_X[x]) for x in sorted(by_X)))
    return emit(fit_exponent(ladder), args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tmcorr",
        description="Exact Thue-Morse correlation sums, transfer-matrix "
                    "spectra, exponential sums, and class-pair counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, default_format="csv"):
        p.add_argument("--format", choices=("csv", "json"), default=default_format)
        p.add_argument("--out", default=None, help="write output to a file")

    p = sub.add_parser("eps", help="sign, class, and bit count of n")
    p.add_argument("n")
    add_common(p)
    p.set_defaults(func=cmd_eps)

    p = sub.add_parser("corr", help="correlation sums S_q(X, r) over a ladder")
    p.add_argument("q", type=int)
    p.add_argument("shift", help="shift r, or 'all'")
    p.add_argument("ladder")
    p.add_argument("--naive-check", action="store_true",
                   help="cross-validate against the direct loop (X <= 1e5)")
    add_common(p)
    p.set_defaults(func=cmd_corr)

    p = sub.add_parser("eigen", help="transfer-matrix spectrum for odd q")
    p.add_argument("q", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    add_common(p, default_format="json")
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("count", help="class-pair count tables over a ladder")
    p.add_argument("q", type=int)
    p.add_argument("shift", help="shift r, or 'all'")
    p.add_argument("ladder")
    p.add_argument("--extension", action="store_true",
                   help="allow exploratory shifts r >= q (direct loop, "
                        "no main-term claim)")
    add_common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("adjacent", help="adjacent-pair class tables over a ladder")
    p.add_argument("ladder")
    add_common(p)
    p.set_defaults(func=cmd_adjacent)

    p = sub.add_parser("scan", help="max |exponential sum| over a phase grid")
    p.add_argument("X")
    p.add_argument("grid", type=int)
    add_common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("fit", help="log-log exponent fit of a CSV ladder")
    p.add_argument("path")
    add_common(p, default_format="json")
    p.set_defaults(func=cmd_fit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
