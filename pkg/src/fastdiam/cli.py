"""Command-line front end: generate, diameter, oracle, bench, sweep.

Point files are UTF-8 CSV with header ``x,y`` and one ``x,y`` pair per
line, written in full round-trip precision so files regenerate and diff
byte-identically for the same seed.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .bench import run_bench, run_sweep, write_bench_csv, write_sweep_csv
from .generators import DISTRIBUTIONS, DatasetSpec, generate
from .oracle import brute_force_diameter
from .pipeline import diameter


class PointFileError(ValueError):
    """Malformed point file; the message carries the offending line number."""


def write_point_file(path, points) -> None:
    pts = np.asarray(points, dtype=np.float64)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("x,y\n")
        for x, y in pts.tolist():
            fh.write(f"{x!r},{y!r}\n")


def read_point_file(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0].strip() != "x,y":
        raise PointFileError(f"{path}: line 1: expected header 'x,y'")
    xs = []
    ys = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise PointFileError(
                f"{path}: line {lineno}: expected 'x,y', got {line!r}"
            )
        try:
            xs.append(float(parts[0]))
            ys.append(float(parts[1]))
        except ValueError:
            raise PointFileError(
                f"{path}: line {lineno}: not a number pair: {line!r}"
            ) from None
    return np.column_stack([xs, ys]) if xs else np.empty((0, 2))


def _parse_int_list(text: str) -> list[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok:
            out.append(int(float(tok)))  # allow 1e5 style
    return out


def _result_report(result, as_json: bool) -> str:
    if as_json:
        return json.dumps(
            {
                "distance": result.distance,
                "pair": [list(result.pair[0]), list(result.pair[1])],
                "stats": result.stats.__dict__,
                "phase_ms": result.phase_ms,
            }
        )
    (p, q) = result.pair
    s = result.stats
    lines = [
        f"distance: {result.distance!r}",
        f"pair: ({p[0]!r}, {p[1]!r}) -- ({q[0]!r}, {q[1]!r})",
        f"points: {s.n_input} -> initial polygon {s.n_after_initial_polygon}"
        f" -> polar {s.n_after_polar} -> recheck {s.n_after_recheck}",
        f"grid: k={s.k_used}, nonempty cells {s.nonempty_cells},"
        f" pairs {s.pairs_total} -> {s.pairs_surviving}",
    ]
    return "\n".join(lines)


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_generate(args) -> int:
    if not args.out:
        raise ValueError("generate requires --out PATH")
    spec = DatasetSpec(
        distribution=args.dist,
        n=args.n,
        a=args.a,
        b=args.b,
        sigma=args.sigma,
        seed=args.seed,
    )
    write_point_file(args.out, generate(spec))
    return 0


def _cmd_diameter(args) -> int:
    pts = read_point_file(args.path)
    result = diameter(pts, k=args.k)
    _emit(_result_report(result, args.json), args.out)
    return 0


def _cmd_oracle(args) -> int:
    pts = read_point_file(args.path)
    if len(pts) < 2:
        raise ValueError("need at least 2 points")
    dist, pair = brute_force_diameter(pts)
    if args.json:
        text = json.dumps({"distance": dist, "pair": [list(pair[0]), list(pair[1])]})
    else:
        text = f"distance: {dist!r}\npair: {pair[0]!r} -- {pair[1]!r}"
    _emit(text, args.out)
    return 0


def _cmd_bench(args) -> int:
    if not args.out:
        raise ValueError("bench requires --out PATH for the CSV")
    records = run_bench(
        distributions=args.dist,
        sizes=args.sizes,
        repeats=args.repeats,
        seed=args.seed,
        bf_cap=args.bf_cap,
        k=args.k,
    )
    write_bench_csv(records, args.out)
    # soft summary, not part of the CSV contract
    by_n: dict[int, list] = {}
    for r in records:
        by_n.setdefault(r.n, []).append(r)
    for n, recs in sorted(by_n.items()):
        if len(recs) > 1:
            fastest = min(recs, key=lambda r: r.wall_time_ms)
            print(f"n={n}: fastest distribution {fastest.distribution} "
                  f"({fastest.wall_time_ms:.3f} ms)")
    print(f"wrote {len(records)} rows to {args.out}")
    return 0


def _cmd_sweep(args) -> int:
    if not args.out:
        raise ValueError("sweep requires --out PATH for the CSV")
    rows = run_sweep(
        distribution=args.dist,
        n=args.n,
        k_values=args.k_values,
        repeats=args.repeats,
        seed=args.seed,
    )
    write_sweep_csv(rows, args.out)
    best = next(r for r in rows if r.is_best)
    print(f"best k={best.k} at {best.time_ms:.3f} ms; wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="RNG seed (u64)")
    common.add_argument("--json", action="store_true", help="emit JSON where supported")
    common.add_argument("--out", default=None, help="output file path")

    parser = argparse.ArgumentParser(
        prog="fastdiam",
        description="Exact diameter of 2D point sets via polar and grid elimination",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common], help="write a dataset file")
    p.add_argument("--dist", required=True, choices=DISTRIBUTIONS)
    p.add_argument("-n", type=int, required=True, help="number of points")
    p.add_argument("--a", type=float, default=1.0, help="width / semi-major axis")
    p.add_argument("--b", type=float, default=1.0, help="height / semi-minor axis")
    p.add_argument("--sigma", type=float, default=0.2, help="Gaussian spread")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("diameter", parents=[common], help="run the pipeline on a file")
    p.add_argument("path", help="point CSV file")
    p.add_argument("--k", type=int, default=None, help="grid cells per axis")
    p.set_defaults(func=_cmd_diameter)

    p = sub.add_parser("oracle", parents=[common], help="all-pairs reference scan")
    p.add_argument("path", help="point CSV file")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bench", parents=[common], help="timing benchmark to CSV")
    p.add_argument("--dist", type=lambda s: [d.strip() for d in s.split(",")],
                   default=list(DISTRIBUTIONS),
                   help="comma-separated distributions (default: all)")
    p.add_argument("--sizes", type=_parse_int_list, required=True,
                   help="comma-separated point counts, e.g. 1e3,1e4")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--bf-cap", type=int, default=100_000,
                   help="largest n for which the reference scan runs")
    p.add_argument("--k", type=int, default=None, help="fixed grid size")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("sweep", parents=[common], help="grid-size sweep to CSV")
    p.add_argument("--dist", required=True, choices=DISTRIBUTIONS)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--k-values", type=_parse_int_list, required=True,
                   help="comma-separated grid sizes")
    p.add_argument("--repeats", type=int, default=3)
    p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
