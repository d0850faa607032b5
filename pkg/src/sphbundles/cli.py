"""Command line front end.

    sphbundles classify --k 2 --n 12 [--format text|json|csv] [--unicode]
    sphbundles verify --k all --n 2..50 [--jobs 8]
    sphbundles table --k 4 --n 2..32 [--format csv]

Exit status: 0 on success, 1 when brute force and closed form disagree,
2 on bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

from .classify import (
    DEFAULT_RANGES,
    ClassificationMismatch,
    brute_force_classify,
    invariants,
    representatives_symbolic,
    theorem_branch,
    to_unicode,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

TABLE_COLUMNS = ("k", "n", "branch", "star", "rho3", "rho5", "rho7", "rho9", "G")


@dataclass(frozen=True)
class OutputRecord:
    k: int
    n: int
    branch: str
    G: int
    representatives: tuple[str, ...]
    timing: Optional[float] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["representatives"] = list(self.representatives)
        if self.timing is None:
            del d["timing"]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> OutputRecord:
        return cls(
            k=int(d["k"]),
            n=int(d["n"]),
            branch=d["branch"],
            G=int(d["G"]),
            representatives=tuple(d["representatives"]),
            timing=d.get("timing"),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_json(cls, text: str) -> OutputRecord:
        return cls.from_dict(json.loads(text))


def parse_range(text: str) -> range:
    """``"2..500"`` (inclusive) or a single integer."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected A..B") from None
    if a < 2 or b < a:
        raise argparse.ArgumentTypeError(f"bad range {text!r}: need 2 <= A <= B")
    return range(a, b + 1)


def parse_ks(text: str) -> list[int]:
    if text == "all":
        return list(DEFAULT_RANGES)
    try:
        ks = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k list {text!r}") from None
    for k in ks:
        if k not in DEFAULT_RANGES:
            raise argparse.ArgumentTypeError(f"k must be in 2..6, got {k}")
    return ks


def default_range(k: int) -> range:
    """Default n range for ``k``; ``SPHBUNDLES_N_RANGE_K<k>`` overrides it."""
    env = os.environ.get(f"SPHBUNDLES_N_RANGE_K{k}")
    return parse_range(env) if env else DEFAULT_RANGES[k]


def _label(branch, unicode):
    return to_unicode(branch) if unicode else branch


def _render_classify(rec: OutputRecord, result, fmt: str) -> str:
    if fmt == "json":
        return rec.to_json() + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(("k", "n", "branch", "G", "representative"))
        for rep in rec.representatives:
            w.writerow((rec.k, rec.n, rec.branch, rec.G, rep))
        return buf.getvalue()
    lines = [
        f"k = {rec.k}, n = {rec.n}",
        f"branch: {rec.branch}",
        f"G = {rec.G}  (closed form {result.closed_form_G}, brute force {result.brute_force_G})",
        "representatives:",
    ]
    lines += [f"  {i:>3}. {rep}" for i, rep in enumerate(rec.representatives, 1)]
    if rec.timing is not None:
        lines.append(f"time: {rec.timing:.3f}s")
    return "\n".join(lines) + "\n"


def cmd_classify(args, out) -> int:
    start = time.perf_counter()
    result = brute_force_classify(args.k, args.n)
    elapsed = time.perf_counter() - start
    rec = OutputRecord(
        k=args.k,
        n=args.n,
        branch=_label(result.branch, args.unicode),
        G=result.brute_force_G,
        representatives=tuple(representatives_symbolic(result, args.unicode)),
        timing=round(elapsed, 6) if args.timing else None,
    )
    out.write(_render_classify(rec, result, args.format))
    if not result.ok:
        sys.stderr.write(str(ClassificationMismatch(result)) + "\n")
        return EXIT_MISMATCH
    return EXIT_OK


def _verify_one(kn):
    k, n = kn
    result = brute_force_classify(k, n)
    report = "" if result.ok else str(ClassificationMismatch(result))
    return k, n, result.closed_form_G, result.brute_force_G, report


def run_grid(grid: Sequence[tuple[int, int]], jobs: int = 1) -> list[tuple]:
    """Cross-validate every (k, n); results come back in grid order."""
    if jobs <= 1:
        return [_verify_one(kn) for kn in grid]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_verify_one, grid, chunksize=8))


def cmd_verify(args, out) -> int:
    ks = args.k
    grid = [(k, n) for k in ks for n in (args.n or default_range(k))]
    results = run_grid(grid, args.jobs)
    failures = [r for r in results if r[2] != r[3]]
    if args.format == "json":
        summary = {
            "per_k": {
                str(k): {
                    "pass": sum(1 for r in results if r[0] == k and r[2] == r[3]),
                    "fail": sum(1 for r in results if r[0] == k and r[2] != r[3]),
                }
                for k in ks
            },
            "failures": [
                {"k": k, "n": n, "closed_form": c, "brute_force": b, "report": rep}
                for k, n, c, b, rep in failures
            ],
        }
        out.write(json.dumps(summary, indent=2) + "\n")
    else:
        for k in ks:
            rows = [r for r in results if r[0] == k]
            bad = sum(1 for r in rows if r[2] != r[3])
            ns = [r[1] for r in rows]
            span = f"n={min(ns)}..{max(ns)}" if ns else "no n"
            out.write(f"k={k}: {len(rows) - bad} pass / {bad} fail ({span})\n")
        if len(ks) > 1:
            out.write(f"total: {len(results) - len(failures)} pass / {len(failures)} fail\n")
        for *_, report in failures:
            out.write(report + "\n")
    return EXIT_MISMATCH if failures else EXIT_OK


def table_rows(k: int, ns: range) -> list[dict]:
    rows = []
    for n in ns:
        branch, G = theorem_branch(k, n)
        v = invariants(n)
        rows.append(
            dict(k=k, n=n, branch=branch, star=int(v.star), rho3=v.rho3,
                 rho5=v.rho5, rho7=v.rho7, rho9=v.rho9, G=G)
        )
    return rows


def cmd_table(args, out) -> int:
    rows = table_rows(args.k, args.n or default_range(args.k))
    for row in rows:
        row["branch"] = _label(row["branch"], args.unicode)
    if args.format == "json":
        out.write(json.dumps(rows, ensure_ascii=False, indent=2) + "\n")
    elif args.format == "csv":
        w = csv.DictWriter(out, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        cells = [TABLE_COLUMNS] + [tuple(str(row[c]) for c in TABLE_COLUMNS) for row in rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(TABLE_COLUMNS))]
        for r in cells:
            out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sphbundles",
        description="Homotopy types of S^(2k-1)-fibrations over S^(2k), 2 <= k <= 6.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats):
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--out", help="write output to this file instead of stdout")

    c = sub.add_parser("classify", help="classify one (k, n)")
    c.add_argument("--k", type=int, choices=range(2, 7), required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--unicode", action="store_true", help="use the original glyphs")
    c.add_argument("--timing", action="store_true", help="include wall-clock time")
    common(c, ("text", "json", "csv"))
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="cross-validate a grid of (k, n)")
    v.add_argument("--k", type=parse_ks, default=parse_ks("all"), help="'all' or e.g. 2,3")
    v.add_argument("--n", type=parse_range, help="A..B; default depends on k")
    v.add_argument("--jobs", type=int, default=1)
    common(v, ("text", "json"))
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="closed-form counts for a range of n")
    t.add_argument("--k", type=int, choices=range(2, 7), required=True)
    t.add_argument("--n", type=parse_range)
    t.add_argument("--unicode", action="store_true")
    common(t, ("text", "json", "csv"))
    t.set_defaults(func=cmd_table)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "classify" and args.n < 2:
        parser.error("--n must be at least 2")
    if args.command == "verify" and args.jobs < 1:
        parser.error("--jobs must be positive")
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            return args.func(args, fh)
    return args.func(args, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
