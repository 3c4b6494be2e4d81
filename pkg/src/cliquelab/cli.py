"""Command-line driver: ``cliquelab {gen,search,bounds,sort,report}``.

Exit codes: 0 success (or clique found), 1 no clique found, 2 usage or
validation error. Every output carries a ``meta`` header naming the random
generator and seed, and is byte-identical across re-runs with the same flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from . import __version__
from .bitgraph import NetworkError, format_net, paper_example, read_net
from .bounds import (
    CENSUS_FREE_CELL_LIMIT,
    CHECK_COLUMNS,
    CSV_COLUMNS,
    FLOAT_NOTE,
    binomial,
    bound_report,
    census_brute_force,
    census_formula,
    h,
    phi,
    sort_bound_estimate,
    sort_lower_bound,
)
from .cliquesearch import RNG_NAME, NodeSet, PlantSpec, findings_dict, plant_clique, search_all, search_first
from .sorters import ALGORITHMS, SCAN_LIMIT, worst_case_input, worst_case_scan

SEARCH_LIMIT = 10**7
COMPARISON_CONVENTION = "every evaluation of b < a counts once, including pass-termination probes"


class UsageError(Exception):
    pass


# -- output helpers ------------------------------------------------------------

def _meta(args: argparse.Namespace) -> dict:
    return {
        "tool": "cliquelab",
        "version": __version__,
        "command": args.command,
        "rng": RNG_NAME,
        "seed": args.seed,
        "word_width": args.word_width,
        "strict_mode": args.strict,
        "comparison_convention": COMPARISON_CONVENTION,
    }


def dump_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def dump_csv(meta: dict, columns: Sequence[str], rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    buf.write("# " + " ".join(f"{k}={v}" for k, v in meta.items() if k != "comparison_convention") + "\n")
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _json_only(args: argparse.Namespace) -> None:
    if args.format != "json":
        raise UsageError(f"{args.command} only emits json")


def parse_range(text: str) -> tuple[int, int]:
    """``"4"`` or ``"2..16"`` (inclusive)."""
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise UsageError(f"bad range {text!r}; use N or LO..HI")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    return lo, hi


def _parse_members(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad member list {text!r}; use comma-separated node numbers") from None


# -- subcommands ---------------------------------------------------------------

def cmd_gen(args: argparse.Namespace) -> int:
    if args.paper_example:
        net = paper_example()
        echo = "six-node example network, order 6"
    else:
        if args.n is None:
            raise UsageError("gen needs --n (or --paper-example)")
        n = args.n
        if args.clique:
            members = _parse_members(args.clique)
        else:
            q = args.q if args.q is not None else max(1, n // 2)
            members = list(range(n - q + 1, n + 1))
        spec = PlantSpec(n, NodeSet.of(members, n), args.p, args.seed)
        net = plant_clique(spec)
        echo = (f"order={n} clique={','.join(map(str, spec.members.members))} "
                f"p={spec.density!r} seed={spec.seed} rng={RNG_NAME}")
    print(f"gen: {echo}", file=sys.stderr)
    _emit(args, format_net(net, flat=args.flat))
    return 0


def _load_network(args: argparse.Namespace):
    if args.paper_example:
        return paper_example()
    if not args.network:
        raise UsageError("search needs a network file (or --paper-example)")
    return read_net(args.network)


def cmd_search(args: argparse.Namespace) -> int:
    _json_only(args)
    net = _load_network(args)
    q = args.q
    if not 1 <= q <= net.order:
        raise UsageError(f"q={q} outside [1, {net.order}]")
    if args.first:
        witness, tally = search_first(net, q, word_width=args.word_width, strict=args.strict)
        found = [witness] if witness is not None else []
    else:
        candidates = binomial(net.order, q)
        if candidates > SEARCH_LIMIT:
            raise UsageError(f"exhaustive search over {candidates} candidates refused; limit is {SEARCH_LIMIT}")
        found, tally = search_all(net, q, word_width=args.word_width, strict=args.strict, workers=args.workers)
    doc = {"meta": _meta(args), "mode": "first" if args.first else "all"}
    doc.update(findings_dict(net.order, q, found, tally))
    _emit(args, dump_json(doc))
    return 0 if found else 1


def cmd_bounds(args: argparse.Namespace) -> int:
    lo, hi = parse_range(args.n)
    report = bound_report(lo, hi)
    records = report.records()
    columns = list(records[0]) if records else []
    if args.census:
        for row, rec in zip(report.rows, records):
            if row.n % 2:
                rec.update(census_formula="", census_brute="", census_match="skipped")
                continue
            rec["census_formula"] = str(census_formula(row.n))
            try:
                brute = census_brute_force(row.n)
            except ValueError:
                rec["census_brute"] = ""
                rec["census_match"] = f"refused (limit {CENSUS_FREE_CELL_LIMIT} free cells)"
                continue
            rec["census_brute"] = str(brute)
            rec["census_match"] = "match" if brute == census_formula(row.n) else "mismatch"
        if records:
            columns += ["census_formula", "census_brute", "census_match"]
    meta = _meta(args)
    if args.format == "csv":
        cols = columns or list(CSV_COLUMNS + CHECK_COLUMNS)
        _emit(args, dump_csv(meta, cols, records))
    else:
        _emit(args, dump_json({"meta": meta, "precision_note": FLOAT_NOTE, "rows": records}))
    return 0


_INPUT_RE = re.compile(r"(descending|random|perm):?(\d+)(?::seed=(\d+))?")


def _sort_input(spec: str, default_seed: int) -> tuple[str, list[int]]:
    m = _INPUT_RE.fullmatch(spec)
    if m:
        kind, n, seed = m.group(1), int(m.group(2)), m.group(3)
        seed = default_seed if seed is None else int(seed)
        if kind == "descending":
            return f"descending:{n}", worst_case_input(n)
        rng = np.random.Generator(np.random.PCG64(seed))
        if kind == "perm":
            return f"perm:{n}:seed={seed}", rng.permutation(n).tolist()
        return f"random:{n}:seed={seed}", rng.integers(0, 2 * n + 1, size=n).tolist()
    path = spec[5:] if spec.startswith("file:") else spec
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read input {spec!r}: {exc.strerror}") from None
    try:
        values = [int(tok) for tok in re.split(r"[\s,]+", text.strip()) if tok]
    except ValueError:
        raise UsageError(f"input file {path} must hold integers") from None
    return f"file:{path}", values


def cmd_sort(args: argparse.Namespace) -> int:
    _json_only(args)
    if args.alg not in ALGORITHMS:
        raise UsageError(f"unknown algorithm {args.alg!r}; choose from {', '.join(ALGORITHMS)}")
    sort = ALGORITHMS[args.alg]
    doc: dict = {"meta": _meta(args), "algorithm": args.alg}
    if args.all_perms is not None:
        n = args.all_perms
        if n > SCAN_LIMIT:
            raise UsageError(f"all-perms refused for n={n}; limit is {SCAN_LIMIT}")
        best, witness = worst_case_scan(args.alg, n, workers=args.workers)
        doc.update(n=n, input_kind="all-perms", max_comparisons=best, witness=witness)
        values = witness
    else:
        if not args.input:
            raise UsageError("sort needs --input or --all-perms")
        kind, values = _sort_input(args.input, args.seed)
        doc.update(n=len(values), input_kind=kind)
    if args.alg == "radix":
        out, tally = sort(values, args.w)
    else:
        out, tally = sort(values)
    n = doc["n"]
    doc["tally"] = tally.to_dict()
    doc["sorted"] = out == sorted(values)
    doc["bound_lb"] = sort_lower_bound(n) if n >= 1 else 0
    doc["bound_est"] = sort_bound_estimate(n) if n >= 1 else None
    _emit(args, dump_json(doc))
    return 0


REPORT_COLUMNS = ("n", "q", "predicted", "measured", "word_ops", "match", "h", "phi_num", "phi_den")


def cmd_report(args: argparse.Namespace) -> int:
    lo, hi = parse_range(args.n)
    rows = []
    for n in range(max(lo, 1), hi + 1):
        q = max(1, n // 2) if args.q == "half" else int(args.q)
        if not 1 <= q <= n:
            raise UsageError(f"q={q} outside [1, {n}] at n={n}")
        predicted = binomial(n, q)
        if predicted > SEARCH_LIMIT:
            raise UsageError(f"n={n}, q={q} needs {predicted} candidates; exhaustive search limit is {SEARCH_LIMIT}")
        spec = PlantSpec(n, NodeSet.of(range(n - q + 1, n + 1), n), args.p, args.seed)
        _, tally = search_all(plant_clique(spec), q, word_width=args.word_width,
                              strict=args.strict, workers=args.workers)
        even = n % 2 == 0
        rows.append({
            "n": str(n),
            "q": str(q),
            "predicted": str(predicted),
            "measured": str(tally.subnetwork_comparisons),
            "word_ops": str(tally.word_ops),
            "match": "pass" if predicted == tally.subnetwork_comparisons else "fail",
            "h": str(h(n)) if even else "",
            "phi_num": str(phi(n).numerator) if even else "",
            "phi_den": str(phi(n).denominator) if even else "",
        })
    meta = _meta(args)
    meta["density"] = args.p
    if args.format == "csv":
        _emit(args, dump_csv(meta, REPORT_COLUMNS, rows))
    else:
        _emit(args, dump_json({"meta": meta, "columns": list(REPORT_COLUMNS), "rows": rows}))
    return 0


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default="", help="Write output here instead of stdout.")
    common.add_argument("--format", choices=["json", "csv"], default="json")
    common.add_argument("--seed", type=int, default=0, help="Generator seed (default 0).")
    common.add_argument("--word-width", type=int, default=64, help="Bits per counted word operation.")
    common.add_argument("--strict", action="store_true", help="Disable equality early exit.")
    common.add_argument("--workers", type=int, default=1, help="Worker processes for searches and scans.")

    parser = argparse.ArgumentParser(prog="cliquelab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="Write a planted-clique network.")
    p.add_argument("--n", type=int)
    p.add_argument("--clique", default="", help="Comma-separated clique members, e.g. 5,6,7,8.")
    p.add_argument("--q", type=int, help="Clique on the last q nodes (default n/2).")
    p.add_argument("--p", type=float, default=0.0, help="Background edge density.")
    p.add_argument("--paper-example", action="store_true", help="Emit the six-node example network.")
    p.add_argument("--flat", action="store_true", help="Write the single-line flat form.")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("search", parents=[common], help="Search a network for q-cliques.")
    p.add_argument("network", nargs="?", help=".net file")
    p.add_argument("--paper-example", action="store_true")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--first", action="store_true", help="Stop at the first clique found.")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", parents=[common], help="Tabulate bound functions over an n range.")
    p.add_argument("--n", default="2..16", help="N or LO..HI")
    p.add_argument("--census", action="store_true", help="Add census formula vs brute-force columns.")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sort", parents=[common], help="Run an instrumented sort.")
    p.add_argument("--alg", required=True, help=", ".join(ALGORITHMS))
    p.add_argument("--input", help="descending:N | random:N[:seed=S] | permN[:seed=S] | [file:]PATH")
    p.add_argument("--all-perms", type=int, metavar="N", help="Scan all permutations of 1..N.")
    p.add_argument("--w", type=int, help="Radix bit width (default: bit length of the maximum).")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("report", parents=[common], help="Predicted vs measured comparison counts.")
    p.add_argument("--n", default="4..12", help="N or LO..HI")
    p.add_argument("--q", default="half", help="'half' or a fixed clique size")
    p.add_argument("--p", type=float, default=0.5, help="Background density of the searched networks.")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    if args.word_width < 1:
        parser.error("--word-width must be positive")
    try:
        return args.func(args)
    except (UsageError, NetworkError, ValueError, OSError) as exc:
        print(f"cliquelab {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
