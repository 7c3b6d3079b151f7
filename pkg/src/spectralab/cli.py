"""Command-line front end: ``spectralab <command> [options]``.

Exit codes: 0 completed with no violations, 1 completed with violations,
2 usage or configuration error, 3 budget exhaustion or I/O failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import conjectures
from .errors import BudgetExceeded, InfeasibleSeed, InvalidParameters, MalformedInput, NotConnected, SpectralabError
from .families import generate
from .graph import Graph, from_graph6, is_connected

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE, EXIT_FAILURE = 0, 1, 2, 3

log = logging.getLogger("spectralab")


class UsageError(Exception):
    pass


def _add_source(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("graph source")
    g.add_argument("--enum", metavar="N|A-B", help="all graphs on N (or A..B) vertices, N <= 9")
    g.add_argument("--g6", metavar="PATH", help="graph6 file, one graph per line")
    g.add_argument("--trees", metavar="N|A-B", help="all free trees on N (or A..B) vertices, N <= 20")
    g.add_argument("--family", metavar="SPEC", help='family sweep such as "doublekite(2..4,3)"')
    g.add_argument("--connected", action="store_true", default=None, help="keep connected graphs only")
    g.add_argument("--max-degree", type=int, help="keep graphs with maximum degree at most this")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", metavar="FILE", help="key=value file; command-line flags take precedence")
    p.add_argument("--out", metavar="PATH", help="write the JSON result here")
    p.add_argument("--workers", type=int, help="worker processes (default: available CPUs)")
    p.add_argument("--budget", type=int, help="node budget for exponential searches")
    p.add_argument("--seed", type=int, help="random seed")
    p.add_argument("-v", "--verbose", action="store_true", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spectralab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check conjectures on every graph of a source")
    _add_source(p)
    _add_common(p)
    p.add_argument("--conj", default=None, help='comma list of ids (params after ":"), or "all"')
    p.add_argument("--csv", metavar="PATH", help="write a CSV summary here")
    p.add_argument("--tol", type=float, help="predicate tolerance")

    p = sub.add_parser("extremal", help="optimise a spectral objective under constraints")
    _add_source(p)
    _add_common(p)
    p.add_argument("--objective", help="objective name")
    p.add_argument("--direction", choices=("max", "min"))
    p.add_argument("--constraints", help='e.g. "connected,planar,maxdeg=3"')
    p.add_argument("--method", choices=("exhaustive", "local"))
    p.add_argument("--n", type=int, help="order for local search")
    p.add_argument("--restarts", type=int)
    p.add_argument("--steps", type=int)

    p = sub.add_parser("invariants", help="print invariants of one graph")
    _add_common(p)
    p.add_argument("--family", metavar="SPEC")
    p.add_argument("--graph6", metavar="CODE")

    p = sub.add_parser("generate", help="write graph6 lines for a source")
    _add_source(p)
    _add_common(p)

    p = sub.add_parser("hypercube", help="max lambda_1 of induced subgraphs of Q_d on m vertices")
    _add_common(p)
    p.add_argument("--d", type=int)
    p.add_argument("--m", help="m or a range A-B")

    p = sub.add_parser("signed-min", help="signature minimising the signed spectral radius")
    _add_common(p)
    p.add_argument("--family", metavar="SPEC")
    p.add_argument("--graph6", metavar="CODE")

    p = sub.add_parser("catalog", help="list registered conjectures")
    _add_common(p)
    p.add_argument("--json", action="store_true", default=None)
    return parser


def read_config(path: str) -> dict[str, str]:
    """Flat ``key=value`` lines; ``#`` starts a comment."""
    out = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, eq, value = line.partition("=")
        if not eq:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


_BOOL_KEYS = {"connected", "verbose", "json"}
_INT_KEYS = {"workers", "budget", "seed", "max_degree", "n", "restarts", "steps", "d"}
_FLOAT_KEYS = {"tol"}


def _merge_config(args: argparse.Namespace) -> argparse.Namespace:
    if not getattr(args, "config", None):
        return args
    for key, raw in read_config(args.config).items():
        if not hasattr(args, key):
            raise UsageError(f"unknown config key {key!r} for command {args.command}")
        if getattr(args, key) is not None:
            continue
        try:
            if key in _BOOL_KEYS:
                value = raw.lower() in ("1", "true", "yes", "on")
            elif key in _INT_KEYS:
                value = int(raw)
            elif key in _FLOAT_KEYS:
                value = float(raw)
            else:
                value = raw
        except ValueError:
            raise UsageError(f"config key {key!r} has a bad value {raw!r}") from None
        setattr(args, key, value)
    return args


def _source(args):
    from .search.sources import enum_source, family_source, graph6_source, tree_source

    chosen = [k for k in ("enum", "g6", "trees", "family") if getattr(args, k, None)]
    if len(chosen) != 1:
        raise UsageError("choose exactly one of --enum, --g6, --trees, --family")
    connected = bool(args.connected)
    if args.enum:
        return enum_source(args.enum, connected, args.max_degree)
    if args.g6:
        if not Path(args.g6).exists():
            raise FileNotFoundError(f"no such graph6 file: {args.g6}")
        return graph6_source(args.g6, connected, args.max_degree)
    if args.trees:
        return tree_source(args.trees)
    return family_source(args.family, connected)


def _single_graph(args) -> Graph:
    if bool(args.family) == bool(args.graph6):
        raise UsageError("give exactly one of --family or --graph6")
    return generate(args.family) if args.family else from_graph6(args.graph6)


def _workers(args) -> int:
    return args.workers if args.workers else (os.cpu_count() or 1)


def _write(path: str | None, text: str) -> None:
    if path:
        Path(path).write_text(text)


def cmd_verify(args) -> int:
    from .search.verify import parse_conjecture_list, verify

    try:
        specs = parse_conjecture_list(args.conj or "all")
    except InvalidParameters as exc:
        raise UsageError(f"{exc}\nrun 'spectralab catalog' for the list of ids") from None
    source = _source(args)
    kwargs = {"tol": args.tol} if args.tol is not None else {}
    report = verify(source, specs, workers=_workers(args), **kwargs)
    _write(args.out, report.to_json() + "\n")
    _write(args.csv, report.to_csv())
    print(f"source: {report.source}  graphs: {report.graph_count}")
    for t in report.tallies:
        ms = "-" if t.min_slack is None else f"{t.min_slack:.6g}"
        print(f"{t.key:32s} holds={t.holds:<8d} violated={t.violated:<6d} na={t.na:<8d} min_slack={ms}")
    if report.total_violations:
        target = Path(args.out).with_suffix(".counterexamples.g6") if args.out else Path("counterexamples.g6")
        lines = sorted({f"{w}\t{t.key}" for t in report.tallies for w in (v["graph6"] for v in t.violations)})
        target.write_text("".join(line + "\n" for line in lines))
        print(f"violations found; counterexamples written to {target}")
        return EXIT_VIOLATIONS
    return EXIT_OK


def cmd_extremal(args) -> int:
    from .search.extremal import exhaustive, local_search

    if not args.objective:
        raise UsageError("--objective is required")
    method = args.method or "exhaustive"
    if method == "exhaustive":
        res = exhaustive(_source(args), args.objective, args.direction, args.constraints, workers=_workers(args))
    else:
        if not args.n:
            raise UsageError("local search needs --n")
        res = local_search(
            args.n, args.objective, args.direction, args.constraints,
            restarts=args.restarts or 32, steps=args.steps or 2000,
            seed=0 if args.seed is None else args.seed, workers=_workers(args),
        )
    _write(args.out, json.dumps(res.to_dict(), indent=2) + "\n")
    print(f"{res.direction} {res.objective} = {res.best_value!r}")
    for code in res.args:
        print(code)
    return EXIT_OK


def cmd_invariants(args) -> int:
    from .spectra import eigenvalue_array, summary
    from .invariants import chromatic_number, clique_number, independence_number

    g = _single_graph(args)
    s = summary(g)
    vals = eigenvalue_array(g)
    data = {
        "graph6": g.to_graph6(), "n": g.n, "m": g.m,
        "lambda1": float(vals[0]) if g.n else None,
        "gap": float(vals[0] - vals[1]) if g.n >= 2 else None,
        "energy": s.energy, "s_plus": s.s_plus, "s_minus": s.s_minus,
        "inertia": [s.n_plus, s.n_zero, s.n_minus], "hl_index": s.hl_index,
        "omega": clique_number(g), "alpha": independence_number(g), "chi": chromatic_number(g),
        "connected": is_connected(g),
    }
    for k, v in data.items():
        print(f"{k}={v}")
    _write(args.out, json.dumps(data, indent=2) + "\n")
    return EXIT_OK


def cmd_generate(args) -> int:
    from .search.sources import iter_graphs

    lines = [g.to_graph6() + "\n" for g in iter_graphs(_source(args))]
    if args.out:
        _write(args.out, "".join(lines))
    else:
        sys.stdout.writelines(lines)
    return EXIT_OK


def cmd_hypercube(args) -> int:
    from .search.hypercube import hypercube_lambda
    from .search.sources import parse_range

    if args.d is None or args.m is None:
        raise UsageError("--d and --m are required")
    lo, hi = parse_range(args.m)
    rows = []
    for m in range(lo, hi + 1):
        r = hypercube_lambda(args.d, m, seed=0 if args.seed is None else args.seed)
        rows.append({"d": r.d, "m": r.m, "lambda": r.lam, "witness": list(r.witness),
                     "boundary": r.boundary, "boundary_bound": r.boundary_bound, "exact": r.exact})
        print(f"d={r.d} m={r.m} lambda={r.lam:.12g} boundary={r.boundary} exact={r.exact} U={list(r.witness)}")
    _write(args.out, json.dumps(rows, indent=2) + "\n")
    return EXIT_OK


def cmd_signed_min(args) -> int:
    from .signed import format_signed, min_signature_radius

    g = _single_graph(args)
    res = min_signature_radius(g)
    data = {
        "graph6": g.to_graph6(), "rho_min": res.rho_min, "rho_witness": format_signed(res.rho_witness),
        "lambda1_min": res.lambda1_min, "lambda1_witness": format_signed(res.lambda1_witness),
        "classes": res.classes, "degree_bound": res.degree_bound,
    }
    for k, v in data.items():
        print(f"{k}={v}")
    _write(args.out, json.dumps(data, indent=2) + "\n")
    return EXIT_OK


def cmd_catalog(args) -> int:
    infos = conjectures.catalog()
    if args.json:
        print(json.dumps([info.__dict__ for info in infos], indent=2, default=list))
    else:
        for info in infos:
            params = ", ".join(f"{k}={v}" for k, v in info.params.items())
            print(f"{info.id:26s} {info.topic:17s} {info.statement}" + (f"  [{params}]" if params else ""))
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify, "extremal": cmd_extremal, "invariants": cmd_invariants,
    "generate": cmd_generate, "hypercube": cmd_hypercube, "signed-min": cmd_signed_min,
    "catalog": cmd_catalog,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        args = _merge_config(args)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
        if args.budget is not None:
            os.environ["SPECTRALAB_BUDGET"] = str(args.budget)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"spectralab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidParameters, InfeasibleSeed, NotConnected) as exc:
        print(f"spectralab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, OSError, MalformedInput) as exc:
        print(f"spectralab: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except SpectralabError as exc:
        print(f"spectralab: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
