"""Command line front end.

Subcommands: stats, match, exact, verify, gen, fuzz.  Input files are
edge-list or DIMACS ("-" reads standard input); all results go to standard
output (one JSON object with --json), diagnostics to standard error.

Exit codes are a stable contract: 0 success, 1 guarantee or verification
violation, 2 input error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import ceil
from typing import Optional

from .generators import (
    SplitMix64,
    gen_c5_blowup,
    gen_extremal_cubic,
    gen_k33plus,
    gen_odd_regular_extremal,
    gen_random_bounded_degree,
    gen_random_cubic,
    gen_random_forest,
    gen_random_girth6,
    gen_random_subcubic,
)
from .graph import (
    Graph,
    GraphError,
    connected_components,
    count_invariants,
    parse_graph,
    verify_induced_matching,
    write_edge_list,
)
from .greedy import (
    forest_greedy_induced_matching,
    girth6_induced_matching,
    greedy_induced_matching,
)
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    exact_strong_matching_number,
)
from .reduction import (
    LedgerViolationError,
    find_induced_matching_subcubic,
    format_trace,
    ledger_check,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise _CliError(EXIT_INPUT, f"cannot read {path}: {e}") from None


def _load_graph(path: str, fmt: str) -> Graph:
    try:
        return parse_graph(_read_text(path), fmt)
    except GraphError as e:
        raise _CliError(EXIT_INPUT, f"{path}: {e}") from None


def _girth_repr(gi: Optional[int]):
    return "acyclic" if gi is None else gi


def _edges_text(edges) -> str:
    return ",".join(f"{u}-{v}" for u, v in edges)


def _edges_json(edges) -> list[list[int]]:
    return [[u, v] for u, v in edges]


def _emit(lines: list[str]) -> None:
    sys.stdout.write("\n".join(lines) + "\n" if lines else "")


# -- stats ------------------------------------------------------------------


def cmd_stats(args) -> int:
    g = _load_graph(args.input, args.format)
    rep = count_invariants(g)
    components = len(connected_components(g))
    if args.json:
        obj = {
            "n": rep.n,
            "m": rep.m,
            "i": rep.isolated,
            "n33plus": rep.n33plus,
            "max_degree": rep.max_degree,
            "min_degree": g.min_degree(),
            "girth": _girth_repr(rep.girth),
            "components": components,
        }
        print(json.dumps(obj))
    else:
        _emit([
            f"n={rep.n}",
            f"m={rep.m}",
            f"i={rep.isolated}",
            f"n33plus={rep.n33plus}",
            f"max_degree={rep.max_degree}",
            f"min_degree={g.min_degree()}",
            f"girth={_girth_repr(rep.girth)}",
            f"components={components}",
        ])
    return EXIT_OK


# -- match ------------------------------------------------------------------


def cmd_match(args) -> int:
    g = _load_graph(args.input, args.format)
    rep = count_invariants(g)
    trace = None
    try:
        if args.method == "reduction":
            matching, trace = find_induced_matching_subcubic(g)
            bound = rep.thm2_bound
        elif args.method == "greedy":
            matching = greedy_induced_matching(g)
            bound = ceil(rep.greedy_general_bound)
        elif args.method == "forest":
            matching = forest_greedy_induced_matching(g)
            bound = ceil(rep.greedy_forest_bound)
        else:
            matching = girth6_induced_matching(g)
            bound = rep.prop1_bound
    except GraphError as e:
        raise _CliError(EXIT_INPUT, str(e)) from None
    witness = verify_induced_matching(g, matching)
    verified = witness is None
    ok = verified and len(matching) >= bound
    if trace is not None and not ledger_check(trace).ok:
        ok = False
    if args.json:
        obj = {
            "n": rep.n,
            "m": rep.m,
            "i": rep.isolated,
            "n33plus": rep.n33plus,
            "girth": _girth_repr(rep.girth),
            "bound_thm1": rep.thm1_bound,
            "bound_thm2": rep.thm2_bound,
            "bound_prop1": rep.prop1_bound,
            "bound": bound,
            "matching": _edges_json(matching),
            "size": len(matching),
            "verified": verified,
        }
        if args.trace:
            obj["trace"] = (
                None
                if trace is None
                else [
                    {
                        "rule": s.rule,
                        "removed": list(s.removed),
                        "added": _edges_json(s.added),
                        "isolated": s.isolated_created,
                    }
                    for s in trace.steps
                ]
            )
        print(json.dumps(obj))
    else:
        lines = []
        if args.trace and trace is not None:
            lines.extend(format_trace(trace).splitlines())
        lines.extend([
            f"matching={_edges_text(matching)}",
            f"size={len(matching)}",
            f"bound={bound}",
            f"verified={str(verified).lower()}",
        ])
        _emit(lines)
    if not ok:
        print("guarantee or verification failure", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


# -- exact ------------------------------------------------------------------


def cmd_exact(args) -> int:
    g = _load_graph(args.input, args.format)
    try:
        value, witness = exact_strong_matching_number(g, args.budget)
    except GraphError as e:
        raise _CliError(EXIT_INPUT, str(e)) from None
    verified = verify_induced_matching(g, witness) is None and len(witness) == value
    if args.json:
        obj = {
            "n": g.n,
            "m": g.m,
            "size": value,
            "matching": _edges_json(witness),
            "verified": verified,
        }
        print(json.dumps(obj))
    else:
        _emit([
            f"size={value}",
            f"matching={_edges_text(witness)}",
            f"verified={str(verified).lower()}",
        ])
    return EXIT_OK if verified else EXIT_VIOLATION


# -- verify -----------------------------------------------------------------


def cmd_verify(args) -> int:
    g = _load_graph(args.input, args.format)
    mg = _load_graph(args.matching, "edge-list")
    try:
        witness = verify_induced_matching(g, mg.edges)
    except GraphError as e:
        raise _CliError(EXIT_INPUT, str(e)) from None
    if args.json:
        obj = {
            "verified": witness is None,
            "witness": None if witness is None else list(witness),
        }
        print(json.dumps(obj))
    else:
        if witness is None:
            print("valid")
        else:
            print(f"invalid witness={witness[0]},{witness[1]}")
    return EXIT_OK if witness is None else EXIT_VIOLATION


# -- gen --------------------------------------------------------------------


def cmd_gen(args) -> int:
    name = args.name
    seed = args.seed
    try:
        if name == "k33plus":
            g, comments = gen_k33plus(), [f"gen={name}"]
        elif name == "extremal-cubic":
            g, comments = gen_extremal_cubic(), [f"gen={name}"]
        elif name == "c5-blowup":
            if args.delta is None:
                raise _CliError(EXIT_INPUT, f"{name} requires --delta")
            g, comments = gen_c5_blowup(args.delta), [
                f"gen={name} delta={args.delta}"
            ]
        elif name == "odd-regular":
            if args.delta is None:
                raise _CliError(EXIT_INPUT, f"{name} requires --delta")
            g, extra = gen_odd_regular_extremal(args.delta)
            comments = [f"gen={name} delta={args.delta}", *extra]
        elif name == "random-subcubic":
            target = args.target_m if args.target_m is not None else (3 * args.n) // 2
            g = gen_random_subcubic(args.n, target, seed)
            comments = [f"gen={name} n={args.n} target_m={target} seed={seed}"]
        elif name == "random-cubic":
            g = gen_random_cubic(args.n, seed)
            comments = [f"gen={name} n={args.n} seed={seed}"]
        elif name == "random-girth6":
            g = gen_random_girth6(args.n, args.max_degree, seed)
            comments = [
                f"gen={name} n={args.n} max_degree={args.max_degree} seed={seed}"
            ]
        else:
            g = gen_random_forest(args.n, seed)
            comments = [f"gen={name} n={args.n} seed={seed}"]
    except GraphError as e:
        raise _CliError(EXIT_INPUT, str(e)) from None
    sys.stdout.write(write_edge_list(g, comments))
    return EXIT_OK


# -- fuzz -------------------------------------------------------------------

ORACLE_FUZZ_EDGE_CAP = 25


def _fuzz_instance(family: str, size: int, instance_seed: int) -> list[str]:
    """Build one instance, run the applicable algorithms, return failures."""
    rng = SplitMix64(instance_seed)
    problems: list[str] = []
    if family == "subcubic":
        target = rng.below(3 * size // 2 + 1)
        g = gen_random_subcubic(size, target, instance_seed)
    elif family == "cubic":
        n = max(4, size + (size % 2))
        g = gen_random_cubic(n, instance_seed)
    elif family == "girth6":
        dmax = 2 + rng.below(4)
        g = gen_random_girth6(size, dmax, instance_seed)
    else:
        g = gen_random_forest(size, instance_seed)

    rep = count_invariants(g)
    outputs: list[tuple[str, int]] = []

    def run(label, fn, bound):
        try:
            got = fn(g)
        except GraphError as e:
            problems.append(f"{label}: precondition unexpectedly failed: {e}")
            return
        w = verify_induced_matching(g, got)
        if w is not None:
            problems.append(f"{label}: invalid matching, witness {w}")
        if bound is not None and len(got) < bound:
            problems.append(f"{label}: size {len(got)} below bound {bound}")
        outputs.append((label, len(got)))

    if g.max_degree() <= 3:
        run(
            "reduction",
            lambda gg: _reduction_with_ledger(gg, problems),
            rep.thm2_bound,
        )
        if g.is_cubic():
            thm1 = rep.thm1_bound
            for label, got in outputs:
                if label == "reduction" and got < thm1:
                    problems.append(f"reduction: size {got} below cubic bound {thm1}")
    run("greedy", greedy_induced_matching, ceil(rep.greedy_general_bound))
    if family == "forest":
        run("forest", forest_greedy_induced_matching, ceil(rep.greedy_forest_bound))
    if family == "girth6":
        run("girth6", girth6_induced_matching, rep.prop1_bound)
    if g.m <= ORACLE_FUZZ_EDGE_CAP:
        exact, _ = exact_strong_matching_number(g)
        for label, got in outputs:
            if got > exact:
                problems.append(f"{label}: size {got} exceeds exact value {exact}")
        for bname, b in (
            ("thm1", rep.thm1_bound),
            ("thm2", rep.thm2_bound),
            ("prop1", rep.prop1_bound),
        ):
            if b is not None and b > exact:
                problems.append(f"bound {bname}={b} exceeds exact value {exact}")
    return problems


def _reduction_with_ledger(g: Graph, problems: list[str]):
    matching, trace = find_induced_matching_subcubic(g)
    res = ledger_check(trace)
    if not res.ok:
        problems.append(f"reduction: ledger check failed at step {res.violation_step}")
    return matching


def cmd_fuzz(args) -> int:
    passed = 0
    failed = 0
    first_failure: Optional[int] = None
    for i in range(args.count):
        instance_seed = args.seed + i
        problems = _fuzz_instance(args.family, args.size, instance_seed)
        if problems:
            failed += 1
            if first_failure is None:
                first_failure = instance_seed
                for p in problems:
                    print(f"seed {instance_seed}: {p}", file=sys.stderr)
        else:
            passed += 1
    if args.json:
        obj = {
            "family": args.family,
            "instances": args.count,
            "pass": passed,
            "fail": failed,
            "first_failure_seed": first_failure,
        }
        print(json.dumps(obj))
    else:
        lines = [
            f"family={args.family}",
            f"instances={args.count}",
            f"pass={passed}",
            f"fail={failed}",
        ]
        if first_failure is not None:
            lines.append(f"first_failure_seed={first_failure}")
        _emit(lines)
    return EXIT_OK if failed == 0 else EXIT_VIOLATION


# -- wiring -----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strongmatch",
        description="Induced matchings in subcubic graphs with certified size.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="graph file, or - for standard input")
        p.add_argument(
            "--format",
            choices=("edge-list", "dimacs"),
            default="edge-list",
            help="input format (default edge-list)",
        )

    p = sub.add_parser("stats", help="print structural invariants")
    add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_stats)

    p = sub.add_parser("match", help="compute an induced matching with a guarantee")
    add_input(p)
    p.add_argument(
        "--method",
        choices=("reduction", "greedy", "forest", "girth6"),
        default="reduction",
    )
    p.add_argument("--json", action="store_true")
    p.add_argument("--trace", action="store_true", help="include the reduction trace")
    p.set_defaults(fn=cmd_match)

    p = sub.add_parser("exact", help="exact strong matching number (small graphs)")
    add_input(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="NODES")
    p.set_defaults(fn=cmd_exact)

    p = sub.add_parser("verify", help="check a matching file against a graph")
    add_input(p)
    p.add_argument("matching", help="edge-list file holding the matching")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("gen", help="emit a generated graph as an edge list")
    p.add_argument(
        "name",
        choices=(
            "k33plus",
            "extremal-cubic",
            "c5-blowup",
            "odd-regular",
            "random-subcubic",
            "random-cubic",
            "random-girth6",
            "random-forest",
        ),
    )
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--target-m", dest="target_m", type=int, default=None)
    p.add_argument("--max-degree", dest="max_degree", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("fuzz", help="randomized invariant checking")
    p.add_argument("family", choices=("subcubic", "cubic", "girth6", "forest"))
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--size", type=int, default=60)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_fuzz)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as e:
        print(e.message, file=sys.stderr)
        return e.code
    except BudgetExceededError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except LedgerViolationError as e:
        print(f"ledger violation: {e}", file=sys.stderr)
        return EXIT_VIOLATION
    except GraphError as e:
        print(str(e), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
