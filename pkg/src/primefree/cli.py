"""Command-line front end.

Exit codes: ``decide`` returns 0 for INFINITE and 1 for FINITE; every other
subcommand returns 0 on success. Usage errors exit with 2, runtime failures
with 3. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .census import iter_census_lines, run_census
from .chains import ChainError, chain_to_string, check_bitstring, string_to_graph
from .decider import Outcome, decide, pattern_bound_n, resolve_period_cap, verify_certificate
from .families import FamilyKind, generate_family
from .graph import GraphError, parse_graph6, read_graph6_lines, write_graph6
from .primality import find_homogeneous_set
from .representations import blocks, enumerate_representations, string_contains_graph

EXIT_OK = 0
EXIT_FINITE = 1
EXIT_USAGE = 2
EXIT_RUNTIME = 3

SUBCOMMANDS = ("decide", "census", "prime-check", "family", "chain-decode",
               "chain-encode", "reps", "contains", "verify")


class UsageError(Exception):
    pass


@dataclass
class CommandPlan:
    subcommand: str
    args: dict[str, Any] = field(default_factory=dict)
    json: bool = False
    threads: int = 1


def _existing_file(text: str) -> Path:
    path = Path(text)
    if not path.is_file():
        raise argparse.ArgumentTypeError(f"no such file: {text}")
    return path


def _period_cap(text: str) -> str | int:
    if text in ("stated", "proof"):
        return text
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected 'stated', 'proof' or an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("period cap must be at least 1")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _family_kind(text: str) -> FamilyKind:
    try:
        return FamilyKind.from_name(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 as well; keep the message on stderr
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=_positive, default=None,
                        help="worker processes (default: machine parallelism)")
    # accepted everywhere so a misplaced flag is reported as a conflict, not as unknown
    common.add_argument("--period-cap", type=_period_cap, default=None,
                        help="decide only: stated (2^n), proof (2^(n-2)) or an integer")
    common.add_argument("--max-order", type=int, default=None, help="census only: order cap")

    parser = _Parser(prog="primefree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", parser_class=_Parser)

    p = sub.add_parser("decide", parents=[common], help="infinitely many L-free primes?")
    p.add_argument("-f", "--forbidden", type=_existing_file, required=True,
                   help="graph6 file with the forbidden graphs")
    p.add_argument("--acknowledge-exponential", action="store_true",
                   help="allow the full string search when n >= 5")

    p = sub.add_parser("census", parents=[common], help="list the prime graphs of Free(L)")
    p.add_argument("-f", "--forbidden", type=_existing_file, required=True)
    p.add_argument("--limit", type=_positive, default=None,
                   help="keep at most this many graphs per order")

    p = sub.add_parser("prime-check", parents=[common], help="primality of graph6 inputs")
    p.add_argument("-f", "--forbidden", dest="file", type=_existing_file, default=None,
                   help="graph6 file")
    p.add_argument("graphs", nargs="*", help="graph6 words")

    p = sub.add_parser("family", parents=[common], help="emit a family member as graph6")
    p.add_argument("kind", type=_family_kind,
                   help=", ".join(k.cli_name for k in FamilyKind))
    p.add_argument("n", type=int)

    p = sub.add_parser("chain-decode", parents=[common], help="(0,1)-string -> graph6")
    p.add_argument("string")

    p = sub.add_parser("chain-encode", parents=[common], help="graph6 chain -> (0,1)-string")
    p.add_argument("graph")
    p.add_argument("--order", default=None, help="comma-separated vertex order (default 0..n-1)")

    p = sub.add_parser("reps", parents=[common], help="list the representations of a graph")
    p.add_argument("graph")

    p = sub.add_parser("contains", parents=[common], help="does a string contain a graph?")
    p.add_argument("graph")
    p.add_argument("string")
    p.add_argument("--route", choices=("auto", "direct", "representation"), default="auto")

    p = sub.add_parser("verify", parents=[common], help="cross-check against brute force")
    p.add_argument("--up-to", type=int, default=6, help="largest order checked (<= 7)")
    return parser


def parse_args(argv: list[str]) -> CommandPlan:
    ns = build_parser().parse_args(argv)
    if ns.subcommand is None:
        raise UsageError("a subcommand is required: " + ", ".join(SUBCOMMANDS))
    if ns.period_cap is not None and ns.subcommand != "decide":
        raise UsageError("--period-cap only applies to decide")
    if ns.max_order is not None and ns.subcommand != "census":
        raise UsageError("--max-order only applies to census")
    args = {k: v for k, v in vars(ns).items() if k not in ("subcommand", "json", "threads")}
    if ns.subcommand == "decide" and args["period_cap"] is None:
        args["period_cap"] = "stated"
    if ns.subcommand == "census" and args["max_order"] is None:
        args["max_order"] = 12
    if ns.subcommand == "prime-check" and not (ns.file or ns.graphs):
        raise UsageError("prime-check needs graph6 words or -f FILE")
    threads = ns.threads or os.cpu_count() or 1
    return CommandPlan(ns.subcommand, args, ns.json, threads)


def _read_forbidden(path: Path):
    return read_graph6_lines(path.read_text().splitlines())


def _emit(plan: CommandPlan, payload: Any, text: str) -> None:
    print(json.dumps(payload, sort_keys=True) if plan.json else text)


def _cmd_decide(plan: CommandPlan) -> int:
    forbidden = _read_forbidden(plan.args["forbidden"])
    n = pattern_bound_n(forbidden)
    cap = resolve_period_cap(n, plan.args["period_cap"])
    if n >= 5 and cap > 2 ** (n - 2) and not plan.args["acknowledge_exponential"]:
        raise UsageError(f"n = {n}: the string search may take exponential time; pass "
                         "--acknowledge-exponential or --period-cap proof")
    decision = decide(forbidden, plan.args["period_cap"], workers=plan.threads)
    if plan.json:
        print(decision.to_json())
    else:
        lines = [decision.outcome.value, f"n = {decision.n}"]
        cert = decision.certificate
        if cert is not None:
            lines.append("certificate: " + json.dumps(cert.to_dict(), sort_keys=True))
        if decision.chain_length is not None:
            lines.append(f"no L-free chain of length {decision.chain_length}")
        print("\n".join(lines))
    if decision.infinite and not verify_certificate(decision, forbidden):
        print("certificate failed re-verification", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK if decision.outcome is Outcome.INFINITE else EXIT_FINITE


def _cmd_census(plan: CommandPlan) -> int:
    forbidden = _read_forbidden(plan.args["forbidden"])
    result = run_census(forbidden, plan.args["max_order"], plan.args["limit"],
                        workers=plan.threads,
                        progress=lambda k, c: print(f"order {k}: {c}", file=sys.stderr))
    if plan.json:
        payload = {
            "halted": result.halted,
            "last_order": result.last_order,
            "by_order": {str(k): [write_graph6(g) for g in gs]
                         for k, gs in sorted(result.by_order.items())},
            "truncated": sorted(result.truncated),
            "incomplete": sorted(result.incomplete),
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in iter_census_lines(result):
            print(line)
        print(f"# halted: {str(result.halted).lower()}")
    return EXIT_OK


def _cmd_prime_check(plan: CommandPlan) -> int:
    words = list(plan.args["graphs"])
    graphs = [parse_graph6(w) for w in words]
    if plan.args["file"] is not None:
        lines = plan.args["file"].read_text().splitlines()
        extra = read_graph6_lines(lines)
        graphs += extra
        words += [write_graph6(g) for g in extra]
    rows = []
    for word, g in zip(words, graphs):
        witness = find_homogeneous_set(g)
        rows.append({"graph": word, "prime": witness is None,
                     "homogeneous_set": None if witness is None else sorted(witness.members)})
    text = "\n".join(
        f"{r['graph']}\t" + ("prime" if r["prime"] else f"not prime {r['homogeneous_set']}")
        for r in rows
    )
    _emit(plan, rows, text)
    return EXIT_OK


def _cmd_family(plan: CommandPlan) -> int:
    g = generate_family(plan.args["kind"], plan.args["n"])
    word = write_graph6(g)
    _emit(plan, {"kind": plan.args["kind"].name, "n": plan.args["n"], "graph6": word}, word)
    return EXIT_OK


def _cmd_chain_decode(plan: CommandPlan) -> int:
    word = write_graph6(string_to_graph(check_bitstring(plan.args["string"])))
    _emit(plan, {"string": plan.args["string"], "graph6": word}, word)
    return EXIT_OK


def _cmd_chain_encode(plan: CommandPlan) -> int:
    g = parse_graph6(plan.args["graph"])
    if plan.args["order"]:
        order = [int(x) for x in plan.args["order"].split(",")]
    else:
        order = list(range(g.order))
    s = chain_to_string(g, order)
    _emit(plan, {"graph6": plan.args["graph"], "string": s}, s)
    return EXIT_OK


def _cmd_reps(plan: CommandPlan) -> int:
    reps = enumerate_representations(parse_graph6(plan.args["graph"]))
    payload = [{"representation": r, "blocks": blocks(r)} for r in reps]
    _emit(plan, payload, "\n".join(r if r else "(empty)" for r in reps))
    return EXIT_OK


def _cmd_contains(plan: CommandPlan) -> int:
    g = parse_graph6(plan.args["graph"])
    found = string_contains_graph(g, check_bitstring(plan.args["string"]), plan.args["route"])
    _emit(plan, {"contains": found}, "yes" if found else "no")
    return EXIT_OK


def _cmd_verify(plan: CommandPlan) -> int:
    from .oracle import enumerate_all_graphs, naive_is_prime
    from .primality import is_prime

    up_to = plan.args["up_to"]
    if not 1 <= up_to <= 7:
        raise UsageError("--up-to must be between 1 and 7")
    expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
    report = []
    ok = True
    for k in range(1, up_to + 1):
        catalog = enumerate_all_graphs(k)
        mismatches = sum(naive_is_prime(g) != is_prime(g) for g in catalog.members)
        passed = len(catalog) == expected[k] and mismatches == 0
        ok &= passed
        report.append({"order": k, "classes": len(catalog), "expected": expected[k],
                       "primality_mismatches": mismatches, "pass": passed})
    text = "\n".join(
        f"order {r['order']}: {r['classes']} classes (expected {r['expected']}), "
        f"{r['primality_mismatches']} primality mismatches -> {'PASS' if r['pass'] else 'FAIL'}"
        for r in report
    )
    _emit(plan, report, text)
    return EXIT_OK if ok else EXIT_RUNTIME


_COMMANDS = {
    "decide": _cmd_decide,
    "census": _cmd_census,
    "prime-check": _cmd_prime_check,
    "family": _cmd_family,
    "chain-decode": _cmd_chain_decode,
    "chain-encode": _cmd_chain_encode,
    "reps": _cmd_reps,
    "contains": _cmd_contains,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        plan = parse_args(argv)
        return _COMMANDS[plan.subcommand](plan)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, ChainError, ValueError, OSError) as exc:
        print(f"primefree: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
