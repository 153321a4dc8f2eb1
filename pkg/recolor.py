#!/usr/bin/env python3
"""
Compute mixing and Gray code numbers of coloring graphs, emit Gray codes of colorings,
verify known results and hunt for counterexamples.

This script allows you to:
1. Compute g_k(H), h_k(H), k1(H) and k0(H) with certificates
2. Build validated cyclic Gray codes of the proper k-colorings of H
3. Run the verification suite
4. Search small graphs for h_k(H) < h_{k+1}(H) and related questions

Compute:
    python recolor.py compute --family cycle:5 --k 3
    python recolor.py compute --family path:3 --k 3 --j 1 --dot p3.dot
    python recolor.py compute --graph6 "Bw" --thresholds
    python recolor.py compute --family Lm:3 --k 3 --j 1 --components

Gray codes:
    python recolor.py graycode --family multipartite:1,3 --colors 3
    python recolor.py graycode --family complete:4 --colors 4
    python recolor.py graycode --fixture c4-h3
    python recolor.py graycode --multigraph "2; 0 1 2; 0 1 2" --colors 4 --json

Verification:
    python recolor.py verify --list
    python recolor.py verify --suite trees-cycles --suite multipartite
    python recolor.py verify --slow --output results

Hunt:
    python recolor.py hunt --source atlas:5 --k 3 4
    python recolor.py hunt --source graphs.g6 --predicate table --workers 8
    python recolor.py hunt --source atlas:4 --predicate conjecture --budget-secs 30

Exit codes: 0 pass, 1 refuted or invalid, 2 undecided within budget, 3 usage.

For more options, use --help
"""

import argparse
import json
import logging
import os
import sys
from typing import List, Optional

# Import third-party libraries
try:
    import argcomplete
    ARGCOMPLETE_AVAILABLE = True
except ImportError:
    ARGCOMPLETE_AVAILABLE = False

from colorama import Fore, Style, init

# Initialize colorama
init()

# Import custom modules
from modules.logman import TOOL_VERSION, get_logger, save_results_to_file, setup_logging
from modules.config import (
    CODE_SCHEMA, REPORT_SCHEMA, RESULTS_DIR, apply_overrides, format_table, get_setting, load_config,
    validate_document
)
from modules.errors import (
    BudgetExceeded, ConstructionError, PreconditionError, UndecidedError, UnsupportedError
)
from modules.colorings import Coloring, build_localized_graph
from modules.graphs import (
    SimpleGraph, degeneracy_order, from_family, parse_multigraph, read_graph6, read_graph6_file, subdivide
)
from modules.graycodes import (
    degeneracy_code, fixture_c4_h3, grow_code, multipartite_code_k, multipartite_code_kplus1, search_code,
    validate_code
)
from modules.hunt import PREDICATES, HuntTask, run_hunt
from modules.solvers import (
    analyze, component_summary, compute_h, graycode_number_k0, mixing_number_k1, reconfiguration_path
)
from modules.subdivision import subdivided_h3_code, subdivided_h4_code
from modules.verify import FAIL, PASS, SUITES, collect_cases, exit_code, run_suites, summarize

EXIT_PASS = 0
EXIT_REFUTED = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 3

CONSTRUCTORS = ["auto", "multipartite-k", "multipartite-kplus1", "degeneracy", "subdivided-h4",
                "subdivided-h3", "grow", "search"]

STATUS_COLORS = {PASS: Fore.GREEN, FAIL: Fore.RED}

logger = get_logger('recolor.cli')


def colored(text: str, color: str) -> str:
    return f"{color}{text}{Style.RESET_ALL}"


def emit(document: dict, args: argparse.Namespace, label: str) -> None:
    """Print a JSON document when --json is set and persist it when --output is given."""
    if args.json:
        print(json.dumps(document, indent=2))
    if args.output:
        save_results_to_file(document, label, args.output, logger)


def write_dot(path: str, graph: SimpleGraph, k: int, j: int) -> None:
    localized = build_localized_graph(graph, k, j)
    with open(path, "w") as f:
        f.write(localized.to_dot())
    logger.info(f"Wrote G^{j}_{k}({graph.display_name()}) to {path}")


def load_host(args: argparse.Namespace) -> SimpleGraph:
    """Build the host graph from --family, --graph6 or --graph6-file."""
    if args.family:
        return from_family(args.family)
    if args.graph6:
        return read_graph6(args.graph6)
    if args.graph6_file:
        graphs = read_graph6_file(args.graph6_file)
        if not graphs:
            raise PreconditionError(f"no graphs in {args.graph6_file}")
        if len(graphs) > 1:
            logger.warning(f"{args.graph6_file} holds {len(graphs)} graphs; using the first")
        return graphs[0]
    raise PreconditionError("give a graph with --family, --graph6 or --graph6-file")


def multipartite_parts(family: Optional[str]) -> Optional[List[int]]:
    """Part sizes when the family names a complete multipartite graph (complete:n counts as n parts of 1)."""
    if not family:
        return None
    name, _, raw = family.partition(":")
    if name == "multipartite":
        return [int(p) for p in raw.split(",") if p.strip()]
    if name == "complete":
        return [1] * int(raw)
    return None


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def handle_compute(args: argparse.Namespace) -> int:
    graph = load_host(args)
    document = {"graph": graph.display_name(), "n": graph.n, "k": args.k, "rows": []}

    if args.thresholds:
        k1 = mixing_number_k1(graph)
        k0 = graycode_number_k0(graph, time_budget=args.budget_secs)
        document.update({"k1": k1, "k0": k0})
        if not args.json:
            print(f"k1({graph.display_name()}) = {colored(str(k1), Fore.CYAN)}")
            print(f"k0({graph.display_name()}) = {colored(str(k0), Fore.CYAN)}")
        if args.k is None:
            emit(document, args, f"compute_{graph.display_name()}")
            return EXIT_PASS

    if args.k is None:
        raise PreconditionError("--k is required unless --thresholds is given")

    report = analyze(graph, args.k, args.j, want_h=not args.no_h, time_budget=args.budget_secs)
    document.update(report.to_json())

    if args.components:
        document["components"] = component_summary(graph, args.k)

    if args.path:
        j = args.j or 1
        source, target = (Coloring.from_label(label, args.k) for label in args.path)
        route = reconfiguration_path(graph, args.k, j, source, target)
        document["path"] = [c.label for c in route] if route is not None else None

    if args.dot:
        write_dot(args.dot, graph, args.k, args.j or report.g or 1)

    ok, message = validate_document(document, REPORT_SCHEMA)
    if not ok:
        logger.error(f"Report does not match its schema: {message}")
        return EXIT_REFUTED

    if not args.json:
        print(f"{Fore.MAGENTA}{graph.display_name()}{Style.RESET_ALL} (n={graph.n}), k={args.k}")
        rows = [(row.j, row.connected, "-" if row.hamiltonian is None else row.hamiltonian, row.status or "-")
                for row in report.rows]
        print(format_table(["j", "connected", "hamiltonian", "status"], rows))
        for name, value in (("g", report.g), ("h", report.h)):
            if value is not None:
                print(f"{name}_{args.k}({graph.display_name()}) = {colored(str(value), Fore.CYAN)}")
        if "components" in document:
            summary = document["components"]
            print(f"per component: g_max={summary['g_max']}, h_max={summary['h_max']}")
        if "path" in document:
            route = document["path"]
            print("path: " + (" -> ".join(route) if route else colored("none (different components)", Fore.YELLOW)))
    emit(document, args, f"compute_{graph.display_name()}")
    return EXIT_UNDECIDED if report.undecided else EXIT_PASS


# ---------------------------------------------------------------------------
# graycode
# ---------------------------------------------------------------------------

def build_code(args: argparse.Namespace):
    """Dispatch to the constructor named by --constructor (or pick one for "auto")."""
    if args.fixture:
        return fixture_c4_h3()
    if args.colors is None:
        raise PreconditionError("--colors is required")
    k, constructor = args.colors, args.constructor

    if args.multigraph:
        text = args.multigraph
        if os.path.exists(text):
            with open(text, "r") as f:
                text = f.read()
        multigraph, spec = parse_multigraph(text)
        if constructor == "auto":
            if k not in (3, 4):
                raise UnsupportedError("subdivided multigraphs have constructors for 3 and 4 colors only")
            constructor = "subdivided-h4" if k == 4 else "subdivided-h3"
        if constructor == "subdivided-h4":
            if k != 4:
                raise PreconditionError("subdivided-h4 lists 4-colorings; use --colors 4")
            return subdivided_h4_code(multigraph, spec)
        if constructor == "subdivided-h3":
            if k != 3:
                raise PreconditionError("subdivided-h3 lists 3-colorings; use --colors 3")
            return subdivided_h3_code(multigraph, spec)
        graph = subdivide(multigraph, spec)
    else:
        graph = load_host(args)

    parts = multipartite_parts(args.family)
    if constructor == "auto":
        d, _ = degeneracy_order(graph)
        if parts and k == len(parts):
            constructor = "multipartite-k"
        elif parts and k == len(parts) + 1:
            constructor = "multipartite-kplus1"
        elif k >= d + 3:
            constructor = "degeneracy"
        else:
            constructor = "search"
        logger.info(f"Using the {constructor} constructor")

    if constructor in ("multipartite-k", "multipartite-kplus1"):
        if not parts:
            raise PreconditionError(f"{constructor} needs --family multipartite:... or complete:n")
        expected = len(parts) if constructor == "multipartite-k" else len(parts) + 1
        if k != expected:
            raise PreconditionError(f"{constructor} on {len(parts)} parts lists {expected}-colorings")
        return multipartite_code_k(parts) if constructor == "multipartite-k" else multipartite_code_kplus1(parts)
    if constructor == "degeneracy":
        return degeneracy_code(graph, k)
    if constructor == "grow":
        return grow_code(graph, list(range(graph.n)), k, args.j or 1)
    if constructor == "search":
        return search_code(graph, k, args.j or compute_h(graph, k, args.budget_secs))
    raise PreconditionError(f"{constructor} needs --multigraph")


def handle_graycode(args: argparse.Namespace) -> int:
    code = build_code(args)
    violation = validate_code(code)
    document = code.to_json()
    ok, message = validate_document(document, CODE_SCHEMA)
    if not ok:
        logger.error(f"Code does not match its schema: {message}")
        return EXIT_REFUTED
    if args.dot:
        write_dot(args.dot, code.host, code.k, code.j)

    if violation is not None:
        print(colored(f"Invalid code: {violation}", Fore.RED), file=sys.stderr)
        document["violation"] = str(violation)
    if args.json:
        emit(document, args, f"graycode_{code.host.display_name()}")
    else:
        sys.stdout.write(code.to_text())
        print(f"{colored(code.constructor, Fore.MAGENTA)}: {len(code)} colorings of "
              f"{code.host.display_name()} at k={code.k}, j={code.j}", file=sys.stderr)
        emit(document, args, f"graycode_{code.host.display_name()}")
    return EXIT_REFUTED if violation is not None else EXIT_PASS


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def handle_verify(args: argparse.Namespace) -> int:
    if args.list:
        rows = []
        for suite in SUITES:
            cases = collect_cases([suite], include_slow=True)
            rows.append((suite, len(cases), sum(1 for c in cases if c.slow)))
        print(format_table(["suite", "cases", "slow"], rows))
        return EXIT_PASS

    results = run_suites(args.suite, include_slow=args.slow, progress=not args.json)
    counts = summarize(results)
    document = {"results": [r.to_json() for r in results], "summary": counts}
    if not args.json:
        rows = [(r.case.suite, r.case.name, colored(r.status, STATUS_COLORS.get(r.status, Fore.YELLOW)),
                 f"{r.elapsed:.2f}s", r.detail) for r in results]
        print(format_table(["suite", "case", "status", "time", "detail"], rows))
        print(f"\n{counts[PASS]} passed, {counts[FAIL]} failed, {counts['undecided']} undecided")
    emit(document, args, "verify")
    return exit_code(results)


# ---------------------------------------------------------------------------
# hunt
# ---------------------------------------------------------------------------

def handle_hunt(args: argparse.Namespace) -> int:
    task = HuntTask(args.source, tuple(args.k), args.predicate, args.budget_secs, args.workers,
                    multigraphs=not args.simple_only)
    findings, undecided = [], 0
    for outcome in run_hunt(task, progress=sys.stderr.isatty()):
        undecided += len(outcome.undecided)
        for finding in outcome.findings:
            document = finding.to_json()
            findings.append(document)
            print(json.dumps(document), flush=True)
    logger.info(f"{len(findings)} finding(s), {undecided} undecided instance(s)")
    if args.output:
        save_results_to_file({"task": vars(task), "findings": findings, "undecided": undecided},
                             f"hunt_{task.predicate}", args.output, logger)
    if findings and task.predicate != "table":
        return EXIT_REFUTED
    return EXIT_UNDECIDED if undecided else EXIT_PASS


def main():
    """
    Main entry point for the script.
    """
    # Create a custom formatter class for better help formatting
    class CustomHelpFormatter(argparse.HelpFormatter):
        def __init__(self, prog):
            super().__init__(prog, max_help_position=40, width=100)

        def _format_action_invocation(self, action):
            if not action.option_strings or action.nargs == 0:
                return super()._format_action_invocation(action)
            return ', '.join(action.option_strings)

        def _format_usage(self, usage, actions, groups, prefix):
            return f"{prefix}%(prog)s [options]"

    # Flags shared by every subcommand
    common = argparse.ArgumentParser(add_help=False)
    general_group = common.add_argument_group("GENERAL")
    general_group.add_argument("--config", metavar="FILE",
                               help="JSON config file (defaults to config/default.json when present)")
    general_group.add_argument("--log-file", metavar="FILE", help="Also write DEBUG logs to FILE")
    general_group.add_argument("--verbose", "-v", action="store_true", help="Enable verbose output for debugging")

    output_group = common.add_argument_group("OUTPUT")
    output_group.add_argument("--json", action="store_true",
                              help="Print JSON instead of tables (also when output_format is \"json\")")
    output_group.add_argument("--output", nargs="?", const=RESULTS_DIR, metavar="DIR",
                              help=f"Save the result as timestamped JSON (default directory: {RESULTS_DIR})")

    budget_group = common.add_argument_group("BUDGETS")
    budget_group.add_argument("--budget-nodes", type=int, metavar="N",
                              help="Largest coloring graph to enumerate (env RECOLOR_BUDGET_NODES)")
    budget_group.add_argument("--budget-secs", type=float, metavar="SECS",
                              help="Time budget of each Hamiltonicity search (env RECOLOR_BUDGET_SECS)")
    budget_group.add_argument("--workers", type=int, metavar="N", help="Worker threads (env RECOLOR_WORKERS)")

    def add_graph_source(parser, required: bool = True):
        graph_group = parser.add_argument_group("GRAPH")
        source = graph_group.add_mutually_exclusive_group(required=required)
        source.add_argument("--family", metavar="SPEC",
                            help="Named family: path:n, cycle:n, star:m, complete:n, multipartite:m1,..., Lm:m, L:i,j,k")
        source.add_argument("--graph6", metavar="STRING", help="Graph in graph6 format")
        source.add_argument("--graph6-file", metavar="FILE", help="File of graph6 lines (the first one is used)")
        return source

    parser = argparse.ArgumentParser(
        description="Mixing and Gray code numbers of localized coloring graphs",
        formatter_class=CustomHelpFormatter
    )
    parser.add_argument("--version", action="version", version=TOOL_VERSION, help="Show program version and exit")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")

    # COMPUTE
    compute = subparsers.add_parser("compute", parents=[common], formatter_class=CustomHelpFormatter,
                                    help="Compute g_k(H), h_k(H) and the thresholds k1, k0")
    add_graph_source(compute)
    params_group = compute.add_argument_group("PARAMETERS")
    params_group.add_argument("--k", type=int, metavar="K", help="Palette size")
    params_group.add_argument("--j", type=int, metavar="J", help="Report only this localization")
    params_group.add_argument("--no-h", action="store_true", help="Stop at g_k(H); skip Hamiltonicity")
    params_group.add_argument("--thresholds", action="store_true", help="Also compute k1(H) and k0(H)")
    params_group.add_argument("--components", action="store_true",
                              help="Report g and h per connected component of H")
    params_group.add_argument("--path", nargs=2, metavar=("SOURCE", "TARGET"),
                              help="Shortest recoloring sequence between two colorings, e.g. 123 213")
    params_group.add_argument("--dot", metavar="FILE", help="Export G^j_k(H) as Graphviz DOT")

    # GRAYCODE
    graycode = subparsers.add_parser("graycode", parents=[common], formatter_class=CustomHelpFormatter,
                                     help="Emit a validated cyclic Gray code of colorings")
    source = add_graph_source(graycode, required=False)
    source.add_argument("--multigraph", metavar="TEXT_OR_FILE",
                        help="Multigraph with subdivision counts: 'n; u v count; ...' or a file in that format")
    source.add_argument("--fixture", choices=["c4-h3"], help="Print a fixed listing")
    code_group = graycode.add_argument_group("CONSTRUCTION")
    code_group.add_argument("--colors", type=int, metavar="K", help="Palette size")
    code_group.add_argument("--constructor", choices=CONSTRUCTORS, default="auto",
                            help="Constructor to use (default: picked from the graph and palette)")
    code_group.add_argument("--j", type=int, metavar="J", help="Localization for the grow and search constructors")
    code_group.add_argument("--dot", metavar="FILE", help="Export the coloring graph the code lives in as DOT")

    # VERIFY
    verify = subparsers.add_parser("verify", parents=[common], formatter_class=CustomHelpFormatter,
                                   help="Run the verification suite")
    suite_group = verify.add_argument_group("SUITES")
    suite_group.add_argument("--suite", action="append", choices=SUITES, metavar="NAME",
                             help=f"Suite to run, repeatable (default: all). Choices: {', '.join(SUITES)}")
    suite_group.add_argument("--list", action="store_true", help="List the suites and exit")
    suite_group.add_argument("--slow", action="store_true", help="Include the slow instances")

    # HUNT
    hunt = subparsers.add_parser("hunt", parents=[common], formatter_class=CustomHelpFormatter,
                                 help="Search small graphs for counterexamples")
    hunt_group = hunt.add_argument_group("HUNT")
    hunt_group.add_argument("--source", required=True, metavar="SOURCE",
                            help="atlas:N for all connected graphs on at most N <= 7 vertices, or a graph6 file")
    hunt_group.add_argument("--k", type=int, nargs="+", default=[3, 4], metavar="K", help="Palette sizes (default: 3 4)")
    hunt_group.add_argument("--predicate", choices=PREDICATES, default="h-increase",
                            help="h-increase: h_k < h_{k+1}; conjecture: once-subdivided graphs with "
                                 "h_3 > 2 or h_4 > 1; table: raw (n, d, k, g, h) rows")
    hunt_group.add_argument("--simple-only", action="store_true",
                            help="conjecture: skip the variants with one extra loop or doubled edge")

    # Enable argcomplete if available
    if ARGCOMPLETE_AVAILABLE:
        argcomplete.autocomplete(parser)

    try:
        args = parser.parse_args()
    except SystemExit as e:
        # argparse reports bad usage with status 2, which is reserved for undecided results
        if e.code == 2:
            sys.exit(EXIT_USAGE)
        raise
    if not args.command:
        parser.print_help()
        sys.exit(EXIT_USAGE)

    setup_logging(log_level=logging.INFO, log_file=args.log_file, verbose=args.verbose)
    load_config(args.config)
    apply_overrides(budget_nodes=args.budget_nodes, budget_secs=args.budget_secs, workers=args.workers)
    if get_setting("output_format") == "json":
        args.json = True

    handlers = {
        "compute": handle_compute,
        "graycode": handle_graycode,
        "verify": handle_verify,
        "hunt": handle_hunt,
    }
    try:
        sys.exit(handlers[args.command](args))
    except (PreconditionError, UnsupportedError) as e:
        print(colored(f"Error: {e}", Fore.RED), file=sys.stderr)
        sys.exit(EXIT_USAGE)
    except (BudgetExceeded, UndecidedError) as e:
        print(colored(f"Undecided: {e}", Fore.YELLOW), file=sys.stderr)
        sys.exit(EXIT_UNDECIDED)
    except ConstructionError as e:
        print(colored(f"Construction failed: {e}", Fore.RED), file=sys.stderr)
        sys.exit(EXIT_REFUTED)


if __name__ == "__main__":
    main()
