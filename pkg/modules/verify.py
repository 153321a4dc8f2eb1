"""
Verify Module

This module provides the verification suite: named cases that recompute known values of
g_k(H) and h_k(H) by brute force, validate the constructive Gray codes, and check the
structural properties of coloring graphs. Every case reports pass, fail or undecided.
"""

import logging
import time
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from tqdm import tqdm

from modules.choosability import AttachmentContext, check_g_subgraph, check_h_subgraph, is_f_choosable
from modules.colorings import build_localized_graph, neighbors_of, product_decomposition_check
from modules.errors import BudgetExceeded, PreconditionError, RecolorError, UndecidedError
from modules.graphs import (
    MultiGraph, SimpleGraph, SubdivisionSpec, L_m, build_L, chromatic_polynomial, complete,
    complete_multipartite, cycle, degeneracy_order, disjoint_union, from_edges, from_networkx, induced_subgraph,
    path, star, subdivide
)
from modules.graycodes import (
    CASE_KINDS, case_graph, case_table, degeneracy_code, extend_cycle, fixture_c4_h3,
    multipartite_code_k, multipartite_code_kplus1, search_code, validate_code
)
from modules.hypercube import antipodal_gray_path, antipodal_path_exists, reflected_gray_cycle
from modules.permutations import star_transposition_code, star_transposition_search
from modules.solvers import (
    complete_multipartite_above_k, compute_g, compute_h, component_summary, hamiltonian_endpoint_pairs,
    is_connected_at
)
from modules.subdivision import subdivided_h3_code, subdivided_h4_code

# Configure logger
logger = logging.getLogger('recolor.verify')

PASS = "pass"
FAIL = "fail"
UNDECIDED = "undecided"

SUITES = [
    "trees-cycles", "complete", "multipartite", "multipartite-codes", "construction-L", "Lm",
    "fixture", "subdivision", "loop-counterexample", "degeneracy", "hypercube", "permutations",
    "structural", "choosability", "extension", "tables",
]

# Instances of the degeneracy suite
DEGENERACY_SAMPLES = 50
DEGENERACY_SPACE_LIMIT = 200_000

Outcome = Tuple[bool, str]


@dataclass
class VerifyCase:
    """
    One machine-checkable claim.

    Attributes:
        name: Short identifier, unique within the suite
        suite: Suite the case belongs to
        claim: The statement being checked, in words
        check: Callable returning (holds, detail)
        slow: True for instances gated behind --slow
    """
    name: str
    suite: str
    claim: str
    check: Callable[[], Outcome]
    slow: bool = False


@dataclass
class CaseResult:
    """Outcome of one case."""
    case: VerifyCase
    status: str
    detail: str = ""
    elapsed: float = 0.0

    def to_json(self) -> Dict[str, Any]:
        return {
            "suite": self.case.suite,
            "name": self.case.name,
            "claim": self.case.claim,
            "status": self.status,
            "detail": self.detail,
            "elapsed": round(self.elapsed, 3),
        }


def _equal(label: str, actual: Any, expected: Any) -> Outcome:
    return actual == expected, f"{label} = {actual} (expected {expected})"


def _code_holds(build: Callable[[], Any]) -> Outcome:
    code = build()
    violation = validate_code(code)
    if violation is not None:
        return False, f"{code.constructor}: {violation}"
    return True, f"{len(code)} colorings at j={code.j} ({code.constructor})"


def _g_and_h(graph: SimpleGraph, k: int, g: int, h: int) -> Outcome:
    actual = (compute_g(graph, k), compute_h(graph, k))
    return actual == (g, h), f"g, h = {actual} (expected {(g, h)})"


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def _trees_cycles() -> List[VerifyCase]:
    cases = []
    for n in (3, 5, 6, 7, 8):
        cases.append(VerifyCase(f"C{n}", "trees-cycles", f"g_3(C{n}) = h_3(C{n}) = 2",
                                lambda n=n: _g_and_h(cycle(n), 3, 2, 2), slow=n == 8))
    cases.append(VerifyCase("C4", "trees-cycles", "g_3(C4) = 1 and h_3(C4) = 2",
                            lambda: _g_and_h(cycle(4), 3, 1, 2)))
    for m in (1, 2, 3):
        cases.append(VerifyCase(f"K1,{2 * m}", "trees-cycles", f"g_3(K1,{2 * m}) = 1 and h_3(K1,{2 * m}) = 2",
                                lambda m=m: _g_and_h(star(2 * m), 3, 1, 2)))
    return cases


def _complete() -> List[VerifyCase]:
    cases = []
    for n in (2, 3, 4):
        cases.append(VerifyCase(f"K{n}-k{n}", "complete", f"g_{n}(K{n}) = h_{n}(K{n}) = 2",
                                lambda n=n: _g_and_h(complete(n), n, 2, 2)))
        for k in range(n + 1, n + 3):
            cases.append(VerifyCase(f"K{n}-k{k}", "complete", f"g_{k}(K{n}) = h_{k}(K{n}) = 1",
                                    lambda n=n, k=k: _g_and_h(complete(n), k, 1, 1)))
    return cases


def _parts_name(parts: Sequence[int]) -> str:
    return "K" + ",".join(str(p) for p in parts)


def _multipartite() -> List[VerifyCase]:
    cases = []
    for parts in ([1, 2], [2, 2], [1, 1, 2], [1, 2, 2], [1, 1, 3]):
        k, value = len(parts), min(parts) + max(parts)
        cases.append(VerifyCase(f"{_parts_name(parts)}-k", "multipartite",
                                f"g_{k} = h_{k} = {value} on {_parts_name(parts)}",
                                lambda parts=parts, k=k, value=value:
                                _g_and_h(complete_multipartite(parts), k, value, value)))
    for parts, value in (([1, 1, 1], 1), ([1, 1, 3], 1), ([1, 2], 2), ([1, 1, 2], 2)):
        k = len(parts) + 1
        cases.append(VerifyCase(f"{_parts_name(parts)}-k+1", "multipartite",
                                f"h_{k} = {value} on {_parts_name(parts)}",
                                lambda parts=parts, k=k, value=value:
                                _equal(f"h_{k}", compute_h(complete_multipartite(parts), k), value)))
    for parts in ([1, 2], [1, 1, 2]):
        colors = len(parts) + 1
        cases.append(VerifyCase(f"{_parts_name(parts)}-connected", "multipartite",
                                f"G^1_{colors} of {_parts_name(parts)} is connected",
                                lambda parts=parts, colors=colors:
                                _equal("connected", complete_multipartite_above_k(parts, colors), True)))
    return cases


def _multipartite_codes() -> List[VerifyCase]:
    cases = []
    for parts in ([1, 2], [2, 2], [1, 1, 2], [1, 2, 2], [1, 1, 3], [3, 3], [1, 3]):
        name = _parts_name(parts)
        cases.append(VerifyCase(f"{name}-k", "multipartite-codes", f"k-color code of {name} validates",
                                lambda parts=parts: _code_holds(lambda: multipartite_code_k(parts))))
        cases.append(VerifyCase(f"{name}-k+1", "multipartite-codes", f"(k+1)-color code of {name} validates",
                                lambda parts=parts: _code_holds(lambda: multipartite_code_kplus1(parts))))
    return cases


def _isolation(i: int, j: int, k: int) -> Outcome:
    graph, phi = build_L(i, j, k)
    below = neighbors_of(graph, k, j - 1, phi)
    at = neighbors_of(graph, k, j, phi)
    detail = f"degree {len(below)} at j={j - 1}, {len(at)} at j={j}"
    return not below and bool(at), detail


def _construction_l() -> List[VerifyCase]:
    return [VerifyCase(f"L({i},{j},{k})", "construction-L",
                       f"the distinguished coloring is isolated in G^{j - 1}_{k} but not in G^{j}_{k}",
                       lambda i=i, j=j, k=k: _isolation(i, j, k))
            for i, j, k in ((2, 2, 3), (2, 3, 3), (3, 2, 3), (2, 2, 4))]


def _lm() -> List[VerifyCase]:
    cases = []
    for m, k, connected in ((3, 3, False), (3, 4, True), (4, 4, False), (4, 5, True)):
        word = "connected" if connected else "disconnected"
        cases.append(VerifyCase(f"L{m}-k{k}", "Lm", f"G^1_{k}(L{m}) is {word}",
                                lambda m=m, k=k, connected=connected:
                                _equal("connected", is_connected_at(L_m(m), k, 1), connected),
                                slow=(m, k) == (4, 5)))
    return cases


def _fixture_at(j: int) -> Outcome:
    code = fixture_c4_h3()
    code.j = j
    violation = validate_code(code)
    if j == 2:
        return violation is None, str(violation or f"{len(code)} colorings")
    return violation is not None, str(violation or "unexpectedly valid at j=1")


def _fixture() -> List[VerifyCase]:
    return [
        VerifyCase("c4-h3-j2", "fixture", "the printed listing is a Hamiltonian cycle of G^2_3(C4)",
                   lambda: _fixture_at(2)),
        VerifyCase("c4-h3-j1", "fixture", "the printed listing is not a cycle of G^1_3(C4)",
                   lambda: _fixture_at(1)),
    ]


def _g_at_most(graph: SimpleGraph, k: int, bound: int) -> Outcome:
    g = compute_g(graph, k)
    return g <= bound, f"g_{k} = {g} (expected at most {bound})"


DOUBLE_EDGE = MultiGraph(2, ((0, 1), (0, 1)))
TRIANGLE = MultiGraph(3, ((0, 1), (1, 2), (0, 2)))
SINGLE_LOOP = MultiGraph(1, ((0, 0),))


def _subdivision() -> List[VerifyCase]:
    cases = []
    for name, multigraph in (("double-edge", DOUBLE_EDGE), ("K3", TRIANGLE)):
        spec = SubdivisionSpec.uniform(multigraph, 2)
        cases.append(VerifyCase(f"g3-{name}-x2", "subdivision", f"g_3 <= 2 for {name} subdivided twice",
                                lambda multigraph=multigraph, spec=spec:
                                _g_at_most(subdivide(multigraph, spec), 3, 2)))
        for count in (2, 3):
            spec = SubdivisionSpec.uniform(multigraph, count)
            cases.append(VerifyCase(f"h4-{name}-x{count}", "subdivision",
                                    f"4-color code at j=1 for {name} subdivided {count} times",
                                    lambda multigraph=multigraph, spec=spec:
                                    _code_holds(lambda: subdivided_h4_code(multigraph, spec)),
                                    slow=(name, count) == ("K3", 3)))
    for name, multigraph in (("loop", SINGLE_LOOP), ("double-edge", DOUBLE_EDGE)):
        spec = SubdivisionSpec.uniform(multigraph, 3)
        cases.append(VerifyCase(f"h3-{name}-x3", "subdivision", f"3-color code at j=2 for {name} subdivided 3 times",
                                lambda multigraph=multigraph, spec=spec:
                                _code_holds(lambda: subdivided_h3_code(multigraph, spec))))
    for n in (4, 6):
        cases.append(VerifyCase(f"h3-C{n}-exact", "subdivision", f"h_3(C{n}) = 2",
                                lambda n=n: _equal("h_3", compute_h(cycle(n), 3), 2)))
    return cases


def _hub_split(loops: int) -> Outcome:
    multigraph = MultiGraph(1, ((0, 0),) * loops)
    host = subdivide(multigraph, SubdivisionSpec.uniform(multigraph, 2))
    localized = build_localized_graph(host, 3, loops)
    parts = localized.components()
    mixed = [c for c in parts if len({localized.nodes[i].colors[0] for i in c}) > 1]
    return not mixed, f"{len(parts)} components, {len(mixed)} with more than one hub color"


def _loop_counterexample() -> List[VerifyCase]:
    return [VerifyCase(f"hub-{j}-loops", "loop-counterexample",
                       f"colorings differing at the hub lie in different components of G^{j}_3",
                       lambda j=j: _hub_split(j))
            for j in (1, 2)]


def degeneracy_samples(count: int = DEGENERACY_SAMPLES, seed: int = 0) -> List[SimpleGraph]:
    """Seeded G(n, 1/2) graphs on 3..6 vertices whose (d+3)-coloring space is small enough."""
    samples = []
    index = seed
    while len(samples) < count:
        n = 3 + index % 4
        graph = from_networkx(nx.gnp_random_graph(n, 0.5, seed=index), f"gnp-{n}-{index}")
        index += 1
        d, _ = degeneracy_order(graph)
        if chromatic_polynomial(graph, d + 3) <= DEGENERACY_SPACE_LIMIT:
            samples.append(graph)
    return samples


def _degeneracy_g() -> Outcome:
    failures = []
    for graph in degeneracy_samples():
        d, _ = degeneracy_order(graph)
        if not is_connected_at(graph, d + 2, 1):
            failures.append(graph.display_name())
    return not failures, f"disconnected: {failures}" if failures else f"{DEGENERACY_SAMPLES} graphs"


def _degeneracy_h() -> Outcome:
    failures = []
    for graph in degeneracy_samples():
        d, _ = degeneracy_order(graph)
        violation = validate_code(degeneracy_code(graph, d + 3))
        if violation is not None:
            failures.append(f"{graph.display_name()}: {violation}")
    return not failures, "; ".join(failures) if failures else f"{DEGENERACY_SAMPLES} codes"


def _degeneracy() -> List[VerifyCase]:
    return [
        VerifyCase("g-at-d+2", "degeneracy", "G^1_{d+2}(H) is connected on random graphs", _degeneracy_g),
        VerifyCase("code-at-d+3", "degeneracy", "degeneracy code at j=1 validates on random graphs",
                   _degeneracy_h, slow=True),
    ]


def _violation_free(code) -> Outcome:
    problem = code.violation()
    return problem is None, problem or f"{len(code.sequence)} entries"


def _hypercube() -> List[VerifyCase]:
    cases = [VerifyCase(f"antipodal-Q{n}", "hypercube", f"Q{n} has a path from b..b to c..c",
                        lambda n=n: _violation_free(antipodal_gray_path(n, "b", "c")))
             for n in (1, 3, 5)]
    cases += [VerifyCase(f"no-antipodal-Q{n}", "hypercube", f"Q{n} has no path from b..b to c..c",
                         lambda n=n: _equal("exists", antipodal_path_exists(n), False))
              for n in (2, 4)]
    cases += [VerifyCase(f"reflected-Q{n}", "hypercube", f"reflected Gray code of Q{n} is a cycle",
                         lambda n=n: _violation_free(reflected_gray_cycle(n)))
              for n in range(2, 9)]
    return cases


def _permutations() -> List[VerifyCase]:
    cases = [VerifyCase(f"star-{n}", "permutations", f"star transpositions list all of S_{n} cyclically",
                        lambda n=n: _violation_free(star_transposition_code(n)))
             for n in range(2, 7)]
    cases += [VerifyCase(f"search-{n}", "permutations", f"exhaustive search finds a star-transposition cycle of S_{n}",
                         lambda n=n: _violation_free(star_transposition_search(n)))
              for n in (3, 4)]
    return cases


STRUCTURAL_INSTANCES = [
    ("C5", lambda: cycle(5), 3),
    ("K1,2", lambda: star(2), 3),
    ("K3", lambda: complete(3), 4),
    ("K1,2-k3", lambda: complete_multipartite([1, 2]), 3),
    ("P2+P3", lambda: disjoint_union(path(2), path(3)), 3),
]

# Disjoint unions whose coloring graphs are checked against the product of their components
DISJOINT_INSTANCES = [
    ("K1+K1", lambda: disjoint_union(complete(1), complete(1)), 3),
    ("K1+C4", lambda: disjoint_union(complete(1), cycle(4)), 3),
    ("K3+P2", lambda: disjoint_union(complete(3), path(2)), 3),
    ("P2+P3", lambda: disjoint_union(path(2), path(3)), 3),
]


def _chain(graph: SimpleGraph, k: int) -> Outcome:
    previous = None
    for j in range(1, graph.n + 1):
        edges = build_localized_graph(graph, k, j).edge_set()
        if previous is not None and not previous <= edges:
            return False, f"G^{j - 1}_{k} is not a spanning subgraph of G^{j}_{k}"
        previous = edges
    return True, f"j = 1..{graph.n}"


def _strategies_agree(graph: SimpleGraph, k: int) -> Outcome:
    for j in range(1, graph.n + 1):
        pairwise = build_localized_graph(graph, k, j, "pairwise").edge_set()
        local = build_localized_graph(graph, k, j, "local").edge_set()
        if pairwise != local:
            return False, f"edge strategies disagree at j={j}"
    return True, "identical edge sets"


def _node_count(graph: SimpleGraph, k: int) -> Outcome:
    return _equal("nodes", build_localized_graph(graph, k, 1).node_count, chromatic_polynomial(graph, k))


def _product(graph: SimpleGraph, k: int) -> Outcome:
    for j in range(1, graph.n + 1):
        if not product_decomposition_check(graph, k, j):
            return False, f"not the product of the component coloring graphs at j={j}"
    return True, f"j = 1..{graph.n}"


def _g_le_h(graph: SimpleGraph, k: int) -> Outcome:
    g, h = compute_g(graph, k), compute_h(graph, k)
    return g <= h, f"g = {g}, h = {h}"


def _components_agree(graph: SimpleGraph, k: int) -> Outcome:
    summary = component_summary(graph, k)
    holds = summary["g"] == summary["g_max"] and summary["h"] <= summary["h_max"]
    return holds, (f"g = {summary['g']} (max {summary['g_max']}), "
                   f"h = {summary['h']} (max {summary['h_max']})")


def _structural() -> List[VerifyCase]:
    cases = []
    for name, build, k in STRUCTURAL_INSTANCES:
        checks = [("chain", "G^j_k is a spanning subgraph of G^(j+1)_k", _chain),
                  ("strategies", "both edge strategies build the same graph", _strategies_agree),
                  ("nodes", "node count equals the chromatic polynomial", _node_count),
                  ("g<=h", "g_k <= h_k", _g_le_h),
                  ("product", "G^j_k is the product of the component coloring graphs", _product)]
        for tag, claim, check in checks:
            cases.append(VerifyCase(f"{name}-{tag}", "structural", f"{claim} for {name}",
                                    lambda build=build, k=k, check=check: check(build(), k)))
    structural_names = {name for name, _, _ in STRUCTURAL_INSTANCES}
    for name, build, k in DISJOINT_INSTANCES:
        if name not in structural_names:
            cases.append(VerifyCase(f"{name}-product", "structural",
                                    f"G^j_k is the product of the component coloring graphs for {name}",
                                    lambda build=build, k=k: _product(build(), k)))
        cases.append(VerifyCase(f"{name}-components", "structural",
                                f"g is the largest component g and h at most the largest component h for {name}",
                                lambda build=build, k=k: _components_agree(build(), k)))
    return cases


def _edge_choosability() -> Outcome:
    edge = from_edges(2, [(0, 1)])
    wrong = []
    for a in range(4):
        for b in range(4):
            expected = a >= 1 and b >= 1 and a + b >= 3
            if is_f_choosable(edge, (a, b)) != expected:
                wrong.append((a, b))
    return not wrong, f"wrong verdicts for {wrong}" if wrong else "sizes 0..3 on both ends"


def _bound_holds(host: SimpleGraph, attachment: Sequence[int], k: int, which: str) -> Outcome:
    keep = [v for v in range(host.n) if v not in attachment]
    base, _ = induced_subgraph(host, keep)
    if which == "g":
        value, bound = compute_g(host, k), check_g_subgraph(host, attachment, k, compute_g(base, k))
    else:
        value, bound = compute_h(host, k), check_h_subgraph(host, attachment, k, compute_h(base, k))
    if bound.bound is None:
        return True, f"{which} = {value}, no rule applies"
    return value <= bound.bound, f"{which} = {value}, predicted <= {bound.bound} ({bound.rule})"


def _choosability() -> List[VerifyCase]:
    cases = [VerifyCase("edge-f-choosable", "choosability",
                        "an edge is f-choosable iff both sizes are positive and sum to at least 3",
                        _edge_choosability)]
    for name, build, attachment, k in (("C5", lambda: cycle(5), [4], 3),
                                       ("K1,3", lambda: star(3), [3], 3),
                                       ("K4", lambda: complete(4), [3], 5)):
        for which in ("g", "h"):
            cases.append(VerifyCase(f"{name}-{which}-bound", "choosability",
                                    f"the attachment bound on {which}_{k}({name}) is at least the true value",
                                    lambda build=build, attachment=attachment, k=k, which=which:
                                    _bound_holds(build(), attachment, k, which)))
    return cases


def _extend(host: SimpleGraph, base_graph: SimpleGraph, k: int, base_j: int) -> Outcome:
    base = search_code(base_graph, k, base_j)
    ctx = AttachmentContext(host, (host.n - 1,), k, base_j + 1)
    return _code_holds(lambda: extend_cycle(ctx, base, "loose"))


def _extension() -> List[VerifyCase]:
    return [
        VerifyCase("K1,1-to-K1,2", "extension", "a leaf extends a Gray code of K1,1 to K1,2",
                   lambda: _extend(star(2), star(1), 3, 1)),
        VerifyCase("P4-to-C5", "extension", "closing P4 into C5 extends its Gray code",
                   lambda: _extend(cycle(5), path(4), 3, compute_h(path(4), 3))),
    ]


def _table_matches(kind: str, pattern: str) -> Outcome:
    table = case_table(kind, pattern)
    labels, edges = case_graph(kind, pattern)
    if sorted(labels) != table.nodes or edges != {frozenset(e) for e in table.edges}:
        return False, "table block graph differs from the computed one"
    index = {label: i for i, label in enumerate(labels)}
    adjacency = [[] for _ in labels]
    for edge in edges:
        a, b = sorted(index[label] for label in edge)
        adjacency[a].append(b)
        adjacency[b].append(a)
    exact = {frozenset((labels[a], labels[b])) for a, b in hamiltonian_endpoint_pairs(adjacency)}
    missing = table.claimed_pairs() - exact
    if missing:
        return False, f"claimed endpoints without a path: {sorted(sorted(p) for p in missing)}"
    return True, f"{len(labels)} nodes, {len(table.claimed_pairs())} claimed endpoint pairs"


def _tables() -> List[VerifyCase]:
    return [VerifyCase(f"{kind}-{pattern}", "tables", f"the {kind} {pattern} endpoint table is exact",
                       lambda kind=kind, pattern=pattern: _table_matches(kind, pattern))
            for kind in CASE_KINDS for pattern in ("equal", "distinct")]


_BUILDERS: Dict[str, Callable[[], List[VerifyCase]]] = {
    "trees-cycles": _trees_cycles,
    "complete": _complete,
    "multipartite": _multipartite,
    "multipartite-codes": _multipartite_codes,
    "construction-L": _construction_l,
    "Lm": _lm,
    "fixture": _fixture,
    "subdivision": _subdivision,
    "loop-counterexample": _loop_counterexample,
    "degeneracy": _degeneracy,
    "hypercube": _hypercube,
    "permutations": _permutations,
    "structural": _structural,
    "choosability": _choosability,
    "extension": _extension,
    "tables": _tables,
}


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

def collect_cases(suites: Optional[Iterable[str]] = None, include_slow: bool = False) -> List[VerifyCase]:
    """
    Gather the cases of the named suites (all suites when None).

    Raises:
        PreconditionError: For an unknown suite name
    """
    names = list(suites) if suites else SUITES
    unknown = [name for name in names if name not in _BUILDERS]
    if unknown:
        raise PreconditionError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    cases = [case for name in names for case in _BUILDERS[name]()]
    if not include_slow:
        skipped = sum(1 for case in cases if case.slow)
        if skipped:
            logger.info(f"Skipping {skipped} slow case(s); pass --slow to run them")
        cases = [case for case in cases if not case.slow]
    return cases


def run_case(case: VerifyCase) -> CaseResult:
    """Run one case; budget exhaustion is undecided, any other error fails the case."""
    start = time.monotonic()
    try:
        holds, detail = case.check()
        status = PASS if holds else FAIL
    except (BudgetExceeded, UndecidedError) as e:
        status, detail = UNDECIDED, str(e)
    except RecolorError as e:
        status, detail = FAIL, f"{type(e).__name__}: {e}"
    result = CaseResult(case, status, detail, time.monotonic() - start)
    log = logger.debug if status == PASS else logger.warning
    log(f"{case.suite}/{case.name}: {status} ({detail})")
    return result


def run_suites(suites: Optional[Iterable[str]] = None, include_slow: bool = False,
               progress: bool = True) -> List[CaseResult]:
    """Run the cases of the named suites in order."""
    cases = collect_cases(suites, include_slow)
    return [run_case(case) for case in tqdm(cases, desc="verify", unit="case",
                                            disable=None if progress else True)]


def summarize(results: Sequence[CaseResult]) -> Dict[str, int]:
    counts = {PASS: 0, FAIL: 0, UNDECIDED: 0}
    for result in results:
        counts[result.status] += 1
    return counts


def exit_code(results: Sequence[CaseResult]) -> int:
    """0 when everything passes, 1 on any failure, 2 when some case is only undecided."""
    counts = summarize(results)
    if counts[FAIL]:
        return 1
    if counts[UNDECIDED]:
        return 2
    return 0
