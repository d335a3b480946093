"""
Exhaustive checks of coloring bounds over every small graph of a family.
"""
from __future__ import annotations

import csv
import threading
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from clique_colorer import settings
from clique_colorer.atlas import enumerate_graphs
from clique_colorer.cancellation import CancelToken
from clique_colorer.cliques import independence_number
from clique_colorer.exceptions import (
    Cancelled,
    ConstructionFailed,
    CliqueColorerError,
    OddCycleException,
    PreconditionError,
)
from clique_colorer.formating import format_duration, format_seconds
from clique_colorer.graph import Graph, connected_components, induced_subgraph, is_connected
from clique_colorer.graph6 import encode_graph6, iter_graph6_lines, parse_graph6
from clique_colorer.logging import if_exception_log, logger
from clique_colorer.recognizers import (
    find_singular_vertex,
    is_claw_free,
    is_k33_minor_free,
    is_line_graph,
    is_odd_cycle,
    is_planar,
    is_triangle_free,
)
from clique_colorer.schedule import ProgressTicker
from clique_colorer.solver import chromatic_number, clique_chromatic_number, verify_clique_coloring

CSV_COLUMNS = (
    "graph6",
    "n",
    "predicates",
    "chi_c",
    "strong_chi_c",
    "alpha",
    "status",
    "elapsed",
)
PREDICATE_COLUMNS = (
    ("claw-free", is_claw_free),
    ("triangle-free", is_triangle_free),
    ("odd-cycle", is_odd_cycle),
    ("planar", is_planar),
    ("k33-minor-free", is_k33_minor_free),
    ("line-graph", is_line_graph),
    ("singular-vertex", find_singular_vertex),
)

OK = "ok"
VIOLATION = "violation"
EXPECTED_EXCEPTION = "exception"
TIMEOUT = "timeout"
SKIPPED = "skipped"


@dataclass
class Facts:
    chi_c: int
    strong_chi_c: int
    alpha: int


@dataclass(frozen=True)
class Family:
    name: str
    description: str
    member: Callable[[Graph], bool]
    check: Callable[[Graph, Facts, CancelToken], Tuple[str, str]]


def _odd_cycle_component(g: Graph) -> Optional[int]:
    for component in connected_components(g):
        sub, _ = induced_subgraph(g, component)
        if sub.n > 3 and is_odd_cycle(sub).verdict:
            return sub.n
    return None


def _check_strong3(g, facts, cancel):
    if facts.strong_chi_c <= 3:
        return OK, ""
    return VIOLATION, f"strong chi_c = {facts.strong_chi_c}"


def _check_clawfree2(g, facts, cancel):
    from clique_colorer.structural import two_color_claw_free

    order = _odd_cycle_component(g)
    if order is not None:
        if facts.chi_c == 3:
            return EXPECTED_EXCEPTION, f"odd cycle of order {order}"
        return VIOLATION, f"odd cycle of order {order} with chi_c = {facts.chi_c}"
    if facts.chi_c > 2:
        return VIOLATION, f"chi_c = {facts.chi_c}"
    try:
        coloring = two_color_claw_free(g, cancel)
    except OddCycleException as e:
        return VIOLATION, str(e)
    if coloring.k > 2 or verify_clique_coloring(g, coloring) is not None:
        return VIOLATION, "claw-free 2-coloring does not verify"
    return OK, ""


def _check_trianglefree(g, facts, cancel):
    chi, _ = chromatic_number(g, cancel)
    if facts.chi_c == max(chi, 1):
        return OK, ""
    return VIOLATION, f"chi_c = {facts.chi_c} but chi = {chi}"


def _check_alpha(g, facts, cancel):
    if g.n == 5 and is_odd_cycle(g).verdict:
        return EXPECTED_EXCEPTION, "C5 has chi_c = 3 > alpha = 2"
    if facts.chi_c <= facts.alpha:
        return OK, ""
    return VIOLATION, f"chi_c = {facts.chi_c} > alpha = {facts.alpha}"


def _check_roundtrip(g, facts, cancel):
    from clique_colorer.structural import strong_three_color
    from clique_colorer.wagner import compose, decompose

    seq = decompose(g)
    composed, _ = compose(seq)
    if composed != g:
        return VIOLATION, "compose(decompose(g)) differs from g"
    _, trace = strong_three_color(seq, cancel)
    if any(step.fallback for step in trace.steps):
        return OK, "fallback used"
    return OK, ""


def _check_singular(g, facts, cancel):
    from clique_colorer.structural import two_color_singular

    try:
        coloring = two_color_singular(g, cancel)
    except PreconditionError as e:
        return SKIPPED, str(e)
    except ConstructionFailed as e:
        return VIOLATION, str(e)
    if coloring.k > 2 or verify_clique_coloring(g, coloring) is not None:
        return VIOLATION, "singular 2-coloring does not verify"
    return OK, ""


def _check_linegraph(g, facts, cancel):
    order = _odd_cycle_component(g)
    if order is not None:
        if facts.chi_c == 3:
            return EXPECTED_EXCEPTION, f"odd cycle of order {order}"
        return VIOLATION, f"odd cycle of order {order} with chi_c = {facts.chi_c}"
    if facts.chi_c <= 2:
        return OK, ""
    return VIOLATION, f"chi_c = {facts.chi_c}"


def _k33_free(g):
    return is_k33_minor_free(g).verdict


FAMILIES: Dict[str, Family] = {
    family.name: family
    for family in (
        Family(
            "k33free-strong3",
            "graphs with no K3,3 minor are strongly 3-clique-colorable",
            _k33_free,
            _check_strong3,
        ),
        Family(
            "clawfree-k33free-2",
            "claw-free graphs with no K3,3 minor other than long odd cycles "
            "are 2-clique-colorable",
            lambda g: is_claw_free(g).verdict and _k33_free(g),
            _check_clawfree2,
        ),
        Family(
            "trianglefree-chi",
            "triangle-free graphs have clique-chromatic number equal to chi",
            lambda g: is_triangle_free(g).verdict,
            _check_trianglefree,
        ),
        Family(
            "alpha-bound",
            "chi_c is at most alpha when alpha is at least 2, except C5",
            lambda g: g.n >= 2 and independence_number(g)[0] >= 2,
            _check_alpha,
        ),
        Family(
            "wagner-roundtrip",
            "decompose then compose gives back every graph with no K3,3 minor",
            _k33_free,
            _check_roundtrip,
        ),
        Family(
            "singular-2",
            "graphs with a singular vertex, alpha 3 and no K3,3 minor are "
            "2-clique-colorable by construction",
            lambda g: find_singular_vertex(g).verdict
            and independence_number(g)[0] == 3
            and _k33_free(g),
            _check_singular,
        ),
        Family(
            "linegraph-k33free-2",
            "line graphs with no K3,3 minor other than long odd cycles are "
            "2-clique-colorable",
            lambda g: is_line_graph(g).verdict and _k33_free(g),
            _check_linegraph,
        ),
    )
}


@dataclass
class SweepRow:
    graph6: str
    n: int
    predicates: str
    chi_c: Optional[int]
    strong_chi_c: Optional[int]
    alpha: Optional[int]
    status: str
    detail: str
    elapsed: float

    def csv_fields(self):
        return [
            self.graph6,
            self.n,
            self.predicates,
            "" if self.chi_c is None else self.chi_c,
            "" if self.strong_chi_c is None else self.strong_chi_c,
            "" if self.alpha is None else self.alpha,
            self.status,
            format_seconds(self.elapsed),
        ]


@dataclass
class SweepReport:
    family: str
    n_min: int
    n_max: int
    examined: int = 0
    rows: List[SweepRow] = field(default_factory=list)
    violations: List[Tuple[str, str, str]] = field(default_factory=list)
    timeouts: List[str] = field(default_factory=list)
    exceptions: List[Tuple[str, str]] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def members(self) -> int:
        return len(self.rows)

    def add(self, row: SweepRow):
        self.rows.append(row)
        if row.status == VIOLATION:
            self.violations.append((row.graph6, self.family, row.detail))
        elif row.status == TIMEOUT:
            self.timeouts.append(row.graph6)
        elif row.status == EXPECTED_EXCEPTION:
            self.exceptions.append((row.graph6, row.detail))

    def to_json(self):
        return {
            "family": self.family,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "examined": self.examined,
            "members": self.members,
            "violations": [
                {"graph6": g6, "predicate": predicate, "detail": detail}
                for g6, predicate, detail in self.violations
            ],
            "timeouts": list(self.timeouts),
            "exceptions": [
                {"graph6": g6, "detail": detail} for g6, detail in self.exceptions
            ],
            "timings": {phase: round(t, 4) for phase, t in self.timings.items()},
        }


def predicate_names(g: Graph) -> str:
    return ";".join(name for name, test in PREDICATE_COLUMNS if test(g).verdict)


def examine(text: str, family: str, timeout: float) -> Optional[SweepRow]:
    """
    Checks one graph given as graph6 text; None when it is outside the family
    """
    g = parse_graph6(text)
    spec = FAMILIES[family]
    start = time.perf_counter()
    if not spec.member(g):
        return None
    cancel = CancelToken.with_timeout(timeout)
    chi_c = strong = alpha = None
    try:
        chi_c, _ = clique_chromatic_number(g, cancel=cancel)
        strong, _ = clique_chromatic_number(g, strong=True, cancel=cancel)
        alpha, _ = independence_number(g)
        status, detail = spec.check(g, Facts(chi_c, strong, alpha), cancel)
    except Cancelled:
        status, detail = TIMEOUT, f"no answer within {timeout}s"
    except CliqueColorerError as e:
        status, detail = VIOLATION, f"{type(e).__name__}: {e}"
    return SweepRow(
        text,
        g.n,
        predicate_names(g),
        chi_c,
        strong,
        alpha,
        status,
        detail,
        time.perf_counter() - start,
    )


def _candidates(n_min, n_max, atlas_path, include_disconnected) -> List[str]:
    if atlas_path is None:
        graphs: Iterable[Graph] = enumerate_graphs(
            n_min, n_max, connected_only=not include_disconnected
        )
        return [encode_graph6(g) for g in graphs]
    texts = []
    for line in iter_graph6_lines(atlas_path):
        g = parse_graph6(line)
        if n_min <= g.n <= n_max and (include_disconnected or is_connected(g)):
            texts.append(line)
    return texts


@if_exception_log("Sweep failed: %{e}")
def run_sweep(
    family: str,
    n_max: int,
    n_min: int = 1,
    atlas_path: str = None,
    out: str = None,
    timeout: float = None,
    threads: int = 1,
    include_disconnected: bool = False,
) -> SweepReport:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    timeout = settings.TIMEOUT if timeout is None else timeout
    report = SweepReport(family, n_min, n_max)

    started = time.perf_counter()
    texts = _candidates(n_min, n_max, atlas_path, include_disconnected)
    report.timings["enumerate"] = time.perf_counter() - started
    logger.info(
        f"Sweeping {len(texts)} graphs of order {n_min}..{n_max} for {family} "
        f"with {threads} worker(s)"
    )

    done = [0]
    lock = threading.Lock()

    def log_progress():
        with lock:
            logger.info(f"{family}: examined {done[0]} of {len(texts)} graphs")

    started = time.perf_counter()
    worker = partial(examine, family=family, timeout=timeout)
    with ProgressTicker(log_progress, settings.PROGRESS_SECONDS):
        if threads > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                results = pool.map(worker, texts, chunksize=16)
                for row in results:
                    with lock:
                        done[0] += 1
                    if row is not None:
                        report.add(row)
        else:
            for text in texts:
                row = worker(text)
                with lock:
                    done[0] += 1
                if row is not None:
                    report.add(row)
    report.examined = len(texts)
    report.rows.sort(key=lambda row: row.graph6)
    report.violations.sort()
    report.timeouts.sort()
    report.exceptions.sort()
    report.timings["examine"] = time.perf_counter() - started

    for g6 in report.timeouts:
        logger.warning(f"{family}: timed out on {g6}")

    if out is not None:
        started = time.perf_counter()
        write_csv(out, report.rows)
        report.timings["write"] = time.perf_counter() - started
    logger.info(
        f"{family}: {report.members} members, {len(report.violations)} violations, "
        f"{len(report.timeouts)} timeouts in "
        f"{format_duration(sum(report.timings.values()))}"
    )
    return report


def write_csv(path: str, rows: Iterable[SweepRow]) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for row in sorted(rows, key=lambda row: row.graph6):
            writer.writerow(row.csv_fields())
