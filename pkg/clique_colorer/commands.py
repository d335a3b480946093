import logging
import json
import os
from typing import List, Tuple

import i18n

from clique_colorer import (
    EXIT_INFEASIBLE,
    EXIT_OK,
    EXIT_VIOLATIONS,
    settings,
)
from clique_colorer.atlas import enumerate_graphs
from clique_colorer.exceptions import InternalFault, PreconditionError
from clique_colorer.fixtures import FIXTURES, two_k5_sequence
from clique_colorer.formating import format_coloring, format_duration
from clique_colorer.graph6 import (
    encode_graph6,
    read_graph_file,
    write_graph6_lines,
    write_graph_file,
)
from clique_colorer.logging import if_exception_log, logger
from clique_colorer.recognizers import RECOGNIZERS, recognize, recognize_all
from clique_colorer.solver import (
    ColoringConstraint,
    clique_chromatic_number,
    verify_clique_coloring,
    verify_strong,
)
from clique_colorer.structural import (
    strong_three_color,
    two_color_claw_free,
    two_color_singular,
)
from clique_colorer.sweep import run_sweep
from clique_colorer.table import tabularize
from clique_colorer.wagner import (
    NotK33MinorFree,
    WagnerSequence,
    compose,
    decompose,
    random_sequence,
)

Result = Tuple[int, List[str]]

COLOR_METHODS = ("exact", "wagner", "singular", "clawfree2")


def _dump(payload):
    return json.dumps(payload, indent=2)


def _is_sequence_file(path):
    return os.path.splitext(path)[1] == ".json"


def _load_sequence(path) -> WagnerSequence:
    with open(path) as f:
        return WagnerSequence.loads(f.read())


def _write_or_print(text, out) -> List[str]:
    if out is None:
        return [text]
    with open(out, "w") as f:
        f.write(text + "\n")
    return [i18n.t("written", path=out)]


@if_exception_log("Unable to compute the clique-chromatic number: %{e}", level=logging.DEBUG)
def cmd_chi(path, strong=False, max_k=None) -> Result:
    logger.info(f"chi on {path}")
    g = read_graph_file(path)
    constraint = ColoringConstraint({}, max_k) if max_k is not None else None
    k, coloring = clique_chromatic_number(g, strong=strong, constraint=constraint)
    key = "chi.strong_result" if strong else "chi.result"
    return EXIT_OK, [
        i18n.t(key, k=k),
        i18n.t("chi.witness", coloring=format_coloring(coloring.colors)),
    ]


def _verified(g, coloring, strong, max_k):
    verify = verify_strong if strong else verify_clique_coloring
    violation = verify(g, coloring)
    if violation is not None or coloring.k > max_k:
        raise InternalFault(f"refusing to print an invalid coloring ({violation})")
    return coloring


@if_exception_log("Unable to color the graph: %{e}", level=logging.DEBUG)
def cmd_color(path, method="exact", trace=False) -> Result:
    logger.info(f"color --method {method} on {path}")
    if method not in COLOR_METHODS:
        raise PreconditionError(f"unknown method {method!r}")
    payload = {"method": method}
    if method == "wagner":
        if _is_sequence_file(path):
            seq = _load_sequence(path)
        else:
            result = decompose(read_graph_file(path))
            if isinstance(result, NotK33MinorFree):
                raise PreconditionError("graph has a K3,3 minor")
            seq = result
        g, _ = compose(seq)
        coloring, steps = strong_three_color(seq)
        _verified(g, coloring, strong=True, max_k=3)
        if trace:
            payload["trace"] = steps.to_json()
    else:
        g = read_graph_file(path)
        if method == "exact":
            _, coloring = clique_chromatic_number(g)
            _verified(g, coloring, strong=False, max_k=max(g.n, 1))
        elif method == "singular":
            coloring = _verified(g, two_color_singular(g), strong=False, max_k=2)
        else:
            coloring = _verified(g, two_color_claw_free(g), strong=False, max_k=2)
    payload["k"] = coloring.k
    payload["coloring"] = coloring.to_json()
    return EXIT_OK, [_dump(payload)]


@if_exception_log("Unable to run the recognizers: %{e}", level=logging.DEBUG)
def cmd_recognize(path, predicate=None, all_predicates=False, table=False) -> Result:
    logger.info(f"recognize on {path}")
    g = read_graph_file(path)
    if all_predicates or predicate is None:
        reports = recognize_all(g)
    else:
        if predicate not in RECOGNIZERS:
            raise PreconditionError(
                f"unknown predicate {predicate!r}; choose from {', '.join(RECOGNIZERS)}"
            )
        reports = [recognize(g, predicate)]
    if table:
        rows = [
            [r.predicate, r.verdict, json.dumps(r.witness) if r.witness else "-"]
            for r in reports
        ]
        heads = [
            i18n.t("recognize.predicate"),
            i18n.t("recognize.verdict"),
            i18n.t("recognize.witness"),
        ]
        return EXIT_OK, [tabularize(heads, rows, [0, 0, 60])]
    if len(reports) == 1:
        return EXIT_OK, [_dump(reports[0].to_json())]
    return EXIT_OK, [_dump([r.to_json() for r in reports])]


@if_exception_log("Unable to generate a sequence: %{e}", level=logging.DEBUG)
def cmd_generate(pieces, seed, out=None, min_size=3, max_size=12) -> Result:
    logger.info(f"generate --pieces {pieces} --seed {seed}")
    seq = random_sequence(seed, pieces, (min_size, max_size))
    return EXIT_OK, _write_or_print(seq.dumps(), out)


@if_exception_log("Unable to decompose the graph: %{e}", level=logging.DEBUG)
def cmd_decompose(path, out=None) -> Result:
    logger.info(f"decompose on {path}")
    g = read_graph_file(path)
    result = decompose(g)
    if isinstance(result, NotK33MinorFree):
        return EXIT_INFEASIBLE, [
            i18n.t("decompose.not_k33_free"),
            _dump(result.to_json()),
        ]
    return EXIT_OK, _write_or_print(result.dumps(), out)


@if_exception_log("Sweep command failed: %{e}", level=logging.DEBUG)
def cmd_sweep(
    family,
    n_max,
    n_min=1,
    atlas=None,
    out=None,
    timeout=None,
    threads=1,
    include_disconnected=False,
) -> Result:
    report = run_sweep(
        family,
        n_max,
        n_min=n_min,
        atlas_path=atlas,
        out=out,
        timeout=timeout,
        threads=threads,
        include_disconnected=include_disconnected,
    )
    rows = [
        [i18n.t("sweep.examined"), report.examined],
        [i18n.t("sweep.members"), report.members],
        [i18n.t("sweep.violations"), len(report.violations)],
        [i18n.t("sweep.timeouts"), len(report.timeouts)],
        [i18n.t("sweep.exceptions"), len(report.exceptions)],
    ] + [
        [i18n.t("sweep.phase", phase=phase), format_duration(seconds)]
        for phase, seconds in report.timings.items()
    ]
    messages = [
        i18n.t("sweep.title", family=family, n_min=n_min, n_max=n_max),
        tabularize([i18n.t("sweep.item"), i18n.t("sweep.value")], rows),
    ]
    for g6, _, detail in report.violations:
        messages.append(i18n.t("sweep.violation", graph6=g6, detail=detail))
    for g6, detail in report.exceptions:
        messages.append(i18n.t("sweep.exception", graph6=g6, detail=detail))
    if out is not None:
        messages.append(i18n.t("written", path=out))
    return (EXIT_VIOLATIONS if report.violations else EXIT_OK), messages


def check_fixture(fixture) -> List[str]:
    """
    Declared predicates and bounds that the fixture does not satisfy
    """
    mismatches = []
    for name, expected in fixture.predicates.items():
        verdict = recognize(fixture.graph, name).verdict
        if verdict != expected:
            mismatches.append(f"{name}: expected {expected}, got {verdict}")
    if fixture.chi_c_at_most is not None:
        k, _ = clique_chromatic_number(fixture.graph)
        if k > fixture.chi_c_at_most:
            mismatches.append(f"chi_c = {k} exceeds {fixture.chi_c_at_most}")
    return mismatches


@if_exception_log("Fixture command failed: %{e}", level=logging.DEBUG)
def cmd_fixtures(check=False, write_dir=None) -> Result:
    messages = []
    code = EXIT_OK
    if write_dir is not None:
        os.makedirs(write_dir, exist_ok=True)
        for fixture in FIXTURES:
            write_graph_file(os.path.join(write_dir, f"{fixture.name}.g6"), fixture.graph)
        with open(os.path.join(write_dir, "two-k5.json"), "w") as f:
            f.write(two_k5_sequence().dumps() + "\n")
        messages.append(i18n.t("fixtures.written", count=len(FIXTURES) + 1, path=write_dir))
    if check:
        for fixture in FIXTURES:
            mismatches = check_fixture(fixture)
            if mismatches:
                code = EXIT_VIOLATIONS
                for mismatch in mismatches:
                    messages.append(
                        i18n.t("fixtures.mismatch", name=fixture.name, detail=mismatch)
                    )
        if code == EXIT_OK:
            messages.append(i18n.t("fixtures.all_pass", count=len(FIXTURES)))
    if not check and write_dir is None:
        rows = [
            [fixture.name, fixture.graph.n, fixture.graph.edge_count, fixture.provenance]
            for fixture in FIXTURES
        ]
        heads = [
            i18n.t("fixtures.name"),
            "n",
            "m",
            i18n.t("fixtures.provenance"),
        ]
        messages.append(tabularize(heads, rows, [0, 0, 0, 70]))
    return code, messages


@if_exception_log("Atlas command failed: %{e}", level=logging.DEBUG)
def cmd_atlas(n_max=None, out=None, n_min=1, connected_only=False) -> Result:
    n_max = settings.ATLAS_N_MAX if n_max is None else n_max
    graphs = enumerate_graphs(n_min, n_max, connected_only=connected_only)
    if out is None:
        return EXIT_OK, [encode_graph6(g) for g in graphs]
    count = write_graph6_lines(out, graphs)
    return EXIT_OK, [i18n.t("atlas.written", count=count, path=out)]
