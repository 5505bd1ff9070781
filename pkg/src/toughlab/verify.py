"""Exhaustive desk-scale verification: the conjecture scan plus one named
check suite per theorem, lemma, and proposition.

Every suite is exact (no tolerances) and fails loudly with a reproducer
graph6 string. The scan records each minimally tough graph with toughness
above 1/2 in the scanned class; hits that contradict a proved theorem are
distinguished from open-conjecture candidates.
"""

from __future__ import annotations

import csv
import json
import multiprocessing
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional

from .chordal import (
    clique_tree,
    is_chordal,
    is_minimal_separator,
    is_moplicial,
    is_simple,
    maximum_neighbor,
    maximum_neighboring_edge,
    minimal_separators,
    minimal_separators_via_clique_tree,
    moplexes,
)
from .chordal import is_clique as _mask_is_clique
from .families import matched_cliques, wheel
from .graphs import (
    Graph,
    GraphError,
    bits,
    components,
    connected_chordal_reps,
    graph_reps,
    parse_graph6,
    to_graph6,
)
from .rational import at_most_one, exceeds_half, in_half_one_interval
from .recognize import (
    find_hole,
    find_induced_claw,
    find_induced_sun,
    find_split_obstruction,
    is_interval_like,
    is_split,
    is_strongly_chordal,
    universal_vertices,
)
from .toughness import (
    Minimality,
    check_condition2_restricted,
    check_non_minimality_characterization,
    check_sufficient_condition,
    find_edge_witness_set,
    is_minimally_tough,
    toughness,
    vertex_connectivity,
)

SCAN_MAX_N = 9
SCAN_CLASSES = ("chordal", "strongly_chordal", "split", "interval_like", "all")

SEVERITY_VIOLATION = "theorem_violation"
SEVERITY_CANDIDATE = "conjecture_candidate"
SEVERITY_FINDING = "finding"


@dataclass
class CheckReport:
    suite: str
    n_max: int
    graphs_checked: int
    violations: list[tuple[str, str]]
    elapsed_s: float

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n_max": self.n_max,
            "graphs_checked": self.graphs_checked,
            "violations": [{"graph6": g6, "detail": d} for g6, d in self.violations],
            "elapsed_s": self.elapsed_s,
        }


@dataclass
class ScanReport:
    class_filter: str
    n_max: int
    per_n: dict[int, int]
    counterexamples: list[tuple[str, Fraction]]
    elapsed_s: float

    @property
    def graphs_checked(self) -> int:
        return sum(self.per_n.values())

    def classified(self) -> list[tuple[str, Fraction, str, str]]:
        return [(g6, tau, *classify_counterexample(g6, tau))
                for g6, tau in self.counterexamples]

    def theorem_violations(self) -> list[tuple[str, str]]:
        return [(g6, detail) for g6, tau, severity, detail in self.classified()
                if severity == SEVERITY_VIOLATION]

    @property
    def passed(self) -> bool:
        return not self.theorem_violations()

    def to_json_dict(self) -> dict:
        return {
            "suite": "scan_conjecture",
            "class_filter": self.class_filter,
            "n_max": self.n_max,
            "graphs_checked": self.graphs_checked,
            "per_n": {str(n): c for n, c in sorted(self.per_n.items())},
            "violations": [{"graph6": g6, "detail": d}
                           for g6, d in self.theorem_violations()],
            "counterexamples": [
                {"graph6": g6, "tau_num": tau.numerator, "tau_den": tau.denominator}
                for g6, tau in self.counterexamples
            ],
            "elapsed_s": self.elapsed_s,
        }


def report_from_json(data: dict) -> "CheckReport | ScanReport":
    if data.get("suite") == "scan_conjecture" and "counterexamples" in data:
        return ScanReport(
            class_filter=data["class_filter"],
            n_max=data["n_max"],
            per_n={int(k): v for k, v in data["per_n"].items()},
            counterexamples=[
                (c["graph6"], Fraction(c["tau_num"], c["tau_den"]))
                for c in data["counterexamples"]
            ],
            elapsed_s=data["elapsed_s"],
        )
    return CheckReport(
        suite=data["suite"],
        n_max=data["n_max"],
        graphs_checked=data["graphs_checked"],
        violations=[(v["graph6"], v["detail"]) for v in data["violations"]],
        elapsed_s=data["elapsed_s"],
    )


def emit_report(report, fmt: str = "json", destination=None) -> None:
    """Serialize a report as JSON or CSV to a path or open file."""
    if fmt not in ("json", "csv"):
        raise ValueError(f"unknown report format {fmt!r}")
    own = isinstance(destination, (str, bytes)) or hasattr(destination, "__fspath__")
    fh = open(destination, "w", newline="") if own else destination
    try:
        if fmt == "json":
            json.dump(report.to_json_dict(), fh, indent=2)
            fh.write("\n")
        else:
            writer = csv.writer(fh, lineterminator="\n")
            if isinstance(report, ScanReport):
                writer.writerow(["graph6", "num", "den"])
                for g6, tau in report.counterexamples:
                    writer.writerow([g6, tau.numerator, tau.denominator])
            else:
                writer.writerow(["graph6", "detail"])
                for g6, detail in report.violations:
                    writer.writerow([g6, detail])
    finally:
        if own:
            fh.close()


# ---------------------------------------------------------------------------
# Conjecture scan
# ---------------------------------------------------------------------------

def _class_members(n: int, class_filter: str) -> list[Graph]:
    if class_filter == "all":
        return [g for g in graph_reps(n) if g.is_connected()]
    chordal = connected_chordal_reps(n)
    if class_filter == "chordal":
        return list(chordal)
    if class_filter == "strongly_chordal":
        return [g for g in chordal if is_strongly_chordal(g).member]
    if class_filter == "split":
        return [g for g in chordal if is_split(g).member]
    if class_filter == "interval_like":
        return [g for g in chordal if is_interval_like(g)]
    raise GraphError(f"unknown scan class {class_filter!r}")


def _scan_worker(g6: str) -> Optional[tuple[str, int, int]]:
    g = parse_graph6(g6)
    result = is_minimally_tough(g)
    if result.verdict is Minimality.MINIMALLY_TOUGH and exceeds_half(result.toughness):
        t = result.toughness
        return g6, t.numerator, t.denominator
    return None


def classify_counterexample(g6: str, tau: Fraction) -> tuple[str, str]:
    """Severity of a scan hit: proved-theorem violation, open-conjecture
    candidate, or a plain finding outside the conjecture's class."""
    g = parse_graph6(g6)
    if not is_chordal(g):
        return SEVERITY_FINDING, f"minimally {tau}-tough but not chordal"
    if at_most_one(tau):
        return SEVERITY_VIOLATION, (
            f"chordal and minimally {tau}-tough with tau in (1/2,1]")
    if is_strongly_chordal(g).member:
        return SEVERITY_VIOLATION, (
            f"strongly chordal and minimally {tau}-tough with tau > 1/2")
    if is_split(g).member:
        return SEVERITY_VIOLATION, (
            f"split and minimally {tau}-tough with tau > 1/2")
    if universal_vertices(g):
        return SEVERITY_VIOLATION, (
            f"chordal with a universal vertex, minimally {tau}-tough, tau > 1")
    return SEVERITY_CANDIDATE, (
        f"chordal and minimally {tau}-tough with tau > 1; refutation candidate")


def scan_conjecture(n_max: int, class_filter: str = "chordal",
                    jobs: int = 1) -> ScanReport:
    """Record every minimally tough graph with toughness above 1/2 among the
    connected members of the class, over all isomorphism classes up to n_max."""
    if not 1 <= n_max <= SCAN_MAX_N:
        raise GraphError(f"scan bound {n_max} outside 1..{SCAN_MAX_N}")
    if class_filter not in SCAN_CLASSES:
        raise GraphError(f"unknown scan class {class_filter!r}")
    start = time.perf_counter()
    per_n: dict[int, int] = {}
    hits: list[tuple[str, Fraction]] = []
    for n in range(1, n_max + 1):
        members = _class_members(n, class_filter)
        per_n[n] = len(members)
        lines = [to_graph6(g) for g in members]
        if jobs > 1 and len(lines) > 1:
            with multiprocessing.Pool(jobs) as pool:
                results = pool.map(_scan_worker, lines, chunksize=16)
        else:
            results = [_scan_worker(g6) for g6 in lines]
        for found in results:
            if found is not None:
                hits.append((found[0], Fraction(found[1], found[2])))
    return ScanReport(class_filter, n_max, per_n, hits,
                      time.perf_counter() - start)


# ---------------------------------------------------------------------------
# Named suites
# ---------------------------------------------------------------------------

def _graphs_upto(n_max):
    for n in range(1, n_max + 1):
        yield from graph_reps(n)


def _chordal_upto(n_max):
    for n in range(1, n_max + 1):
        yield from connected_chordal_reps(n)


def _suite_connectivity_bound(n_max: int):
    """tau <= kappa/2 on connected noncomplete graphs."""
    checked, violations = 0, []
    for g in _graphs_upto(n_max):
        if g.is_complete() or not g.is_connected():
            continue
        checked += 1
        t = toughness(g)
        kappa = vertex_connectivity(g)
        if 2 * t.numerator > kappa * t.denominator:
            violations.append((to_graph6(g), f"tau={t} > kappa/2 with kappa={kappa}"))
    return checked, violations


def _suite_witness_sets(n_max: int):
    """Every edge of every minimally tough graph admits a witness set."""
    checked, violations = 0, []
    for g in _graphs_upto(n_max):
        if g.is_complete() or not g.is_connected():
            continue
        if is_minimally_tough(g).verdict is not Minimality.MINIMALLY_TOUGH:
            continue
        checked += 1
        for edge in g.edges():
            if find_edge_witness_set(g, edge) is None:
                violations.append((to_graph6(g), f"edge {edge} has no witness set"))
    return checked, violations


def _is_minimal_separator_direct(g: Graph, s: int) -> bool:
    """Definitional oracle: a minimal u-v separator for some pair u, v.

    Separation is monotone under growing the cut, so minimality only needs
    the single-vertex deletions of s.
    """
    comps = components(g, s)
    if len(comps) < 2:
        return False

    def separated(cut: int, u: int, v: int) -> bool:
        for comp in components(g, cut):
            if comp >> u & 1:
                return not comp >> v & 1
        return False

    outside = [v for v in range(g.n) if not s >> v & 1]
    for u, v in combinations(outside, 2):
        if not separated(s, u, v):
            continue
        if all(not separated(s ^ (1 << w), u, v) for w in bits(s)):
            return True
    return False


def _suite_minseparator(n_max: int):
    """S-full characterization agrees with the definitional minimal separator."""
    checked, violations = 0, []
    for g in _graphs_upto(n_max):
        checked += 1
        for s in range(1 << g.n):
            if is_minimal_separator(g, s) != _is_minimal_separator_direct(g, s):
                violations.append(
                    (to_graph6(g), f"S-full test disagrees on cut mask {s}"))
    return checked, violations


def _suite_dirac(n_max: int):
    """Chordal iff every minimal separator induces a clique."""
    checked, violations = 0, []
    for g in _graphs_upto(n_max):
        checked += 1
        all_cliques = all(_mask_is_clique(g, s) for s in minimal_separators(g))
        if is_chordal(g) != all_cliques:
            violations.append(
                (to_graph6(g), "chordality and clique-separator test disagree"))
    return checked, violations


def _suite_cliquetree_separators(n_max: int):
    """Clique-tree edge intersections equal the brute-force minimal separators."""
    checked, violations = 0, []
    for g in _chordal_upto(n_max):
        checked += 1
        via_tree = minimal_separators_via_clique_tree(g, clique_tree(g))
        if via_tree != minimal_separators(g):
            violations.append((to_graph6(g), "separator sets differ"))
    return checked, violations


def _suite_two_moplexes(n_max: int):
    """Every noncomplete graph has at least two moplexes."""
    checked, violations = 0, []
    for g in _graphs_upto(n_max):
        if g.is_complete():
            continue
        checked += 1
        found = len(moplexes(g))
        if found < 2:
            violations.append((to_graph6(g), f"only {found} moplex(es)"))
    return checked, violations


def _suite_simple_moplicial(n_max: int):
    """Every simple vertex belongs to a moplex."""
    checked, violations = 0, []
    for g in _graphs_upto(n_max):
        checked += 1
        for v in range(g.n):
            if is_simple(g, v) and not is_moplicial(g, v):
                violations.append((to_graph6(g), f"simple vertex {v} not moplicial"))
    return checked, violations


def _suite_characterization(n_max: int):
    """The two-condition edge test agrees with per-edge toughness recomputation."""
    checked, violations = 0, []
    for g in _graphs_upto(n_max):
        if g.is_complete() or not g.is_connected():
            continue
        checked += 1
        edge = check_non_minimality_characterization(g)
        direct = is_minimally_tough(g).verdict is Minimality.NOT_MINIMAL
        if (edge is not None) != direct:
            violations.append(
                (to_graph6(g), f"characterization edge={edge}, direct NotMinimal={direct}"))
    return checked, violations


def _suite_restricted_separators(n_max: int):
    """Restricted and unrestricted separator conditions agree on every edge."""
    checked, violations = 0, []
    for g in _graphs_upto(n_max):
        if g.is_complete() or not g.is_connected():
            continue
        checked += 1
        for edge in g.edges():
            restricted, unrestricted = check_condition2_restricted(g, edge)
            if restricted != unrestricted:
                violations.append(
                    (to_graph6(g),
                     f"edge {edge}: restricted={restricted} unrestricted={unrestricted}"))
    return checked, violations


def _suite_sufficient(n_max: int):
    """The common-neighbor hypothesis at t = tau implies not minimally tough."""
    checked, violations = 0, []
    for g in _graphs_upto(n_max):
        if g.is_complete() or not g.is_connected():
            continue
        checked += 1
        t = toughness(g)
        edge = check_sufficient_condition(g, t)
        if edge is not None:
            if is_minimally_tough(g).verdict is Minimality.MINIMALLY_TOUGH:
                violations.append(
                    (to_graph6(g), f"edge {edge} satisfies the hypothesis yet minimal"))
    return checked, violations


def _suite_chordal_interval(n_max: int):
    """No minimally tough graph with tau in (1/2,1] is hole-free (= chordal)."""
    checked, violations = 0, []
    for g in _graphs_upto(n_max):
        if g.is_complete() or not g.is_connected():
            continue
        checked += 1
        result = is_minimally_tough(g)
        if result.verdict is Minimality.MINIMALLY_TOUGH and in_half_one_interval(result.toughness):
            if find_hole(g) is None:
                violations.append(
                    (to_graph6(g),
                     f"minimally {result.toughness}-tough chordal graph in (1/2,1]"))
    return checked, violations


def _suite_moplicial_neighbors(n_max: int):
    """A chordal graph whose moplicial vertex has a maximum neighbor or
    maximum neighboring edge is not minimally tough once tau > 1/2."""
    checked, violations = 0, []
    for g in _chordal_upto(n_max):
        if g.is_complete():
            continue
        checked += 1
        result = is_minimally_tough(g)
        if result.verdict is not Minimality.MINIMALLY_TOUGH:
            continue
        if not exceeds_half(result.toughness):
            continue
        for moplex in moplexes(g):
            for v in bits(moplex):
                if maximum_neighbor(g, v) is not None or \
                        maximum_neighboring_edge(g, v) is not None:
                    violations.append(
                        (to_graph6(g),
                         f"minimally tough, moplicial vertex {v} has a maximum "
                         f"neighbor or neighboring edge"))
    return checked, violations


def _suite_strongly_chordal(n_max: int):
    """No minimally tough strongly chordal graph with tau > 1/2."""
    checked, violations = 0, []
    for g in _chordal_upto(n_max):
        if g.is_complete() or not is_strongly_chordal(g).member:
            continue
        checked += 1
        result = is_minimally_tough(g)
        if result.verdict is Minimality.MINIMALLY_TOUGH and exceeds_half(result.toughness):
            violations.append(
                (to_graph6(g), f"strongly chordal, minimally {result.toughness}-tough"))
    return checked, violations


def _suite_split(n_max: int):
    """No minimally tough split graph with tau > 1/2."""
    checked, violations = 0, []
    for g in _chordal_upto(n_max):
        if g.is_complete() or not is_split(g).member:
            continue
        checked += 1
        result = is_minimally_tough(g)
        if result.verdict is Minimality.MINIMALLY_TOUGH and exceeds_half(result.toughness):
            violations.append(
                (to_graph6(g), f"split, minimally {result.toughness}-tough"))
    return checked, violations


def _suite_universal(n_max: int):
    """No minimally tough chordal graph with a universal vertex and tau > 1."""
    checked, violations = 0, []
    for g in _chordal_upto(n_max):
        if g.is_complete() or not universal_vertices(g):
            continue
        checked += 1
        result = is_minimally_tough(g)
        if result.verdict is Minimality.MINIMALLY_TOUGH and \
                not at_most_one(result.toughness):
            violations.append(
                (to_graph6(g),
                 f"universal vertex, chordal, minimally {result.toughness}-tough"))
    return checked, violations


def _suite_sun_or_hole(n_max: int):
    """Every minimally tough graph with tau > 1/2 has a hole or induced sun."""
    checked, violations = 0, []
    for g in _graphs_upto(n_max):
        if g.is_complete() or not g.is_connected():
            continue
        result = is_minimally_tough(g)
        if result.verdict is not Minimality.MINIMALLY_TOUGH:
            continue
        if not exceeds_half(result.toughness):
            continue
        checked += 1
        if find_hole(g) is None:
            if g.n < 6 or find_induced_sun(g, g.n // 2) is None:
                violations.append((to_graph6(g), "neither hole nor sun present"))
    return checked, violations


def _suite_split_obstructions(n_max: int):
    """Every minimally tough graph with tau > 1/2 has an induced C4, C5, or 2K2."""
    checked, violations = 0, []
    for g in _graphs_upto(n_max):
        if g.is_complete() or not g.is_connected():
            continue
        result = is_minimally_tough(g)
        if result.verdict is not Minimality.MINIMALLY_TOUGH:
            continue
        if not exceeds_half(result.toughness):
            continue
        checked += 1
        if find_split_obstruction(g) is None:
            violations.append((to_graph6(g), "no induced C4, C5, or 2K2"))
    return checked, violations


def _is_star(g: Graph) -> bool:
    degrees = sorted(g.degree(v) for v in range(g.n))
    return g.n >= 3 and degrees == [1] * (g.n - 1) + [g.n - 1]


def _suite_stars(n_max: int):
    """With a universal vertex and finite tau <= 1, minimally tough means star."""
    checked, violations = 0, []
    for g in _graphs_upto(n_max):
        if g.is_complete() or not g.is_connected() or not universal_vertices(g):
            continue
        t = toughness(g)
        if not at_most_one(t):
            continue
        checked += 1
        minimal = is_minimally_tough(g).verdict is Minimality.MINIMALLY_TOUGH
        star_shaped = _is_star(g)
        if minimal != star_shaped:
            violations.append(
                (to_graph6(g), f"minimally tough={minimal} but star={star_shaped}"))
        elif star_shaped and t != Fraction(1, g.n - 1):
            violations.append(
                (to_graph6(g), f"star with {g.n - 1} leaves has tau={t}"))
    return checked, violations


def _suite_family_wheels(n_max: int):
    """Wheels are minimally tough with tau = (n+1)/(n-1) or n/(n-2)."""
    checked, violations = 0, []
    for n in range(5, n_max + 1):
        checked += 1
        g = wheel(n)
        expected = Fraction(n + 1, n - 1) if n % 2 else Fraction(n, n - 2)
        result = is_minimally_tough(g)
        if result.toughness != expected:
            violations.append(
                (to_graph6(g), f"wheel({n}) tau={result.toughness}, expected {expected}"))
        elif result.verdict is not Minimality.MINIMALLY_TOUGH:
            violations.append((to_graph6(g), f"wheel({n}) is not minimally tough"))
    return checked, violations


def _suite_family_matched_cliques(k_max: int):
    """Matched cliques are claw-free, k-connected, minimally (k/2)-tough."""
    checked, violations = 0, []
    for k in range(3, k_max + 1):
        checked += 1
        g = matched_cliques(k)
        result = is_minimally_tough(g)
        if result.toughness != Fraction(k, 2):
            violations.append(
                (to_graph6(g), f"matched_cliques({k}) tau={result.toughness}"))
            continue
        if result.verdict is not Minimality.MINIMALLY_TOUGH:
            violations.append((to_graph6(g), f"matched_cliques({k}) not minimally tough"))
        if vertex_connectivity(g) != k:
            violations.append((to_graph6(g), f"matched_cliques({k}) kappa != {k}"))
        if find_induced_claw(g) is not None:
            violations.append((to_graph6(g), f"matched_cliques({k}) has a claw"))
    return checked, violations


SUITES: dict[str, tuple[Callable[[int], tuple[int, list]], int]] = {
    "prop_connectivity_bound": (_suite_connectivity_bound, 7),
    "prop_witness_sets": (_suite_witness_sets, 6),
    "prop_minseparator": (_suite_minseparator, 7),
    "thm_dirac": (_suite_dirac, 7),
    "prop_cliquetree_separators": (_suite_cliquetree_separators, 8),
    "thm_two_moplexes": (_suite_two_moplexes, 7),
    "prop_simple_moplicial": (_suite_simple_moplicial, 7),
    "thm_characterization": (_suite_characterization, 6),
    "lemma_restricted_separators": (_suite_restricted_separators, 6),
    "lemma_sufficient": (_suite_sufficient, 7),
    "thm_chordal_interval": (_suite_chordal_interval, 7),
    "lemma_moplicial_neighbors": (_suite_moplicial_neighbors, 7),
    "thm_strongly_chordal": (_suite_strongly_chordal, 7),
    "thm_split": (_suite_split, 7),
    "thm_universal": (_suite_universal, 7),
    "cor_sun_or_hole": (_suite_sun_or_hole, 7),
    "cor_split_obstructions": (_suite_split_obstructions, 7),
    "thm_stars": (_suite_stars, 7),
    "family_wheels": (_suite_family_wheels, 10),
    "family_matched_cliques": (_suite_family_matched_cliques, 4),
}


def suite_names() -> list[str]:
    return list(SUITES)


def run_suite(name: str, n_max: Optional[int] = None) -> CheckReport:
    """Run one registered suite up to n_max (default: the suite's bound)."""
    if name not in SUITES:
        raise GraphError(f"unknown suite {name!r}")
    func, bound = SUITES[name]
    if n_max is None:
        n_max = bound
    if not 1 <= n_max <= bound:
        raise GraphError(f"suite {name} accepts n_max 1..{bound}, got {n_max}")
    start = time.perf_counter()
    checked, violations = func(n_max)
    return CheckReport(name, n_max, checked, violations,
                       time.perf_counter() - start)
