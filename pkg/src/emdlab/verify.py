"""Verification harness: exact values against closed forms, bounds and fixtures.

The exact solver is treated as ground truth. A closed form that disagrees with
it produces a ``mismatch`` check, which is a finding and never aborts a suite.
Reports are plain dicts with a fixed field order and no timings, so the same
configuration always serializes to the same bytes.
"""
from __future__ import annotations

import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import partial
from importlib import resources
from typing import Any, Callable, Iterable, Sequence

from . import __version__
from .dominant_search import PARAMETERS, compute_parameters
from .families import FamilySpec, generate, parse_family
from .formats import emit_graph6, read_graph6_lines
from .formulas import BOUND_IDS, FAMILY_THEOREMS, bound_checks, predict
from .graph_core import Graph, GraphError, all_pairs_distances, from_edge_list
from .resolvability import edge_code, vertex_code
from .search import DEFAULT_BUDGET, BudgetExceeded, ParamResult

STATUSES = ("match", "mismatch", "out-of-domain", "budget-exceeded", "error")
SUITES = ("fixtures", "families", "comparison", "trees", "scan")
TREE_BOUNDS = (
    "tree-comparability",
    "tree-legs-beta",
    "tree-legs-beta-e",
    "tree-gamma-ve-lower",
    "tree-gamma-ve-upper",
    "tree-gamma-emd-lower",
    "tree-gamma-emd-upper",
)


@dataclass(frozen=True)
class TheoremCheck:
    theorem_id: str
    instance: str
    predicted: Any
    computed: Any
    status: str
    witnesses: dict = field(default_factory=dict)
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "instance": self.instance,
            "predicted": self.predicted,
            "computed": self.computed,
            "status": self.status,
            "witnesses": self.witnesses,
            "note": self.note,
        }


@dataclass(frozen=True)
class ComparisonRow:
    family: str
    gamma_md: int
    gamma_emd: int
    relation: str
    md_witness: tuple[int, ...] = ()
    emd_witness: tuple[int, ...] = ()


@dataclass(frozen=True)
class VerifyConfig:
    suites: tuple[str, ...] = SUITES
    max_n: int = 16
    tree_count: int = 200
    tree_max_n: int = 12
    seed: int = 7
    budget: float = DEFAULT_BUDGET
    workers: int = 1
    corpus: str = "corpus-n6.g6"
    bounds: tuple[str, ...] = BOUND_IDS

    def __post_init__(self):
        bad = set(self.suites) - set(SUITES)
        if bad:
            raise ValueError(f"unknown suites: {sorted(bad)}")
        if self.budget <= 0:
            raise ValueError("budget must be positive")
        if self.tree_max_n > 12:
            raise ValueError("tree suite is limited to n <= 12")


def _pmap(fn: Callable, items: Sequence, workers: int) -> list:
    # Executor.map keeps input order, so reports do not depend on scheduling
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _witness(r: ParamResult) -> list[int]:
    return sorted(r.witness)


def exact_values(g: Graph, budget: float | None = DEFAULT_BUDGET) -> tuple[dict, dict]:
    """All six parameters where defined; parameters that overran the budget map to BudgetExceeded."""
    try:
        return compute_parameters(g, budget=budget), {}
    except BudgetExceeded:
        pass
    got, failed = {}, {}
    for name in PARAMETERS:
        try:
            got.update(compute_parameters(g, [name], budget=budget))
        except BudgetExceeded as exc:
            failed[name] = exc
    return got, failed


def _theorem_id(kind: str, parameter: str) -> str:
    return f"{kind}-{parameter.replace('_', '-')}"


# ---------------------------------------------------------------- families

def default_family_instances(max_n: int = 16) -> list[str]:
    def upto(lo, hi):
        return range(lo, min(hi, max_n) + 1)

    out = [f"path:{n}" for n in upto(2, 16)]
    out += [f"cycle:{n}" for n in upto(3, 16)]
    out += [f"complete:{n}" for n in upto(2, 8)]
    out += [f"kb:{a},{b}" for a in range(2, 5) for b in range(a, 8) if a + b <= min(9, max_n)]
    out += [f"star:{n}" for n in upto(3, 8)]
    out += [f"wheel:{n}" for n in upto(3, 10)]
    out += [f"fan:{n}" for n in upto(1, 10)]
    out += [f"grid2:{n}" for n in upto(1, 12)]
    out += [f"prism2:{n}" for n in upto(3, 12)]
    pairs = ["path:2,path:2", "path:3,path:2", "cycle:3,path:2", "path:2,path:3"]
    out += [f"corona:{p}" for p in pairs]
    out += [f"join:{p}" for p in pairs]
    return out


def family_checks(text: str, budget: float | None = DEFAULT_BUDGET) -> list[TheoremCheck]:
    spec = parse_family(text)
    g = generate(spec)
    got, failed = exact_values(g, budget)
    out = []
    for name in FAMILY_THEOREMS[spec.kind]:
        tid = _theorem_id(spec.kind, name)
        pred = predict(name, spec)
        if name in failed:
            out.append(TheoremCheck(tid, text, pred and pred.value, None, "budget-exceeded",
                                    note=f"value >= {failed[name].lower_bound}"))
            continue
        if name not in got:
            continue
        r = got[name]
        wit = {name: _witness(r)}
        if pred is None:
            out.append(TheoremCheck(tid, text, None, r.value, "out-of-domain", wit))
        else:
            status = "match" if pred.value == r.value else "mismatch"
            out.append(TheoremCheck(tid, text, pred.value, r.value, status, wit,
                                    f"{pred.source}; {pred.validity}"))
    return out


def run_family_suite(instances: Iterable[str] | None = None, budget: float | None = DEFAULT_BUDGET,
                     workers: int = 1, max_n: int = 16) -> list[TheoremCheck]:
    items = list(default_family_instances(max_n) if instances is None else instances)
    groups = _pmap(partial(family_checks, budget=budget), items, workers)
    return [c for grp in groups for c in grp]


# ---------------------------------------------------------------- scan

def _bound_status(g: Graph, instance: str, values: dict, wit: dict, bound_ids) -> list[TheoremCheck]:
    out = []
    for b in bound_checks(g, values, bound_ids):
        note = "" if b.slack is None else f"slack {b.slack}"
        out.append(TheoremCheck(b.bound_id, instance, b.relation, dict(values),
                                "match" if b.holds else "mismatch", wit, note))
    return out


def scan_graph(item: tuple[int, str, Any], bound_ids=BOUND_IDS, budget=DEFAULT_BUDGET) -> list[TheoremCheck]:
    lineno, text, g = item
    if isinstance(g, GraphError):
        return [TheoremCheck("parse", f"line {lineno}: {text}", None, None, "error", note=str(g))]
    if not g.connected:
        return [TheoremCheck("parse", f"line {lineno}: {text}", None, None, "error", note="graph is disconnected")]
    got, failed = exact_values(g, budget)
    if failed:
        note = ", ".join(f"{k} >= {e.lower_bound}" for k, e in failed.items())
        return [TheoremCheck("scan", text, None, None, "budget-exceeded", note=note)]
    values = {k: r.value for k, r in got.items()}
    wit = {k: _witness(r) for k, r in got.items()}
    return _bound_status(g, text, values, wit, bound_ids)


def run_exhaustive_scan(lines: Iterable[str], bound_ids: Sequence[str] = BOUND_IDS,
                        budget: float | None = DEFAULT_BUDGET, workers: int = 1) -> list[TheoremCheck]:
    """Evaluate bounds on every graph of a graph6 stream; bad lines become ``error`` checks."""
    items = list(read_graph6_lines(lines))
    groups = _pmap(partial(scan_graph, bound_ids=tuple(bound_ids), budget=budget), items, workers)
    return [c for grp in groups for c in grp]


def corpus_lines(name: str = "corpus-n6.g6") -> list[str]:
    """Lines of a graph6 file on disk, falling back to a shipped corpus of that name."""
    if not os.path.exists(name):
        res = resources.files("emdlab").joinpath("data", name)
        if res.is_file():
            return res.read_text().splitlines()
    with open(name) as fh:
        return fh.read().splitlines()


# ---------------------------------------------------------------- trees

def random_tree_specs(count: int, max_n: int, seed: int) -> list[str]:
    rng = random.Random(seed)
    return [f"randtree:{rng.randint(2, max_n)},{rng.randrange(2 ** 31)}" for _ in range(count)]


def tree_checks(text: str, budget: float | None = DEFAULT_BUDGET) -> list[TheoremCheck]:
    g = generate(parse_family(text))
    got, failed = exact_values(g, budget)
    if failed:
        note = ", ".join(f"{k} >= {e.lower_bound}" for k, e in failed.items())
        return [TheoremCheck("trees", text, None, None, "budget-exceeded", note=note)]
    values = {k: r.value for k, r in got.items()}
    wit = {k: _witness(r) for k, r in got.items()}
    return _bound_status(g, text, values, wit, TREE_BOUNDS)


def tree_comparability_suite(count: int = 200, max_n: int = 12, seed: int = 7,
                             budget: float | None = DEFAULT_BUDGET, workers: int = 1) -> list[TheoremCheck]:
    if max_n > 12:
        raise ValueError("tree suite is limited to n <= 12")
    specs = random_tree_specs(count, max_n, seed)
    groups = _pmap(partial(tree_checks, budget=budget), specs, workers)
    return [c for grp in groups for c in grp]


# ---------------------------------------------------------------- comparison

DEFAULT_COMPARISON = (
    [f"path:{n}" for n in range(2, 13)]
    + [f"cycle:{n}" for n in range(3, 13)]
    + [f"star:{n}" for n in range(3, 9)]
    + [f"complete:{n}" for n in range(2, 9)]
    + ["kb:2,2", "kb:2,3", "kb:3,3", "kb:2,4", "kb:3,4"]
    + [f"wheel:{n}" for n in range(6, 11)]
    + [f"fan:{n}" for n in range(6, 11)]
)


def expected_relation(spec: FamilySpec) -> str | None:
    """Relation between gamma_md and gamma_emd claimed for the family, if any."""
    k, n = spec.kind, spec.params[0] if spec.params else None
    if k == "path":
        return {2: "=", 3: ">", 4: "=", 5: "="}.get(n, ">=" if n and n >= 6 else None)
    if k == "cycle":
        if n <= 5 or n == 8:
            return "="
        return ">" if n in (6, 7) else ">="
    if k == "star" and n >= 3:
        return ">"
    if k == "complete" and n >= 2:
        return "="
    if k == "kb" and min(spec.params) >= 2:
        return "="
    if k in ("wheel", "fan") and n >= 6:
        return "<"
    return None


def _relation(a: int, b: int) -> str:
    return "<" if a < b else (">" if a > b else "=")


def comparison_row(text: str, budget: float | None = DEFAULT_BUDGET) -> ComparisonRow:
    g = generate(parse_family(text))
    r = compute_parameters(g, ["gamma_md", "gamma_emd"], budget=budget)
    md, emd = r["gamma_md"], r["gamma_emd"]
    return ComparisonRow(text, md.value, emd.value, _relation(md.value, emd.value), md.witness, emd.witness)


def comparison_table(instances: Iterable[str] = DEFAULT_COMPARISON, budget: float | None = DEFAULT_BUDGET,
                     workers: int = 1) -> list[ComparisonRow]:
    return _pmap(partial(comparison_row, budget=budget), list(instances), workers)


def _relation_holds(expected: str, actual: str) -> bool:
    return actual in ("=", ">") if expected == ">=" else actual == expected


def comparison_checks(rows: Iterable[ComparisonRow]) -> list[TheoremCheck]:
    out = []
    for row in rows:
        exp = expected_relation(parse_family(row.family))
        computed = {"gamma_md": row.gamma_md, "gamma_emd": row.gamma_emd, "relation": row.relation}
        wit = {"gamma_md": list(row.md_witness), "gamma_emd": list(row.emd_witness)}
        if exp is None:
            status = "out-of-domain"
        else:
            status = "match" if _relation_holds(exp, row.relation) else "mismatch"
        out.append(TheoremCheck("comparison-relation", row.family, exp, computed, status, wit))
    return out


# ---------------------------------------------------------------- fixtures

OMEGA_LABELS = tuple(f"a{i}" for i in range(1, 9)) + tuple(f"b{i}" for i in range(9))
PI_LABELS = ("a1", "a2", "a3", "a4", "b1", "b2")


def build_fixture_omega() -> Graph:
    """Bipartite fixture on a1..a8 (0..7), b0 (8), b1..b8 (9..16).

    Edges are a_l b_0, a_l b_l and a_{l+1} b_l for l = 1..8. For l = 8 the
    vertex a_9 does not exist; it is read cyclically as a_1, which is the only
    reading that contains the edge b_8 a_1 listed in the edge code table.
    """
    pairs = []
    for l in range(1, 9):
        a, a_next, b = l - 1, l % 8, 8 + l
        pairs += [(a, 8), (a, b), (a_next, b)]
    return from_edge_list(17, pairs)


def build_fixture_pi() -> Graph:
    """a1..a4 (0..3) each joined to b1 (4) and b2 (5); a copy of K_{4,2}."""
    return from_edge_list(6, [(i, j) for i in range(4) for j in (4, 5)])


def _idx(labels, names):
    return [labels.index(x) for x in names]


# vertex codes of the 5-landmark set; the code columns are in the order below
OMEGA_VERTEX_LANDMARKS = ("b1", "b2", "a4", "b5", "b6")
OMEGA_VERTEX_CODES = {
    "a1": (1, 3, 2, 3, 3), "a2": (1, 1, 2, 3, 3), "a3": (3, 1, 2, 3, 3), "a4": (3, 3, 0, 3, 3),
    "a5": (3, 3, 2, 1, 3), "a6": (3, 3, 2, 1, 1), "a7": (3, 3, 2, 3, 1), "a8": (3, 3, 2, 3, 3),
    "b0": (2, 2, 1, 2, 2), "b1": (0, 2, 3, 4, 4), "b2": (2, 0, 3, 4, 4), "b3": (4, 2, 1, 4, 4),
    "b4": (4, 4, 1, 2, 4), "b5": (4, 4, 3, 0, 2), "b6": (4, 4, 3, 2, 0), "b7": (4, 4, 3, 4, 2),
    "b8": (2, 4, 3, 4, 4),
}
OMEGA_EDGE_LANDMARKS = ("a1", "a2", "a3", "a4", "a5", "a6", "a7")
OMEGA_EDGE_CODES = {
    ("a1", "b0"): (0, 1, 1, 1, 1, 1, 1), ("a2", "b0"): (1, 0, 1, 1, 1, 1, 1),
    ("a3", "b0"): (1, 1, 0, 1, 1, 1, 1), ("a4", "b0"): (1, 1, 1, 0, 1, 1, 1),
    ("a5", "b0"): (1, 1, 1, 1, 0, 1, 1), ("a6", "b0"): (1, 1, 1, 1, 1, 0, 1),
    ("a7", "b0"): (1, 1, 1, 1, 1, 1, 0), ("a8", "b0"): (1, 1, 1, 1, 1, 1, 1),
    ("a1", "b1"): (0, 1, 2, 2, 2, 2, 2), ("a2", "b2"): (2, 0, 1, 2, 2, 2, 2),
    ("a3", "b3"): (2, 2, 0, 1, 2, 2, 2), ("a4", "b4"): (2, 2, 2, 0, 1, 2, 2),
    ("a5", "b5"): (2, 2, 2, 2, 0, 1, 2), ("a6", "b6"): (2, 2, 2, 2, 2, 0, 1),
    ("a7", "b7"): (2, 2, 2, 2, 2, 2, 0), ("a8", "b8"): (1, 2, 2, 2, 2, 2, 2),
    ("b1", "a2"): (1, 0, 2, 2, 2, 2, 2), ("b2", "a3"): (2, 1, 0, 2, 2, 2, 2),
    ("b3", "a4"): (2, 2, 1, 0, 2, 2, 2), ("b4", "a5"): (2, 2, 2, 1, 0, 2, 2),
    ("b5", "a6"): (2, 2, 2, 2, 1, 0, 2), ("b6", "a7"): (2, 2, 2, 2, 2, 1, 0),
    ("b7", "a8"): (2, 2, 2, 2, 2, 2, 1), ("b8", "a1"): (0, 2, 2, 2, 2, 2, 2),
}
PI_LANDMARKS = ("a1", "a2", "a3", "b1")
PI_VERTEX_CODES = {
    "a1": (0, 2, 2, 1), "a2": (2, 0, 2, 1), "a3": (2, 2, 0, 1),
    "a4": (2, 2, 2, 1), "b1": (1, 1, 1, 0), "b2": (1, 1, 1, 2),
}
PI_EDGE_CODES = {
    ("a1", "b1"): (0, 1, 1, 0), ("a2", "b1"): (1, 0, 1, 0), ("a3", "b1"): (1, 1, 0, 0),
    ("a4", "b1"): (1, 1, 1, 0), ("a1", "b2"): (0, 1, 1, 1), ("a2", "b2"): (1, 0, 1, 1),
    ("a3", "b2"): (1, 1, 0, 1), ("a4", "b2"): (1, 1, 1, 1),
}


def _vertex_table_check(tid, name, g, labels, landmarks, table) -> TheoremCheck:
    dm = all_pairs_distances(g)
    land = _idx(labels, landmarks)
    computed = {v: list(vertex_code(dm, labels.index(v), land)) for v in table}
    predicted = {v: list(c) for v, c in table.items()}
    status = "match" if computed == predicted else "mismatch"
    return TheoremCheck(tid, name, predicted, computed, status, {"landmarks": land},
                        "columns in order " + ",".join(landmarks))


def _edge_table_check(tid, name, g, labels, landmarks, table) -> TheoremCheck:
    dm = all_pairs_distances(g)
    land = _idx(labels, landmarks)
    computed, predicted = {}, {}
    missing = []
    for (x, y), code in table.items():
        key = f"{x}{y}"
        predicted[key] = list(code)
        u, v = labels.index(x), labels.index(y)
        if not g.has_edge(u, v):
            missing.append(key)
            computed[key] = None
            continue
        computed[key] = list(edge_code(g, dm, g.edge_index(u, v), land))
    listed_all = len(table) == g.m and not missing
    status = "match" if computed == predicted and listed_all else "mismatch"
    note = "columns in order " + ",".join(landmarks)
    if missing:
        note += "; not edges: " + ",".join(missing)
    return TheoremCheck(tid, name, predicted, computed, status, {"landmarks": land}, note)


def _value_check(tid, name, param, expected, result: ParamResult, relation="=") -> TheoremCheck:
    ok = result.value == expected if relation == "=" else result.value <= expected
    pred = expected if relation == "=" else f"<= {expected}"
    return TheoremCheck(tid, name, pred, result.value, "match" if ok else "mismatch",
                        {param: sorted(result.witness)})


def fixture_checks(budget: float | None = DEFAULT_BUDGET) -> list[TheoremCheck]:
    out = []
    omega, pi = build_fixture_omega(), build_fixture_pi()

    r = compute_parameters(omega, budget=budget)
    out.append(_value_check("omega-gamma-md", "omega", "gamma_md", 6, r["gamma_md"]))
    out.append(_value_check("omega-gamma-emd", "omega", "gamma_emd", 7, r["gamma_emd"]))
    out.append(_value_check("omega-beta-e", "omega", "beta_e", 7, r["beta_e"]))
    out.append(_value_check("omega-beta", "omega", "beta", 5, r["beta"], relation="<="))
    out.append(_vertex_table_check("omega-vertex-codes", "omega", omega, OMEGA_LABELS,
                                   OMEGA_VERTEX_LANDMARKS, OMEGA_VERTEX_CODES))
    out.append(_edge_table_check("omega-edge-codes", "omega", omega, OMEGA_LABELS,
                                 OMEGA_EDGE_LANDMARKS, OMEGA_EDGE_CODES))

    r = compute_parameters(pi, budget=budget)
    for name in ("beta", "beta_e", "gamma_md", "gamma_emd"):
        out.append(_value_check("pi-" + name.replace("_", "-"), "pi", name, 4, r[name]))
    out.append(_vertex_table_check("pi-vertex-codes", "pi", pi, PI_LABELS, PI_LANDMARKS, PI_VERTEX_CODES))
    out.append(_edge_table_check("pi-edge-codes", "pi", pi, PI_LABELS, PI_LANDMARKS, PI_EDGE_CODES))
    kb = predict("gamma_emd", parse_family("kb:4,2"))
    out.append(_value_check("pi-kb-closed-form", "pi", "gamma_emd", kb.value, r["gamma_emd"]))
    return out


# ---------------------------------------------------------------- reports

def run_suites(config: VerifyConfig) -> list[TheoremCheck]:
    checks: list[TheoremCheck] = []
    for suite in SUITES:
        if suite not in config.suites:
            continue
        if suite == "fixtures":
            checks += fixture_checks(config.budget)
        elif suite == "families":
            checks += run_family_suite(None, config.budget, config.workers, config.max_n)
        elif suite == "comparison":
            checks += comparison_checks(comparison_table(budget=config.budget, workers=config.workers))
        elif suite == "trees":
            checks += tree_comparability_suite(config.tree_count, config.tree_max_n, config.seed,
                                               config.budget, config.workers)
        elif suite == "scan":
            checks += run_exhaustive_scan(corpus_lines(config.corpus), config.bounds,
                                          config.budget, config.workers)
    return checks


def summarize(checks: Iterable[TheoremCheck]) -> dict:
    counts = {s.replace("-", "_"): 0 for s in STATUSES}
    for c in checks:
        counts[c.status.replace("-", "_")] += 1
    return counts


def build_report(checks: Sequence[TheoremCheck], config: VerifyConfig | dict) -> dict:
    cfg = asdict(config) if isinstance(config, VerifyConfig) else dict(config)
    cfg = {k: list(v) if isinstance(v, tuple) else v for k, v in cfg.items()}
    return {
        "meta": {"version": __version__, "config": cfg, "seed": cfg.get("seed")},
        "checks": [c.to_dict() for c in checks],
        "summary": summarize(checks),
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def exit_status(summary: dict) -> int:
    """0 all match, 1 mismatches, 2 errors, 3 budget overruns (errors take precedence)."""
    if summary.get("error"):
        return 2
    if summary.get("budget_exceeded"):
        return 3
    if summary.get("mismatch"):
        return 1
    return 0


def instance_graph6(text: str) -> str:
    return emit_graph6(generate(parse_family(text)))
