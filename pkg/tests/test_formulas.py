import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

import oracles
from emdlab.dominant_search import compute_parameters
from emdlab.families import generate, parse_family, random_tree
from emdlab.formulas import (
    BOUND_IDS,
    FAMILY_THEOREMS,
    bound_checks,
    is_path_graph,
    legs,
    predict,
    tree_legs_edge_metric_dimension,
)
from emdlab.graph_core import from_edge_list
from oracles import to_nx


def _value(param, text):
    p = predict(param, parse_family(text))
    return None if p is None else p.value


@pytest.mark.parametrize("param, text, expected", [
    ("gamma_emd", "path:2", 1),
    ("gamma_emd", "path:4", 2),
    ("gamma_emd", "path:10", 3),
    ("gamma_emd", "cycle:5", 2),
    ("gamma_emd", "cycle:8", 3),
    ("gamma_emd", "cycle:12", 3),
    ("gamma_emd", "complete:6", 5),
    ("gamma_emd", "kb:3,4", 5),
    ("gamma_emd", "wheel:8", 7),
    ("gamma_emd", "grid2:9", 3),
    ("gamma_emd", "prism2:10", 4),
    ("gamma_md", "wheel:10", 4),
    ("gamma_md", "wheel:8", 4),
    ("gamma_md", "path:7", 3),
    ("gamma_ve", "path:9", 2),
    ("gamma_ve", "grid2:7", 3),
    ("beta_e", "prism2:5", 3),
    ("gamma_emd", "corona:path:3,path:2", 3),
    ("gamma_ve", "corona:cycle:3,path:2", 3),
    ("gamma_emd", "join:path:2,path:3", 4),
    ("gamma_ve", "join:path:2,path:3", 1),
    ("gamma_ve", "join:path:3,path:3", 2),
])
def test_predictions(param, text, expected):
    assert _value(param, text) == expected


@pytest.mark.parametrize("param, text", [
    ("gamma_emd", "path:1"),
    ("gamma_emd", "star:2"),
    ("gamma_emd", "wheel:4"),
    ("gamma_md", "wheel:6"),
    ("beta", "grid2:5"),
    ("gamma_emd", "corona:path:3,path:1"),
    ("gamma_emd", "randtree:8,1"),
])
def test_no_prediction_outside_claimed_range(param, text):
    assert predict(param, parse_family(text)) is None


def test_family_theorem_table_covers_every_arm():
    for kind, params in FAMILY_THEOREMS.items():
        assert params, kind


def test_predictions_carry_validity_and_source():
    p = predict("gamma_emd", parse_family("cycle:9"))
    assert p.parameter == "gamma_emd" and p.family == "cycle:9"
    assert p.validity and p.source


def test_legs_of_small_trees():
    star = generate(parse_family("star:4"))
    assert legs(star, 0) == 4
    assert tree_legs_edge_metric_dimension(star) == 3
    spider = generate(parse_family("tree:0-1,1-2,0-3,3-4,0-5,5-6"))
    assert legs(spider, 0) == 3 and legs(spider, 1) == 1
    assert tree_legs_edge_metric_dimension(spider) == 2
    # a branch that is a path but hangs from its middle is not a leg
    t = generate(parse_family("tree:0-1,1-2,1-3,3-4,3-5"))
    assert legs(t, 1) == 2 and legs(t, 3) == 2


def test_legs_formula_rejects_paths_and_non_trees():
    with pytest.raises(ValueError):
        tree_legs_edge_metric_dimension(generate(parse_family("path:5")))
    with pytest.raises(ValueError):
        tree_legs_edge_metric_dimension(generate(parse_family("cycle:5")))


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 12), st.integers(0, 2 ** 31))
def test_legs_formula_equals_both_dimensions_on_trees(n, seed):
    t = random_tree(n, seed)
    if is_path_graph(t):
        return
    h = to_nx(t)
    expected = tree_legs_edge_metric_dimension(t)
    assert oracles.ALL["beta_e"](h) == expected
    assert oracles.ALL["beta"](h) == expected


def _checks(text, ids=None):
    g = generate(parse_family(text))
    values = {k: r.value for k, r in compute_parameters(g).items()}
    return {b.bound_id: b for b in bound_checks(g, values, ids)}


def test_tight_bounds():
    k5 = _checks("complete:5")
    assert k5["gamma-emd-le-n-minus-1"].slack == 0
    assert k5["two-universal-beta-e"].holds
    assert _checks("path:8")["gamma-emd-floor"].slack == 0
    assert _checks("path:4")["beta-e-one-iff-path"].holds


def test_inapplicable_bounds_are_skipped():
    got = _checks("path:6")
    assert "regular-beta-e-log" not in got
    assert "universal-beta-e" not in got
    assert "tree-legs-beta-e" not in got
    assert "tree-comparability" in got
    assert "regular-beta-e-log" in _checks("cycle:6")


def test_literal_diameter_probe_fails_on_complete_graphs():
    got = _checks("complete:4")
    assert got["beta-e-n-minus-1-structure"].holds
    assert got["beta-e-n-minus-1-criterion"].holds
    assert not got["beta-e-n-minus-1-diameter-exactly-2"].holds


def test_gamma_emd_floor_fails_on_ladders():
    assert not _checks("grid2:7", ["gamma-emd-floor"])["gamma-emd-floor"].holds


def test_unknown_bound_rejected():
    with pytest.raises(ValueError):
        bound_checks(from_edge_list(2, [(0, 1)]), {"beta": 1}, ["nope"])


def test_missing_values_skip_bounds():
    g = generate(parse_family("cycle:5"))
    assert bound_checks(g, {}) == []
    assert {b.bound_id for b in bound_checks(g, {"gamma_ve": 2, "gamma": 2})} >= {"gamma-ve-le-gamma"}


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.integers(0, 2 ** 20))
def test_theorem_grade_bounds_hold_on_random_graphs(n, seed):
    h = nx.gnp_random_graph(n, 0.5, seed=seed)
    if not nx.is_connected(h):
        return
    g = from_edge_list(n, list(h.edges))
    values = {k: r.value for k, r in compute_parameters(g).items()}
    proven = [b for b in BOUND_IDS if b.startswith(("sandwich", "gamma-ve-le", "beta-e-le", "universal", "two-universal"))]
    assert all(b.holds for b in bound_checks(g, values, proven))
