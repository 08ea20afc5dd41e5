"""Exact solvers against networkx brute force, plus structural properties."""
import itertools

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import connected_graphs
from emdlab.dominant_search import (
    PARAMETERS,
    compute_parameters,
    dominant_metric_dimension,
    dominant_resolving_predicate,
    is_dominant_resolving,
    is_ve_dominant_edge_resolving,
    ve_dominant_edge_metric_dimension,
    ve_dominant_edge_resolving_predicate,
)
from emdlab.domination import (
    dominating_predicate,
    is_dominating,
    is_ve_dominating,
    ve_dominating_predicate,
)
from emdlab.families import generate, parse_family
from emdlab.graph_core import all_pairs_distances, from_edge_list
from emdlab.resolvability import (
    edge_code,
    edge_resolving_predicate,
    find_twins,
    is_edge_resolving,
    is_resolving,
    landmark_set,
    metric_dimension,
    resolving_predicate,
    vertex_code,
)
from emdlab.search import BudgetExceeded, earlier_witness, minimal_monotone_set
from oracles import to_nx


def _predicates(g):
    dm = all_pairs_distances(g)
    return {
        "beta": resolving_predicate(g, dm),
        "beta_e": edge_resolving_predicate(g, dm),
        "gamma": dominating_predicate(g),
        "gamma_ve": ve_dominating_predicate(g, dm),
        "gamma_md": dominant_resolving_predicate(g, dm),
        "gamma_emd": ve_dominant_edge_resolving_predicate(g, dm),
    }


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=2, max_n=7))
def test_all_parameters_match_networkx_bruteforce(g):
    got = compute_parameters(g)
    h = to_nx(g)
    for name in PARAMETERS:
        assert got[name].value == oracles.ALL[name](h), name


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=2, max_n=7))
def test_witnesses_are_valid_and_canonical(g):
    preds = _predicates(g)
    for name, r in compute_parameters(g).items():
        assert len(r.witness) == r.value
        assert preds[name](r.witness)
        assert earlier_witness(preds[name], r.witness, g.n) is None


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=2, max_n=7), st.data())
def test_predicates_are_monotone(g, data):
    preds = _predicates(g)
    for name, r in compute_parameters(g).items():
        extra = data.draw(st.sets(st.integers(0, g.n - 1)))
        bigger = tuple(sorted(set(r.witness) | extra))
        assert preds[name](bigger), name


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=2, max_n=7))
def test_sandwich_bounds(g):
    v = {k: r.value for k, r in compute_parameters(g).items()}
    assert max(v["gamma_ve"], v["beta_e"]) <= v["gamma_emd"] <= v["gamma_ve"] + v["beta_e"]
    assert max(v["gamma"], v["beta"]) <= v["gamma_md"] <= v["gamma"] + v["beta"]
    assert v["gamma_ve"] <= v["gamma"]


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=2, max_n=8))
def test_every_resolving_set_meets_each_twin_pair(g):
    # twins are only told apart by themselves, so a basis contains one of each pair
    r = metric_dimension(g)
    for u, v, _ in find_twins(g):
        assert u in r.witness or v in r.witness
        rest = [w for w in range(g.n) if w not in (u, v)]
        if rest:
            assert not is_resolving(g, rest)


def test_twin_kinds():
    kb = generate(parse_family("kb:2,3"))
    assert find_twins(kb) == [(0, 1, "false-twin"), (2, 3, "false-twin"), (2, 4, "false-twin"), (3, 4, "false-twin")]
    k3 = generate(parse_family("complete:3"))
    assert {t[2] for t in find_twins(k3)} == {"true-twin"}


def test_single_edge_has_edge_metric_dimension_one():
    g = from_edge_list(2, [(0, 1)])
    r = compute_parameters(g)
    assert {k: x.value for k, x in r.items()} == {k: 1 for k in PARAMETERS}


def test_codes_follow_landmark_order():
    g = generate(parse_family("path:4"))
    dm = all_pairs_distances(g)
    assert vertex_code(dm, 0, [3, 1]) == (3, 1)
    assert edge_code(g, dm, 2, [0, 3]) == (2, 0)
    with pytest.raises(ValueError):
        vertex_code(dm, 0, [1, 1])


def test_landmark_sets_must_be_nonempty_and_in_range():
    with pytest.raises(ValueError):
        landmark_set(3, [])
    with pytest.raises(ValueError):
        landmark_set(3, [3])
    assert landmark_set(4, [2, 0, 2]) == (0, 2)


def test_membership_helpers_on_a_cycle():
    c6 = generate(parse_family("cycle:6"))
    assert is_resolving(c6, [0, 1]) and not is_resolving(c6, [0, 3])
    assert is_edge_resolving(c6, [0, 1])
    assert is_dominating(c6, [0, 3]) and not is_dominating(c6, [0, 1])
    assert is_ve_dominating(c6, [0, 3]) and is_ve_dominating(c6, [0, 3, 4])
    assert not is_ve_dominating(c6, [0])
    assert is_dominant_resolving(c6, [0, 1, 3])
    assert is_ve_dominant_edge_resolving(c6, [0, 1, 3])
    assert not is_ve_dominant_edge_resolving(c6, [0, 1])


def test_ve_domination_reaches_two_hops():
    p5 = generate(parse_family("path:5"))
    # vertex 2 covers every edge of P5; the far end covers only two
    assert is_ve_dominating(p5, [2])
    assert not is_ve_dominating(p5, [0])


def test_combined_searches_default_lower_bounds():
    g = generate(parse_family("wheel:7"))
    assert ve_dominant_edge_metric_dimension(g).value == 6
    assert dominant_metric_dimension(g).value == 3


def test_budget_exceeded_reports_a_lower_bound():
    with pytest.raises(BudgetExceeded) as info:
        minimal_monotone_set(30, lambda s: False, 3, budget=1e-9)
    assert info.value.lower_bound >= 3


def test_search_order_is_lexicographic():
    seen = []

    def pred(s):
        seen.append(s)
        return s == (1, 2)

    r = minimal_monotone_set(4, pred, 2, budget=None)
    assert r.witness == (1, 2)
    assert seen == list(itertools.combinations(range(4), 2))[:4]
