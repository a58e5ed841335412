import ast
import inspect
import itertools
import math
import random

import pytest

from l21span import solver
from l21span.graph import (
    Graph, complete_graph, cycle_graph, gnp_graph, path_graph, petersen_graph, star_graph,
)
from l21span.labeling import Instance, is_valid_labeling
from l21span.oracle import brute_force_partitions, oracle_lambda
from l21span.solver import (
    AUX_COEFF, SolverOptions, SolverTimeout, _Search, base_case_span, compose,
    enumerate_correct_partitions, find_labeling, find_lambda, kx_value, lambda_span, solve_span,
)

from _corpus import random_instances, random_packing


# -- base case

def test_base_case_examples():
    assert base_case_span(Instance(path_graph(3), 0)) == 0
    assert base_case_span(Instance.of(complete_graph(3))) is None
    assert base_case_span(Instance.of(Graph(1))) == 1
    assert base_case_span(Instance.of(Graph(1), [0], z=[0], m=[0])) == 3
    assert base_case_span(Instance.of(Graph(2, [(0, 1)]))) == 3


def test_base_case_on_packings():
    rng = random.Random(11)
    for seed in range(40):
        g = gnp_graph(9, 0.3, seed)
        y = random_packing(g, rng) or 1
        assert base_case_span(Instance(g, y, rng.getrandbits(9), rng.getrandbits(9))) <= 3


@pytest.mark.parametrize("inst", random_instances(60, seed=5, n_range=(1, 6)))
def test_base_case_agrees_with_oracle(inst):
    expected = oracle_lambda(inst)
    assert base_case_span(inst) == (expected if expected <= 3 else None)


# -- partitions

def _as_set(parts):
    return {tuple(p) for p in parts}


def test_partition_counts():
    assert len(list(enumerate_correct_partitions(Instance.of(Graph(2))))) == 5
    assert len(list(enumerate_correct_partitions(Instance.of(Graph(2, [(0, 1)]))))) == 4
    assert list(enumerate_correct_partitions(Instance.of(Graph(3), [1]))) == [(0, 0b10, 0)]


@pytest.mark.parametrize("seed", range(40))
def test_partitions_match_brute_force(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 8)
    g = gnp_graph(n, rng.choice([0.2, 0.5, 0.8]), seed)
    y = rng.getrandbits(n) or 1
    got = list(enumerate_correct_partitions(Instance(g, y)))
    assert len(got) == len(set(got))
    assert _as_set(got) == _as_set(brute_force_partitions(g, y))


def test_partitions_deterministic():
    g = gnp_graph(7, 0.4, 1)
    inst = Instance(g, g.vertex_mask)
    assert list(enumerate_correct_partitions(inst)) == list(enumerate_correct_partitions(inst))


def test_odd_size_uses_floor_half():
    for a, x, b in enumerate_correct_partitions(Instance.of(Graph(5))):
        assert a.bit_count() <= 2 and b.bit_count() <= 2


# -- separator charge

def test_kx_examples():
    for z, m in itertools.product([False, True], repeat=2):
        assert kx_value(False, False, z, m) == 1
    assert kx_value(True, False, True, False) == 2
    assert kx_value(True, False, False, True) == 1
    assert kx_value(False, True, True, False) == 1
    assert kx_value(False, True, False, True) == 2


def test_kx_rejects_both_empty():
    with pytest.raises(AssertionError):
        kx_value(True, True, False, False)


@pytest.mark.parametrize("flags", [f for f in itertools.product([False, True], repeat=4)
                                   if not (f[0] and f[1])])
def test_kx_range(flags):
    assert kx_value(*flags) in (1, 2)


def test_compose_cases():
    x = 1 << 2
    # A and B both present: A keeps labels, X takes k_A, B moved above it
    assert compose({0: 0, 1: 2}, x, {3: 1, 4: 0}, 3, False) == {0: 0, 1: 2, 2: 3, 3: 5, 4: 4}
    # A empty, X free to take 0
    assert compose({}, x, {3: 1}, 0, False) == {2: 0, 3: 2}
    # A empty, X meets z and starts at 1
    assert compose({}, x, {3: 1}, 0, True) == {2: 1, 3: 3}
    # B empty
    assert compose({0: 0, 1: 2}, x, {}, 3, True) == {0: 0, 1: 2, 2: 3}


# -- values

def test_find_lambda_examples():
    assert find_lambda(Instance(path_graph(2), 0))[0] == 0
    assert find_lambda(Instance.of(Graph(2, [(0, 1)])))[0] == 3
    assert find_lambda(Instance.of(Graph(1), [0], z=[0], m=[0]))[0] == 3
    assert find_lambda(Instance.of(path_graph(4)))[0] == 4


@pytest.mark.parametrize("g,expected", [
    (Graph(2, [(0, 1)]), 2), (cycle_graph(4), 4), (path_graph(3), 3), (star_graph(4), 4),
])
def test_lambda_span_examples(g, expected):
    assert lambda_span(g)[0] == expected


def test_empty_graph():
    assert lambda_span(Graph(0))[0] == -1


def test_find_labeling_examples():
    k, c = find_labeling(Instance.of(Graph(2, [(0, 1)])))
    assert k == 3 and sorted(c.values()) == [0, 2]
    inst = Instance.of(path_graph(3))
    k, c = find_labeling(inst)
    assert k == 4 and is_valid_labeling(inst, c, k) and max(c.values()) <= 3
    g = gnp_graph(9, 0.2, 4)
    y = random_packing(g, random.Random(0)) or 1
    inst = Instance(g, y)
    k, c = find_labeling(inst)
    assert k <= 3 and is_valid_labeling(inst, c, k)


CORPUS = random_instances(80, seed=77)


@pytest.mark.parametrize("inst", CORPUS)
def test_matches_oracle_with_certificate(inst):
    expected = oracle_lambda(inst)
    value, stats = find_lambda(inst)
    assert value == expected
    assert find_lambda(inst, SolverOptions(prune=True))[0] == expected
    k, c = find_labeling(inst)
    assert k == expected and is_valid_labeling(inst, c, k)
    k, c = find_labeling(inst, SolverOptions(prune=True))
    assert k == expected and is_valid_labeling(inst, c, k)


@pytest.mark.parametrize("inst", CORPUS[:40])
def test_symmetry_and_sandwich(inst):
    value = find_lambda(inst)[0]
    assert find_lambda(inst.swapped())[0] == value
    free = find_lambda(Instance(inst.g, inst.y))[0]
    assert free <= value <= free + 2


@pytest.mark.parametrize("inst", CORPUS[:40])
def test_monotone_in_y(inst):
    sub = inst.y & random.Random(inst.y).getrandbits(inst.g.n)
    smaller = Instance(inst.g, sub, inst.z, inst.m)
    assert find_lambda(smaller)[0] <= find_lambda(inst)[0]


@pytest.mark.parametrize("inst", CORPUS[:40])
def test_depth_and_aux_bounds(inst):
    _, stats = find_lambda(inst, SolverOptions(collect_certificate=True))
    y = inst.y.bit_count()
    bound = math.ceil(math.log2(y)) + 1 if y else 1
    assert stats.max_depth <= bound
    assert stats.peak_aux <= AUX_COEFF * inst.g.n ** 2 * stats.max_depth


def test_recursive_calls_halve(monkeypatch):
    seen = []
    original = _Search.solve

    def spy(self, y, z, m, depth, cutoff):
        seen.append((depth, y.bit_count()))
        return original(self, y, z, m, depth, cutoff)

    monkeypatch.setattr(_Search, "solve", spy)
    g = gnp_graph(8, 0.6, 2)
    find_lambda(Instance(g, g.vertex_mask))
    by_depth = {}
    for depth, size in seen:
        by_depth.setdefault(depth, []).append(size)
    for depth in sorted(by_depth)[1:]:
        assert max(by_depth[depth]) <= max(by_depth[depth - 1]) // 2


def test_deterministic_stats():
    g = gnp_graph(8, 0.5, 8)
    inst = Instance(g, g.vertex_mask, 0b11, 0b1000)
    assert find_lambda(inst) == find_lambda(inst)


def test_stats_counters():
    res = solve_span(petersen_graph(), SolverOptions(prune=True, collect_certificate=True))
    assert res.value == 9
    assert res.stats.nodes > res.stats.partitions > 0
    assert res.stats.base_case_labelings > 0
    assert res.stats.max_depth <= math.ceil(math.log2(10)) + 1


def test_timeout_reports_partial_stats():
    with pytest.raises(SolverTimeout) as info:
        solve_span(complete_graph(9), SolverOptions(timeout=0.01))
    assert info.value.stats.nodes > 0


def test_no_subset_keyed_state():
    source = inspect.getsource(solver)
    assert "lru_cache" not in source and "functools" not in source
    tree = ast.parse(source)
    search_cls = next(n for n in tree.body if isinstance(n, ast.ClassDef) and n.name == "_Search")
    for node in ast.walk(search_cls):
        if isinstance(node, ast.Assign):
            for target in node.targets:
                if isinstance(target, ast.Attribute) and isinstance(node.value, (ast.Dict, ast.Set, ast.List)):
                    raise AssertionError(f"container attribute self.{target.attr} on the search object")
    search = _Search(gnp_graph(6, 0.5, 0), SolverOptions())
    search.solve(0b111111, 0, 0, 1, math.inf)
    assert not any(isinstance(v, (dict, set, list)) for v in vars(search).values())
