import itertools
import math

import numpy as np
import pytest

from commgraph import GF, Mat, bfs_distance, enumerate_vertices, full_report
from commgraph.errors import BudgetExceeded
from commgraph.oracle import CommutingGraph, decode, encode

from oracles import np_commute

# exhaustive BFS on M_3(F_2), recorded once and frozen
REPORT_3_2 = dict(
    vertex_count=510,
    edge_count=2451,
    connected=False,
    component_count=9,
    component_sizes=[462] + [6] * 8,
    component_diameters=[4] + [1] * 8,
    diameter=math.inf,
    eccentricity_histogram={1: 48, 3: 98, 4: 364},
    witness_failure_count=48,
)


def test_vertex_counts():
    assert sum(1 for _ in enumerate_vertices(3, 2)) == 510
    assert sum(1 for _ in enumerate_vertices(2, 3)) == 3**4 - 3


def test_budget_guard():
    with pytest.raises(BudgetExceeded):
        next(enumerate_vertices(4, 3))
    with pytest.raises(BudgetExceeded):
        CommutingGraph(3, 2, budget=100)


def test_encoding_round_trip():
    F = GF(3)
    for code in (0, 1, 5, 3**9 - 1, 12345):
        assert encode(decode(code, 3, 3)) == code
    m = Mat(F, [[0, 0, 0], [0, 0, 0], [0, 0, 1]])
    assert encode(m) == 1


def test_adjacency_against_brute_force():
    g = CommutingGraph(3, 2)
    adj = g.adjacency()
    mats = [g.matrix(i) for i in range(g.vertex_count)]
    for i in range(0, g.vertex_count, 37):
        expected = {j for j in range(g.vertex_count) if j != i and np_commute(mats[i], mats[j], 2)}
        assert set(adj[i]) == expected


def test_distance_examples():
    F = GF(2)
    a, b = Mat.unit(F, 3, 0, 0), Mat.unit(F, 3, 1, 1)
    assert bfs_distance(a, b, 3, 2) == 1
    assert bfs_distance(a, a, 3, 2) == 0
    # E_12 and E_21 do not commute; pinned regression value
    assert bfs_distance(Mat.unit(F, 3, 0, 1), Mat.unit(F, 3, 1, 0), 3, 2) == 2


def test_n2_is_disconnected():
    r = full_report(2, 2)
    assert not r.connected and r.component_count > 1
    assert r.vertex_count == 14 and r.component_count == 7
    r3 = full_report(2, 3)
    assert not r3.connected and r3.component_count == 13


def test_report_3_2_pinned():
    r = full_report(3, 2)
    for key, value in REPORT_3_2.items():
        assert getattr(r, key) == value, key
    rc = full_report(3, 2, use_classes=True)
    for key, value in REPORT_3_2.items():
        assert getattr(rc, key) == value, key
    assert rc.similarity_classes == 12


def test_similarity_classes_partition():
    g = CommutingGraph(3, 2)
    classes = g.similarity_classes()
    flat = sorted(itertools.chain.from_iterable(classes))
    assert flat == list(range(g.vertex_count))


@pytest.mark.slow
def test_report_3_3():
    r = full_report(3, 3, use_classes=True)
    assert r.vertex_count == 19680
    assert r.edge_count == 335832
    assert r.component_sizes == [16224] + [24] * 144
    assert r.component_diameters[0] == 4
    assert r.eccentricity_histogram == {1: 3456, 3: 1014, 4: 15210}
    assert r.witness_failure_count == 3456
