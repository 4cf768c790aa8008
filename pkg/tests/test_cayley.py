import json

import networkx as nx
import pytest
from conftest import cay, to_nx

from cayleydim.cayley import (
    UNREACHABLE,
    Graph,
    GraphError,
    build_cayley,
    export,
    from_json,
    is_adjacent_by_rule,
    is_bipartite,
    is_connected,
    is_path,
    is_regular,
)
from cayleydim.dihedral import ConnectionSet, elements, is_generating
from cayleydim.verify import enumerate_connection_sets


def test_c4_from_two_reflections(c4):
    assert nx.is_isomorphic(to_nx(c4), nx.cycle_graph(4))


def test_k4_from_full_d4():
    assert nx.is_isomorphic(to_nx(cay(2, "r1,s0,s1")), nx.complete_graph(4))


def test_prism_case(prism5):
    assert nx.is_isomorphic(to_nx(prism5), nx.circular_ladder_graph(5))


def test_mobius_case():
    g = cay(6, "r3,s1,s2")
    assert nx.is_isomorphic(to_nx(g), nx.circulant_graph(12, [1, 6]))


@pytest.mark.parametrize("n", range(2, 9))
def test_adjacency_rule_and_regularity(n):
    verts = elements(n)
    for S, _ in enumerate_connection_sets(n, 3):
        g = build_cayley(n, S)
        assert is_regular(g) == len(S)
        for u in range(2 * n):
            assert u not in g.adjacency[u]
            for v in range(2 * n):
                assert g.has_edge(u, v) == is_adjacent_by_rule(verts[u], verts[v], S)
                assert g.has_edge(u, v) == g.has_edge(v, u)


@pytest.mark.parametrize("n", range(2, 11))
def test_connected_iff_generating(n):
    for S, gen in enumerate_connection_sets(n, 3):
        assert is_connected(build_cayley(n, S)) == gen == is_generating(S)


def test_distances_match_networkx():
    for n, text in [(5, "r1,r4,s1"), (6, "r3,s1,s2"), (7, "s0,s1,s3"), (8, "r1,r7,r2,r6,s0")]:
        g = cay(n, text)
        ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
        for u in range(g.num_vertices):
            for v in range(g.num_vertices):
                assert g.distances[u, v] == ref[u][v]


def test_c4_antipodes(c4):
    d = c4.distances
    assert [d[u, u] for u in range(4)] == [0] * 4
    assert sorted(d.rows[0]) == [0, 1, 1, 2]


def test_prism5_eccentricity(prism5):
    # Hand check: a vertex reaches the far side of its own 5-cycle in 2 steps
    # and the opposite cycle's far side in 3.
    assert {prism5.distances.eccentricity(v) for v in range(10)} == {3}
    assert nx.eccentricity(to_nx(prism5)) == {v: 3 for v in range(10)}


def test_disconnected_marker():
    g = cay(6, "s0,s2")
    assert not is_connected(g)
    assert g.distances[0, 1] == UNREACHABLE
    assert sorted(len(c) for c in nx.connected_components(to_nx(g))) == [6, 6]


@pytest.mark.parametrize("n", range(2, 9))
def test_distance_axioms(n):
    for S, gen in enumerate_connection_sets(n, 3, generating_only=True):
        g = build_cayley(n, S)
        rows = g.distances.rows
        N = g.num_vertices
        for u in range(N):
            assert rows[u][u] == 0
            for v in range(N):
                assert rows[u][v] == rows[v][u]
                assert (rows[u][v] == 1) == g.has_edge(u, v)
                for w in range(N):
                    assert rows[u][w] <= rows[u][v] + rows[v][w]


@pytest.mark.parametrize("n", range(3, 9))
def test_vertex_transitive_distance_profile(n):
    for S, _ in enumerate_connection_sets(n, 3, generating_only=True):
        g = build_cayley(n, S)
        profiles = {tuple(sorted(r)) for r in g.distances.rows}
        assert len(profiles) == 1


def test_predicates():
    assert is_bipartite(cay(4, "s0,s1,s2")) and is_regular(cay(4, "s0,s1,s2")) == 3
    assert not is_bipartite(cay(5, "r1,r4,s1"))
    assert is_regular(Graph.from_edges(3, [(0, 1), (1, 2)])) is None
    assert is_path(Graph.from_edges(3, [(0, 1), (1, 2)]))
    assert not is_path(cay(2, "s0,s1"))


def test_bipartite_matches_networkx():
    for n in range(2, 8):
        for S, _ in enumerate_connection_sets(n, 3):
            g = build_cayley(n, S)
            assert is_bipartite(g) == nx.is_bipartite(to_nx(g))


def test_export_counts(c4, prism5):
    dot = export(c4, "dot")
    assert dot.count("label=") == 4 and dot.count("--") == 4
    data = json.loads(export(prism5, "json"))
    assert len(data["vertices"]) == 10 and len(data["edges"]) == 15
    assert data["set"] == "r1,r4,s1" and data["n"] == 5
    assert data["edges"] == sorted(data["edges"])
    assert all(i < j for i, j in data["edges"])


def test_json_round_trip(prism5):
    again = from_json(export(prism5, "json"))
    assert again == prism5 and again.n == 5 and again.labels == prism5.labels


def test_json_tampered_edges_rejected(prism5):
    data = json.loads(export(prism5, "json"))
    data["edges"] = data["edges"][1:]
    with pytest.raises(GraphError):
        from_json(json.dumps(data))


def test_build_errors():
    with pytest.raises(GraphError):
        build_cayley(6, ConnectionSet.parse("s0,s1", 5))
    with pytest.raises(GraphError):
        export(cay(2, "s0,s1"), "png")


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(((1,), ()))
    with pytest.raises(GraphError):
        Graph(((0,),))
